#ifndef EDGEBETTI_SPARSE_RANK_HPP
#define EDGEBETTI_SPARSE_RANK_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "edgebetti/field.hpp"

namespace edgebetti {

/// One matrix column as (row, value) pairs with strictly increasing rows and
/// nonzero values.
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

/**
 * Rank of an integer matrix given in sparse column form, computed over the
 * requested field.
 *
 * Columns are reduced left to right against earlier pivots keyed by their
 * lowest nonzero row. Over GF(p) the entries are reduced mod p; over the
 * rationals the elimination is fraction-free on integers, dividing each
 * column by its content after every step; it runs on checked 64-bit integers
 * and restarts on GMP integers if any intermediate would overflow.
 */
std::size_t sparse_rank(const std::vector<SparseColumn>& columns, int row_count,
                        const FieldSpec& field);

} // namespace edgebetti

#endif
