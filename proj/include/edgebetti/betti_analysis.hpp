#ifndef EDGEBETTI_BETTI_ANALYSIS_HPP
#define EDGEBETTI_BETTI_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgebetti/betti_table.hpp"

namespace edgebetti {

struct ExtremalEntry {
    int i = 0;
    int j = 0;
    std::uint64_t value = 0;

    bool operator==(const ExtremalEntry&) const = default;
};

struct ExtremalReport {
    /// Sorted by increasing i (hence decreasing j).
    std::vector<ExtremalEntry> entries;
    int regularity = 0;
    int projective_dimension = 0;
    bool unique = false;

    std::size_t count() const { return entries.size(); }
};

/// Largest strand j carrying a nonzero entry.
int regularity(const BettiTable& t);
/// Largest homological degree i carrying a nonzero entry.
int projective_dimension(const BettiTable& t);

/**
 * Extremal Betti numbers: nonzero entries (i, j) with no other nonzero
 * (k, l) such that k >= i and l >= j.
 *
 * β_{0,0} only counts when it is the sole entry (the zero ideal).
 */
ExtremalReport extremal_positions(const BettiTable& t);

struct UniqueExtremal {
    bool unique = false;
    /// (p, reg); nonzero exactly when unique.
    BettiPosition corner{0, 0};
};

/// Exactly one extremal number iff β_{p,p+reg} != 0. Throws std::logic_error
/// if the two sides ever disagree.
UniqueExtremal has_unique_extremal(const BettiTable& t);

enum class TableFormat { grid, json, csv };

TableFormat parse_table_format(std::string_view name);

/**
 * grid: one row per strand j = 0..reg and one column per i = 0..projdim,
 * "." for zero, each column right-aligned to its widest cell and separated by
 * a single space, every line ending in '\n'.
 * json: {"n": int, "entries": [[i, j, value], ...]} sorted by (i, j).
 * csv: header "i,j,value", then one line per stored entry.
 */
std::string render_table(const BettiTable& t, TableFormat format);

/// Inverse of the json rendering.
BettiTable parse_table_json(std::string_view text);

} // namespace edgebetti

#endif
