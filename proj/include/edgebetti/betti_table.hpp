#ifndef EDGEBETTI_BETTI_TABLE_HPP
#define EDGEBETTI_BETTI_TABLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/field.hpp"
#include "edgebetti/graph.hpp"

namespace edgebetti {

/// (homological degree i, strand j); the Betti number sits in internal degree i + j.
using BettiPosition = std::pair<int, int>;

/**
 * Graded Betti numbers β_{i,i+j}(S/I) of a quotient by an edge ideal in n
 * variables.
 *
 * Sparse: only nonzero entries are stored, and β_{0,0} = 1 is always present.
 * Every stored entry satisfies i + j <= n.
 */
class BettiTable {
public:
    explicit BettiTable(int variable_count = 0);

    int variable_count() const { return n_; }
    std::uint64_t get(int i, int j) const;
    /// Setting zero erases the entry. Throws std::out_of_range if i + j > n.
    void set(int i, int j, std::uint64_t value);
    void add(int i, int j, std::uint64_t value);

    const std::map<BettiPosition, std::uint64_t>& entries() const { return entries_; }
    std::set<BettiPosition> support() const;
    std::size_t size() const { return entries_.size(); }

    bool operator==(const BettiTable&) const = default;

private:
    int n_;
    std::map<BettiPosition, std::uint64_t> entries_;
};

struct SweepOptions {
    /// Worker threads for the subset sweep; 0 means one per hardware thread.
    unsigned threads = 1;
    /// Compare face-count and homology Euler characteristics for every subset.
    bool check_euler = true;
};

struct SweepResult {
    BettiTable table;
    std::uint64_t subsets = 0;
    std::uint64_t euler_checks = 0;
    std::uint64_t euler_mismatches = 0;
};

/// Largest graph the Hochster sweep accepts.
inline constexpr int kMaxOracleVertices = 20;

/**
 * Betti table of S/I(g) by Hochster's formula:
 * β_{i,i+j} = Σ_{|W| = i+j} dim ~H_{j-1}(Ind(g_W)).
 *
 * Subsets are visited by increasing size, then lexicographically; each worker
 * owns a contiguous block and partial tables are summed, so the result does
 * not depend on the thread count. Throws std::invalid_argument when
 * n > kMaxOracleVertices.
 */
SweepResult betti_sweep(const Graph& g, const FieldSpec& field = FieldSpec::rationals(),
                        const SweepOptions& options = {});
BettiTable betti_table(const Graph& g, const FieldSpec& field = FieldSpec::rationals(),
                       const SweepOptions& options = {});

struct BettiCell {
    std::uint64_t value = 0;
    /// i + j exceeded the vertex count; value is 0 without any computation.
    bool beyond_vertex_count = false;
};

/// One entry of the table, summing only over subsets of size i + j.
BettiCell betti_single(const Graph& g, int i, int j, const FieldSpec& field = FieldSpec::rationals());

/// Integer polynomial, coefficient of t^k at index k, no trailing zeros.
using IntPolynomial = std::vector<std::int64_t>;

/// Numerator of the Hilbert series of S/I(g) over (1-t)^n:
/// Σ_{A independent} t^{|A|} (1-t)^{n-|A|}.
IntPolynomial hilbert_numerator(const Graph& g);
/// Σ (-1)^i β_{i,i+j} t^{i+j}
IntPolynomial k_polynomial(const BettiTable& table);
std::string format_polynomial(const IntPolynomial& poly);

} // namespace edgebetti

#endif
