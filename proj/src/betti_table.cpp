#include "edgebetti/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "edgebetti/homology.hpp"

namespace edgebetti {

BettiTable::BettiTable(int variable_count) : n_(variable_count)
{
    if (variable_count < 0)
        throw std::invalid_argument("BettiTable: negative variable count");
    entries_[{0, 0}] = 1;
}

std::uint64_t BettiTable::get(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t value)
{
    if (i < 0 || j < 0)
        throw std::out_of_range("BettiTable: negative index");
    if (value == 0) {
        entries_.erase({i, j});
        return;
    }
    if (i + j > n_)
        throw std::out_of_range("BettiTable: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") beyond " + std::to_string(n_) +
                                " variables");
    entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, std::uint64_t value)
{
    if (value != 0)
        set(i, j, get(i, j) + value);
}

std::set<BettiPosition> BettiTable::support() const
{
    std::set<BettiPosition> out;
    for (const auto& [pos, value] : entries_)
        out.insert(pos);
    return out;
}

namespace {

/// All k-subsets of {0..n-1}, in increasing mask order.
void append_subsets_of_size(int n, int k, std::vector<VertexSet>& out)
{
    if (k == 0) {
        out.emplace_back();
        return;
    }
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        out.emplace_back(mask);
        // Gosper's hack: next mask with the same popcount.
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

struct PartialSweep {
    // cells[i * (n + 1) + j]
    std::vector<std::uint64_t> cells;
    std::uint64_t subsets = 0;
    std::uint64_t euler_checks = 0;
    std::uint64_t euler_mismatches = 0;
};

void sweep_block(const Graph& g, const FieldSpec& field, bool check_euler,
                 std::span<const VertexSet> block, PartialSweep& out)
{
    const int stride = g.vertex_count() + 1;
    for (VertexSet w : block) {
        const FacesByDimension faces = independent_sets(g, w);
        const HomologyProfile profile = reduced_homology(faces, field);
        ++out.subsets;
        if (check_euler) {
            ++out.euler_checks;
            if (reduced_euler_characteristic(faces) != profile.euler_characteristic())
                ++out.euler_mismatches;
        }
        for (const auto& [k, dim] : profile.dims) {
            const int j = k + 1;
            const int i = w.size() - j;
            out.cells[static_cast<std::size_t>(i * stride + j)] += dim;
        }
    }
}

void check_oracle_size(const Graph& g)
{
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("Betti sweep limited to " + std::to_string(kMaxOracleVertices) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
}

} // namespace

SweepResult betti_sweep(const Graph& g, const FieldSpec& field, const SweepOptions& options)
{
    check_oracle_size(g);
    const int n = g.vertex_count();
    std::vector<VertexSet> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (int k = 1; k <= n; ++k)
        append_subsets_of_size(n, k, subsets);

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, subsets.size())));
    const std::size_t cells = static_cast<std::size_t>((n + 1) * (n + 1));
    std::vector<PartialSweep> partial(threads, PartialSweep{std::vector<std::uint64_t>(cells, 0)});
    const std::span<const VertexSet> all(subsets);
    const std::size_t chunk = (subsets.size() + threads - 1) / threads;
    auto block = [&](unsigned t) {
        const std::size_t begin = std::min(subsets.size(), t * chunk);
        const std::size_t end = std::min(subsets.size(), begin + chunk);
        return all.subspan(begin, end - begin);
    };
    if (threads == 1) {
        sweep_block(g, field, options.check_euler, all, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&, t] { sweep_block(g, field, options.check_euler, block(t), partial[t]); });
    }

    SweepResult result{BettiTable(n)};
    std::vector<std::uint64_t> total(cells, 0);
    for (const PartialSweep& p : partial) {
        for (std::size_t c = 0; c < cells; ++c)
            total[c] += p.cells[c];
        result.subsets += p.subsets;
        result.euler_checks += p.euler_checks;
        result.euler_mismatches += p.euler_mismatches;
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            result.table.add(i, j, total[static_cast<std::size_t>(i * (n + 1) + j)]);
    return result;
}

BettiTable betti_table(const Graph& g, const FieldSpec& field, const SweepOptions& options)
{
    return betti_sweep(g, field, options).table;
}

BettiCell betti_single(const Graph& g, int i, int j, const FieldSpec& field)
{
    if (i < 0 || j < 0)
        throw std::invalid_argument("betti_single: negative index");
    if (i + j > g.vertex_count())
        return {0, true};
    if (i == 0 && j == 0)
        return {1, false};
    if (j == 0)
        return {0, false};
    check_oracle_size(g);
    std::vector<VertexSet> subsets;
    append_subsets_of_size(g.vertex_count(), i + j, subsets);
    BettiCell cell;
    for (VertexSet w : subsets)
        cell.value += reduced_homology(independent_sets(g, w), field)[j - 1];
    return cell;
}

namespace {

void trim(IntPolynomial& poly)
{
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
}

} // namespace

IntPolynomial hilbert_numerator(const Graph& g)
{
    const int n = g.vertex_count();
    const FacesByDimension faces = independent_sets(g, g.vertices());
    // binomial[m][k] = C(m, k)
    std::vector<std::vector<std::int64_t>> binomial(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        binomial[m].assign(static_cast<std::size_t>(m + 1), 1);
        for (int k = 1; k < m; ++k)
            binomial[m][k] = binomial[m - 1][k - 1] + binomial[m - 1][k];
    }
    IntPolynomial poly(static_cast<std::size_t>(n + 1), 0);
    for (std::size_t size = 0; size < faces.size(); ++size) {
        const auto count = static_cast<std::int64_t>(faces[size].size());
        const int rest = n - static_cast<int>(size);
        // t^size (1 - t)^rest
        for (int k = 0; k <= rest; ++k)
            poly[size + static_cast<std::size_t>(k)] += count * (k % 2 == 0 ? 1 : -1) * binomial[rest][k];
    }
    trim(poly);
    return poly;
}

IntPolynomial k_polynomial(const BettiTable& table)
{
    IntPolynomial poly(static_cast<std::size_t>(table.variable_count() + 1), 0);
    for (const auto& [pos, value] : table.entries()) {
        const auto [i, j] = pos;
        poly[static_cast<std::size_t>(i + j)] += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(value);
    }
    trim(poly);
    return poly;
}

std::string format_polynomial(const IntPolynomial& poly)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const std::int64_t c = poly[k];
        if (c == 0)
            continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0)
            out << mag;
        if (k >= 1)
            out << 't';
        if (k >= 2)
            out << '^' << k;
        first = false;
    }
    if (first)
        out << '0';
    return out.str();
}

} // namespace edgebetti
