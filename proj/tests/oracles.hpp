// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#ifndef EDGEBETTI_TESTS_ORACLES_HPP
#define EDGEBETTI_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "edgebetti/graph.hpp"

namespace oracle {

using edgebetti::Graph;
using Mask = std::uint64_t;

inline bool adjacent(const Graph& g, int u, int v) { return g.has_edge(u, v); }

inline int popcount(Mask m) { return __builtin_popcountll(m); }

inline std::vector<int> members(Mask m)
{
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((m >> v) & 1U)
            out.push_back(v);
    return out;
}

/// Independent set test by checking every pair.
inline bool independent(const Graph& g, Mask s)
{
    const auto vs = members(s);
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (adjacent(g, vs[a], vs[b]))
                return false;
    return true;
}

/// Non-chordal iff some induced subgraph on >= 4 vertices is a cycle
/// (2-regular and connected).
inline bool naive_is_chordal(const Graph& g)
{
    const int n = g.vertex_count();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if (popcount(s) < 4)
            continue;
        const auto vs = members(s);
        bool two_regular = true;
        for (int v : vs) {
            int d = 0;
            for (int u : vs)
                d += (u != v && adjacent(g, u, v)) ? 1 : 0;
            if (d != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular)
            continue;
        Mask seen = Mask{1} << vs[0];
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v : members(seen))
                for (int u : vs)
                    if (!((seen >> u) & 1U) && adjacent(g, u, v)) {
                        seen |= Mask{1} << u;
                        grew = true;
                    }
        }
        if (seen == s)
            return false;
    }
    return true;
}

/// Largest subset of edges that is an induced matching, by full enumeration.
inline int brute_induced_matching_number(const Graph& g)
{
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    int best = 0;
    for (Mask pick = 0; pick < (Mask{1} << m); ++pick) {
        std::vector<edgebetti::Edge> chosen;
        for (std::size_t k = 0; k < m; ++k)
            if ((pick >> k) & 1U)
                chosen.push_back(edges[k]);
        bool ok = true;
        for (std::size_t a = 0; a < chosen.size() && ok; ++a)
            for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
                const int ea[2] = {chosen[a].u, chosen[a].v};
                const int eb[2] = {chosen[b].u, chosen[b].v};
                for (int x : ea)
                    for (int y : eb)
                        if (x == y || adjacent(g, x, y))
                            ok = false;
            }
        if (ok)
            best = std::max(best, static_cast<int>(chosen.size()));
    }
    return best;
}

/// Rank over Q of a small dense integer matrix by Bareiss elimination.
inline int bareiss_rank(std::vector<std::vector<__int128>> a)
{
    const int rows = static_cast<int>(a.size());
    if (rows == 0)
        return 0;
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    __int128 prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k)
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

/// Rank over GF(p) of a small dense integer matrix.
inline int dense_rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p)
{
    const int rows = static_cast<int>(a.size());
    if (rows == 0)
        return 0;
    const int cols = static_cast<int>(a[0].size());
    for (auto& row : a)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1;
        for (std::int64_t e = p - 2; e > 0; e >>= 1, x = x * x % p)
            if (e & 1)
                r = r * x % p;
        return r;
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[rank], a[piv]);
        const std::int64_t f = inv(a[rank][c]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && a[r][c] != 0) {
                const std::int64_t m = a[r][c] * f % p;
                for (int k = 0; k < cols; ++k)
                    a[r][k] = ((a[r][k] - m * a[rank][k]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

/// β_{i,i+j} by Hochster's formula with faces found by testing every subset
/// of W and ranks by dense elimination. p == 0 means the rationals.
inline std::map<std::pair<int, int>, std::uint64_t> dense_betti(const Graph& g, std::int64_t p = 0)
{
    const int n = g.vertex_count();
    std::map<std::pair<int, int>, std::uint64_t> table{{{0, 0}, 1}};
    for (Mask w = 1; w < (Mask{1} << n); ++w) {
        // faces[d + 1] = independent subsets of w with d + 1 vertices.
        std::vector<std::vector<Mask>> faces(static_cast<std::size_t>(popcount(w) + 2));
        for (Mask s = w;; s = (s - 1) & w) {
            if (independent(g, s))
                faces[popcount(s)].push_back(s);
            if (s == 0)
                break;
        }
        auto boundary_rank = [&](std::size_t idx) -> int {
            // Boundary from faces[idx] to faces[idx - 1].
            if (idx == 0 || idx >= faces.size() || faces[idx].empty())
                return 0;
            const auto& lower = faces[idx - 1];
            std::vector<std::vector<std::int64_t>> m(faces[idx].size(),
                                                     std::vector<std::int64_t>(lower.size(), 0));
            for (std::size_t r = 0; r < faces[idx].size(); ++r) {
                int sign = 1;
                for (int v : members(faces[idx][r])) {
                    const Mask smaller = faces[idx][r] & ~(Mask{1} << v);
                    const auto col = std::find(lower.begin(), lower.end(), smaller) - lower.begin();
                    m[r][static_cast<std::size_t>(col)] = sign;
                    sign = -sign;
                }
            }
            if (p != 0)
                return dense_rank_mod(m, p);
            std::vector<std::vector<__int128>> wide(m.size());
            for (std::size_t r = 0; r < m.size(); ++r)
                wide[r].assign(m[r].begin(), m[r].end());
            return bareiss_rank(wide);
        };
        for (std::size_t idx = 1; idx < faces.size(); ++idx) {
            const long h = static_cast<long>(faces[idx].size()) - boundary_rank(idx) - boundary_rank(idx + 1);
            if (h > 0) {
                const int j = static_cast<int>(idx);  // ~H_{idx-1} feeds strand j = idx
                const int i = popcount(w) - j;
                table[{i, j}] += static_cast<std::uint64_t>(h);
            }
        }
    }
    return table;
}

/**
 * All types (i, j) of strongly disjoint bouquet sets spanning some W, by
 * enumerating root sets, leaf assignments and representative choices.
 * Exponential in every direction; n <= 7.
 */
inline std::set<std::pair<int, int>> brute_certified_positions(const Graph& g)
{
    const int n = g.vertex_count();
    std::set<std::pair<int, int>> out{{0, 0}};
    for (Mask roots = 1; roots < (Mask{1} << n); ++roots) {
        const auto rs = members(roots);
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (!((roots >> v) & 1U))
                others.push_back(v);
        // owner[k] in {-1 (unused)} ∪ index of a root.
        std::vector<int> owner(others.size(), -1);
        while (true) {
            bool ok = true;
            std::vector<std::vector<int>> leaves(rs.size());
            for (std::size_t k = 0; k < others.size(); ++k)
                if (owner[k] >= 0) {
                    if (!adjacent(g, rs[owner[k]], others[k]))
                        ok = false;
                    leaves[owner[k]].push_back(others[k]);
                }
            for (const auto& l : leaves)
                ok = ok && !l.empty();
            if (ok) {
                // Try every choice of representative leaf.
                std::vector<std::size_t> choice(rs.size(), 0);
                bool found = false;
                while (!found) {
                    bool induced = true;
                    for (std::size_t a = 0; a < rs.size() && induced; ++a)
                        for (std::size_t b = a + 1; b < rs.size() && induced; ++b) {
                            const int ea[2] = {rs[a], leaves[a][choice[a]]};
                            const int eb[2] = {rs[b], leaves[b][choice[b]]};
                            for (int x : ea)
                                for (int y : eb)
                                    if (adjacent(g, x, y))
                                        induced = false;
                        }
                    if (induced) {
                        found = true;
                        break;
                    }
                    std::size_t k = 0;
                    while (k < rs.size() && ++choice[k] == leaves[k].size())
                        choice[k++] = 0;
                    if (k == rs.size())
                        break;
                }
                if (found) {
                    int total = static_cast<int>(rs.size());
                    for (const auto& l : leaves)
                        total += static_cast<int>(l.size());
                    const int s = static_cast<int>(rs.size());
                    out.insert({total - s, s});
                }
            }
            std::size_t k = 0;
            while (k < owner.size() && ++owner[k] == static_cast<int>(rs.size()))
                owner[k++] = -1;
            if (k == owner.size())
                break;
        }
    }
    return out;
}

/// Uniform random graph G(n, 1/2) from a seeded generator.
inline Graph random_graph(int n, std::uint64_t seed, unsigned density_percent = 50)
{
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 100 < density_percent)
                g.add_edge(u, v);
    return g;
}

/// Graph on n vertices whose edges are the set bits of `code` over the
/// pairs (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_code(int n, Mask code)
{
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1U)
                g.add_edge(u, v);
    return g;
}

} // namespace oracle

#endif
