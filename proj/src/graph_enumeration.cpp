#include "edgebetti/graph_enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace edgebetti {

namespace {

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& order)
{
    const int n = g.vertex_count();
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            code = (code << 1) | (g.has_edge(order[a], order[b]) ? 1U : 0U);
    return code;
}

/// Walks the product of within-class permutations, class by class.
void search_orders(const Graph& g, std::vector<std::vector<Vertex>>& classes, std::size_t cls,
                   std::vector<Vertex>& order, std::uint64_t& best)
{
    if (cls == classes.size()) {
        best = std::max(best, code_under(g, order));
        return;
    }
    auto& members = classes[cls];
    std::sort(members.begin(), members.end());
    do {
        const auto mark = order.size();
        order.insert(order.end(), members.begin(), members.end());
        search_orders(g, classes, cls + 1, order, best);
        order.resize(mark);
    } while (std::next_permutation(members.begin(), members.end()));
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 11)
        throw std::invalid_argument("canonical_code: n must be <= 11");
    // Invariant per vertex: degree, then the sorted degrees of its neighbors.
    std::map<std::vector<int>, std::vector<Vertex>> by_signature;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> signature{g.degree(v)};
        std::vector<int> around;
        for (Vertex u : g.neighborhood(v))
            around.push_back(g.degree(u));
        std::sort(around.begin(), around.end());
        signature.insert(signature.end(), around.begin(), around.end());
        by_signature[signature].push_back(v);
    }
    std::vector<std::vector<Vertex>> classes;
    for (auto& [signature, members] : by_signature)
        classes.push_back(members);
    std::vector<Vertex> order;
    std::uint64_t best = 0;
    search_orders(g, classes, 0, order, best);
    return best;
}

namespace {

/// All cliques of g (including the empty one).
std::vector<VertexSet> cliques(const Graph& g)
{
    std::vector<VertexSet> out{VertexSet{}};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t existing = out.size();
        for (std::size_t k = 0; k < existing; ++k)
            if (out[k].is_subset_of(g.neighborhood(v)))
                out.push_back(out[k] | VertexSet::single(v));
    }
    return out;
}

Graph extend(const Graph& g, VertexSet attach)
{
    Graph out(g.vertex_count() + 1);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    for (Vertex u : attach)
        out.add_edge(g.vertex_count(), u);
    return out;
}

template <class Attachments>
std::vector<Graph> grow(int n, Attachments&& attachments)
{
    std::vector<Graph> level{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level)
            for (VertexSet attach : attachments(g)) {
                Graph candidate = extend(g, attach);
                next.try_emplace(canonical_code(candidate), std::move(candidate));
            }
        level.clear();
        for (auto& [code, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

} // namespace

std::vector<Graph> enumerate_chordal_graphs(int n)
{
    if (n < 0 || n > 8)
        throw std::invalid_argument("enumerate_chordal_graphs: n must be in 0..8");
    if (n == 0)
        return {Graph(0)};
    return grow(n, [](const Graph& g) { return cliques(g); });
}

std::vector<Graph> enumerate_trees(int n)
{
    if (n < 1 || n > 11)
        throw std::invalid_argument("enumerate_trees: n must be in 1..11");
    return grow(n, [](const Graph& g) {
        std::vector<VertexSet> leaves;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            leaves.push_back(VertexSet::single(v));
        return leaves;
    });
}

Graph random_chordal_graph(int n, std::uint64_t seed)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("random_chordal_graph: bad vertex count");
    // mt19937_64 output is fixed by the standard; distributions are not, so
    // draws are reduced by hand.
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::vector<Vertex> earlier;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> shuffled = earlier;
        for (std::size_t k = shuffled.size(); k > 1; --k)
            std::swap(shuffled[k - 1], shuffled[rng() % k]);
        VertexSet clique;
        for (Vertex u : shuffled)
            if (rng() % 2 == 0 && clique.is_subset_of(g.neighborhood(u)))
                clique.insert(u);
        for (Vertex u : clique)
            g.add_edge(v, u);
        earlier.push_back(v);
    }
    return g;
}

} // namespace edgebetti
