#include "edgebetti/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace edgebetti {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    Graph g(n);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    if (!labels.empty())
        g.set_labels(std::move(labels));
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("expected " + std::to_string(n_) + " labels, got " +
                                        std::to_string(labels.size()));
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::invalid_argument("vertex labels must be distinct");
    }
    labels_ = std::move(labels);
}

std::string Graph::label(Vertex v) const
{
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(const std::string& name) const
{
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

int Graph::edge_count() const
{
    int twice = 0;
    for (VertexSet nb : adj_)
        twice += nb.size();
    return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return adj_[v].size();
}

VertexSet Graph::neighborhood(Vertex v, bool closed) const
{
    check_vertex(v);
    VertexSet nb = adj_[v];
    if (closed)
        nb.insert(v);
    return nb;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w)
{
    if (!w.is_subset_of(g.vertices()))
        throw std::invalid_argument("vertex set exceeds graph range");
    InducedSubgraph out{Graph(w.size()), w.to_vector()};
    std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t k = 0; k < out.original.size(); ++k)
        position[out.original[k]] = static_cast<int>(k);
    for (Vertex u : w)
        for (Vertex v : g.neighborhood(u) & w)
            if (u < v)
                out.graph.add_edge(position[u], position[v]);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : out.original)
            labels.push_back(g.labels()[v]);
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

std::vector<Vertex> mcs_elimination_order(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet unnumbered = g.vertices();
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    while (!unnumbered.empty()) {
        Vertex best = unnumbered.min();
        for (Vertex v : unnumbered)
            if (weight[v] > weight[best])
                best = v;
        visit.push_back(best);
        unnumbered.erase(best);
        for (Vertex u : g.neighborhood(best) & unnumbered)
            ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    return visit;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order)
{
    VertexSet later = g.vertices();
    for (Vertex v : order) {
        later.erase(v);
        VertexSet nb = g.neighborhood(v) & later;
        for (Vertex x : nb)
            if (!(nb - VertexSet::single(x)).is_subset_of(g.neighborhood(x)))
                return false;
    }
    return true;
}

bool is_chordal(const Graph& g)
{
    const auto order = mcs_elimination_order(g);
    return is_perfect_elimination_order(g, order);
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() == 0)
        return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighborhood(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

bool is_tree(const Graph& g)
{
    return g.vertex_count() > 0 && is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_induced_matching(const Graph& g, const Matching& m)
{
    for (const Edge& e : m.edges)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") is not an edge");
    for (std::size_t a = 0; a < m.edges.size(); ++a) {
        const Edge& e = m.edges[a];
        // Anything touching N[u] or N[v] is either incident to e or joined to it by an edge.
        const VertexSet reach = g.neighborhood(e.u, true) | g.neighborhood(e.v, true);
        for (std::size_t b = a + 1; b < m.edges.size(); ++b)
            if (reach.intersects(m.edges[b].vertices()))
                return false;
    }
    return true;
}

namespace {

struct InducedMatchingSearch {
    const Graph& g;
    std::vector<Edge> edges;
    int best = 0;

    void run(std::size_t next, VertexSet available, int size)
    {
        best = std::max(best, size);
        // Skip edges that no longer fit; count the rest for the bound.
        while (next < edges.size() && !edges[next].vertices().is_subset_of(available))
            ++next;
        if (next == edges.size())
            return;
        int fitting = 0;
        for (std::size_t k = next; k < edges.size(); ++k)
            fitting += edges[k].vertices().is_subset_of(available) ? 1 : 0;
        if (size + std::min(fitting, available.size() / 2) <= best)
            return;
        const Edge& e = edges[next];
        run(next + 1, available - (g.neighborhood(e.u, true) | g.neighborhood(e.v, true)),
            size + 1);
        run(next + 1, available, size);
    }
};

} // namespace

int induced_matching_number(const Graph& g)
{
    InducedMatchingSearch search{g, g.edges()};
    search.run(0, g.vertices(), 0);
    return search.best;
}

} // namespace edgebetti
