#ifndef EDGEBETTI_GRAPH_HPP
#define EDGEBETTI_GRAPH_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgebetti/vertex_set.hpp"

namespace edgebetti {

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    VertexSet vertices() const { return VertexSet{u, v}; }
    auto operator<=>(const Edge&) const = default;
};

/// A set of edges; a matching when the edges are pairwise disjoint.
struct Matching {
    std::vector<Edge> edges;
};

/**
 * Finite simple graph on the vertices 0..n-1.
 *
 * Adjacency is kept as one neighbor bitset per vertex, symmetric and
 * loop-free. Optional labels ("x_1", "z", ...) are carried for display and
 * must be distinct.
 */
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws std::invalid_argument on out-of-range endpoints, loops or bad labels.
    /// Duplicate edges collapse.
    static Graph from_edges(int n, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});
    static Graph from_edges(int n, std::initializer_list<Edge> edges)
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    /// N(v), or N[v] = N(v) + {v} when closed is set.
    VertexSet neighborhood(Vertex v, bool closed = false) const;
    /// Edges in lexicographic order.
    std::vector<Edge> edges() const;

    void add_edge(Vertex u, Vertex v);
    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v, or its decimal index when unlabeled.
    std::string label(Vertex v) const;
    std::optional<Vertex> find_label(const std::string& name) const;

    /// Same vertex count and edge set; labels are ignored.
    bool same_edges(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Result of induced_subgraph: the subgraph and, for each of its vertices,
/// the index it had in the ambient graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

/// G_W. Vertices keep their relative order; labels carry over.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);

/// Maximum cardinality search order (ties to the smallest index), reversed so
/// that it is a perfect elimination ordering whenever g is chordal.
std::vector<Vertex> mcs_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);
bool is_chordal(const Graph& g);

/// The empty graph counts as connected.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Throws std::invalid_argument if some member of m is not an edge of g.
bool is_induced_matching(const Graph& g, const Matching& m);

/// indmatch(g) by exhaustive branch and bound. Exponential; meant for n <= ~20.
int induced_matching_number(const Graph& g);

} // namespace edgebetti

#endif
