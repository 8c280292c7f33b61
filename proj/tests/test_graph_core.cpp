#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "edgebetti/families.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/graph_io.hpp"
#include "oracles.hpp"

using namespace edgebetti;

namespace {

Graph cycle(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("vertex set basics")
{
    VertexSet s{1, 4, 6};
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    CHECK(s.min() == 1);
    CHECK(s.bound() == 7);
    CHECK((s - VertexSet{4}).to_vector() == std::vector<Vertex>{1, 6});
    CHECK(VertexSet::range(3).is_subset_of(VertexSet::range(5)));
    CHECK_FALSE(VertexSet{}.intersects(s));
}

TEST_CASE("new graph collapses duplicates and rejects bad pairs")
{
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);

    const Graph dup = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK(cycle(4).edge_count() == 4);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = oracle::random_graph(9, seed);
        for (int u = 0; u < 9; ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (int v = 0; v < 9; ++v)
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
        }
    }
}

TEST_CASE("labels must be distinct and complete")
{
    Graph g(2);
    CHECK_THROWS_AS(g.set_labels({"a"}), std::invalid_argument);
    CHECK_THROWS_AS(g.set_labels({"a", "a"}), std::invalid_argument);
    g.set_labels({"a", "b"});
    CHECK(g.find_label("b") == 1);
    CHECK_FALSE(g.find_label("c").has_value());
}

TEST_CASE("induced subgraphs")
{
    const Graph g = g_rb(5, 3);
    const Vertex x1 = *g.find_label("x_1");
    const Vertex y1 = *g.find_label("y_1");
    const auto k2 = induced_subgraph(g, VertexSet{x1, y1});
    CHECK(k2.graph.vertex_count() == 2);
    CHECK(k2.graph.edge_count() == 1);
    CHECK(k2.original == std::vector<Vertex>{x1, y1});

    const auto p3 = induced_subgraph(cycle(4), VertexSet{0, 1, 2});
    CHECK(p3.graph.same_edges(Graph::from_edges(3, {{0, 1}, {1, 2}})));

    // N[w_1] = {w_1, x_1, y_1, z, w_2} is a clique: w_2 sees all of them too.
    const Vertex w1 = *g.find_label("w_1");
    const auto closed = induced_subgraph(g, g.neighborhood(w1, true));
    CHECK(closed.graph.vertex_count() == 5);
    CHECK(closed.graph.edge_count() == 10);
    CHECK(closed.graph.same_edges(complete(5)));

    CHECK_THROWS_AS(induced_subgraph(Graph(3), VertexSet{5}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps exactly the internal edges")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = oracle::random_graph(8, seed);
        const VertexSet w(seed * 0x9e3779b97f4a7c15ULL & 0xffU);
        const auto sub = induced_subgraph(g, w);
        const auto& orig = sub.original;
        for (int a = 0; a < sub.graph.vertex_count(); ++a)
            for (int b = 0; b < sub.graph.vertex_count(); ++b)
                CHECK(sub.graph.has_edge(a, b) == (a != b && g.has_edge(orig[a], orig[b])));
    }
}

TEST_CASE("neighborhoods")
{
    const Graph g = g_rb(5, 3);
    const Vertex z = *g.find_label("z");
    CHECK(g.neighborhood(z, true) == g.vertices());

    const Graph lone(3);
    CHECK(lone.neighborhood(1).empty());
    CHECK(lone.neighborhood(1, true) == VertexSet{1});

    const Vertex w1 = *g.find_label("w_1");
    const VertexSet expected{*g.find_label("x_1"), *g.find_label("y_1"), z, *g.find_label("w_2")};
    CHECK(g.neighborhood(w1) == expected);
}

TEST_CASE("chordality on named graphs")
{
    CHECK(is_chordal(Graph(0)));
    CHECK(is_chordal(complete(6)));
    CHECK_FALSE(is_chordal(cycle(4)));
    CHECK_FALSE(is_chordal(cycle(7)));
    CHECK(is_chordal(cycle(3)));
    CHECK(is_chordal(path_star(4)));
    for (int r = 2; r <= 5; ++r)
        for (int b = 2; b <= r; ++b)
            CHECK(is_chordal(g_rb(r, b)));
    // C_4 plus one chord.
    Graph chord = cycle(4);
    chord.add_edge(0, 2);
    CHECK(is_chordal(chord));
}

TEST_CASE("MCS chordality agrees with the induced-cycle oracle")
{
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (oracle::Mask code = 0; code < (oracle::Mask{1} << pairs); ++code) {
            const Graph g = oracle::graph_from_code(n, code);
            REQUIRE(is_chordal(g) == oracle::naive_is_chordal(g));
        }
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 6 + static_cast<int>(seed % 3);
        const Graph g = oracle::random_graph(n, seed, 30 + static_cast<unsigned>(seed % 50));
        REQUIRE(is_chordal(g) == oracle::naive_is_chordal(g));
    }
}

TEST_CASE("elimination order is perfect exactly on chordal graphs")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = oracle::random_graph(8, seed, 60);
        const auto order = mcs_elimination_order(g);
        CHECK(order.size() == 8);
        CHECK(is_perfect_elimination_order(g, order) == is_chordal(g));
    }
}

TEST_CASE("trees and complete graphs are chordal")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        // Random recursive tree: each vertex hangs off an earlier one.
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(seed % 12);
        Graph t(n);
        for (int v = 1; v < n; ++v)
            t.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
        CHECK(is_tree(t));
        CHECK(is_chordal(t));
    }
    for (int n = 1; n <= 10; ++n)
        CHECK(is_chordal(complete(n)));
}

TEST_CASE("connectivity and trees")
{
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK(is_tree(path_star(3)));
    CHECK_FALSE(is_tree(cycle(3)));
    CHECK_FALSE(is_tree(Graph(2)));
}

TEST_CASE("induced matchings")
{
    const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_induced_matching(p4, Matching{{{0, 1}}}));
    CHECK_FALSE(is_induced_matching(p4, Matching{{{0, 1}, {2, 3}}}));
    CHECK_THROWS_AS(is_induced_matching(p4, Matching{{{0, 2}}}), std::invalid_argument);

    CHECK(induced_matching_number(Graph(0)) == 0);
    CHECK(induced_matching_number(Graph(5)) == 0);
    CHECK(induced_matching_number(cycle(6)) == 2);
    CHECK(induced_matching_number(path_star(5)) == 5);
    CHECK(induced_matching_number(g_rb(5, 3)) == 5);
    CHECK(induced_matching_number(complete(7)) == 1);
}

TEST_CASE("induced matching number agrees with brute force")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 4 + static_cast<int>(seed % 6);
        const Graph g = oracle::random_graph(n, seed, 25 + static_cast<unsigned>(seed % 40));
        if (g.edge_count() > 16)
            continue;
        REQUIRE(induced_matching_number(g) == oracle::brute_induced_matching_number(g));
    }
}

TEST_CASE("induced matching number is monotone under induced subgraphs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = oracle::random_graph(10, seed, 35);
        const int whole = induced_matching_number(g);
        for (std::uint64_t k = 1; k < 8; ++k) {
            const VertexSet w((seed * 2654435761ULL + k * 40503ULL) & 0x3ffU);
            CHECK(induced_matching_number(induced_subgraph(g, w).graph) <= whole);
        }
    }
}

TEST_CASE("graph text and json formats")
{
    const Graph g = g_rb(3, 2);
    const Graph from_text = parse_graph_text(format_graph_text(g));
    CHECK(from_text.same_edges(g));
    CHECK(from_text.labels().empty());

    const Graph from_json = parse_graph_json(format_graph_json(g));
    CHECK(from_json == g);
    CHECK(parse_graph(format_graph_json(g)) == g);

    const Graph small = parse_graph("3 2\n0 1\n1 2\n");
    CHECK(small.edge_count() == 2);

    CHECK_THROWS_AS(parse_graph_text("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
}
