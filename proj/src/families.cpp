#include "edgebetti/families.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace edgebetti {

namespace {

std::vector<std::string> layout_labels(int nx, int ny, bool with_z, int nw)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= nx; ++i)
        labels.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= ny; ++i)
        labels.push_back("y_" + std::to_string(i));
    if (with_z)
        labels.emplace_back("z");
    for (int j = 1; j <= nw; ++j)
        labels.push_back("w_" + std::to_string(j));
    return labels;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

Vertex family_vertex(int nx, int ny, std::string_view block, int index)
{
    if (block == "x")
        return index - 1;
    if (block == "y")
        return nx + index - 1;
    if (block == "z")
        return nx + ny;
    if (block == "w")
        return nx + ny + index;
    throw std::invalid_argument("unknown layout block \"" + std::string(block) + "\"");
}

Graph path_star(int r)
{
    require(r >= 1, "path_star: r must be >= 1");
    require(2 * r + 1 <= kMaxVertices, "path_star: r too large");
    const Vertex z = 2 * r;
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(z, r + i);
        edges.emplace_back(i, r + i);
    }
    return Graph::from_edges(2 * r + 1, edges, layout_labels(r, r, true, 0));
}

Graph star_triangle(int r)
{
    require(r >= 1, "star_triangle: r must be >= 1");
    require(2 * r + 1 <= kMaxVertices, "star_triangle: r too large");
    const Vertex z = 2 * r;
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        edges.emplace_back(z, i);
        edges.emplace_back(z, r + i);
        edges.emplace_back(i, r + i);
    }
    return Graph::from_edges(2 * r + 1, edges, layout_labels(r, r, true, 0));
}

Graph g_rb(int r, int b)
{
    require(b >= 2 && b <= r,
            "g_rb: need 2 <= b <= r (b = 1 is the path star, see path_star; the star "
            "triangle is star_triangle)");
    require(2 * r + b <= kMaxVertices, "g_rb: r, b too large");
    Graph g = star_triangle(r);
    Graph out(2 * r + b);
    for (const Edge& e : g.edges())
        out.add_edge(e.u, e.v);
    const Vertex z = 2 * r;
    for (int j = 1; j < b; ++j) {
        const Vertex w = z + j;
        out.add_edge(w, z);
        for (int i = 1; i < j; ++i)
            out.add_edge(w, z + i);
        for (int i = 0; i < j; ++i) {
            out.add_edge(w, i);
            out.add_edge(w, r + i);
        }
    }
    out.set_labels(layout_labels(r, r, true, b - 1));
    return out;
}

Graph g_pr1(int p, int r)
{
    require(r >= 1 && r < p, "g_pr1: need 1 <= r < p");
    require(p + r <= kMaxVertices, "g_pr1: p, r too large");
    const int nx = p - 1;
    const Vertex z = nx + r;
    auto y = [nx](int i) { return nx + i - 1; };
    auto x = [](int i) { return i - 1; };
    std::vector<Edge> edges;
    for (int i = 1; i <= r; ++i)
        edges.emplace_back(z, y(i));
    for (int i = 1; i < r; ++i)
        edges.emplace_back(x(i), y(i));
    for (int j = r; j <= p - 1; ++j)
        edges.emplace_back(x(j), y(r));
    return Graph::from_edges(p + r, edges, layout_labels(nx, r, true, 0));
}

int g_rb_edge_count(int r, int b)
{
    return 3 * r + 3 * b * (b - 1) / 2;
}

namespace {

std::vector<int> parse_params(std::string_view text, std::string_view spec)
{
    std::vector<int> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto piece = text.substr(0, comma);
        int value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || end != piece.data() + piece.size())
            throw std::invalid_argument("bad family parameters in \"" + std::string(spec) + "\"");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

Graph family_from_spec(std::string_view spec)
{
    const auto colon = spec.find(':');
    const auto name = spec.substr(0, colon);
    const auto params =
        colon == std::string_view::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1), spec);
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family \"" + std::string(name) + "\" takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "path-star") {
        arity(1);
        return path_star(params[0]);
    }
    if (name == "star-triangle") {
        arity(1);
        return star_triangle(params[0]);
    }
    if (name == "grb") {
        arity(2);
        return g_rb(params[0], params[1]);
    }
    if (name == "gpr1") {
        arity(2);
        return g_pr1(params[0], params[1]);
    }
    throw std::invalid_argument("unknown family \"" + std::string(name) +
                                "\" (expected path-star, star-triangle, grb, gpr1)");
}

} // namespace edgebetti
