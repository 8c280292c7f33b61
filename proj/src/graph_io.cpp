#include "edgebetti/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace edgebetti {

namespace {

Graph build(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
{
    try {
        return Graph::from_edges(n, edges, std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

Graph parse_graph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("graph text: expected header \"n m\"");
    if (n > kMaxVertices)
        throw ParseError("graph text: n=" + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices));
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v))
            throw ParseError("graph text: expected " + std::to_string(m) + " edges, read " +
                             std::to_string(k));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("graph text: edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string rest;
    if (in >> rest)
        throw ParseError("graph text: trailing content \"" + rest + "\"");
    return build(static_cast<int>(n), edges, {});
}

Graph parse_graph_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
    try {
        const int n = doc.at("n").get<int>();
        if (n < 0 || n > kMaxVertices)
            throw ParseError("graph json: n out of range");
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("graph json: each edge must be a pair");
            const int u = pair[0].get<int>();
            const int v = pair[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("graph json: edge endpoint out of range");
            edges.emplace_back(u, v);
        }
        std::vector<std::string> labels;
        if (doc.contains("labels"))
            labels = doc["labels"].get<std::vector<std::string>>();
        return build(n, edges, std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
}

Graph parse_graph(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_graph_json(text);
    return parse_graph_text(text);
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph_text(const Graph& g)
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges)
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string format_graph_json(const Graph& g)
{
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        doc["edges"].push_back({e.u, e.v});
    if (!g.labels().empty())
        doc["labels"] = g.labels();
    return doc.dump() + "\n";
}

} // namespace edgebetti
