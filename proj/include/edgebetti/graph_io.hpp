#ifndef EDGEBETTI_GRAPH_IO_HPP
#define EDGEBETTI_GRAPH_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "edgebetti/graph.hpp"

namespace edgebetti {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text form: "n m" on the first line, then m lines "u v" (0-based).
Graph parse_graph_text(std::string_view text);
/// JSON form: {"n": int, "edges": [[u,v],...], "labels": [...]}; labels optional.
Graph parse_graph_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

std::string format_graph_text(const Graph& g);
std::string format_graph_json(const Graph& g);

} // namespace edgebetti

#endif
