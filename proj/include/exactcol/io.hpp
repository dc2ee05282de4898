#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exactcol/graph.hpp"

namespace exactcol {

// EDGELIST: "n m" then m lines "u v", 0-based.
// DIMACS:   "c" comment lines, "p edge n m", then "e u v" lines, 1-based.
// Blank lines are skipped and CRLF line endings are accepted; output always
// uses LF and lists edges in lexicographic order.
enum class GraphFormat { kEdgeList, kDimacs };

std::optional<GraphFormat> graph_format_from_name(std::string_view name);

// Throws ParseError; the kind is kParseError for malformed lines,
// kInconsistentHeader when the edge count disagrees with the header, and
// kOutOfRange / kSelfLoop for bad endpoints.
Graph read_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);
std::string read_text_file(const std::string& path);

// Splits text into lines, dropping a trailing CR from each.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace exactcol
