#include "exactcol/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "exactcol/error.hpp"

namespace exactcol {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long parse_int(std::string_view token, std::size_t line) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(ErrorKind::kParseError, line,
                     "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct PendingEdges {
  int n = -1;
  long long declared = 0;
  std::vector<Edge> edges;
  std::size_t header_line = 0;

  void add(long long u, long long v, std::size_t line) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(ErrorKind::kOutOfRange, line,
                       "endpoint outside vertex range");
    }
    if (u == v) throw ParseError(ErrorKind::kSelfLoop, line, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }

  Graph finish() const {
    if (static_cast<long long>(edges.size()) != declared) {
      throw ParseError(ErrorKind::kInconsistentHeader, header_line,
                       "header declares " + std::to_string(declared) +
                           " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, edges);
  }
};

void set_header(PendingEdges& pending, long long n, long long m,
                std::size_t line) {
  if (n < 0 || m < 0 || n > (1LL << 30)) {
    throw ParseError(ErrorKind::kParseError, line, "invalid header counts");
  }
  pending.n = static_cast<int>(n);
  pending.declared = m;
  pending.header_line = line;
}

Graph read_edge_list(std::string_view text) {
  PendingEdges pending;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty()) continue;
    if (tok.size() != 2) {
      throw ParseError(ErrorKind::kParseError, line_no,
                       "expected two integers");
    }
    const long long a = parse_int(tok[0], line_no);
    const long long b = parse_int(tok[1], line_no);
    if (pending.n < 0) {
      set_header(pending, a, b, line_no);
    } else {
      pending.add(a, b, line_no);
    }
  }
  if (pending.n < 0) throw ParseError(ErrorKind::kParseError, 1, "missing header");
  return pending.finish();
}

Graph read_dimacs(std::string_view text) {
  PendingEdges pending;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (pending.n >= 0) {
        throw ParseError(ErrorKind::kParseError, line_no, "duplicate header");
      }
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        throw ParseError(ErrorKind::kParseError, line_no,
                         "expected 'p edge n m'");
      }
      set_header(pending, parse_int(tok[2], line_no), parse_int(tok[3], line_no),
                 line_no);
      continue;
    }
    if (tok[0] == "e") {
      if (pending.n < 0) {
        throw ParseError(ErrorKind::kParseError, line_no, "edge before header");
      }
      if (tok.size() != 3) {
        throw ParseError(ErrorKind::kParseError, line_no, "expected 'e u v'");
      }
      pending.add(parse_int(tok[1], line_no) - 1, parse_int(tok[2], line_no) - 1,
                  line_no);
      continue;
    }
    throw ParseError(ErrorKind::kParseError, line_no,
                     "unknown line type '" + std::string(tok[0]) + "'");
  }
  if (pending.n < 0) throw ParseError(ErrorKind::kParseError, 1, "missing header");
  return pending.finish();
}

}  // namespace

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::optional<GraphFormat> graph_format_from_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs") return GraphFormat::kDimacs;
  return std::nullopt;
}

Graph read_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? read_edge_list(text)
                                          : read_dimacs(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == GraphFormat::kEdgeList) {
    out << g.order() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  } else {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  return read_graph(read_text_file(path), format);
}

}  // namespace exactcol
