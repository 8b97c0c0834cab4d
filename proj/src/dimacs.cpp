#include <charconv>
#include <fstream>
#include <sstream>

#include "vcolor/errors.hpp"
#include "vcolor/graph.hpp"

namespace vcolor {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::input, "line " + std::to_string(line_no) +
                               ": expected a non-negative integer, got '" +
                               std::string(tok) + "'");
  }
  return value;
}

}  // namespace

DimacsParse parse_dimacs(std::string_view text) {
  DimacsParse result;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t declared_m = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) fail(ErrorCode::input, "line " + std::to_string(line_no) + ": duplicate 'p' header");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col")) {
        fail(ErrorCode::input, "line " + std::to_string(line_no) +
                                   ": malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_count(tok[2], line_no);
      declared_m = parse_count(tok[3], line_no);
      if (n > UINT32_MAX) fail(ErrorCode::size_limit, "vertex count exceeds 2^32");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) fail(ErrorCode::input, "line " + std::to_string(line_no) + ": edge before 'p' header");
      if (tok.size() != 3) fail(ErrorCode::input, "line " + std::to_string(line_no) + ": malformed edge line");
      const std::uint64_t u = parse_count(tok[1], line_no);
      const std::uint64_t v = parse_count(tok[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n) {
        fail(ErrorCode::input, "line " + std::to_string(line_no) + ": vertex index out of range 1.." +
                                   std::to_string(n));
      }
      if (u == v) fail(ErrorCode::input, "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      result.warnings.push_back("line " + std::to_string(line_no) + ": ignored unknown line type '" +
                                std::string(tok[0]) + "'");
    }
  }
  if (!have_header) fail(ErrorCode::input, "missing 'p edge <n> <m>' header");

  std::size_t duplicates = 0;
  result.graph = Graph::from_edges(n, edges, &duplicates);
  if (duplicates > 0) {
    result.warnings.push_back(std::to_string(duplicates) + " duplicate edge(s) removed");
  }
  if (edges.size() != declared_m) {
    result.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                              std::to_string(edges.size()) + " edge lines");
  }
  return result;
}

DimacsParse read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dimacs(buf.str());
}

std::string emit_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

}  // namespace vcolor
