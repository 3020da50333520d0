#include "exmatch/core/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "exmatch/core/errors.hpp"

namespace exmatch {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw FormatError("graph line " + std::to_string(line_no) + ": " + msg);
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line_no, "expected a non-negative integer, got '" + tok + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    fail(line_no, "integer out of range: '" + tok + "'");
  }
}

}  // namespace

ColoredBipartiteGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n_left = 0, n_right = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind) || kind[0] == '#') continue;
    if (kind == "p") {
      if (have_header) fail(line_no, "duplicate header");
      std::string fmt, a, b, c;
      if (!(ss >> fmt >> a >> b >> c) || fmt != "cbg") fail(line_no, "header must be 'p cbg <n_left> <n_right> <m>'");
      n_left = parse_count(a, line_no);
      n_right = parse_count(b, line_no);
      m = parse_count(c, line_no);
      have_header = true;
      edges.reserve(m);
    } else if (kind == "e") {
      if (!have_header) fail(line_no, "edge before header");
      std::string a, b, col;
      if (!(ss >> a >> b >> col)) fail(line_no, "edge must be 'e <u> <v> <R|B>'");
      const std::size_t u = parse_count(a, line_no);
      const std::size_t v = parse_count(b, line_no);
      if (u < 1 || u > n_left || v < 1 || v > n_right) fail(line_no, "vertex index out of range");
      Color color;
      if (col == "R") {
        color = Color::red;
      } else if (col == "B") {
        color = Color::blue;
      } else {
        fail(line_no, "color must be R or B");
      }
      edges.push_back({static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1), color});
    } else {
      fail(line_no, "unknown line type '" + kind + "'");
    }
    std::string extra;
    if (ss >> extra && extra[0] != '#') fail(line_no, "trailing tokens");
  }
  if (!have_header) throw FormatError("graph: missing 'p cbg' header");
  if (edges.size() != m) {
    throw FormatError("graph: header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  try {
    return ColoredBipartiteGraph(n_left, n_right, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("graph: ") + e.what());
  }
}

ColoredBipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

ColoredBipartiteGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const ColoredBipartiteGraph& g) {
  out << "p cbg " << g.n_left() << ' ' << g.n_right() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << color_code(e.color) << '\n';
  }
}

std::string format_graph(const ColoredBipartiteGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace exmatch
