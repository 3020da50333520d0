#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "exmatch/core/graph.hpp"

namespace exmatch {

// Text format, 1-based vertices:
//
//   # comment
//   p cbg <n_left> <n_right> <m>
//   e <u> <v> <R|B>
//
// The edge count on the header line must match the number of `e` lines.

ColoredBipartiteGraph read_graph(std::istream& in);
ColoredBipartiteGraph read_graph_file(const std::string& path);
ColoredBipartiteGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const ColoredBipartiteGraph& g);
std::string format_graph(const ColoredBipartiteGraph& g);

}  // namespace exmatch
