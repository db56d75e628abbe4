#pragma once

#include <iosfwd>
#include <string>

#include "ergo/graph.hpp"

namespace ergo {

// Text edge-list format: first line "n E", then E lines "u v" with
// 0 <= u < v < n. The reader rejects anything else (loops, duplicates,
// wrong counts, trailing garbage); the writer emits edges sorted, so a
// graph always serializes to the same bytes.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace ergo
