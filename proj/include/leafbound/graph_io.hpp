#pragma once

#include "leafbound/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace leafbound {

/// Reads "p <n> <m>" followed by m lines "<u> <v>" (0-based ids). Lines
/// starting with '#' and blank lines are skipped. Throws InputError on
/// malformed text, out-of-range ids, loops, repeated edges or a wrong edge
/// count.
Graph parse_graph(std::istream &in);
Graph parse_graph_text(const std::string &text);
Graph read_graph_file(const std::filesystem::path &path);

/// Writes g with ids compacted to 0..v-1 and edges sorted, u < v.
void write_graph(std::ostream &out, const Graph &g);
std::string graph_text(const Graph &g);

/// Writes a vertex count and an edge list in the same format, ids as given.
void write_edge_list(std::ostream &out, std::size_t n,
                     const std::vector<Edge> &edges);

} // namespace leafbound
