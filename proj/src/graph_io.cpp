#include "leafbound/graph_io.hpp"

#include "leafbound/errors.hpp"
#include "leafbound/generators.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace leafbound {

namespace {

std::size_t read_count(std::istringstream &ls, const std::string &line,
                        std::size_t line_no) {
  long long value = -1;
  if (!(ls >> value) || value < 0)
    throw InputError("line " + std::to_string(line_no) +
                     ": expected a non-negative integer in '" + line + "'");
  return static_cast<std::size_t>(value);
}

} // namespace

Graph parse_graph(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      ls >> tag;
      if (tag != "p")
        throw InputError("line " + std::to_string(line_no) +
                         ": expected header 'p <n> <m>'");
      n = read_count(ls, line, line_no);
      m = read_count(ls, line, line_no);
      have_header = true;
    } else {
      std::size_t a = read_count(ls, line, line_no);
      std::size_t b = read_count(ls, line, line_no);
      if (a >= n || b >= n)
        throw InputError("line " + std::to_string(line_no) +
                         ": vertex id out of range [0, " + std::to_string(n) +
                         ")");
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    std::string rest;
    if (ls >> rest)
      throw InputError("line " + std::to_string(line_no) +
                       ": unexpected trailing text '" + rest + "'");
  }
  if (!have_header)
    throw InputError("missing header 'p <n> <m>'");
  if (edges.size() != m)
    throw InputError("header announces " + std::to_string(m) +
                     " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(n, edges);
}

Graph parse_graph_text(const std::string &text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path.string());
  try {
    return parse_graph(in);
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream &out, std::size_t n,
                     const std::vector<Edge> &edges) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  out << "p " << n << ' ' << sorted.size() << '\n';
  for (const Edge &e : sorted)
    out << e.u << ' ' << e.v << '\n';
}

void write_graph(std::ostream &out, const Graph &g) {
  Graph dense = compact(g);
  write_edge_list(out, dense.vertex_count(), dense.edges());
}

std::string graph_text(const Graph &g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

} // namespace leafbound
