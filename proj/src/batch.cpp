#include "leafbound/batch.hpp"

#include "leafbound/errors.hpp"
#include "leafbound/graph_io.hpp"
#include "leafbound/solver.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace leafbound {

std::vector<BatchRow> run_batch(const std::vector<std::filesystem::path> &files,
                                int jobs) {
  std::vector<BatchRow> rows(files.size());
  const auto count = static_cast<std::int64_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
  for (std::int64_t i = 0; i < count; ++i) {
    BatchRow &row = rows[i];
    row.graph = files[i].string();
    try {
      Graph g = read_graph_file(files[i]);
      row.v = g.vertex_count();
      row.e = g.edge_count();
      Certificate cert = solve(g);
      row.bound = cert.bound;
      row.leaves = cert.leaves;
      row.ok = cert.verified;
    } catch (const std::exception &e) {
      row.error = e.what();
    }
  }
  return rows;
}

std::vector<std::filesystem::path>
batch_inputs(const std::filesystem::path &where) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  if (fs::is_directory(where)) {
    for (const auto &entry : fs::directory_iterator(where))
      if (entry.is_regular_file())
        out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
  }
  std::ifstream in(where);
  if (!in)
    throw InputError("cannot open " + where.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    fs::path p(line);
    out.push_back(p.is_absolute() ? p : where.parent_path() / p);
  }
  return out;
}

void print_batch(std::ostream &out, const std::vector<BatchRow> &rows) {
  std::size_t width = 5;
  for (const BatchRow &r : rows)
    width = std::max(width, r.graph.size());
  out << std::left << std::setw(static_cast<int>(width)) << "graph" << std::right
      << std::setw(8) << "v" << std::setw(8) << "e" << std::setw(10) << "bound"
      << std::setw(8) << "leaves" << std::setw(10) << "margin" << '\n';
  for (const BatchRow &r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.graph
        << std::right;
    if (!r.error.empty()) {
      out << "  error: " << r.error << '\n';
      continue;
    }
    Rational margin = Rational(static_cast<std::int64_t>(r.leaves)) - r.bound;
    out << std::setw(8) << r.v << std::setw(8) << r.e << std::setw(10)
        << to_string(r.bound) << std::setw(8) << r.leaves << std::setw(10)
        << to_string(margin) << '\n';
  }
}

} // namespace leafbound
