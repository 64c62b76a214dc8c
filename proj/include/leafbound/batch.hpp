#pragma once

#include "leafbound/rational.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace leafbound {

struct BatchRow {
  std::string graph;
  std::size_t v = 0;
  std::size_t e = 0;
  Rational bound;
  std::size_t leaves = 0;
  bool ok = false;   // solved and the bound holds
  std::string error; // set when reading or solving failed
};

/// Solves each file, up to `jobs` at a time. Rows keep the input order.
std::vector<BatchRow> run_batch(const std::vector<std::filesystem::path> &files,
                                int jobs);

/// Files of a directory (sorted) or the paths listed in a text file, one
/// per line, relative to the list's directory.
std::vector<std::filesystem::path> batch_inputs(const std::filesystem::path &where);

/// Table with columns graph, v, e, bound, leaves, margin.
void print_batch(std::ostream &out, const std::vector<BatchRow> &rows);

} // namespace leafbound
