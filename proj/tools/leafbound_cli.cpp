// leafbound: spanning trees with many leaves, with certificates.
//
// Exit codes: 0 success, 1 validation or bound failure, 2 usage error.

#include "leafbound/batch.hpp"
#include "leafbound/certificate.hpp"
#include "leafbound/cost.hpp"
#include "leafbound/errors.hpp"
#include "leafbound/generators.hpp"
#include "leafbound/graph_io.hpp"
#include "leafbound/oracle.hpp"
#include "leafbound/solver.hpp"
#include "leafbound/tree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace leafbound;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw InputError("cannot write " + path);
  out << text;
}

std::string tree_text(std::size_t n, const SpanningForest &tree) {
  std::ostringstream out;
  write_edge_list(out, n, tree.edges);
  return out.str();
}

int run_solve(const std::string &in, const std::string &tree_out,
              const std::string &cert_out, bool verify) {
  Graph g = read_graph_file(in);
  Certificate cert = solve(g, {verify});
  if (!tree_out.empty())
    write_file(tree_out, tree_text(g.id_bound(), cert.tree));
  if (!cert_out.empty())
    write_file(cert_out, certificate_text(cert));
  std::cout << "v " << cert.v << "\ne " << cert.e << "\nbound "
            << to_string(cert.bound) << "\nmin_leaves " << cert.min_leaves
            << "\nleaves " << cert.leaves << "\nverified "
            << (cert.verified ? "true" : "false") << '\n';
  return exit_ok;
}

int run_oracle(const std::string &in, std::uint64_t budget, bool serial) {
  Graph g = read_graph_file(in);
  OracleResult r =
      serial ? max_leaf_exact_serial(g, budget) : max_leaf_exact(g, budget);
  std::cout << "u " << r.u << "\nexplored " << r.explored << '\n';
  write_edge_list(std::cout, g.id_bound(), r.witness.edges);
  return exit_ok;
}

int run_check(const std::string &graph_path, const std::string &tree_path) {
  Graph g = read_graph_file(graph_path);
  Graph t = read_graph_file(tree_path);
  SpanningForest tree = make_forest(t.edges());
  TreeCheck check = check_tree(g, tree);
  if (!check.ok) {
    std::cout << "valid false\nreason " << check.reason << '\n';
    return exit_failed;
  }
  BoundReport report = bound_report(g);
  bool meets = Rational(static_cast<std::int64_t>(check.leaves)) >= report.bound;
  std::cout << "valid true\nleaves " << check.leaves << "\nbound "
            << to_string(report.bound) << "\nmin_leaves " << report.min_leaves
            << "\nmeets_bound " << (meets ? "true" : "false") << '\n';
  return meets ? exit_ok : exit_failed;
}

std::size_t number(const std::vector<std::string> &params, std::size_t i,
                   const std::string &what) {
  if (i >= params.size())
    throw CLI::ValidationError("gen", "missing parameter <" + what + ">");
  try {
    return std::stoul(params[i]);
  } catch (const std::exception &) {
    throw CLI::ValidationError("gen", "<" + what + "> must be a number");
  }
}

int run_gen(const std::string &family, const std::vector<std::string> &params,
            std::uint64_t seed, std::size_t min_degree, const std::string &out) {
  Graph g;
  if (family == "gadget")
    g = gadget();
  else if (family == "petersen")
    g = petersen_graph();
  else if (family == "chain")
    g = chain(static_cast<int>(number(params, 0, "k")));
  else if (family == "cycle")
    g = cycle_graph(number(params, 0, "n"));
  else if (family == "complete")
    g = complete_graph(number(params, 0, "n"));
  else if (family == "random")
    g = random_graph(number(params, 0, "n"), number(params, 1, "m"),
                     min_degree, seed);
  else if (family == "cubic")
    g = random_cubic(number(params, 0, "n"), seed);
  else if (family == "glue") {
    if (params.size() != 4)
      throw CLI::ValidationError("gen", "glue needs <file1> <v1> <file2> <v2>");
    g = glue(read_graph_file(params[0]),
             static_cast<VertexId>(number(params, 1, "v1")),
             read_graph_file(params[2]),
             static_cast<VertexId>(number(params, 3, "v2")));
  } else
    throw CLI::ValidationError("gen", "unknown family '" + family + "'");

  if (out.empty())
    write_graph(std::cout, g);
  else
    write_file(out, graph_text(g));
  return exit_ok;
}

int run_batch_command(const std::string &where, int jobs) {
  auto rows = run_batch(batch_inputs(where), jobs);
  print_batch(std::cout, rows);
  std::size_t bad = 0;
  for (const BatchRow &r : rows)
    bad += !r.ok;
  std::cout << rows.size() << " graphs, " << bad << " violations\n";
  return bad == 0 ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spanning trees with at least t/3 + s/4 + 3/2 leaves"};
  app.require_subcommand(1);

  std::string in, tree_out, cert_out;
  bool verify = false;
  auto *solve_cmd = app.add_subcommand("solve", "Build a spanning tree");
  solve_cmd->add_option("graph", in, "Graph file")->required();
  solve_cmd->add_option("--tree", tree_out, "Write the tree here");
  solve_cmd->add_option("--cert", cert_out, "Write the certificate here");
  solve_cmd->add_flag("--verify", verify, "Re-check the final tree");

  std::uint64_t budget = default_oracle_budget;
  bool serial = false;
  auto *oracle_cmd = app.add_subcommand("oracle", "Exact maximum leaf count");
  oracle_cmd->add_option("graph", in, "Graph file")->required();
  oracle_cmd->add_option("--budget", budget, "Largest candidate count");
  oracle_cmd->add_flag("--serial", serial, "Single-threaded scan");

  std::string tree_in;
  auto *check_cmd = app.add_subcommand("check", "Validate a spanning tree");
  check_cmd->add_option("graph", in, "Graph file")->required();
  check_cmd->add_option("tree", tree_in, "Tree file")->required();

  std::string family, out;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::size_t min_degree = 1;
  auto *gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd
      ->add_option("family", family,
                   "gadget, chain, random, cubic, glue, petersen, cycle, "
                   "complete")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--min-degree", min_degree, "random: minimum degree");
  gen_cmd->add_option("--out", out, "Output file (default stdout)");

  std::string where;
  int jobs = 1;
  auto *batch_cmd = app.add_subcommand("batch", "Solve many graphs");
  batch_cmd->add_option("inputs", where, "Directory or list file")->required();
  batch_cmd->add_option("--jobs", jobs, "Parallel solves")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*solve_cmd)
      return run_solve(in, tree_out, cert_out, verify);
    if (*oracle_cmd)
      return run_oracle(in, budget, serial);
    if (*check_cmd)
      return run_check(in, tree_in);
    if (*gen_cmd)
      return run_gen(family, params, seed, min_degree, out);
    return run_batch_command(where, jobs);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const BudgetError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  } catch (const InvariantError &e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return exit_failed;
  }
}
