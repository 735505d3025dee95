#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/report.hpp"
#include "torsionlab/spec_format.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace torsionlab;
  CLI::App app{"Support tau-tilting enumeration and torsion-class lattices of bound quiver algebras"};
  app.require_subcommand(1);

  std::string input;
  std::string dot_path, json_path;
  std::optional<long> field;
  std::optional<std::size_t> node_bound, dim_bound;
  std::size_t threads = 1;
  bool oracle = false, timings = false, quiet = false;

  CLI::App* run = app.add_subcommand("run", "Analyse an algebra description file");
  run->add_option("file", input, "algebra description")->required();
  run->add_option("--dot", dot_path, "write the labelled Hasse quiver as DOT");
  run->add_option("--json", json_path, "write the JSON report ('-' for stdout)");
  run->add_option("--field", field, "override the characteristic (0 = rationals)");
  run->add_option("--node-bound", node_bound, "maximum number of mutation nodes")->check(CLI::PositiveNumber);
  run->add_option("--dim-bound", dim_bound, "maximum dimension of a summand")->check(CLI::PositiveNumber);
  run->add_option("--threads", threads, "worker threads for mutation")->check(CLI::PositiveNumber);
  run->add_flag("--oracle", oracle, "compare with the brute-force torsion-class oracle when it applies");
  run->add_flag("--timings", timings, "print stage timings to stderr");
  run->add_flag("-q,--quiet", quiet, "no summary on stdout");

  CLI::App* format = app.add_subcommand("format", "Print the canonical form of a description file");
  format->add_option("file", input, "algebra description")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    AlgebraSpec spec = parse_algebra_spec(read_file(input));
    if (format->parsed()) {
      std::cout << serialize(spec);
      return 0;
    }
    if (field) {
      if (*field != 0 && !is_prime(*field)) {
        throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(*field) + " is not prime");
      }
      spec.presentation.field = Field::with_characteristic(*field);
    }
    RunOptions options;
    options.oracle = oracle;
    options.bounds.threads = threads;
    if (spec.node_bound) options.bounds.node_bound = *spec.node_bound;
    if (spec.dim_bound) options.bounds.dim_bound = *spec.dim_bound;
    if (node_bound) options.bounds.node_bound = *node_bound;
    if (dim_bound) options.bounds.dim_bound = *dim_bound;

    const auto t0 = std::chrono::steady_clock::now();
    RunResult result = run_pipeline(spec.presentation, options);
    const auto t1 = std::chrono::steady_clock::now();

    if (!json_path.empty()) write_output(json_path, report_json(result).dump(2) + "\n");
    if (!dot_path.empty()) {
      if (!result.analysis.quiver) {
        std::cerr << "warning: no complete labelled quiver; DOT not written\n";
      } else {
        write_output(dot_path, render_dot(*result.analysis.quiver));
      }
    }
    if (!quiet && json_path != "-" && dot_path != "-") std::cout << render_text(result);
    if (timings) {
      std::cerr << "pipeline: "
                << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
