// repair: random colouring plus dangerous-pair repair on one graph, printing
// the outcome and writing the final colouring.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rainbow/colouring_io.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/repair.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Random-colour-then-repair rainbow colouring"};
  std::string graph_path;
  std::string out_path;
  int r = 0;
  std::uint64_t seed = 0;
  int k_danger = 1;
  int pool = 0;
  int iterate = 3;
  app.add_option("--graph", graph_path, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--r", r, "palette size")->required()->check(CLI::Range(2, 64));
  app.add_option("--seed", seed, "seed for the initial colouring")->required();
  app.add_option("--k-danger", k_danger,
                 "packing size at or below which a pair counts as dangerous")
      ->check(CLI::NonNegativeNumber);
  auto* pool_opt =
      app.add_option("--pool", pool, "independent path pool size per pair")
          ->check(CLI::PositiveNumber);
  auto* iterate_opt = app.add_option(
      "--iterate", iterate,
      "extra repair passes over still-broken pairs (extension past the "
      "single-pass procedure)");
  iterate_opt->check(CLI::PositiveNumber);
  app.add_option("--out", out_path,
                 "colouring output path (default: <graph>.colouring)");
  CLI11_PARSE(app, argc, argv);

  try {
    const rainbow::Graph g = rainbow::read_graph_file(graph_path);
    if (!*pool_opt) pool = rainbow::default_pool_size(r);
    const rainbow::RepairOutcome outcome =
        *iterate_opt ? rainbow::repair_colouring_iterated(g, seed, r, k_danger,
                                                          pool, iterate)
                     : rainbow::repair_colouring(g, seed, r, k_danger, pool);

    std::cout << "status=" << rainbow::to_string(outcome.status)
              << " dangerous=" << outcome.report.pairs.size()
              << " recoloured=" << outcome.repaired_paths.size() << "\n";
    if (*iterate_opt)
      std::cout << "iterated mode (extension past the single-pass procedure): "
                << outcome.iterations << " pass(es), "
                << outcome.broken_pairs.size() << " pair(s) still broken\n";

    if (out_path.empty()) out_path = graph_path + ".colouring";
    rainbow::write_colouring_file(outcome.colouring, out_path);
    return outcome.status == rainbow::RepairStatus::Success ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
