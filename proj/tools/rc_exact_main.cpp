// rc-exact: exact rainbow connection number of a small graph, with a witness
// colouring written next to the input file.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rainbow/colouring_io.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/rc_exact.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact rainbow connection number by canonical colouring search"};
  std::string graph_path;
  std::int64_t budget = rainbow::kDefaultRcBudget;
  app.add_option("--graph", graph_path, "graph file (\"n m\" then edge lines)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--budget", budget, "leaf visit budget for the search")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  try {
    const rainbow::Graph g = rainbow::read_graph_file(graph_path);
    const rainbow::RcResult result = rainbow::rc_exact(g, budget);
    if (!result.value) {
      std::cout << "rc = inf\n";
      return 0;
    }
    std::cout << "rc = " << *result.value << "\n";
    rainbow::write_colouring_file(*result.witness, graph_path + ".witness");
    return 0;
  } catch (const rainbow::BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
