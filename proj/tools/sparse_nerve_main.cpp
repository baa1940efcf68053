// Command-line front end: `sparse-nerve ph ...` and `sparse-nerve benchmark`.

#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dowker/error.hpp"
#include "dowker/pipeline.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitSizeLimit = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse Dowker nerves and approximate persistent homology"};
  app.require_subcommand(1);

  std::string input, format, mode = "intrinsic", network_mode = "shortest-path";
  std::string interleaving = "id", out_diagram, out_stats, out_plot;
  std::size_t dim = 1, initial_point = 0;
  std::size_t max_simplices = dowker::kDefaultSimplexLimit;
  std::uint64_t seed = 0;

  auto* ph = app.add_subcommand("ph", "Compute an approximate persistence diagram");
  ph->add_option("--input", input, "Input path or gen:<kind>:<params>")
      ->required()
      ->envname("SPARSENERVE_INPUT");
  ph->add_option("--format", format, "points | matrix | graph")
      ->check(CLI::IsMember({"points", "matrix", "graph"}))
      ->envname("SPARSENERVE_FORMAT");
  ph->add_option("--mode", mode, "intrinsic | ambient | network")
      ->check(CLI::IsMember({"intrinsic", "ambient", "network"}))
      ->envname("SPARSENERVE_MODE");
  ph->add_option("--network-mode", network_mode, "shortest-path | raw-weight")
      ->check(CLI::IsMember({"shortest-path", "raw-weight"}))
      ->envname("SPARSENERVE_NETWORK_MODE");
  ph->add_option("--interleaving", interleaving,
                 "id | add:<a> | mult:<c> | poly:<c0>,<c1>,...")
      ->envname("SPARSENERVE_INTERLEAVING");
  ph->add_option("--dim", dim, "Maximal homology dimension")
      ->envname("SPARSENERVE_DIM");
  ph->add_option("--initial-point", initial_point, "Initial farthest-point sample")
      ->envname("SPARSENERVE_INITIAL_POINT");
  ph->add_option("--out-diagram", out_diagram, "Diagram output (dim,birth,death)")
      ->envname("SPARSENERVE_OUT_DIAGRAM");
  ph->add_option("--out-stats", out_stats, "Statistics output")
      ->envname("SPARSENERVE_OUT_STATS");
  ph->add_option("--out-plot", out_plot, "Plot data output")
      ->envname("SPARSENERVE_OUT_PLOT");
  ph->add_option("--max-simplices", max_simplices, "Simplex budget")
      ->envname("SPARSENERVE_MAX_SIMPLICES");
  ph->add_option("--seed", seed, "Seed for generated inputs")
      ->envname("SPARSENERVE_SEED");

  std::string suite = "graphs";
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  auto* bench = app.add_subcommand("benchmark", "Reproduce the graph size table");
  bench->add_option("--suite", suite, "Benchmark suite (graphs)")
      ->check(CLI::IsMember({"graphs", "table3"}));
  bench->add_option("--workers", workers, "Concurrent cells")
      ->envname("SPARSENERVE_WORKERS");
  bench->add_option("--max-simplices", max_simplices, "Simplex budget per cell")
      ->envname("SPARSENERVE_MAX_SIMPLICES");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*bench) {
      const auto rows = dowker::run_graph_benchmark(workers, max_simplices);
      dowker::write_benchmark_table(std::cout, rows);
      return 0;
    }

    dowker::RunConfig config;
    config.input = input;
    if (!format.empty()) config.format = dowker::parse_input_format(format);
    config.mode = dowker::parse_input_mode(mode);
    config.network_mode = dowker::parse_network_mode(network_mode);
    config.interleaving = interleaving;
    config.dim = dim;
    config.initial_point = initial_point;
    if (!out_diagram.empty()) config.out_diagram = out_diagram;
    if (!out_stats.empty()) config.out_stats = out_stats;
    if (!out_plot.empty()) config.out_plot = out_plot;
    config.max_simplices = max_simplices;
    config.seed = seed;

    const auto result = dowker::run_and_write(config);
    if (!config.out_diagram) dowker::write_diagram(std::cout, result.diagram);
    if (!config.out_stats) dowker::write_stats(std::cerr, config, result);
    return 0;
  } catch (const dowker::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const dowker::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
