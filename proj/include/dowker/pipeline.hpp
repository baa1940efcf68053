#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dowker/cover.hpp"
#include "dowker/dissimilarity.hpp"
#include "dowker/nerve.hpp"
#include "dowker/persistence.hpp"
#include "dowker/translation.hpp"
#include "dowker/tree.hpp"

namespace dowker {

/// Wall-clock seconds per named stage, in execution order.
using StageTimings = std::vector<std::pair<std::string, double>>;

/// Every intermediate of the intrinsic pipeline.
struct SparseNerve {
  DowkerDissimilarity gamma;
  CoverMatrix rho;
  ParentFunction phi;
  RestrictionTimes restriction;
  FilteredComplex complex;
};

/// truncate -> cover matrix of gamma -> parent tree -> restriction times ->
/// sparse (dim+1)-skeleton with values from lambda.
SparseNerve build_sparse_nerve(const DowkerDissimilarity& lambda,
                               const TranslationFunction& alpha,
                               std::size_t dim, std::size_t initial = 0,
                               std::size_t limit = kDefaultSimplexLimit,
                               StageTimings* timings = nullptr);

enum class InputFormat { points, matrix, graph };
enum class InputMode { intrinsic, ambient, network };
enum class NetworkMode { shortest_path, raw_weight };

struct RunConfig {
  /// A file path, or a generator: `gen:clifford_torus:<n>` (points, uses
  /// `seed`) or `gen:<graph kind>:<p1>[x<p2>...]` (graph).
  std::string input;
  std::optional<InputFormat> format;  // inferred for generator inputs
  InputMode mode = InputMode::intrinsic;
  NetworkMode network_mode = NetworkMode::shortest_path;
  std::string interleaving = "id";
  std::size_t dim = 1;
  std::size_t initial_point = 0;
  std::optional<std::filesystem::path> out_diagram;
  std::optional<std::filesystem::path> out_stats;
  std::optional<std::filesystem::path> out_plot;
  std::size_t max_simplices = kDefaultSimplexLimit;
  std::uint64_t seed = 0;

  /// Throws InputError on inconsistent settings.
  void validate() const;
};

InputFormat parse_input_format(const std::string& s);
InputMode parse_input_mode(const std::string& s);
NetworkMode parse_network_mode(const std::string& s);

struct RunResult {
  std::size_t landmarks = 0;
  std::optional<std::size_t> witnesses;  // empty for the ambient mode
  std::size_t sparse_simplices = 0;
  long double full_skeleton = 0.0L;
  PersistenceDiagram diagram;
  InterleavingLine line;
  StageTimings timings;
};

/// Loads the input, runs the configured pipeline and computes persistence.
/// Throws InputError for bad input and SizeLimitError for oversize complexes.
RunResult run(const RunConfig& config);

/// `dim,birth,death` rows, `inf` for infinity.
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);
/// `key: value` lines; everything except the `time_*` lines is deterministic.
void write_stats(std::ostream& out, const RunConfig& config,
                 const RunResult& result);
/// `line,t,alpha(t)` polyline rows then `point,dim,birth,death,guaranteed`.
void write_plot_data(std::ostream& out, const RunResult& result);

/// Runs the configuration and writes the requested output files.
RunResult run_and_write(const RunConfig& config);

/// One row of the graph size benchmark. Missing cells failed; their error
/// text is kept alongside.
struct BenchmarkRow {
  std::string name;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  long double base_low = 0.0L;   // full 2-skeleton
  long double base_high = 0.0L;  // full 11-skeleton
  std::optional<std::size_t> mult3_low;
  std::optional<std::size_t> identity_low;
  std::optional<std::size_t> mult3_high;
  std::vector<std::string> errors;
  // Published sizes for the same cells.
  std::size_t reference_mult3_low = 0;
  std::size_t reference_identity_low = 0;
  std::size_t reference_mult3_high = 0;
};

/// The seven 100-node graphs at d = 1 (mult:3 and id) and d = 10 (mult:3),
/// with cells spread over up to `workers` threads.
std::vector<BenchmarkRow> run_graph_benchmark(std::size_t workers = 4,
                                              std::size_t limit = kDefaultSimplexLimit);

/// Table with our sizes next to the published ones and relative deviations.
void write_benchmark_table(std::ostream& out,
                           const std::vector<BenchmarkRow>& rows);

/// Integer text when exact in 64 bits, otherwise scientific notation.
std::string format_count(long double count);

}  // namespace dowker
