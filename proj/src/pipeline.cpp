#include "dowker/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "dowker/error.hpp"
#include "dowker/ingest.hpp"
#include "dowker/sparsify.hpp"
#include "dowker/truncation.hpp"

namespace dowker {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(StageTimings* sink) : sink_(sink) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    if (sink_ != nullptr)
      sink_->emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  StageTimings* sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::size_t parse_count(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError("bad count '" + s + "' in generator input");
  }
}

struct LoadedInput {
  std::optional<PointCloud> cloud;
  std::optional<WeightedGraph> graph;
  std::optional<DowkerDissimilarity> matrix;
};

LoadedInput load(const RunConfig& config) {
  LoadedInput in;
  if (config.input.rfind("gen:", 0) == 0) {
    const auto parts = split(config.input.substr(4), ':');
    if (parts.size() != 2) throw InputError("generator input is gen:<kind>:<params>");
    if (parts[0] == "clifford_torus") {
      in.cloud = sample_clifford_torus(parse_count(parts[1]), config.seed);
      return in;
    }
    std::vector<std::size_t> params;
    for (const auto& p : split(parts[1], 'x')) params.push_back(parse_count(p));
    in.graph = generate_graph(parse_graph_kind(parts[0]), params);
    return in;
  }
  if (!config.format) throw InputError("--format is required for file inputs");
  switch (*config.format) {
    case InputFormat::points:
      in.cloud = read_point_cloud(config.input);
      validate(*in.cloud);
      break;
    case InputFormat::matrix:
      in.matrix = read_distance_matrix(config.input,
                                       config.mode != InputMode::network);
      break;
    case InputFormat::graph:
      in.graph = read_edge_list(config.input);
      validate(*in.graph);
      break;
  }
  return in;
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

}  // namespace

SparseNerve build_sparse_nerve(const DowkerDissimilarity& lambda,
                               const TranslationFunction& alpha,
                               std::size_t dim, std::size_t initial,
                               std::size_t limit, StageTimings* timings) {
  if (lambda.rows() == 0) throw InputError("dissimilarity has no rows");
  Stopwatch watch(timings);
  DowkerDissimilarity gamma = truncate(lambda, alpha, initial);
  watch.lap("truncation");
  CoverMatrix rho = cover_matrix(gamma);
  ParentFunction phi = parent_function(rho);
  RestrictionTimes r = restriction_times(phi, rho);
  watch.lap("restriction");
  FilteredComplex complex = sparse_nerve(lambda, gamma, r, phi, dim, limit);
  watch.lap("nerve");
  return SparseNerve{std::move(gamma), std::move(rho), std::move(phi),
                     std::move(r), std::move(complex)};
}

InputFormat parse_input_format(const std::string& s) {
  if (s == "points") return InputFormat::points;
  if (s == "matrix") return InputFormat::matrix;
  if (s == "graph") return InputFormat::graph;
  throw InputError("unknown format '" + s + "'");
}

InputMode parse_input_mode(const std::string& s) {
  if (s == "intrinsic") return InputMode::intrinsic;
  if (s == "ambient") return InputMode::ambient;
  if (s == "network") return InputMode::network;
  throw InputError("unknown mode '" + s + "'");
}

NetworkMode parse_network_mode(const std::string& s) {
  if (s == "shortest-path") return NetworkMode::shortest_path;
  if (s == "raw-weight") return NetworkMode::raw_weight;
  throw InputError("unknown network mode '" + s + "'");
}

void RunConfig::validate() const {
  if (input.empty()) throw InputError("no input given");
  if (max_simplices == 0) throw InputError("--max-simplices must be positive");
  const bool generated = input.rfind("gen:", 0) == 0;
  if (!generated && !format) throw InputError("--format is required for file inputs");
  if (format) {
    if (mode == InputMode::ambient && *format != InputFormat::points)
      throw InputError("ambient mode needs a point cloud");
    if (mode == InputMode::network && *format != InputFormat::graph &&
        *format != InputFormat::matrix)
      throw InputError("network mode needs a graph or matrix");
  }
}

RunResult run(const RunConfig& config) {
  config.validate();
  const TranslationFunction alpha = TranslationFunction::parse(config.interleaving);

  RunResult result;
  Stopwatch watch(&result.timings);
  const LoadedInput in = load(config);

  FilteredComplex complex;
  if (config.mode == InputMode::ambient) {
    if (!in.cloud) throw InputError("ambient mode needs a point cloud");
    watch.lap("ingest");
    result.landmarks = in.cloud->size();
    if (result.landmarks == 0) throw InputError("point cloud is empty");
    complex = ambient_support_nerve(*in.cloud, alpha, config.dim,
                                    config.initial_point, config.max_simplices);
    watch.lap("nerve");
    complex = with_miniball_values(std::move(complex), *in.cloud);
    watch.lap("miniball");
  } else {
    DowkerDissimilarity lambda;
    if (in.cloud) {
      lambda = distance_matrix(*in.cloud);
    } else if (in.graph) {
      if (config.mode == InputMode::network &&
          config.network_mode == NetworkMode::raw_weight)
        lambda = raw_weight_matrix(*in.graph);
      else
        lambda = shortest_path_matrix(*in.graph);
    } else {
      lambda = *in.matrix;
    }
    watch.lap("ingest");
    result.landmarks = lambda.rows();
    result.witnesses = lambda.cols();
    if (config.initial_point >= lambda.rows())
      throw InputError("initial point is out of range");
    SparseNerve nerve = build_sparse_nerve(lambda, alpha, config.dim,
                                           config.initial_point,
                                           config.max_simplices, &result.timings);
    complex = std::move(nerve.complex);
  }
  Stopwatch persistence_watch(&result.timings);
  result.sparse_simplices = complex.size();
  result.full_skeleton = skeleton_size(result.landmarks, config.dim);
  result.diagram = compute_persistence(complex, config.dim);
  persistence_watch.lap("persistence");

  double t_max = 0.0;
  for (const auto& p : result.diagram.points) {
    t_max = std::max(t_max, p.birth.value());
    if (p.death.is_finite()) t_max = std::max(t_max, p.death.value());
  }
  result.line = interleaving_line(alpha, t_max > 0.0 ? t_max : 1.0);
  return result;
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
  for (const auto& p : diagram.points)
    out << p.dim << ',' << to_string(p.birth) << ',' << to_string(p.death) << '\n';
}

std::string format_count(long double count) {
  if (count < 18446744073709551615.0L && count == std::floor(count))
    return std::to_string(static_cast<unsigned long long>(count));
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << static_cast<double>(count);
  return os.str();
}

void write_stats(std::ostream& out, const RunConfig& config,
                 const RunResult& result) {
  static constexpr const char* kModes[] = {"intrinsic", "ambient", "network"};
  out << "input: " << config.input << '\n';
  out << "mode: " << kModes[static_cast<int>(config.mode)] << '\n';
  out << "interleaving: " << config.interleaving << '\n';
  out << "dimension: " << config.dim << '\n';
  out << "initial_point: " << config.initial_point << '\n';
  out << "landmarks: " << result.landmarks << '\n';
  out << "witnesses: "
      << (result.witnesses ? std::to_string(*result.witnesses) : "ambient") << '\n';
  out << "sparse_nerve_simplices: " << result.sparse_simplices << '\n';
  out << "full_skeleton_simplices: " << format_count(result.full_skeleton) << '\n';
  out << "diagram_points: " << result.diagram.points.size() << '\n';
  out << "zero_persistence_pairs: " << result.diagram.zero_persistence_pairs << '\n';
  for (const auto& [stage, secs] : result.timings)
    out << "time_" << stage << "_s: " << seconds(secs) << '\n';
}

void write_plot_data(std::ostream& out, const RunResult& result) {
  out << "# line,t,alpha(t)\n";
  for (const auto& [t, a] : result.line.samples)
    out << "line," << to_string(Extended(t)) << ',' << to_string(Extended(a)) << '\n';
  out << "# point,dim,birth,death,guaranteed\n";
  for (const auto& p : result.diagram.points)
    out << "point," << p.dim << ',' << to_string(p.birth) << ','
        << to_string(p.death) << ','
        << (result.line.guaranteed(p.birth, p.death) ? 1 : 0) << '\n';
}

RunResult run_and_write(const RunConfig& config) {
  RunResult result = run(config);
  auto write_file = [](const std::filesystem::path& path, auto&& writer) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    writer(out);
  };
  if (config.out_diagram)
    write_file(*config.out_diagram,
               [&](std::ostream& o) { write_diagram(o, result.diagram); });
  if (config.out_stats)
    write_file(*config.out_stats,
               [&](std::ostream& o) { write_stats(o, config, result); });
  if (config.out_plot)
    write_file(*config.out_plot,
               [&](std::ostream& o) { write_plot_data(o, result); });
  return result;
}

namespace {

struct GraphSpec {
  const char* name;
  GraphKind kind;
  std::vector<std::size_t> params;
  std::size_t reference_mult3_low;
  std::size_t reference_identity_low;
  std::size_t reference_mult3_high;
};

const std::vector<GraphSpec>& benchmark_graphs() {
  static const std::vector<GraphSpec> graphs = {
      {"Cycle graph", GraphKind::cycle, {100}, 297, 166750, 305},
      {"Circular ladder graph", GraphKind::circular_ladder, {50}, 324, 166750, 345},
      {"Ladder graph", GraphKind::ladder, {50}, 316, 46894, 333},
      {"Star graph", GraphKind::star, {100}, 199, 199, 199},
      {"Wheel graph", GraphKind::wheel, {100}, 199, 199, 199},
      {"Grid graph", GraphKind::grid, {10, 10}, 484, 70286, 721},
      {"Multipartite graph (5x20)", GraphKind::complete_multipartite,
       {20, 20, 20, 20, 20}, 199, 166750, 199},
  };
  return graphs;
}

}  // namespace

std::vector<BenchmarkRow> run_graph_benchmark(std::size_t workers,
                                              std::size_t limit) {
  const auto& graphs = benchmark_graphs();
  std::vector<BenchmarkRow> rows(graphs.size());
  std::vector<DowkerDissimilarity> lambdas(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const WeightedGraph graph = generate_graph(graphs[g].kind, graphs[g].params);
    lambdas[g] = shortest_path_matrix(graph);
    BenchmarkRow& row = rows[g];
    row.name = graphs[g].name;
    row.nodes = graph.node_count;
    row.edges = graph.edges.size();
    row.base_low = skeleton_size(graph.node_count, 1);
    row.base_high = skeleton_size(graph.node_count, 10);
    row.reference_mult3_low = graphs[g].reference_mult3_low;
    row.reference_identity_low = graphs[g].reference_identity_low;
    row.reference_mult3_high = graphs[g].reference_mult3_high;
  }

  struct Cell {
    std::size_t graph;
    int column;  // 0: mult3 d=1, 1: id d=1, 2: mult3 d=10
  };
  std::vector<Cell> cells;
  for (std::size_t g = 0; g < graphs.size(); ++g)
    for (int c = 0; c < 3; ++c) cells.push_back({g, c});

  std::vector<std::optional<std::size_t>> sizes(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell cell = cells[i];
      const auto alpha = cell.column == 1 ? TranslationFunction::identity()
                                          : TranslationFunction::multiplicative(3.0);
      const std::size_t dim = cell.column == 2 ? 10 : 1;
      try {
        sizes[i] = build_sparse_nerve(lambdas[cell.graph], alpha, dim, 0, limit)
                       .complex.size();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::max<std::size_t>(workers, 1); ++w)
      pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    BenchmarkRow& row = rows[cells[i].graph];
    auto& slot = cells[i].column == 0   ? row.mult3_low
                 : cells[i].column == 1 ? row.identity_low
                                        : row.mult3_high;
    slot = sizes[i];
    if (!errors[i].empty()) row.errors.push_back(errors[i]);
  }
  return rows;
}

void write_benchmark_table(std::ostream& out,
                           const std::vector<BenchmarkRow>& rows) {
  auto cell = [](const std::optional<std::size_t>& v, std::size_t reference) {
    std::ostringstream os;
    if (!v) {
      os << "failed (ref " << reference << ")";
      return os.str();
    }
    const double dev = 100.0 * (static_cast<double>(*v) - static_cast<double>(reference)) /
                       static_cast<double>(reference);
    os << *v << " (ref " << reference << ", " << std::showpos << std::fixed
       << std::setprecision(1) << dev << "%)";
    return os.str();
  };
  out << std::left << std::setw(28) << "Name" << std::setw(7) << "Nodes"
      << std::setw(7) << "Edges" << std::setw(10) << "Base d=1" << std::setw(28)
      << "d=1 mult:3" << std::setw(28) << "d=1 id" << std::setw(20)
      << "Base d=10" << "d=10 mult:3" << '\n';
  for (const auto& row : rows) {
    out << std::left << std::setw(28) << row.name << std::setw(7) << row.nodes
        << std::setw(7) << row.edges << std::setw(10) << format_count(row.base_low)
        << std::setw(28) << cell(row.mult3_low, row.reference_mult3_low)
        << std::setw(28) << cell(row.identity_low, row.reference_identity_low)
        << std::setw(20) << format_count(row.base_high)
        << cell(row.mult3_high, row.reference_mult3_high) << '\n';
    for (const auto& e : row.errors) out << "  error: " << e << '\n';
  }
}

}  // namespace dowker
