#include "dowker/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>

#include "dowker/error.hpp"

namespace dowker {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

struct ParsedText {
  std::vector<Line> lines;
  std::vector<std::string> leading_comments;
};

ParsedText tokenize(std::istream& in) {
  ParsedText text;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      if (text.lines.empty()) text.leading_comments.push_back(raw.substr(hash + 1));
      raw.resize(hash);
    }
    for (char& c : raw)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    Line line{number, {}};
    std::istringstream ss(raw);
    std::string token;
    while (ss >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) text.lines.push_back(std::move(line));
  }
  return text;
}

double parse_real(const std::string& token, std::size_t line) {
  std::string lower;
  for (char c : token) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower == "inf" || lower == "+inf" || lower == "infinity") return kInf;
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw InputError("line " + std::to_string(line) + ": not a number: '" +
                     token + "'");
  return v;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InputError("line " + std::to_string(line) + ": not a node index: '" +
                     token + "'");
  return v;
}

std::string format_real(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename Parse>
auto with_file(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return parse(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void add_edge(WeightedGraph& g, std::size_t u, std::size_t v) {
  g.edges.push_back({u, v, 1.0});
}

}  // namespace

void validate(const PointCloud& cloud) {
  const std::size_t dim = cloud.dimension();
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const auto& p = cloud.points[i];
    if (p.size() != dim || dim == 0)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(p.size()) + ", expected " +
                       std::to_string(dim));
    for (double x : p)
      if (!std::isfinite(x))
        throw InputError("point " + std::to_string(i) +
                         " has a non-finite coordinate");
  }
}

void validate(const WeightedGraph& graph) {
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const Edge& e = graph.edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.u >= graph.node_count || e.v >= graph.node_count)
      throw InputError(where + "node index out of range");
    if (e.u == e.v) throw InputError(where + "self-loop");
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InputError(where + "weight must be finite and non-negative");
  }
}

PointCloud parse_point_cloud(std::istream& in) {
  PointCloud cloud;
  std::size_t dim = 0;
  for (const Line& line : tokenize(in).lines) {
    if (cloud.points.empty()) dim = line.tokens.size();
    if (line.tokens.size() != dim)
      throw InputError("line " + std::to_string(line.number) + ": expected " +
                       std::to_string(dim) + " coordinates, found " +
                       std::to_string(line.tokens.size()));
    std::vector<double> p;
    p.reserve(dim);
    for (const auto& t : line.tokens) {
      const double x = parse_real(t, line.number);
      if (!std::isfinite(x))
        throw InputError("line " + std::to_string(line.number) +
                         ": coordinates must be finite");
      p.push_back(x);
    }
    cloud.points.push_back(std::move(p));
  }
  return cloud;
}

DowkerDissimilarity parse_distance_matrix(std::istream& in,
                                          bool declared_metric) {
  const ParsedText text = tokenize(in);
  std::vector<std::vector<double>> rows;
  for (const Line& line : text.lines) {
    std::vector<double> row;
    for (const auto& t : line.tokens) row.push_back(parse_real(t, line.number));
    rows.push_back(std::move(row));
  }
  const ValidationReport report = validate_dissimilarity(rows, declared_metric);
  if (!report.valid()) {
    const EntryIssue& issue =
        report.errors.empty() ? report.metric_violations.front()
                              : report.errors.front();
    const std::size_t line =
        issue.row < text.lines.size() ? text.lines[issue.row].number : 0;
    throw InputError("line " + std::to_string(line) + ": " +
                     report.first_problem());
  }
  return DowkerDissimilarity::from_rows(rows, declared_metric);
}

WeightedGraph parse_edge_list(std::istream& in) {
  const ParsedText text = tokenize(in);
  WeightedGraph graph;
  std::size_t declared_nodes = 0;
  for (const std::string& comment : text.leading_comments) {
    std::istringstream ss(comment);
    std::string word;
    ss >> word;
    if (word == "directed") graph.directed = true;
    if (word == "nodes") ss >> declared_nodes;
  }
  std::size_t max_node = 0;
  bool any = false;
  for (const Line& line : text.lines) {
    if (line.tokens.size() != 2 && line.tokens.size() != 3)
      throw InputError("line " + std::to_string(line.number) +
                       ": expected 'u v [weight]'");
    Edge e;
    e.u = parse_index(line.tokens[0], line.number);
    e.v = parse_index(line.tokens[1], line.number);
    if (line.tokens.size() == 3) e.weight = parse_real(line.tokens[2], line.number);
    if (e.u == e.v)
      throw InputError("line " + std::to_string(line.number) + ": self-loop");
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InputError("line " + std::to_string(line.number) +
                       ": weight must be finite and non-negative");
    max_node = std::max({max_node, e.u, e.v});
    any = true;
    graph.edges.push_back(e);
  }
  graph.node_count = std::max(declared_nodes, any ? max_node + 1 : 0);
  return graph;
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
  return with_file(path, [](std::istream& in) { return parse_point_cloud(in); });
}

DowkerDissimilarity read_distance_matrix(const std::filesystem::path& path,
                                         bool declared_metric) {
  return with_file(path, [&](std::istream& in) {
    return parse_distance_matrix(in, declared_metric);
  });
}

WeightedGraph read_edge_list(const std::filesystem::path& path) {
  return with_file(path, [](std::istream& in) { return parse_edge_list(in); });
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  for (const auto& p : cloud.points) {
    for (std::size_t i = 0; i < p.size(); ++i)
      out << (i ? "," : "") << format_real(p[i]);
    out << '\n';
  }
}

void write_distance_matrix(std::ostream& out, const DowkerDissimilarity& m) {
  for (std::size_t l = 0; l < m.rows(); ++l) {
    for (std::size_t w = 0; w < m.cols(); ++w)
      out << (w ? " " : "") << to_string(m(l, w));
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const WeightedGraph& graph) {
  out << "# nodes " << graph.node_count << '\n';
  if (graph.directed) out << "# directed\n";
  for (const Edge& e : graph.edges)
    out << e.u << ' ' << e.v << ' ' << format_real(e.weight) << '\n';
}

DowkerDissimilarity distance_matrix(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  Matrix<Extended> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < cloud.dimension(); ++k) {
        const double diff = cloud.points[i][k] - cloud.points[j][k];
        sum += diff * diff;
      }
      m(i, j) = m(j, i) = Extended(std::sqrt(sum));
    }
  return DowkerDissimilarity(std::move(m));
}

DowkerDissimilarity shortest_path_matrix(const WeightedGraph& graph) {
  validate(graph);
  const std::size_t n = graph.node_count;
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(n);
  for (const Edge& e : graph.edges) {
    adjacency[e.u].emplace_back(e.v, e.weight);
    if (!graph.directed) adjacency[e.v].emplace_back(e.u, e.weight);
  }

  Matrix<Extended> m(n, n, Extended::infinity());
  using Item = std::pair<double, std::size_t>;
  std::vector<double> dist(n);
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adjacency[u])
        if (d + w < dist[v]) {
          dist[v] = d + w;
          queue.emplace(dist[v], v);
        }
    }
    for (std::size_t v = 0; v < n; ++v) m(source, v) = Extended(dist[v]);
  }
  return DowkerDissimilarity(std::move(m));
}

DowkerDissimilarity raw_weight_matrix(const WeightedGraph& graph) {
  validate(graph);
  const std::size_t n = graph.node_count;
  Matrix<Extended> m(n, n, Extended::infinity());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Extended::zero();
  for (const Edge& e : graph.edges) {
    const Extended w(e.weight);
    m(e.u, e.v) = std::min(m(e.u, e.v), w);
    if (!graph.directed) m(e.v, e.u) = std::min(m(e.v, e.u), w);
  }
  return DowkerDissimilarity(std::move(m));
}

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "cycle") return GraphKind::cycle;
  if (name == "star") return GraphKind::star;
  if (name == "wheel") return GraphKind::wheel;
  if (name == "ladder") return GraphKind::ladder;
  if (name == "circular_ladder") return GraphKind::circular_ladder;
  if (name == "grid") return GraphKind::grid;
  if (name == "complete_multipartite") return GraphKind::complete_multipartite;
  throw InputError("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::cycle: return "cycle";
    case GraphKind::star: return "star";
    case GraphKind::wheel: return "wheel";
    case GraphKind::ladder: return "ladder";
    case GraphKind::circular_ladder: return "circular_ladder";
    case GraphKind::grid: return "grid";
    case GraphKind::complete_multipartite: return "complete_multipartite";
  }
  return "?";
}

WeightedGraph generate_graph(GraphKind kind,
                             const std::vector<std::size_t>& params) {
  const std::size_t expected =
      kind == GraphKind::grid ? 2
      : kind == GraphKind::complete_multipartite ? params.size()
                                                 : 1;
  if (params.empty() || params.size() != expected)
    throw InputError("wrong parameter count for " + to_string(kind));
  for (std::size_t p : params)
    if (p == 0) throw InputError(to_string(kind) + " parameters must be >= 1");

  WeightedGraph g;
  switch (kind) {
    case GraphKind::cycle: {
      const std::size_t n = params[0];
      g.node_count = n;
      for (std::size_t i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
      if (n > 2) add_edge(g, n - 1, 0);
      break;
    }
    case GraphKind::star: {
      g.node_count = params[0];
      for (std::size_t i = 1; i < g.node_count; ++i) add_edge(g, 0, i);
      break;
    }
    case GraphKind::wheel: {
      const std::size_t n = params[0];
      g.node_count = n;
      for (std::size_t i = 1; i < n; ++i) add_edge(g, 0, i);
      for (std::size_t i = 1; i + 1 < n; ++i) add_edge(g, i, i + 1);
      if (n > 3) add_edge(g, n - 1, 1);
      break;
    }
    case GraphKind::ladder:
    case GraphKind::circular_ladder: {
      const std::size_t r = params[0];
      g.node_count = 2 * r;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        add_edge(g, i, i + 1);
        add_edge(g, r + i, r + i + 1);
      }
      for (std::size_t i = 0; i < r; ++i) add_edge(g, i, r + i);
      if (kind == GraphKind::circular_ladder && r > 2) {
        add_edge(g, 0, r - 1);
        add_edge(g, r, 2 * r - 1);
      }
      break;
    }
    case GraphKind::grid: {
      const std::size_t rows = params[0];
      const std::size_t cols = params[1];
      g.node_count = rows * cols;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          const std::size_t id = i * cols + j;
          if (i + 1 < rows) add_edge(g, id, id + cols);
          if (j + 1 < cols) add_edge(g, id, id + 1);
        }
      break;
    }
    case GraphKind::complete_multipartite: {
      std::vector<std::size_t> part;
      for (std::size_t p = 0; p < params.size(); ++p)
        part.insert(part.end(), params[p], p);
      g.node_count = part.size();
      for (std::size_t u = 0; u < part.size(); ++u)
        for (std::size_t v = u + 1; v < part.size(); ++v)
          if (part[u] != part[v]) add_edge(g, u, v);
      break;
    }
  }
  return g;
}

PointCloud sample_clifford_torus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double scale = 1.0 / std::numbers::sqrt2;
  PointCloud cloud;
  cloud.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = angle(rng);
    const double v = angle(rng);
    cloud.points.push_back({scale * std::cos(u), scale * std::sin(u),
                            scale * std::cos(v), scale * std::sin(v)});
  }
  return cloud;
}

}  // namespace dowker
