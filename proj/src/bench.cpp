#include "wconvex/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "wconvex/errors.hpp"
#include "wconvex/union_find.hpp"

namespace wconvex {

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t salt) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(parent ^ splitmix(salt));
}

BenchGraph prune_long_edges(std::vector<Vec2> vertices, std::vector<Edge> edges, bool weighted) {
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
  });

  BenchGraph out;
  out.vertices = std::move(vertices);
  out.weighted = weighted;
  out.delaunay_edges = edges.size();
  const std::size_t keep = (95 * edges.size() + 99) / 100;
  out.pruned = edges.size() - keep;

  out.edges.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(keep));
  UnionFind parts(out.vertices.size());
  for (const Edge& e : out.edges) parts.unite(e.u, e.v);
  for (std::size_t i = keep; i < edges.size() && parts.set_count() > 1; ++i) {
    out.edges.push_back(edges[i]);
    parts.unite(edges[i].u, edges[i].v);
    ++out.restored;
  }
  return out;
}

BenchGraph delaunay_graph(std::size_t n, bool weighted, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("a Delaunay graph needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  constexpr int kRetries = 16;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Vec2> points;
    points.reserve(n);
    while (points.size() < n) {
      const Vec2 p{unit(rng), unit(rng)};
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::vector<Triangle> triangles;
    try {
      triangles = delaunay_triangulate(points);
    } catch (const DegenerateInput&) {
      continue;
    }
    std::vector<std::pair<PointId, PointId>> pairs;
    pairs.reserve(3 * triangles.size());
    for (const Triangle& t : triangles)
      for (int k = 0; k < 3; ++k) pairs.emplace_back(std::minmax(t[k], t[(k + 1) % 3]));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs)
      edges.push_back({u, v, std::hypot(points[u].x - points[v].x, points[u].y - points[v].y)});
    return prune_long_edges(std::move(points), std::move(edges), weighted);
  }
  throw DegenerateInput("sampled points stayed collinear after " + std::to_string(kRetries) + " attempts");
}

PointSet grown_region(const FiniteMetricSpace& space, std::span<const PointId> seeds, Theta theta,
                      std::size_t max_size, bool* overflow) {
  std::vector<char> in(space.size(), 0);
  std::vector<PointId> start;
  auto add = [&](PointId x) {
    if (!in[x]) {
      in[x] = 1;
      start.push_back(x);
    }
  };
  for (PointId s : seeds) {
    space.check(s);
    add(s);
    for (PointId y : space.ball(s, theta.value())) add(y);
  }
  if (overflow) *overflow = false;
  if (start.size() > max_size) {
    if (overflow) *overflow = true;
    return {};
  }
  auto hull = weak_hull_ext(space, start, theta, HullLimits{{}, max_size});
  if (!hull) {
    if (overflow) *overflow = true;
    return {};
  }
  return hull->hull();
}

TargetConcept gen_target(const FiniteMetricSpace& space, std::uint64_t seed, const TargetOptions& options) {
  const std::size_t n = space.size();
  const std::size_t limit = (n - 1) / 2;  // largest size with 2|V+| < |V|
  if (options.seed_vertices == 0 || options.seed_vertices > limit)
    throw TargetGenerationFailed("graph with " + std::to_string(n) + " vertices is too small for " +
                                 std::to_string(options.seed_vertices) + " seed vertices");
  const auto& spectrum = space.spectrum();
  std::mt19937_64 rng(seed);
  std::vector<PointId> all(n);
  for (PointId i = 0; i < n; ++i) all[i] = i;

  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng);
    PointSet seeds(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(options.seed_vertices));
    std::sort(seeds.begin(), seeds.end());

    // spectrum[lo] fits, spectrum[hi] does not.
    std::size_t lo = 0, hi = spectrum.size();
    PointSet best = grown_region(space, seeds, Theta(spectrum[0]), limit);
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      bool overflow = false;
      PointSet region = grown_region(space, seeds, Theta(spectrum[mid]), limit, &overflow);
      if (overflow) {
        hi = mid;
      } else {
        lo = mid;
        best = std::move(region);
      }
    }
    if (static_cast<double>(best.size()) < options.min_fraction * static_cast<double>(n)) continue;

    TargetConcept target;
    target.theta = Theta(spectrum[lo]);
    target.seeds = std::move(seeds);
    std::vector<char> positive(n, 0);
    for (PointId x : best) positive[x] = 1;
    for (PointId x = 0; x < n; ++x) (positive[x] ? target.positive : target.negative).push_back(x);
    return target;
  }
  throw TargetGenerationFailed("no balanced concept with at least " +
                               std::to_string(options.min_fraction) + " of the vertices after " +
                               std::to_string(options.max_attempts) + " attempts");
}

TaskResult run_task(const FiniteMetricSpace& space, const TargetConcept& target, std::size_t m_train,
                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = space.size();
  if (m_train == n) throw EmptyEvalSet("training set covers every vertex; nothing left to evaluate");
  if (m_train > n) throw std::invalid_argument("training set larger than the graph");
  const std::size_t want_pos = (m_train + 1) / 2;
  const std::size_t want_neg = m_train - want_pos;
  if (want_pos > target.positive.size() || want_neg > target.negative.size())
    throw std::invalid_argument("concept too small for a balanced training set of " + std::to_string(m_train));

  std::mt19937_64 rng(seed);
  std::vector<PointId> pos = target.positive;
  std::vector<PointId> neg = target.negative;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);
  pos.resize(want_pos);
  neg.resize(want_neg);

  const ThetaDecomposition learned = greatest_consistent_hull(space, pos, neg);

  std::vector<char> predicted(n, 0), truth(n, 0), training(n, 0);
  for (const auto& block : learned.blocks)
    for (PointId x : block) predicted[x] = 1;
  for (PointId x : target.positive) truth[x] = 1;
  for (PointId x : pos) {
    training[x] = 1;
    if (!predicted[x]) throw std::logic_error("learned hull misses a positive example");
  }
  for (PointId x : neg) {
    training[x] = 1;
    if (predicted[x]) throw std::logic_error("learned hull contains a negative example");
  }

  std::size_t correct = 0, evaluated = 0;
  for (PointId x = 0; x < n; ++x) {
    if (training[x]) continue;
    ++evaluated;
    correct += predicted[x] == truth[x];
  }

  TaskResult r;
  r.graph_size = n;
  r.train_size = m_train;
  r.positives = target.positive.size();
  r.accuracy = static_cast<double>(correct) / static_cast<double>(evaluated);
  r.baseline = static_cast<double>(std::max(target.positive.size(), target.negative.size())) /
               static_cast<double>(n);
  r.theta_learned = learned.theta.value();
  r.theta_true = target.theta.value();
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::size_t suite_task_count(const SuiteConfig& c) {
  return c.graph_sizes.size() * c.graphs_per_size * c.weighted.size() * c.targets_per_graph *
         c.train_sizes.size();
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  std::vector<std::optional<SuiteRow>> slots(suite_task_count(config));
  std::mutex failures_mutex;
  auto fail = [&](const std::string& message) {
    std::lock_guard lock(failures_mutex);
    result.failures.push_back(message);
  };

  std::size_t task_id = 0;
  for (std::size_t size : config.graph_sizes) {
    for (std::size_t g = 0; g < config.graphs_per_size; ++g) {
      const std::uint64_t graph_seed = derive_seed(derive_seed(config.master_seed, size), g);
      for (bool weighted : config.weighted) {
        const std::size_t block_start = task_id;
        const std::size_t block_len = config.targets_per_graph * config.train_sizes.size();
        task_id += block_len;
        std::optional<FiniteMetricSpace> space;
        try {
          space.emplace(geodesic_space(delaunay_graph(size, weighted, graph_seed).graph()));
        } catch (const std::exception& e) {
          fail("graph " + std::to_string(graph_seed) + ": " + e.what());
          continue;
        }

        std::vector<std::uint64_t> target_seeds(config.targets_per_graph);
        std::vector<std::optional<TargetConcept>> targets(config.targets_per_graph);
        parallel_for(config.targets_per_graph, config.workers, [&](std::size_t t) {
          target_seeds[t] = derive_seed(graph_seed, 1000003ULL * (t + 1) + weighted);
          try {
            targets[t] = gen_target(*space, target_seeds[t], config.target);
          } catch (const std::exception& e) {
            fail("target " + std::to_string(target_seeds[t]) + ": " + e.what());
          }
        });

        parallel_for(block_len, config.workers, [&](std::size_t local) {
          const std::size_t t = local / config.train_sizes.size();
          const std::size_t m = config.train_sizes[local % config.train_sizes.size()];
          if (!targets[t]) return;
          try {
            SuiteRow row;
            row.task_id = block_start + local;
            row.graph_seed = graph_seed;
            row.target_seed = target_seeds[t];
            row.weighted = weighted;
            row.result = run_task(*space, *targets[t], m, derive_seed(target_seeds[t], m));
            if (!config.record_timing) row.result.wall_ms = 0.0;
            slots[block_start + local] = row;
          } catch (const std::exception& e) {
            fail("task " + std::to_string(block_start + local) + ": " + e.what());
          }
        });
      }
    }
  }

  for (auto& slot : slots)
    if (slot) result.rows.push_back(*slot);
  std::sort(result.failures.begin(), result.failures.end());
  result.cells = summarize(result.rows);
  return result;
}

std::vector<CellSummary> summarize(const std::vector<SuiteRow>& rows) {
  std::map<std::tuple<std::size_t, bool, std::size_t>, std::vector<const SuiteRow*>> groups;
  for (const SuiteRow& r : rows) groups[{r.result.graph_size, r.weighted, r.result.train_size}].push_back(&r);

  auto mean_std = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::pair{mean, v.size() > 1 ? std::sqrt(var / static_cast<double>(v.size() - 1)) : 0.0};
  };

  std::vector<CellSummary> cells;
  for (const auto& [key, members] : groups) {
    CellSummary c;
    std::tie(c.graph_size, c.weighted, c.train_size) = key;
    c.tasks = members.size();
    std::vector<double> acc, base;
    for (const SuiteRow* r : members) {
      acc.push_back(r->result.accuracy);
      base.push_back(r->result.baseline);
    }
    std::tie(c.accuracy_mean, c.accuracy_std) = mean_std(acc);
    std::tie(c.baseline_mean, c.baseline_std) = mean_std(base);
    cells.push_back(c);
  }
  return cells;
}

void write_results_csv(std::ostream& out, const std::vector<SuiteRow>& rows) {
  out << "graph_size,graph_seed,target_seed,train_size,weighted,accuracy,baseline,theta_learned,theta_true,wall_ms\n";
  for (const SuiteRow& r : rows) {
    out << r.result.graph_size << ',' << r.graph_seed << ',' << r.target_seed << ',' << r.result.train_size
        << ',' << (r.weighted ? 1 : 0) << ',' << std::fixed << std::setprecision(6) << r.result.accuracy << ','
        << r.result.baseline << ',' << std::defaultfloat << std::setprecision(10) << r.result.theta_learned
        << ',' << r.result.theta_true << ',' << std::fixed << std::setprecision(1) << r.result.wall_ms
        << std::defaultfloat << '\n';
  }
}

void write_cells_csv(std::ostream& out, const std::vector<CellSummary>& cells) {
  out << "graph_size,weighted,train_size,tasks,accuracy_mean,accuracy_std,baseline_mean,baseline_std\n";
  for (const CellSummary& c : cells) {
    out << c.graph_size << ',' << (c.weighted ? 1 : 0) << ',' << c.train_size << ',' << c.tasks << ','
        << std::fixed << std::setprecision(6) << c.accuracy_mean << ',' << c.accuracy_std << ','
        << c.baseline_mean << ',' << c.baseline_std << std::defaultfloat << '\n';
  }
}

}  // namespace wconvex
