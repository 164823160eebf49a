#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wconvex/delaunay.hpp"
#include "wconvex/extensional_hull.hpp"
#include "wconvex/graph.hpp"

namespace wconvex {

/// Random planar graph: Delaunay edges of uniform points in the unit square
/// minus the longest ones. Edge weights always hold Euclidean lengths;
/// `weighted` selects whether the metric uses them or counts hops.
struct BenchGraph {
  std::vector<Vec2> vertices;
  std::vector<Edge> edges;
  bool weighted = false;
  std::size_t delaunay_edges = 0;
  std::size_t pruned = 0;
  std::size_t restored = 0;

  Graph graph() const { return Graph{vertices.size(), edges, weighted}; }
};

/// Removes the longest edges beyond the 95th length percentile (nearest-rank:
/// |E| - ceil(0.95·|E|) edges, ties by endpoint order), then restores the
/// shortest removed edges until the graph is connected again.
BenchGraph prune_long_edges(std::vector<Vec2> vertices, std::vector<Edge> edges, bool weighted);

/// Throws std::invalid_argument for n < 3, DegenerateInput if resampling
/// keeps producing collinear points.
BenchGraph delaunay_graph(std::size_t n, bool weighted, std::uint64_t seed);

/// Hidden concept of a vertex-classification task.
struct TargetConcept {
  PointSet positive;
  PointSet negative;
  Theta theta;
  PointSet seeds;
};

struct TargetOptions {
  /// Number of random seed vertices the concept is grown from.
  std::size_t seed_vertices = 1;
  /// Reject concepts with fewer than this fraction of the vertices.
  double min_fraction = 0.3;
  std::size_t max_attempts = 32;
};

/// The closed theta-neighborhood of `seeds` closed under the hull operator.
/// Monotone in theta.
PointSet grown_region(const FiniteMetricSpace& space, std::span<const PointId> seeds, Theta theta,
                      std::size_t max_size = static_cast<std::size_t>(-1), bool* overflow = nullptr);

/// Balanced theta-convex concept: random seed vertices, grown over increasing
/// theta; the greatest theta of the distance spectrum with 2·|region| < |V|
/// gives V+. Retries with fresh seeds while |V+| < min_fraction·|V|.
///
/// Throws TargetGenerationFailed.
TargetConcept gen_target(const FiniteMetricSpace& space, std::uint64_t seed, const TargetOptions& options = {});

struct TaskResult {
  std::size_t graph_size = 0;
  std::size_t train_size = 0;
  std::size_t positives = 0;
  double accuracy = 0.0;
  double baseline = 0.0;
  double theta_learned = 0.0;
  double theta_true = 0.0;
  double wall_ms = 0.0;
};

/// Samples |E+| = ceil(m/2) positives and m - |E+| negatives uniformly from the
/// concept, learns the hull of E+ at the greatest consistent theta, and scores
/// it on the vertices outside the training set against the majority baseline.
///
/// Throws EmptyEvalSet when m_train = |V|, std::invalid_argument when the
/// concept is too small for the requested split.
TaskResult run_task(const FiniteMetricSpace& space, const TargetConcept& target, std::size_t m_train,
                    std::uint64_t seed);

struct SuiteConfig {
  std::vector<std::size_t> graph_sizes;
  std::size_t graphs_per_size = 0;
  std::size_t targets_per_graph = 0;
  std::vector<std::size_t> train_sizes;
  std::vector<bool> weighted{false};
  std::uint64_t master_seed = 1;
  std::size_t workers = 0;  ///< 0: hardware concurrency
  bool record_timing = true;
  TargetOptions target{};
};

struct SuiteRow {
  std::size_t task_id = 0;
  std::uint64_t graph_seed = 0;
  std::uint64_t target_seed = 0;
  bool weighted = false;
  TaskResult result;
};

struct CellSummary {
  std::size_t graph_size = 0;
  bool weighted = false;
  std::size_t train_size = 0;
  std::size_t tasks = 0;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
  double baseline_mean = 0.0;
  double baseline_std = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;  ///< ordered by task id
  std::vector<CellSummary> cells;
  std::vector<std::string> failures;

  bool complete() const noexcept { return failures.empty(); }
};

std::size_t suite_task_count(const SuiteConfig& config);

/// Runs the cross product sizes × graphs × weighting × targets × train sizes.
/// Tasks of one graph run on a worker pool; a failed task is recorded in
/// `failures` and the remaining tasks still run.
SuiteResult run_suite(const SuiteConfig& config);

std::vector<CellSummary> summarize(const std::vector<SuiteRow>& rows);

/// Deterministic child seed.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t salt);

void write_results_csv(std::ostream& out, const std::vector<SuiteRow>& rows);
void write_cells_csv(std::ostream& out, const std::vector<CellSummary>& cells);

}  // namespace wconvex
