#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "wconvex/bench.hpp"
#include "wconvex/closure.hpp"
#include "wconvex/errors.hpp"

namespace wconvex {
namespace {

std::set<std::pair<PointId, PointId>> topology(const BenchGraph& g) {
  std::set<std::pair<PointId, PointId>> out;
  for (const Edge& e : g.edges) out.insert(std::minmax(e.u, e.v));
  return out;
}

TEST(DelaunayGraph, ThreeVertices) {
  auto g = delaunay_graph(3, false, 1);
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(g.pruned, 0u);
  EXPECT_THROW(delaunay_graph(2, false, 1), std::invalid_argument);
}

TEST(DelaunayGraph, PlanarDeterministicConnected) {
  auto a = delaunay_graph(250, false, 42);
  auto b = delaunay_graph(250, false, 42);
  EXPECT_LE(a.delaunay_edges, 3u * 250u - 6u);
  EXPECT_EQ(a.pruned, a.delaunay_edges - (95 * a.delaunay_edges + 99) / 100);
  EXPECT_EQ(topology(a), topology(b));
  EXPECT_TRUE(is_connected(a.graph()));
  auto w = delaunay_graph(250, true, 42);
  EXPECT_EQ(topology(a), topology(w));
  auto su = geodesic_space(a.graph()), sw = geodesic_space(w.graph());
  EXPECT_EQ(su.kind(), MetricKind::integral);
  EXPECT_EQ(sw.kind(), MetricKind::real);
  EXPECT_NE(su.distance(0, 1), sw.distance(0, 1));
}

TEST(PruneLongEdges, RestoresConnectivity) {
  // Unit path 0..20 plus one long bridge to a far vertex: 21 edges, the
  // bridge is the single pruned edge and has to come back.
  std::vector<Vec2> v;
  std::vector<Edge> e;
  for (PointId i = 0; i <= 20; ++i) v.push_back({static_cast<double>(i), 0});
  for (PointId i = 0; i < 20; ++i) e.push_back({i, i + 1, 1.0});
  v.push_back({0, 100});
  e.push_back({21, 0, 100.0});
  auto g = prune_long_edges(v, e, false);
  EXPECT_EQ(g.pruned, 1u);
  EXPECT_EQ(g.restored, 1u);
  EXPECT_TRUE(is_connected(g.graph()));

  // Same count with a redundant long chord: pruned, not restored.
  v.pop_back();
  e.back() = {0, 20, 30.0};
  auto h = prune_long_edges(v, e, false);
  EXPECT_EQ(h.pruned, 1u);
  EXPECT_EQ(h.restored, 0u);
  EXPECT_EQ(h.edges.size(), 20u);
}

TEST(GenTarget, ConstraintsHold) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto g = delaunay_graph(120, seed % 2 == 1, seed);
    auto s = geodesic_space(g.graph());
    auto t = gen_target(s, seed);
    EXPECT_EQ(preclosure(s, t.positive, t.theta), t.positive);
    EXPECT_LT(2 * t.positive.size(), s.size());
    EXPECT_GE(static_cast<double>(t.positive.size()), 0.3 * static_cast<double>(s.size()));
    EXPECT_EQ(t.positive.size() + t.negative.size(), s.size());
    // Greater thetas overflow the balance constraint.
    auto it = std::upper_bound(s.spectrum().begin(), s.spectrum().end(), t.theta.value());
    if (it != s.spectrum().end())
      EXPECT_GE(2 * hull_oracle(s, grown_region(s, t.seeds, Theta(*it)), Theta(*it)).closure.size(), s.size());
  }
}

TEST(GenTarget, PathGivesPrefixFromEndSeed) {
  auto s = testing::path_space(9);
  const PointId seed[] = {0};
  for (double theta : s.spectrum()) {
    auto region = grown_region(s, seed, Theta(theta));
    for (std::size_t i = 0; i < region.size(); ++i) EXPECT_EQ(region[i], i);
  }
  for (std::uint64_t k = 0; k < 20; ++k) {
    auto t = gen_target(s, k, TargetOptions{1, 0.3, 64});
    EXPECT_EQ(t.positive.back() - t.positive.front() + 1, t.positive.size());  // an interval
    if (t.seeds == PointSet{0}) EXPECT_EQ(t.positive.front(), 0u);
  }
  EXPECT_THROW(gen_target(testing::path_space(2), 1), TargetGenerationFailed);
}

TEST(RunTask, RecoversFullyInformativeTarget) {
  auto s = testing::path_space(9);
  TargetConcept t{testing::points(s, {1, 2, 3, 4}), testing::points(s, {5, 6, 7, 8, 9}), Theta(1), {}};
  auto r = run_task(s, t, 8, 3);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.baseline, 5.0 / 9.0);
  EXPECT_EQ(r.positives, 4u);
}

TEST(RunTask, ErrorsAndDeterminism) {
  auto g = delaunay_graph(250, false, 5);
  auto s = geodesic_space(g.graph());
  auto t = gen_target(s, 9);
  EXPECT_THROW(run_task(s, t, 250, 1), EmptyEvalSet);
  EXPECT_THROW(run_task(s, t, 251, 1), std::invalid_argument);
  auto a = run_task(s, t, 40, 17), b = run_task(s, t, 40, 17);
  EXPECT_EQ(a.accuracy, b.accuracy);
  EXPECT_EQ(a.theta_learned, b.theta_learned);
  EXPECT_GE(a.accuracy, 0.0);
  EXPECT_LE(a.accuracy, 1.0);
  EXPECT_NEAR(a.baseline, std::max(t.positive.size(), t.negative.size()) / 250.0, 1e-12);
}

TEST(RunTask, LearnedThetaIsGreatestConsistent) {
  testing::Rng rng(8);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = delaunay_graph(30, seed % 2 == 0, seed);
    auto s = geodesic_space(g.graph());
    auto t = gen_target(s, seed);
    auto r = run_task(s, t, 10, seed);
    // Re-sample the same training set to sweep every theta.
    std::mt19937_64 r2(seed);
    std::vector<PointId> pos = t.positive, neg = t.negative;
    std::shuffle(pos.begin(), pos.end(), r2);
    std::shuffle(neg.begin(), neg.end(), r2);
    pos.resize(5);
    neg.resize(5);
    double greatest = 0;
    for (const auto& e : testing::extensional_sweep(s, pos, neg))
      if (e.consistent) greatest = e.theta;
    EXPECT_EQ(r.theta_learned, greatest);
  }
}

TEST(RunSuite, CountsAndDeterminism) {
  SuiteConfig c;
  c.graph_sizes = {40};
  c.graphs_per_size = 2;
  c.targets_per_graph = 2;
  c.train_sizes = {6, 10};
  c.weighted = {false, true};
  c.record_timing = false;
  c.workers = 2;
  EXPECT_EQ(suite_task_count(c), 16u);
  auto a = run_suite(c);
  EXPECT_TRUE(a.complete());
  ASSERT_EQ(a.rows.size(), 16u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].task_id, i);
  EXPECT_EQ(a.cells.size(), 4u);
  c.workers = 1;
  auto b = run_suite(c);
  std::ostringstream ca, cb;
  write_results_csv(ca, a.rows);
  write_results_csv(cb, b.rows);
  EXPECT_EQ(ca.str(), cb.str());
  EXPECT_EQ(ca.str().substr(0, ca.str().find('\n')),
            "graph_size,graph_seed,target_seed,train_size,weighted,accuracy,baseline,theta_learned,theta_true,wall_ms");
}

TEST(RunSuite, EmptyConfig) {
  auto r = run_suite(SuiteConfig{});
  EXPECT_TRUE(r.complete());
  EXPECT_TRUE(r.rows.empty());
  EXPECT_TRUE(r.cells.empty());
}

TEST(RunSuite, FailedTasksAreRecorded) {
  SuiteConfig c;
  c.graph_sizes = {20};
  c.graphs_per_size = 1;
  c.targets_per_graph = 1;
  c.train_sizes = {4, 20};  // 20 = |V|: nothing to evaluate
  auto r = run_suite(c);
  EXPECT_FALSE(r.complete());
  EXPECT_EQ(r.rows.size(), 1u);
}

TEST(Summarize, MeanAndSampleStd) {
  std::vector<SuiteRow> rows(2);
  rows[0].result = {50, 10, 20, 0.8, 0.6, 1, 2, 0};
  rows[1].result = {50, 10, 20, 1.0, 0.6, 1, 2, 0};
  auto cells = summarize(rows);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_DOUBLE_EQ(cells[0].accuracy_mean, 0.9);
  EXPECT_NEAR(cells[0].accuracy_std, std::sqrt(0.02), 1e-12);
  EXPECT_EQ(cells[0].baseline_std, 0.0);
}

}  // namespace
}  // namespace wconvex
