#include "wconvex/graph.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "wconvex/errors.hpp"
#include "wconvex/union_find.hpp"

namespace wconvex {

namespace {

constexpr double kUnreached = std::numeric_limits<double>::infinity();

struct Adjacency {
  std::vector<std::size_t> offset;
  std::vector<std::pair<PointId, double>> arcs;
};

Adjacency adjacency(const Graph& g) {
  Adjacency adj;
  adj.offset.assign(g.vertex_count + 1, 0);
  for (const Edge& e : g.edges) {
    if (e.u >= g.vertex_count) throw UnknownPoint(e.u);
    if (e.v >= g.vertex_count) throw UnknownPoint(e.v);
    if (g.weighted && !(e.weight > 0.0 && std::isfinite(e.weight)))
      throw NonPositiveWeight("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " has weight " + std::to_string(e.weight));
    ++adj.offset[e.u + 1];
    ++adj.offset[e.v + 1];
  }
  for (std::size_t i = 0; i < g.vertex_count; ++i) adj.offset[i + 1] += adj.offset[i];
  adj.arcs.resize(adj.offset.back());
  std::vector<std::size_t> fill(adj.offset.begin(), adj.offset.end() - 1);
  for (const Edge& e : g.edges) {
    const double w = g.weighted ? e.weight : 1.0;
    adj.arcs[fill[e.u]++] = {e.v, w};
    adj.arcs[fill[e.v]++] = {e.u, w};
  }
  return adj;
}

void bfs(const Adjacency& adj, PointId source, double* dist) {
  std::vector<PointId> frontier{source};
  dist[source] = 0.0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const PointId u = frontier[head];
    for (std::size_t a = adj.offset[u]; a < adj.offset[u + 1]; ++a) {
      const PointId v = adj.arcs[a].first;
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1.0;
        frontier.push_back(v);
      }
    }
  }
}

void dijkstra(const Adjacency& adj, PointId source, double* dist) {
  using Item = std::pair<double, PointId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (std::size_t a = adj.offset[u]; a < adj.offset[u + 1]; ++a) {
      const auto [v, w] = adj.arcs[a];
      if (d + w < dist[v]) {
        dist[v] = d + w;
        heap.emplace(dist[v], v);
      }
    }
  }
}

}  // namespace

bool is_connected(const Graph& graph) {
  UnionFind uf(graph.vertex_count);
  for (const Edge& e : graph.edges)
    if (e.u < graph.vertex_count && e.v < graph.vertex_count) uf.unite(e.u, e.v);
  return uf.set_count() <= 1;
}

FiniteMetricSpace geodesic_space(const Graph& graph) {
  const std::size_t n = graph.vertex_count;
  if (n == 0) throw DisconnectedGraph("graph has no vertices");
  const Adjacency adj = adjacency(graph);

  std::vector<double> matrix(n * n, kUnreached);
  for (PointId s = 0; s < n; ++s) {
    double* row = matrix.data() + static_cast<std::size_t>(s) * n;
    if (graph.weighted)
      dijkstra(adj, s, row);
    else
      bfs(adj, s, row);
    if (s == 0)
      for (std::size_t t = 0; t < n; ++t)
        if (row[t] == kUnreached)
          throw DisconnectedGraph("vertex " + std::to_string(t) + " is not reachable from vertex 0");
  }
  // Dijkstra sums in different orders from each end; pin the matrix symmetric.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) matrix[y * n + x] = matrix[x * n + y];

  return FiniteMetricSpace::from_trusted({}, std::move(matrix),
                                         graph.weighted ? MetricKind::real : MetricKind::integral);
}

}  // namespace wconvex
