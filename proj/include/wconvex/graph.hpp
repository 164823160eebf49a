#pragma once

#include <cstddef>
#include <vector>

#include "wconvex/metric_space.hpp"

namespace wconvex {

struct Edge {
  PointId u = 0;
  PointId v = 0;
  double weight = 1.0;
};

/// Undirected graph on vertices 0..vertex_count-1. Edge weights are only
/// read when `weighted` is set.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  bool weighted = false;
};

/// Shortest-path metric of a connected graph: breadth-first search from every
/// source when unweighted (an integral metric), Dijkstra otherwise.
///
/// Throws DisconnectedGraph, NonPositiveWeight, UnknownPoint.
FiniteMetricSpace geodesic_space(const Graph& graph);

/// True iff the graph has at most one component (ignores weights).
bool is_connected(const Graph& graph);

}  // namespace wconvex
