// Small helpers shared by the test binaries.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wconvex/metric_space.hpp"

namespace wconvex::testing {

/// Indices of the points with the given ids (e.g. path vertex labels).
inline PointSet points(const FiniteMetricSpace& space, std::initializer_list<int> labels) {
  PointSet out;
  for (int label : labels) out.push_back(*space.index_of(std::to_string(label)));
  return make_point_set(space, out);
}

inline std::vector<std::string> labels(const FiniteMetricSpace& space, const PointSet& set) {
  std::vector<std::string> out;
  for (PointId x : set) out.push_back(space.id(x));
  return out;
}

}  // namespace wconvex::testing
