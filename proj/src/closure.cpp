#include "wconvex/closure.hpp"

#include <vector>

namespace wconvex {

PointSet triangle_equal_set(const FiniteMetricSpace& space, PointId x, PointId y) {
  space.check(x);
  space.check(y);
  PointSet out;
  for (PointId z = 0; z < space.size(); ++z)
    if (space.between(x, z, y)) out.push_back(z);
  return out;
}

PointSet preclosure(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta) {
  const PointSet members = make_point_set(space, a);
  std::vector<char> hit(space.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const PointId x = members[i];
    hit[x] = 1;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const PointId y = members[j];
      if (!space.within(space.distance(x, y), theta.value())) continue;
      for (PointId z = 0; z < space.size(); ++z)
        if (!hit[z] && space.between(x, z, y)) hit[z] = 1;
    }
  }
  PointSet out;
  for (PointId z = 0; z < space.size(); ++z)
    if (hit[z]) out.push_back(z);
  return out;
}

HullOracleResult hull_oracle(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta) {
  HullOracleResult result{make_point_set(space, a), 0};
  for (;;) {
    PointSet next = preclosure(space, result.closure, theta);
    if (next == result.closure) return result;
    result.closure = std::move(next);
    ++result.iterations;
  }
}

bool is_theta_convex(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta) {
  const PointSet set = make_point_set(space, a);
  return preclosure(space, set, theta) == set;
}

}  // namespace wconvex
