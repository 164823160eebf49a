#pragma once

#include <cstddef>
#include <span>

#include "wconvex/metric_space.hpp"

namespace wconvex {

/// All z with dist(x,z) + dist(z,y) = dist(x,y): the metric segment between
/// x and y. Contains x and y.
PointSet triangle_equal_set(const FiniteMetricSpace& space, PointId x, PointId y);

/// One witness-expansion step: the union of the segments between all pairs of
/// A that are at most theta apart. Extensive and monotone, not idempotent.
PointSet preclosure(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta);

struct HullOracleResult {
  PointSet closure;
  /// Number of preclosure steps that changed the set before the fixed point.
  std::size_t iterations = 0;
};

/// Brute-force weakly convex hull: preclosure iterated to its fixed point.
/// Slow (each step is quadratic in the set size times n) and kept as the
/// reference for the faster algorithms.
HullOracleResult hull_oracle(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta);

/// True iff A is a fixed point of preclosure at theta.
bool is_theta_convex(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta);

}  // namespace wconvex
