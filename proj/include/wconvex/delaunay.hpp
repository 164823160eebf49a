#pragma once

#include <array>
#include <span>
#include <vector>

#include "wconvex/metric_space.hpp"

namespace wconvex {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Sign of the orientation determinant: +1 if a, b, c turn counterclockwise,
/// -1 clockwise, 0 collinear. Exact: a floating-point filter with a rational
/// fallback when the filter cannot certify the sign.
int orient2d(Vec2 a, Vec2 b, Vec2 c);

/// +1 if d lies strictly inside the circle through a, b, c (counterclockwise),
/// -1 strictly outside, 0 on it. Exact, same scheme as orient2d.
int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

using Triangle = std::array<PointId, 3>;

/// Delaunay triangulation by incremental insertion (Bowyer-Watson) with ghost
/// triangles standing for the outside of each hull edge. A new point removes
/// every triangle whose circumcircle strictly contains it; cocircular points
/// therefore keep the existing triangles. Duplicate points are skipped.
///
/// Triangles are returned counterclockwise. Throws DegenerateInput if the
/// points are all collinear (or fewer than three distinct).
std::vector<Triangle> delaunay_triangulate(std::span<const Vec2> points);

}  // namespace wconvex
