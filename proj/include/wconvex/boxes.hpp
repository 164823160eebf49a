#pragma once

#include <span>
#include <vector>

#include "wconvex/metric_space.hpp"

namespace wconvex {

using PointR = std::vector<double>;

/// Axis-aligned closed hyperrectangle [lo, hi].
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dimension() const noexcept { return lo.size(); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Absolute tolerance on box endpoints.
inline constexpr double kBoxTolerance = 1e-9;

double l1_distance(const PointR& x, const PointR& y);

/// Degenerate box [x, x]. Throws DimensionMismatch for an empty point.
Box box_singleton(const PointR& x);

/// Infimum L1 distance between two boxes: per axis, 0 if the intervals meet,
/// otherwise the gap between them. Throws DimensionMismatch.
double box_distance(const Box& lhs, const Box& rhs);

/// Bounding box of both operands. Throws DimensionMismatch.
Box box_merge(const Box& lhs, const Box& rhs);

/// Closed membership with kBoxTolerance on the boundary. Throws DimensionMismatch.
bool box_member(const Box& box, const PointR& x);

/// Representation scheme for (R^d, L1). Blocks are boxes; merge_blocks
/// ignores A since the merged hull is the bounding box of the two operands.
class BoxScheme {
 public:
  using Point = PointR;
  using Block = Box;

  explicit BoxScheme(std::size_t d);

  std::size_t dimension() const noexcept { return d_; }

  Box singleton(const PointR& x) const;
  double block_distance(const Box& a, const Box& b) const { return box_distance(a, b); }
  Box merge_blocks(Theta, std::span<const PointR>, const Box& a, const Box& b) const {
    return box_merge(a, b);
  }
  bool member(const Box& b, const PointR& x) const { return box_member(b, x); }
  bool blocks_equal(const Box& a, const Box& b) const;
  double point_distance(const PointR& x, const PointR& y) const { return l1_distance(x, y); }
  bool within(double d, Theta theta) const noexcept { return d <= theta.value() + kBoxTolerance; }

 private:
  std::size_t d_;
};

}  // namespace wconvex
