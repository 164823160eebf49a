#include "wconvex/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wconvex/errors.hpp"

namespace wconvex {

namespace {

void same_dimension(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

double l1_distance(const PointR& x, const PointR& y) {
  same_dimension(x.size(), y.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
  return sum;
}

Box box_singleton(const PointR& x) {
  if (x.empty()) throw DimensionMismatch("a point needs at least one coordinate");
  return Box{x, x};
}

double box_distance(const Box& lhs, const Box& rhs) {
  same_dimension(lhs.dimension(), rhs.dimension());
  double sum = 0.0;
  for (std::size_t i = 0; i < lhs.dimension(); ++i) {
    const double u = lhs.lo[i], v = lhs.hi[i];
    const double x = rhs.lo[i], y = rhs.hi[i];
    const bool meet = std::max(u, x) <= std::min(v, y) + kBoxTolerance;
    if (!meet) sum += std::min(std::abs(x - v), std::abs(u - y));
  }
  return sum;
}

Box box_merge(const Box& lhs, const Box& rhs) {
  same_dimension(lhs.dimension(), rhs.dimension());
  Box out = lhs;
  for (std::size_t i = 0; i < lhs.dimension(); ++i) {
    out.lo[i] = std::min(lhs.lo[i], rhs.lo[i]);
    out.hi[i] = std::max(lhs.hi[i], rhs.hi[i]);
  }
  return out;
}

bool box_member(const Box& box, const PointR& x) {
  same_dimension(box.dimension(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < box.lo[i] - kBoxTolerance || x[i] > box.hi[i] + kBoxTolerance) return false;
  return true;
}

BoxScheme::BoxScheme(std::size_t d) : d_(d) {
  if (d == 0) throw DimensionMismatch("box dimension must be at least 1");
}

Box BoxScheme::singleton(const PointR& x) const {
  same_dimension(d_, x.size());
  return box_singleton(x);
}

bool BoxScheme::blocks_equal(const Box& a, const Box& b) const {
  same_dimension(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (std::abs(a.lo[i] - b.lo[i]) > kBoxTolerance || std::abs(a.hi[i] - b.hi[i]) > kBoxTolerance)
      return false;
  return true;
}

}  // namespace wconvex
