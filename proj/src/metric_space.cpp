#include "wconvex/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "wconvex/errors.hpp"

namespace wconvex {

Theta::Theta(double value) : value_(value) {
  if (!(value >= 0.0)) throw std::invalid_argument("theta must be a non-negative number");
}

namespace {

double slack(MetricKind kind, double reference) {
  return kind == MetricKind::integral ? 0.0 : kTolerance * std::max(1.0, reference);
}

void check_shape(const std::vector<std::string>& ids, const std::vector<double>& matrix, std::size_t& n) {
  n = ids.empty() ? static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(matrix.size()))))
                  : ids.size();
  if (n * n != matrix.size())
    throw DimensionMismatch("distance matrix has " + std::to_string(matrix.size()) +
                            " entries, expected " + std::to_string(n) + "x" + std::to_string(n));
  if (n == 0) throw DimensionMismatch("a metric space needs at least one point");
}

void check_entries(std::size_t n, const std::vector<double>& m, MetricKind kind) {
  using Axiom = AxiomViolation::Axiom;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double d = m[x * n + y];
      if (!std::isfinite(d) || d < 0.0 || (kind == MetricKind::integral && std::floor(d) != d))
        throw AxiomViolation(Axiom::non_finite, {x, y, y},
                             "dist(" + std::to_string(x) + "," + std::to_string(y) +
                                 ") is not a valid distance");
      if ((x == y) != (d == 0.0))
        throw AxiomViolation(Axiom::identity, {x, y, y},
                             "dist(" + std::to_string(x) + "," + std::to_string(y) +
                                 ") violates dist(x,y)=0 iff x=y");
      if (y > x) {
        const double e = m[y * n + x];
        if (std::abs(d - e) > slack(kind, std::max(d, e)))
          throw AxiomViolation(Axiom::symmetry, {x, y, y},
                               "dist(" + std::to_string(x) + "," + std::to_string(y) +
                                   ") != dist(" + std::to_string(y) + "," + std::to_string(x) + ")");
      }
    }
  }
}

void check_triangle(std::size_t n, const std::vector<double>& m, MetricKind kind) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double dxy = m[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (dxy > m[x * n + z] + m[z * n + y] + slack(kind, dxy))
          throw AxiomViolation(AxiomViolation::Axiom::triangle, {x, y, z},
                               "dist(" + std::to_string(x) + "," + std::to_string(y) + ") > dist(" +
                                   std::to_string(x) + "," + std::to_string(z) + ") + dist(" +
                                   std::to_string(z) + "," + std::to_string(y) + ")");
      }
    }
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::build(std::vector<std::string> ids, std::vector<double> matrix,
                                           MetricKind kind) {
  FiniteMetricSpace s;
  check_shape(ids, matrix, s.n_);
  check_entries(s.n_, matrix, kind);
  check_triangle(s.n_, matrix, kind);
  s.kind_ = kind;
  s.matrix_ = std::move(matrix);
  s.ids_ = std::move(ids);
  s.finish();
  return s;
}

FiniteMetricSpace FiniteMetricSpace::build(std::vector<std::string> ids,
                                           const std::vector<std::vector<double>>& matrix,
                                           MetricKind kind) {
  const std::size_t rows = matrix.size();
  std::vector<double> flat;
  flat.reserve(rows * rows);
  for (const auto& row : matrix) {
    if (row.size() != rows) throw DimensionMismatch("distance matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (!ids.empty() && ids.size() != rows)
    throw DimensionMismatch(std::to_string(ids.size()) + " ids for a " + std::to_string(rows) +
                            "x" + std::to_string(rows) + " matrix");
  return build(std::move(ids), std::move(flat), kind);
}

FiniteMetricSpace FiniteMetricSpace::from_trusted(std::vector<std::string> ids,
                                                  std::vector<double> matrix, MetricKind kind) {
  FiniteMetricSpace s;
  check_shape(ids, matrix, s.n_);
  check_entries(s.n_, matrix, kind);
  s.kind_ = kind;
  s.matrix_ = std::move(matrix);
  s.ids_ = std::move(ids);
  s.finish();
  return s;
}

void FiniteMetricSpace::finish() {
  if (ids_.empty()) {
    ids_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) ids_.push_back(std::to_string(i));
  }
  lookup_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!lookup_.emplace(ids_[i], static_cast<PointId>(i)).second)
      throw std::invalid_argument("duplicate point id '" + ids_[i] + "'");

  order_.resize(n_ * (n_ - 1));
  std::vector<PointId> row(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    std::iota(row.begin(), row.end(), PointId{0});
    std::swap(row[x], row.back());
    const double* dist = matrix_.data() + x * n_;
    std::sort(row.begin(), row.end() - 1, [dist](PointId a, PointId b) {
      return dist[a] != dist[b] ? dist[a] < dist[b] : a < b;
    });
    std::copy(row.begin(), row.end() - 1, order_.begin() + static_cast<std::ptrdiff_t>(x * (n_ - 1)));
  }

  spectrum_.reserve(n_ * (n_ - 1) / 2 + 1);
  spectrum_.push_back(0.0);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y) spectrum_.push_back(matrix_[x * n_ + y]);
  std::sort(spectrum_.begin(), spectrum_.end());
  spectrum_.erase(std::unique(spectrum_.begin(), spectrum_.end()), spectrum_.end());
  spectrum_.shrink_to_fit();
}

std::span<const PointId> FiniteMetricSpace::ball(PointId x, double radius) const noexcept {
  const auto all = neighbors(x);
  const auto end = std::partition_point(all.begin(), all.end(),
                                        [&](PointId y) { return within(distance(x, y), radius); });
  return all.first(static_cast<std::size_t>(end - all.begin()));
}

bool FiniteMetricSpace::within(double d, double threshold) const noexcept {
  return d <= threshold + slack(kind_, d);
}

bool FiniteMetricSpace::between(PointId x, PointId z, PointId y) const noexcept {
  const double dxy = distance(x, y);
  return std::abs(distance(x, z) + distance(z, y) - dxy) <= slack(kind_, dxy);
}

std::optional<PointId> FiniteMetricSpace::index_of(std::string_view id) const {
  const auto it = lookup_.find(std::string(id));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void FiniteMetricSpace::check(PointId x) const {
  if (x >= n_) throw UnknownPoint(x);
}

PointSet make_point_set(const FiniteMetricSpace& space, std::span<const PointId> points) {
  PointSet set(points.begin(), points.end());
  for (PointId p : set) space.check(p);
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

}  // namespace wconvex
