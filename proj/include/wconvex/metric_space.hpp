#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wconvex {

/// Dense point index 0..n-1. External ids are mapped at the boundary.
using PointId = std::uint32_t;

/// A set of points, kept sorted and duplicate free.
using PointSet = std::vector<PointId>;

/// Relative tolerance for real-valued metrics.
inline constexpr double kTolerance = 1e-9;

/// Distance threshold of the hull operator.
class Theta {
 public:
  constexpr Theta() = default;
  /// Throws std::invalid_argument for negative or NaN values.
  explicit Theta(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Theta, Theta) = default;
  friend constexpr auto operator<=>(Theta, Theta) = default;

 private:
  double value_ = 0.0;
};

/// Integral metrics (hop counts, Hamming) are compared exactly; real ones
/// with the relative tolerance `kTolerance * max(1, reference)`.
enum class MetricKind { real, integral };

/// A finite metric space with a dense distance matrix and, for every point x,
/// the other points sorted by ascending distance from x (ties by index).
///
/// Immutable after construction; safe to share between threads.
class FiniteMetricSpace {
 public:
  /// Validates the metric axioms on a row-major n*n matrix. `ids` may be
  /// empty, in which case points are named "0".."n-1".
  ///
  /// Throws DimensionMismatch or AxiomViolation.
  static FiniteMetricSpace build(std::vector<std::string> ids, std::vector<double> matrix,
                                 MetricKind kind = MetricKind::real);
  static FiniteMetricSpace build(std::vector<std::string> ids,
                                 const std::vector<std::vector<double>>& matrix,
                                 MetricKind kind = MetricKind::real);

  /// Skips the O(n^3) triangle check. Only for matrices that are metric by
  /// construction (all-pairs shortest paths); still checks shape and symmetry.
  static FiniteMetricSpace from_trusted(std::vector<std::string> ids, std::vector<double> matrix,
                                        MetricKind kind);

  std::size_t size() const noexcept { return n_; }
  MetricKind kind() const noexcept { return kind_; }

  double distance(PointId x, PointId y) const noexcept {
    return matrix_[static_cast<std::size_t>(x) * n_ + y];
  }

  /// The sequence S_x: all points other than x by ascending distance.
  std::span<const PointId> neighbors(PointId x) const noexcept {
    return {order_.data() + static_cast<std::size_t>(x) * (n_ - 1), n_ - 1};
  }

  /// Prefix of neighbors(x) within `radius` of x; x itself is not included.
  std::span<const PointId> ball(PointId x, double radius) const noexcept;

  /// `d <= threshold`, tolerant for real metrics.
  bool within(double d, double threshold) const noexcept;

  /// `dist(x,z) + dist(z,y) == dist(x,y)`, tolerant for real metrics.
  bool between(PointId x, PointId z, PointId y) const noexcept;

  /// {0} followed by the distinct pairwise distances in ascending order.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

  double diameter() const noexcept { return spectrum_.back(); }

  const std::string& id(PointId x) const { return ids_.at(x); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<PointId> index_of(std::string_view id) const;

  bool contains(PointId x) const noexcept { return x < n_; }
  /// Throws UnknownPoint when x is out of range.
  void check(PointId x) const;

 private:
  FiniteMetricSpace() = default;
  void finish();

  std::size_t n_ = 0;
  MetricKind kind_ = MetricKind::real;
  std::vector<double> matrix_;
  std::vector<PointId> order_;
  std::vector<double> spectrum_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, PointId> lookup_;
};

/// Sorts, deduplicates and range-checks a list of points.
PointSet make_point_set(const FiniteMetricSpace& space, std::span<const PointId> points);

}  // namespace wconvex
