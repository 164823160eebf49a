#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wconvex/metric_space.hpp"

namespace wconvex {

/// The unique partition of a theta-convex set into theta-connected,
/// theta-convex blocks that are more than theta apart.
///
/// Canonical form: every block sorted, blocks ordered by smallest member.
struct ThetaDecomposition {
  Theta theta;
  std::vector<PointSet> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// Union of the blocks.
  PointSet hull() const;

  friend bool operator==(const ThetaDecomposition&, const ThetaDecomposition&) = default;
};

/// Empty if `d` is a canonical theta-decomposition in `space` (disjoint
/// blocks, each theta-convex and theta-connected, blocks more than theta
/// apart), otherwise what is wrong with it. Brute force; for validating
/// decompositions read back from files.
std::string describe_violation(const FiniteMetricSpace& space, const ThetaDecomposition& d);

/// Early exits for hull computations that only need to know whether the hull
/// stays small or avoids some points.
struct HullLimits {
  /// Abort as soon as one of these points enters the hull.
  std::span<const PointId> forbidden;
  /// Abort as soon as the hull has more points than this.
  std::size_t max_size = std::numeric_limits<std::size_t>::max();
};

/// Extensional weakly convex hull of A with its theta-decomposition.
///
/// Queue-driven: every dequeued point x is linked to the already-closed
/// points within theta, and for each such y the points z of
/// N_d(x) ∩ N_d(y), d = dist(x,y), lying on the segment x–y are marked and
/// enqueued. Blocks are the connected components of the collected links.
/// Runs in O(n·deg²) where deg bounds the theta-neighborhood sizes.
///
/// Throws UnknownPoint.
ThetaDecomposition weak_hull_ext(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta);

/// As weak_hull_ext, but returns std::nullopt as soon as a limit is hit.
std::optional<ThetaDecomposition> weak_hull_ext(const FiniteMetricSpace& space,
                                                std::span<const PointId> a, Theta theta,
                                                const HullLimits& limits);

/// Decomposition for the greatest theta in the distance spectrum whose hull of
/// `positive` contains no point of `negative`. It always exists because the
/// hull at theta = 0 is `positive` itself. Hull-E- disjointness is monotone in
/// theta, so this is a binary search.
///
/// Throws OverlappingExamples, UnknownPoint.
ThetaDecomposition greatest_consistent_hull(const FiniteMetricSpace& space,
                                            std::span<const PointId> positive,
                                            std::span<const PointId> negative);

/// Consistent hypothesis finding: a theta-convex set containing `positive`,
/// disjoint from `negative`, with at most `k` blocks, or std::nullopt if no
/// theta admits one. Block count never grows with theta, so the greatest
/// consistent theta is the only one that needs checking against k.
///
/// Empty `positive` yields an empty decomposition at theta 0.
/// Throws OverlappingExamples, UnknownPoint, std::invalid_argument (k = 0).
std::optional<ThetaDecomposition> chf_ext(const FiniteMetricSpace& space,
                                          std::span<const PointId> positive,
                                          std::span<const PointId> negative, std::size_t k);

/// A consistent decomposition with the fewest blocks over all theta.
/// Requires a non-empty `positive`.
ThetaDecomposition min_blocks_ext(const FiniteMetricSpace& space, std::span<const PointId> positive,
                                  std::span<const PointId> negative);

}  // namespace wconvex
