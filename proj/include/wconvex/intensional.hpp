#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <deque>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wconvex/errors.hpp"
#include "wconvex/metric_space.hpp"

namespace wconvex {

/// Operations a block representation must supply for the merge-based hull
/// algorithms. A block stands for the hull of a theta-connected finite set.
///
///   singleton(x)             hull of {x}
///   block_distance(b, c)     infimum distance between the two extensions
///   merge_blocks(t, A, b, c) hull of (ext(b) ∪ ext(c)) ∩ A, re-represented
///   member(b, x)             x ∈ ext(b)
///   blocks_equal(b, c)       same extension
///   point_distance(x, y)     the underlying metric
///   within(d, t)             d <= t under the scheme's numeric rules
///
/// Implementations must be stateless or internally synchronized.
template <typename S>
concept RepresentationScheme =
    requires(const S& s, const typename S::Point& x, const typename S::Block& b, Theta t,
             std::span<const typename S::Point> a, double d) {
      { s.singleton(x) } -> std::same_as<typename S::Block>;
      { s.block_distance(b, b) } -> std::convertible_to<double>;
      { s.merge_blocks(t, a, b, b) } -> std::same_as<typename S::Block>;
      { s.member(b, x) } -> std::same_as<bool>;
      { s.blocks_equal(b, b) } -> std::same_as<bool>;
      { s.point_distance(x, x) } -> std::convertible_to<double>;
      { s.within(d, t) } -> std::same_as<bool>;
    };

/// Blocks of a theta-decomposition in intensional form. Order carries no meaning.
template <typename Block>
struct BlockSet {
  Theta theta;
  std::vector<Block> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
};

/// Bookkeeping counters of one hull computation.
struct HullStats {
  std::size_t blocks_created = 0;
  std::size_t merges = 0;
  std::size_t distance_evaluations = 0;
  std::size_t stale_pairs = 0;
};

/// Reference merge loop: start from singletons and merge any two blocks within
/// theta until none are left. O(m³) distance evaluations.
template <RepresentationScheme S>
BlockSet<typename S::Block> weak_hull_int_naive(const S& scheme, std::span<const typename S::Point> a,
                                                Theta theta, HullStats* stats = nullptr) {
  HullStats local;
  std::vector<typename S::Block> blocks;
  blocks.reserve(a.size());
  for (const auto& x : a) blocks.push_back(scheme.singleton(x));
  local.blocks_created = blocks.size();

  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        ++local.distance_evaluations;
        if (!scheme.within(scheme.block_distance(blocks[i], blocks[j]), theta)) continue;
        auto joined = scheme.merge_blocks(theta, a, blocks[i], blocks[j]);
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
        blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
        blocks.push_back(std::move(joined));
        ++local.blocks_created;
        ++local.merges;
        merged = true;
        break;
      }
    }
  }
  if (stats) *stats = local;
  return {theta, std::move(blocks)};
}

/// Queue-driven merge loop in O(m·T_singleton + m²·T_distance + m·T_merge).
///
/// Blocks are numbered by creation order (singletons first, then one new index
/// per merge, at most 2m-1 in total) and never compacted; a liveness flag marks
/// merged-away indices and a 2m×2m table keeps every distance computed. The
/// FIFO queue is seeded with all close singleton pairs (the table holds pair
/// (i, j), i < j, at row i); after a merge only the
/// distances from live blocks to the new block are computed. Pairs whose
/// endpoints died while queued are dropped when dequeued.
template <RepresentationScheme S>
BlockSet<typename S::Block> weak_hull_int(const S& scheme, std::span<const typename S::Point> a,
                                          Theta theta, HullStats* stats = nullptr) {
  HullStats local;
  const std::size_t m = a.size();
  const std::size_t capacity = m == 0 ? 0 : 2 * m - 1;

  std::vector<typename S::Block> blocks;
  blocks.reserve(capacity);
  std::vector<char> live;
  live.reserve(capacity);
  // Only the upper triangle is ever written.
  std::unique_ptr<double[]> table(new double[capacity * capacity]);
  std::deque<std::pair<std::size_t, std::size_t>> queue;

  auto measure = [&](std::size_t i, std::size_t j) {
    ++local.distance_evaluations;
    const double d = scheme.block_distance(blocks[i], blocks[j]);
    table[i * capacity + j] = d;
    if (scheme.within(d, theta)) queue.emplace_back(i, j);
  };

  for (const auto& x : a) {
    blocks.push_back(scheme.singleton(x));
    live.push_back(1);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) measure(i, j);

  std::size_t live_count = m;
  while (!queue.empty() && live_count > 1) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    if (!live[i] || !live[j]) {
      ++local.stale_pairs;
      continue;
    }
    const std::size_t fresh = blocks.size();
    blocks.push_back(scheme.merge_blocks(theta, a, blocks[i], blocks[j]));
    live[i] = live[j] = 0;
    live.push_back(1);
    --live_count;
    ++local.merges;
    for (std::size_t t = 0; t < fresh; ++t)
      if (live[t]) measure(t, fresh);
  }

  local.blocks_created = blocks.size();
  if (stats) *stats = local;
  BlockSet<typename S::Block> out{theta, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (live[i]) out.blocks.push_back(std::move(blocks[i]));
  return out;
}

/// True iff both sets hold the same blocks, in any order.
template <RepresentationScheme S>
bool same_blocks(const S& scheme, const BlockSet<typename S::Block>& lhs,
                 const BlockSet<typename S::Block>& rhs) {
  if (lhs.blocks.size() != rhs.blocks.size()) return false;
  std::vector<char> used(rhs.blocks.size(), 0);
  for (const auto& b : lhs.blocks) {
    bool found = false;
    for (std::size_t j = 0; j < rhs.blocks.size() && !found; ++j)
      if (!used[j] && scheme.blocks_equal(b, rhs.blocks[j])) found = used[j] = 1;
    if (!found) return false;
  }
  return true;
}

/// True iff some block contains x.
template <RepresentationScheme S>
bool covers(const S& scheme, const BlockSet<typename S::Block>& set, const typename S::Point& x) {
  return std::any_of(set.blocks.begin(), set.blocks.end(),
                     [&](const auto& b) { return scheme.member(b, x); });
}

/// {0} and the distinct pairwise distances of `points`, ascending.
template <RepresentationScheme S>
std::vector<double> pairwise_spectrum(const S& scheme, std::span<const typename S::Point> points) {
  std::vector<double> out{0.0};
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      out.push_back(scheme.point_distance(points[i], points[j]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Consistent hypothesis finding over a representation scheme: the hull of
/// `positive` at the greatest candidate theta that keeps every negative
/// outside all blocks, if it has at most `k` blocks.
///
/// Candidates are 0 and the pairwise distances of `positive`, binary searched,
/// then refined through the block distances of the best hull found.
/// Empty `positive` yields an empty block set.
///
/// Throws OverlappingExamples, std::invalid_argument (k = 0).
template <RepresentationScheme S>
std::optional<BlockSet<typename S::Block>> chf_int(const S& scheme,
                                                   std::span<const typename S::Point> positive,
                                                   std::span<const typename S::Point> negative,
                                                   std::size_t k) {
  if (k == 0) throw std::invalid_argument("block budget k must be positive");
  for (const auto& p : positive)
    for (const auto& q : negative)
      if (scheme.within(scheme.point_distance(p, q), Theta(0.0)))
        throw OverlappingExamples("a point is both a positive and a negative example");
  if (positive.empty()) return BlockSet<typename S::Block>{};

  auto consistent = [&](const BlockSet<typename S::Block>& hull) {
    return std::none_of(negative.begin(), negative.end(),
                        [&](const auto& q) { return covers(scheme, hull, q); });
  };

  const std::vector<double> candidates = pairwise_spectrum(scheme, positive);
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  auto best = weak_hull_int(scheme, positive, Theta(candidates[0]));
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto hull = weak_hull_int(scheme, positive, Theta(candidates[mid]));
    if (consistent(hull)) {
      lo = mid;
      best = std::move(hull);
    } else {
      hi = mid;
    }
  }
  // Block distances of merged blocks need not be pairwise distances, so a
  // hull can change strictly between two candidates. Walk those events.
  const double ceiling = hi < candidates.size() ? candidates[hi] : std::numeric_limits<double>::infinity();
  while (best.block_count() > 1) {
    double next = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < best.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < best.blocks.size(); ++j)
        next = std::min(next, static_cast<double>(scheme.block_distance(best.blocks[i], best.blocks[j])));
    if (!(next > best.theta.value()) || !(next < ceiling)) break;
    auto hull = weak_hull_int(scheme, positive, Theta(next));
    if (!consistent(hull)) break;
    best = std::move(hull);
  }
  if (best.block_count() > k) return std::nullopt;
  return best;
}

}  // namespace wconvex
