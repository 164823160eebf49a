#include "wconvex/extensional_hull.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "wconvex/closure.hpp"
#include "wconvex/errors.hpp"
#include "wconvex/union_find.hpp"

namespace wconvex {

PointSet ThetaDecomposition::hull() const {
  PointSet out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ThetaDecomposition> weak_hull_ext(const FiniteMetricSpace& space,
                                                std::span<const PointId> a, Theta theta,
                                                const HullLimits& limits) {
  const std::size_t n = space.size();
  std::vector<char> forbidden(n, 0);
  for (PointId p : limits.forbidden) {
    space.check(p);
    forbidden[p] = 1;
  }

  std::vector<char> marked(n, 0);
  std::vector<char> closed(n, 0);
  std::vector<PointId> queue;
  queue.reserve(a.size());

  auto enqueue = [&](PointId z) {
    marked[z] = 1;
    queue.push_back(z);
    return !forbidden[z] && queue.size() <= limits.max_size;
  };

  for (PointId x : a) {
    space.check(x);
    if (!marked[x] && !enqueue(x)) return std::nullopt;
  }

  UnionFind links(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const PointId x = queue[head];
    closed[x] = 1;
    for (PointId y : space.ball(x, theta.value())) {
      if (!closed[y]) continue;
      links.unite(x, y);
      const double reach = space.distance(x, y);
      for (PointId z : space.ball(x, reach)) {
        if (marked[z] || !space.within(space.distance(y, z), reach)) continue;
        if (space.between(x, z, y) && !enqueue(z)) return std::nullopt;
      }
    }
  }

  std::sort(queue.begin(), queue.end());
  ThetaDecomposition out{theta, {}};
  std::unordered_map<std::size_t, std::size_t> slot;
  for (PointId x : queue) {
    const auto [it, fresh] = slot.emplace(links.find(x), out.blocks.size());
    if (fresh) out.blocks.emplace_back();
    out.blocks[it->second].push_back(x);
  }
  return out;
}

std::string describe_violation(const FiniteMetricSpace& space, const ThetaDecomposition& d) {
  const double theta = d.theta.value();
  std::vector<int> owner(space.size(), -1);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const PointSet& block = d.blocks[b];
    const std::string name = "block " + std::to_string(b);
    if (block.empty()) return name + " is empty";
    if (!std::is_sorted(block.begin(), block.end()) ||
        std::adjacent_find(block.begin(), block.end()) != block.end())
      return name + " is not sorted and duplicate free";
    if (b > 0 && d.blocks[b - 1].front() > block.front()) return "blocks are not ordered by smallest member";
    for (PointId x : block) {
      if (!space.contains(x)) return name + " holds unknown point " + std::to_string(x);
      if (owner[x] >= 0) return "point '" + space.id(x) + "' is in two blocks";
      owner[x] = static_cast<int>(b);
    }
    if (!is_theta_convex(space, block, d.theta)) return name + " is not theta-convex";
    UnionFind parts(block.size());
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (space.within(space.distance(block[i], block[j]), theta)) parts.unite(i, j);
    if (parts.set_count() != 1) return name + " is not theta-connected";
  }
  for (PointId x = 0; x < space.size(); ++x) {
    if (owner[x] < 0) continue;
    for (PointId y : space.ball(x, theta))
      if (owner[y] >= 0 && owner[y] != owner[x])
        return "points '" + space.id(x) + "' and '" + space.id(y) + "' of different blocks are within theta";
  }
  return {};
}

ThetaDecomposition weak_hull_ext(const FiniteMetricSpace& space, std::span<const PointId> a, Theta theta) {
  return *weak_hull_ext(space, a, theta, HullLimits{});
}

namespace {

void check_examples(const FiniteMetricSpace& space, std::span<const PointId> positive,
                    std::span<const PointId> negative) {
  std::vector<char> seen(space.size(), 0);
  for (PointId p : positive) {
    space.check(p);
    seen[p] = 1;
  }
  for (PointId q : negative) {
    space.check(q);
    if (seen[q])
      throw OverlappingExamples("point '" + space.id(q) + "' is both a positive and a negative example");
  }
}

}  // namespace

ThetaDecomposition greatest_consistent_hull(const FiniteMetricSpace& space,
                                            std::span<const PointId> positive,
                                            std::span<const PointId> negative) {
  check_examples(space, positive, negative);
  const auto& candidates = space.spectrum();
  const HullLimits avoid{negative};

  // Invariant: candidates[lo] is consistent, candidates[hi] (if in range) is not.
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  auto best = weak_hull_ext(space, positive, Theta(candidates[0]), avoid);
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto hull = weak_hull_ext(space, positive, Theta(candidates[mid]), avoid)) {
      lo = mid;
      best = std::move(hull);
    } else {
      hi = mid;
    }
  }
  return std::move(*best);
}

std::optional<ThetaDecomposition> chf_ext(const FiniteMetricSpace& space,
                                          std::span<const PointId> positive,
                                          std::span<const PointId> negative, std::size_t k) {
  if (k == 0) throw std::invalid_argument("block budget k must be positive");
  if (positive.empty()) {
    check_examples(space, positive, negative);
    return ThetaDecomposition{};
  }
  ThetaDecomposition best = greatest_consistent_hull(space, positive, negative);
  if (best.block_count() > k) return std::nullopt;
  return best;
}

ThetaDecomposition min_blocks_ext(const FiniteMetricSpace& space, std::span<const PointId> positive,
                                  std::span<const PointId> negative) {
  if (positive.empty()) throw std::invalid_argument("min_blocks_ext needs at least one positive example");
  return greatest_consistent_hull(space, positive, negative);
}

}  // namespace wconvex
