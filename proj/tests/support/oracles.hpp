// Brute-force reference computations. Nothing here calls the algorithms it
// is used to check (weak_hull_ext, weak_hull_int, the CHF searches).
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wconvex/boxes.hpp"
#include "wconvex/closure.hpp"
#include "wconvex/graph.hpp"
#include "wconvex/hamming.hpp"
#include "wconvex/intensional.hpp"
#include "wconvex/metric_space.hpp"

namespace wconvex::testing {

/// All-pairs shortest paths by Floyd–Warshall.
inline std::vector<double> floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<double> d(n * n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const Edge& e : g.edges) {
    const double w = g.weighted ? e.weight : 1.0;
    d[e.u * n + e.v] = std::min(d[e.u * n + e.v], w);
    d[e.v * n + e.u] = std::min(d[e.v * n + e.u], w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return d;
}

/// Components of the graph on `set` linking points at most theta apart,
/// each sorted, ordered by smallest member.
inline std::vector<PointSet> threshold_components(const FiniteMetricSpace& s, const PointSet& set, double theta) {
  std::vector<int> comp(set.size(), -1);
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (comp[i] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{i};
    comp[i] = c;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      out[c].push_back(set[a]);
      for (std::size_t b = 0; b < set.size(); ++b)
        if (comp[b] < 0 && s.within(s.distance(set[a], set[b]), theta)) {
          comp[b] = c;
          stack.push_back(b);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool disjoint(const PointSet& a, std::span<const PointId> b) {
  return std::none_of(b.begin(), b.end(), [&](PointId x) { return std::binary_search(a.begin(), a.end(), x); });
}

struct SweepEntry {
  double theta;
  bool consistent;
  std::size_t blocks;
};

/// Evaluates every theta of the spectrum with the iterated-preclosure oracle.
inline std::vector<SweepEntry> extensional_sweep(const FiniteMetricSpace& s, std::span<const PointId> pos,
                                                 std::span<const PointId> neg) {
  std::vector<SweepEntry> out;
  for (double theta : s.spectrum()) {
    const PointSet hull = hull_oracle(s, pos, Theta(theta)).closure;
    out.push_back({theta, disjoint(hull, neg), threshold_components(s, hull, theta).size()});
  }
  return out;
}

inline std::optional<std::size_t> sweep_min_blocks(const std::vector<SweepEntry>& sweep) {
  std::optional<std::size_t> best;
  for (const auto& e : sweep)
    if (e.consistent && (!best || e.blocks < *best)) best = e.blocks;
  return best;
}

/// Full Hamming cube H_n as a finite metric space; point index = bit pattern.
inline FiniteMetricSpace hamming_cube_space(unsigned n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> m(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m[i * size + j] = std::popcount(i ^ j);
  return FiniteMetricSpace::from_trusted({}, std::move(m), MetricKind::integral);
}

/// Extension of a term as cube indices, by enumeration.
inline PointSet term_extension(const Term& t) {
  PointSet out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << t.n); ++x)
    if ((x & t.negative) == 0 && (~x & t.positive & ((std::uint64_t{1} << t.n) - 1)) == 0)
      out.push_back(static_cast<PointId>(x));
  return out;
}

/// Minimum Hamming distance between two term extensions by enumeration.
inline unsigned brute_term_distance(const Term& a, const Term& b) {
  unsigned best = a.n;
  for (PointId x : term_extension(a))
    for (PointId y : term_extension(b)) best = std::min(best, static_cast<unsigned>(std::popcount(x ^ y)));
  return best;
}

/// Minimum L1 distance between two boxes over a finite candidate grid: per
/// axis the box's endpoints, midpoint, and the other box's endpoints clamped
/// into it. Exhaustive over all corner combinations.
inline double grid_box_distance(const Box& a, const Box& b) {
  const std::size_t d = a.dimension();
  auto axis_candidates = [](double lo, double hi, double olo, double ohi) {
    std::vector<double> c{lo, hi, 0.5 * (lo + hi), std::clamp(olo, lo, hi), std::clamp(ohi, lo, hi)};
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  };
  std::vector<std::vector<double>> ca(d), cb(d);
  for (std::size_t i = 0; i < d; ++i) {
    ca[i] = axis_candidates(a.lo[i], a.hi[i], b.lo[i], b.hi[i]);
    cb[i] = axis_candidates(b.lo[i], b.hi[i], a.lo[i], a.hi[i]);
  }
  auto expand = [d](const std::vector<std::vector<double>>& c) {
    std::vector<PointR> pts{PointR{}};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<PointR> next;
      for (const auto& p : pts)
        for (double v : c[i]) {
          PointR q = p;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      pts = std::move(next);
    }
    return pts;
  };
  const auto pa = expand(ca), pb = expand(cb);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& x : pa)
    for (const auto& y : pb) {
      double s = 0;
      for (std::size_t i = 0; i < d; ++i) s += std::abs(x[i] - y[i]);
      best = std::min(best, s);
    }
  return best;
}

/// Every distinct intensional hull of `positive` over theta: starting at 0,
/// the next theta is the smallest block distance of the current hull. Uses the
/// naive merge loop. Returns (theta, hull) pairs in increasing theta.
template <RepresentationScheme S>
std::vector<std::pair<double, BlockSet<typename S::Block>>> intensional_events(
    const S& scheme, std::span<const typename S::Point> positive) {
  std::vector<std::pair<double, BlockSet<typename S::Block>>> out;
  double theta = 0.0;
  for (;;) {
    auto hull = weak_hull_int_naive(scheme, positive, Theta(theta));
    double next = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < hull.blocks.size(); ++j)
        next = std::min(next, static_cast<double>(scheme.block_distance(hull.blocks[i], hull.blocks[j])));
    const bool last = hull.blocks.size() <= 1;
    out.emplace_back(theta, std::move(hull));
    if (last) break;
    theta = next;
  }
  return out;
}

/// Minimum block count over every consistent intensional hull.
template <RepresentationScheme S>
std::optional<std::size_t> intensional_min_blocks(const S& scheme, std::span<const typename S::Point> pos,
                                                  std::span<const typename S::Point> neg) {
  std::optional<std::size_t> best;
  for (const auto& [theta, hull] : intensional_events(scheme, pos)) {
    const bool ok = std::none_of(neg.begin(), neg.end(), [&](const auto& q) { return covers(scheme, hull, q); });
    if (ok && (!best || hull.block_count() < *best)) best = hull.block_count();
  }
  return best;
}

}  // namespace wconvex::testing

namespace wconvex::testing {

/// Empty if `blocks` is a valid theta-decomposition of its union, otherwise a
/// description of the first broken invariant.
inline std::string decomposition_problem(const FiniteMetricSpace& s, const std::vector<PointSet>& blocks,
                                         double theta) {
  PointSet all;
  for (const auto& b : blocks) {
    if (b.empty()) return "empty block";
    if (!std::is_sorted(b.begin(), b.end())) return "unsorted block";
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "blocks overlap";
  if (preclosure(s, all, Theta(theta)) != all) return "union is not theta-convex";
  for (const auto& b : blocks) {
    if (preclosure(s, b, Theta(theta)) != b) return "block is not theta-convex";
    if (threshold_components(s, b, theta).size() != 1) return "block is not theta-connected";
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (PointId x : blocks[i])
        for (PointId y : blocks[j])
          if (s.within(s.distance(x, y), theta)) return "blocks within theta of each other";
  return {};
}

}  // namespace wconvex::testing
