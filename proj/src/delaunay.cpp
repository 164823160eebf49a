#include "wconvex/delaunay.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "wconvex/errors.hpp"

namespace wconvex {

namespace {

// Static error bounds for the double-precision determinants (Shewchuk 1997).
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

int sign(const mpq_class& v) { return sgn(v); }

int orient_exact(Vec2 a, Vec2 b, Vec2 c) {
  const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

int incircle_exact(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const mpq_class dx(d.x), dy(d.y);
  const mpq_class adx = mpq_class(a.x) - dx, ady = mpq_class(a.y) - dy;
  const mpq_class bdx = mpq_class(b.x) - dx, bdy = mpq_class(b.y) - dy;
  const mpq_class cdx = mpq_class(c.x) - dx, cdy = mpq_class(c.y) - dy;
  const mpq_class alift = adx * adx + ady * ady;
  const mpq_class blift = bdx * bdx + bdy * bdy;
  const mpq_class clift = cdx * cdx + cdy * cdy;
  return sign(alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
              clift * (adx * bdy - bdx * ady));
}

constexpr PointId kGhost = std::numeric_limits<PointId>::max();

std::uint64_t edge_key(PointId a, PointId b) { return static_cast<std::uint64_t>(a) << 32 | b; }

}  // namespace

int orient2d(Vec2 a, Vec2 b, Vec2 c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return orient_exact(a, b, c);
}

int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return incircle_exact(a, b, c, d);
}

std::vector<Triangle> delaunay_triangulate(std::span<const Vec2> points) {
  const std::size_t n = points.size();
  // Seed with the first non-degenerate triple.
  std::size_t first = 0, second = n, third = n;
  for (std::size_t i = 1; i < n && second == n; ++i)
    if (!(points[i] == points[first])) second = i;
  for (std::size_t i = second + 1; i < n && third == n; ++i)
    if (orient2d(points[first], points[second], points[i]) != 0) third = i;
  if (third >= n) throw DegenerateInput("need three non-collinear points for a triangulation");

  std::vector<Triangle> tris;
  {
    auto a = static_cast<PointId>(first), b = static_cast<PointId>(second), c = static_cast<PointId>(third);
    if (orient2d(points[a], points[b], points[c]) < 0) std::swap(b, c);
    tris = {{a, b, c}, {b, a, kGhost}, {c, b, kGhost}, {a, c, kGhost}};
  }

  auto in_conflict = [&](const Triangle& t, Vec2 p) {
    if (t[2] != kGhost) return incircle(points[t[0]], points[t[1]], points[t[2]], p) > 0;
    const Vec2 u = points[t[0]], v = points[t[1]];
    const int side = orient2d(u, v, p);
    if (side != 0) return side > 0;
    // Collinear with the hull edge: conflict only on the open segment.
    if (u.x != v.x) return std::min(u.x, v.x) < p.x && p.x < std::max(u.x, v.x);
    return std::min(u.y, v.y) < p.y && p.y < std::max(u.y, v.y);
  };

  std::vector<Triangle> kept;
  std::unordered_map<std::uint64_t, int> boundary;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == first || i == second || i == third) continue;
    const Vec2 p = points[i];
    const auto pid = static_cast<PointId>(i);

    kept.clear();
    boundary.clear();
    for (const Triangle& t : tris) {
      if (!in_conflict(t, p)) {
        kept.push_back(t);
        continue;
      }
      for (int e = 0; e < 3; ++e) {
        const PointId a = t[e], b = t[(e + 1) % 3];
        if (auto it = boundary.find(edge_key(b, a)); it != boundary.end())
          boundary.erase(it);
        else
          boundary.emplace(edge_key(a, b), 0);
      }
    }
    if (boundary.empty()) continue;  // duplicate of an existing vertex

    for (const auto& [key, unused] : boundary) {
      const auto a = static_cast<PointId>(key >> 32);
      const auto b = static_cast<PointId>(key & 0xffffffffU);
      if (a == kGhost)
        kept.push_back({b, pid, kGhost});
      else if (b == kGhost)
        kept.push_back({pid, a, kGhost});
      else
        kept.push_back({a, b, pid});
    }
    tris.swap(kept);
  }

  std::vector<Triangle> out;
  for (const Triangle& t : tris)
    if (t[2] != kGhost) out.push_back(t);
  return out;
}

}  // namespace wconvex
