#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "wconvex/delaunay.hpp"
#include "wconvex/errors.hpp"

namespace wconvex {
namespace {

TEST(Predicates, Orientation) {
  EXPECT_EQ(orient2d({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient2d({0, 0}, {0, 1}, {1, 0}), -1);
  EXPECT_EQ(orient2d({0, 0}, {1, 1}, {2, 2}), 0);
  // Nearly collinear: the filter cannot decide, the exact path must.
  EXPECT_EQ(orient2d({0.5, 0.5}, {12, 12}, {24, 24}), 0);
  EXPECT_EQ(orient2d({0.1, 0.1}, {0.2, 0.2}, {0.30000000000000004, 0.3}), -1);
}

TEST(Predicates, Incircle) {
  EXPECT_EQ(incircle({0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}), 1);
  EXPECT_EQ(incircle({0, 0}, {1, 0}, {0, 1}, {2, 2}), -1);
  EXPECT_EQ(incircle({0, 0}, {1, 0}, {0, 1}, {1, 1}), 0);
}

// Every triangle counterclockwise with no input point strictly inside its
// circumcircle, and the triangles tile the convex hull (Euler count).
void expect_delaunay(const std::vector<Vec2>& pts, const std::vector<Triangle>& tris) {
  std::set<std::pair<PointId, PointId>> edges;
  for (const Triangle& t : tris) {
    ASSERT_EQ(orient2d(pts[t[0]], pts[t[1]], pts[t[2]]), 1);
    for (std::size_t i = 0; i < pts.size(); ++i)
      EXPECT_LE(incircle(pts[t[0]], pts[t[1]], pts[t[2]], pts[i]), 0);
    for (int k = 0; k < 3; ++k) edges.insert(std::minmax(t[k], t[(k + 1) % 3]));
  }
  // V - E + F = 2 (F counts the outer face) for a triangulated point set.
  std::set<PointId> used;
  for (const Triangle& t : tris) used.insert(t.begin(), t.end());
  EXPECT_EQ(static_cast<long>(used.size()) - static_cast<long>(edges.size()) + static_cast<long>(tris.size()) + 1, 2);
  EXPECT_LE(edges.size(), 3 * used.size() - 6 + (used.size() == 3 ? 3 : 0));
}

TEST(Delaunay, SingleTriangle) {
  const std::vector<Vec2> pts{{0, 0}, {1, 0}, {0, 1}};
  auto tris = delaunay_triangulate(pts);
  ASSERT_EQ(tris.size(), 1u);
  expect_delaunay(pts, tris);
}

TEST(Delaunay, DegenerateInputs) {
  const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(delaunay_triangulate(line), DegenerateInput);
  const std::vector<Vec2> two{{0, 0}, {1, 1}};
  EXPECT_THROW(delaunay_triangulate(two), DegenerateInput);
}

TEST(Delaunay, CollinearPrefixAndDuplicates) {
  const std::vector<Vec2> pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 0}, {1.5, 1}, {0.5, -1}, {3, 0}};
  auto tris = delaunay_triangulate(pts);
  expect_delaunay(pts, tris);
}

TEST(Delaunay, LatticeWithCocircularPoints) {
  std::vector<Vec2> pts;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  auto tris = delaunay_triangulate(pts);
  EXPECT_EQ(tris.size(), 2u * 25u);
  expect_delaunay(pts, tris);
}

TEST(Delaunay, EmptyCircumcircleOnRandomPoints) {
  testing::Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 3, 50);
    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (trial % 3 == 0)
        pts.push_back({static_cast<double>(testing::uniform_int(rng, 0, 6)),
                       static_cast<double>(testing::uniform_int(rng, 0, 6))});
      else
        pts.push_back({testing::uniform_real(rng, 0, 1), testing::uniform_real(rng, 0, 1)});
    }
    std::vector<Triangle> tris;
    try {
      tris = delaunay_triangulate(pts);
    } catch (const DegenerateInput&) {
      continue;
    }
    expect_delaunay(pts, tris);
  }
}

}  // namespace
}  // namespace wconvex
