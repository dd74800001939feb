#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace latcount;
using namespace latcount::testing;

namespace {

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

HalfOpenCone index_two(std::vector<int> sigma = {1, 1}) {
  return {SimplicialCone::from_rays({0, 0}, {{1, 0}, {1, 2}}), std::move(sigma)};
}

// Parallelepiped points by scanning the bounding box of the parallelepiped.
std::set<IntVector> scan_parallelepiped(const HalfOpenCone& c) {
  const std::size_t d = c.dimension();
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rat a = c.base.apex[i], l = a, h = a;
    for (const auto& r : c.base.rays) (r[i] < 0 ? l : h) += r[i];
    lo[i] = floor_rat(l).get_si();
    hi[i] = ceil_rat(h).get_si();
  }
  std::set<IntVector> out;
  std::vector<long> x = lo;
  for (;;) {
    IntVector xi(x.begin(), x.end());
    RatVector lam = c.base.coefficients(to_rat(xi));
    bool in = true;
    for (std::size_t j = 0; j < d; ++j)
      in = in && (c.sigma[j] > 0 ? lam[j] >= 0 && lam[j] < 1 : lam[j] > 0 && lam[j] <= 1);
    if (in) out.insert(xi);
    std::size_t i = 0;
    while (i < d && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == d) break;
    ++x[i];
  }
  return out;
}

}  // namespace

TEST(Parallelepiped, UnimodularRationalApex) {
  HalfOpenCone c = HalfOpenCone::closed(SimplicialCone::from_rays({Rat(1, 2), Rat(1, 2)}, {{1, 0}, {0, 1}}));
  EXPECT_EQ(parallelepiped_points(c), (std::vector<IntVector>{{1, 1}}));
}

TEST(Parallelepiped, IndexTwoClosed) {
  EXPECT_EQ(as_set(parallelepiped_points(index_two())), (std::set<IntVector>{{0, 0}, {1, 1}}));
}

TEST(Parallelepiped, IndexTwoFirstFacetStrict) {
  EXPECT_EQ(as_set(parallelepiped_points(index_two({-1, 1}))), (std::set<IntVector>{{1, 0}, {1, 1}}));
}

TEST(Parallelepiped, MatchesBoxScan) {
  Rng rng(30);
  for (int it = 0; it < 80; ++it) {
    const std::size_t d = 1 + it % 3;
    HalfOpenCone c = random_halfopen_cone(rng, d, 5, 1, 150);
    std::vector<IntVector> pts = parallelepiped_points(c);
    EXPECT_EQ(Int(pts.size()), c.index());
    EXPECT_EQ(as_set(pts), scan_parallelepiped(c));
  }
}

TEST(Parallelepiped, EnumeratorReusedAcrossApexes) {
  Rng rng(31);
  HalfOpenCone c = random_halfopen_cone(rng, 3, 5, 10, 100, false);
  ParallelepipedEnumerator e(c);
  EXPECT_EQ(e.size(), c.index());
  for (int it = 0; it < 20; ++it) {
    HalfOpenCone moved = c;
    moved.base.apex = random_apex(rng, 3);
    EXPECT_EQ(as_set(e.points(moved.base.apex)), scan_parallelepiped(moved));
  }
}

TEST(GenFunTerm, ClosedQuadrant) {
  GenFunTerm t = gf_term(HalfOpenCone::closed(SimplicialCone::from_rays({0, 0}, {{1, 0}, {0, 1}})));
  EXPECT_EQ(t.numerator, (std::vector<IntVector>{{0, 0}}));
  EXPECT_EQ(as_set(t.denominator), (std::set<IntVector>{{1, 0}, {0, 1}}));
}

TEST(GenFunTerm, OpenHalfLine) {
  GenFunTerm t = gf_term(HalfOpenCone{SimplicialCone::from_rays({0}, {{1}}), {-1}});
  EXPECT_EQ(t.numerator, (std::vector<IntVector>{{1}}));
  EXPECT_EQ(t.denominator, (std::vector<IntVector>{{1}}));
}

TEST(GenFunTerm, IndexTwo) {
  GenFunTerm t = gf_term(index_two());
  EXPECT_EQ(as_set(t.numerator), (std::set<IntVector>{{0, 0}, {1, 1}}));
  EXPECT_EQ(as_set(t.denominator), (std::set<IntVector>{{1, 0}, {1, 2}}));
}

TEST(Specialize, SegmentZeroToTwo) {
  // 1/(1 - z) + z^2/(1 - z^-1)
  GenFun g{{{1, {{0}}, {{1}}}, {1, {{2}}, {{-1}}}}};
  EXPECT_EQ(specialize_at_one(g), 3);
}

TEST(Specialize, EmptyIsZero) { EXPECT_EQ(specialize_at_one(GenFun{}), 0); }

TEST(Specialize, DirectionAvoidsDenominators) {
  GenFun g{{{1, {{0, 0}}, {{1, -1}, {1, 0}}}}};
  IntVector mu = generic_direction(g);
  for (const auto& b : g.terms[0].denominator) EXPECT_NE(dot(mu, b), 0);
  std::vector<IntVector> mus = generic_directions(g, 3);
  EXPECT_EQ(as_set(mus).size(), 3u);
}

TEST(Specialize, NonGenericDirectionRejected) {
  GenFun g{{{1, {{0, 0}}, {{1, -1}, {0, 1}}}}};
  EXPECT_THROW(specialize_at_one(g, IntVector{1, 1}), Error);
}

TEST(Count, Examples) {
  HPolytope square{IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, IntVector{1, 0, 1, 0}};
  EXPECT_EQ(count_polytope(square), 4);
  GenFun g = polytope_genfun(square);
  EXPECT_EQ(g.terms.size(), 4u);
  EXPECT_EQ(specialize_at_one(g), 4);
  HPolytope cube{IntMatrix{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                 IntVector{1, 0, 1, 0, 1, 0}};
  EXPECT_EQ(count_polytope(cube), 8);
  HPolytope simplex{IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, IntVector{0, 0, 10}};
  EXPECT_EQ(count_polytope(simplex), 66);
  HPolytope empty{IntMatrix{{1}, {-1}}, IntVector{-1, -1}};
  EXPECT_EQ(count_polytope(empty), 0);
}

TEST(Count, RationalVerticesAndLargeIndex) {
  // 2x + 3y <= 1000 in the positive quadrant, and an index-7 corner.
  HPolytope tri{IntMatrix{{-1, 0}, {0, -1}, {2, 3}}, IntVector{0, 0, 1000}};
  EXPECT_EQ(count_polytope(tri), brute_count(tri));
  HPolytope thin{IntMatrix{{-1, 0}, {0, -1}, {7, 1}}, IntVector{0, 0, 7}};
  EXPECT_EQ(count_polytope(thin), 9);
}

TEST(Count, MatchesOracleOnRandomPolytopes) {
  Rng rng(32);
  int tested = 0;
  while (tested < 45) {
    auto P = random_polytope(rng, 2 + tested % 3, 200000);
    if (!P) continue;
    Int truth = brute_count(*P);
    CountResult r = count_polytope_detailed(*P);
    EXPECT_EQ(r.count, truth);
    EXPECT_EQ(count_polytope(*P, 50), truth);
    EXPECT_EQ(count_polytope_detailed(*P, 1, 5).count, truth);
    ++tested;
  }
}
