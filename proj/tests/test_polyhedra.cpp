#include "doctest.h"

#include <random>
#include <set>

#include "stringcone/polyhedra.hpp"

using namespace sc;

namespace {

// points of the cone with coordinates in [-bound, bound], by direct facet test
std::vector<IntVec> boxPoints(const RationalCone& cone, Int bound) {
  const auto d = static_cast<std::size_t>(cone.ambient_dim);
  std::vector<IntVec> out;
  IntVec x(d, -bound);
  while (true) {
    if (cone.contains(x)) out.push_back(x);
    std::size_t k = d;
    while (k-- > 0) {
      if (x[k] < bound) {
        ++x[k];
        break;
      }
      x[k] = -bound;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

Int degreeOf(const IntVec& g, const IntVec& x) { return exact::dot(g, x); }

// irreducible elements among cone points of degree <= limit, by brute force
std::vector<IntVec> bruteHilbert(const RationalCone& cone, const IntVec& grading, Int limit,
                                 Int box) {
  std::vector<IntVec> pts;
  for (auto& p : boxPoints(cone, box)) {
    const Int deg = degreeOf(grading, p);
    if (deg > 0 && deg <= limit) pts.push_back(p);
  }
  std::set<IntVec> all(pts.begin(), pts.end());
  std::vector<IntVec> irreducible;
  for (const auto& x : pts) {
    bool red = false;
    for (const auto& a : pts) {
      if (degreeOf(grading, a) >= degreeOf(grading, x)) continue;
      IntVec b(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) b[k] = x[k] - a[k];
      if (all.count(b)) {
        red = true;
        break;
      }
    }
    if (!red) irreducible.push_back(x);
  }
  std::sort(irreducible.begin(), irreducible.end());
  return irreducible;
}

}  // namespace

TEST_CASE("conicHull examples") {
  auto orthant = conicHull({{1, 0}, {0, 1}});
  CHECK(orthant.rays == std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(orthant.facets == std::vector<IntVec>{{0, 1}, {1, 0}});
  CHECK(orthant.pointed);

  auto wedge = conicHull({{1, 0}, {1, 1}, {1, 2}});
  CHECK(wedge.rays == std::vector<IntVec>{{1, 0}, {1, 2}});
  CHECK(wedge.facets == std::vector<IntVec>{{0, 1}, {2, -1}});

  auto zero = conicHull({{0, 0, 0}});
  CHECK(zero.rays.empty());
  CHECK(zero.facets.size() == 6);
  CHECK(zero.pointed);

  auto line = conicHull({{1, 1}, {2, 2}});
  CHECK(line.rays == std::vector<IntVec>{{1, 1}});
  CHECK(line.facets == std::vector<IntVec>{{-1, 1}, {1, -1}, {1, 1}});

  CHECK_THROWS_AS(conicHull({}), Error);
  CHECK_THROWS_AS(conicHull({{1, 0}, {1}}), Error);
}

TEST_CASE("dualize examples") {
  auto half = conicHull({{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(half.pointed);
  CHECK(half.facets == std::vector<IntVec>{{0, 1}});
  auto dual = dualize(half);
  CHECK(dual.rays == std::vector<IntVec>{{0, 1}});
  CHECK(dual.pointed);

  auto wedge = conicHull({{1, 0}, {1, 2}});
  auto back = dualize(dualize(wedge));
  CHECK(back.rays == wedge.rays);
  CHECK(back.facets == wedge.facets);
}

TEST_CASE("coneFromInequalities agrees with conicHull") {
  auto c = coneFromInequalities({{0, 1}, {2, -1}, {1, 1}}, 2);  // third is redundant
  CHECK(c.rays == std::vector<IntVec>{{1, 0}, {1, 2}});
  CHECK(c.facets == std::vector<IntVec>{{0, 1}, {2, -1}});
  auto origin = coneFromInequalities({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
  CHECK(origin.rays.empty());
}

TEST_CASE("random hulls satisfy the double description invariants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-3, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 3 + static_cast<std::size_t>(trial % 2);
    std::vector<IntVec> pts;
    for (int j = 0; j < 8; ++j) {
      IntVec p(d);
      for (auto& x : p) x = coord(rng);
      p[0] = std::abs(p[0]) + 1;  // keep the hull pointed
      pts.push_back(p);
    }
    auto cone = conicHull(pts);
    REQUIRE(cone.pointed);
    for (const auto& p : pts) CHECK(cone.contains(p));
    // every ray is the direction of an input point
    std::set<IntVec> dirs;
    for (const auto& p : pts) dirs.insert(exact::primitive(p));
    for (const auto& r : cone.rays) CHECK(dirs.count(r) == 1);
    // every facet vanishes on d-1 independent input points
    for (const auto& u : cone.facets) {
      exact::RowEchelon ech(d);
      for (const auto& p : pts)
        if (exact::dot(u, p) == 0) ech.add(std::span<const Int>(p));
      CHECK(ech.rank() == d - 1);
    }
    // the rays regenerate the same cone
    auto again = conicHull(cone.rays);
    CHECK(again.facets == cone.facets);
    auto fromH = coneFromInequalities(cone.facets, static_cast<int>(d));
    CHECK(fromH.rays == cone.rays);
  }
}

TEST_CASE("latticePointsInSection examples") {
  // A1 string cone {(lambda, psi): 0 <= psi <= lambda}
  auto a1 = conicHull({{1, 0}, {1, 1}});
  CHECK(latticePointsInSection(a1, {2}) == std::vector<IntVec>{{0}, {1}, {2}});
  CHECK(latticePointsInSection(a1, {0}) == std::vector<IntVec>{{0}});

  // A2 string cone for the word 121, from the weighted points up to level 2
  std::vector<IntVec> pts;
  for (const auto& p : weightedPoints(buildCartan('A', 2), WeylWord{{1, 2, 1}}, 2))
    pts.push_back(p.concatenated());
  auto cone = conicHull(pts);
  CHECK(latticePointsInSection(cone, {1, 1}).size() == 8);
  CHECK(latticePointsInSection(cone, {1, 0}).size() == 3);
  CHECK(latticePointsInSection(cone, {2, 1}).size() == 15);
  CHECK(latticePointsInSection(cone, {3, 3}).size() == 64);

  auto open = conicHull({{1, 0}, {0, 1}});
  try {
    latticePointsInSection(open, {1});
    FAIL("expected unbounded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unbounded);
    CHECK(std::string(e.what()).find("(1)") != std::string::npos);
  }
}

TEST_CASE("sections agree with box enumeration") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    // cones in R^3 over lambda in R^1 with bounded sections: first coordinate dominates
    std::vector<IntVec> pts;
    for (int j = 0; j < 5; ++j) pts.push_back({3, coord(rng) - 1, coord(rng) - 1});
    auto cone = conicHull(pts);
    for (int l = 0; l <= 3; ++l) {
      std::vector<IntVec> expected;
      for (const auto& p : boxPoints(cone, 4))
        if (p[0] == l) expected.push_back({p[1], p[2]});
      CHECK(latticePointsInSection(cone, {l}) == expected);
    }
  }
}

TEST_CASE("isFace") {
  auto orthant = conicHull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto f = isFace(orthant, {{1, 0, 0}, {0, 1, 0}});
  CHECK(f.is_face);
  CHECK(f.normal == IntVec{0, 0, 1});
  CHECK(isFace(orthant, {{1, 1, 0}}).is_face == false);
  CHECK(isFace(orthant, {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}}).is_face);
  CHECK(isFace(orthant, {{0, 0, 0}}).is_face);
  auto whole = isFace(orthant, {{1, 1, 1}});
  CHECK_FALSE(whole.is_face);
  auto all = isFace(orthant, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(all.is_face);
  CHECK(all.normal == IntVec{0, 0, 0});
  CHECK_FALSE(isFace(orthant, {{-1, 0, 0}}).is_face);

  // every subset of rays of a square cone: faces are exactly the "consecutive" ones
  auto square = conicHull({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<IntVec> sub;
    for (unsigned b = 0; b < 4; ++b)
      if (mask >> b & 1) sub.push_back(square.rays[b]);
    const int n = std::popcount(mask);
    bool expected = n == 1 || n == 4;
    if (n == 2) {
      // rays sorted: (-1,0,1) (0,-1,1) (0,1,1) (1,0,1); opposite pairs are not faces
      expected = mask != 0b1001 && mask != 0b0110;
    }
    CAPTURE(mask);
    CHECK(isFace(square, sub).is_face == expected);
  }
}

TEST_CASE("hilbertBasis examples") {
  auto wedge = conicHull({{1, 0}, {1, 2}});
  auto hb = hilbertBasis(wedge, std::vector<Int>{1, 0});
  CHECK(hb.elements == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});

  auto a1 = conicHull({{1, 0}, {1, 1}});
  CHECK(hilbertBasis(a1, std::vector<Int>{1, 0}).elements == std::vector<IntVec>{{1, 0}, {1, 1}});

  auto half = conicHull({{1, 0}, {-1, 0}, {0, 1}});
  CHECK_THROWS_AS(hilbertBasis(half, std::vector<Int>{0, 1}), Error);
  CHECK_THROWS_AS(hilbertBasis(wedge, std::vector<Int>{0, 1}), Error);

  // a lower-dimensional cone in R^3
  auto flat = conicHull({{1, 0, 1}, {1, 3, 1}});
  CHECK(hilbertBasis(flat, std::vector<Int>{1, 0, 0}).elements ==
        std::vector<IntVec>{{1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {1, 3, 1}});
}

TEST_CASE("hilbertBasis agrees with brute force") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-2, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<IntVec> pts;
    for (int j = 0; j < 4; ++j) pts.push_back({1 + std::abs(coord(rng)), coord(rng), coord(rng)});
    auto cone = conicHull(pts);
    const IntVec grading{1, 0, 0};
    auto hb = hilbertBasis(cone, grading);
    // every generator lies below the reported bound; brute force up to it
    Int maxdeg = 0;
    for (const auto& h : hb.elements) maxdeg = std::max(maxdeg, degreeOf(grading, h));
    CHECK(maxdeg <= hb.degree_bound);
    const Int limit = hb.degree_bound;
    // cone points of degree <= limit have |coords| <= 3 * limit here
    CHECK(bruteHilbert(cone, grading, limit, 3 * limit) == hb.elements);
  }
}

TEST_CASE("saturationCheck") {
  auto a1 = buildCartan('A', 1);
  auto data = weightedPoints(a1, WeylWord{{1}}, 2);
  auto cone = conicHull([&] {
    std::vector<IntVec> v;
    for (const auto& p : data) v.push_back(p.concatenated());
    return v;
  }());
  auto ok = saturationCheck(cone, data, 2, 1);
  CHECK(ok.equal);
  CHECK(ok.sections.size() == 3);
  CHECK(ok.sections[2].cone_points == 3);

  auto missing = data;
  missing.erase(std::find(missing.begin(), missing.end(),
                          WeightedPoint{Weight{{2}}, StringVector{{1}}}));
  auto bad = saturationCheck(cone, missing, 2, 1);
  CHECK_FALSE(bad.equal);
  REQUIRE(bad.missing_from_data.size() == 1);
  CHECK(bad.missing_from_data[0] == WeightedPoint{Weight{{2}}, StringVector{{1}}});
  CHECK(bad.missing_from_cone.empty());

  auto extra = data;
  extra.push_back(WeightedPoint{Weight{{1}}, StringVector{{5}}});
  auto bad2 = saturationCheck(cone, extra, 2, 1);
  REQUIRE(bad2.missing_from_cone.size() == 1);
  CHECK(bad2.missing_from_cone[0].psi.entries == std::vector<int>{5});
}

TEST_CASE("vector text round trip") {
  std::vector<IntVec> rows{{1, -2, 0}, {0, 0, 3}};
  auto text = formatVectors(3, rows);
  CHECK(text == "dim 3\n1 -2 0\n0 0 3\n");
  auto [dim, back] = parseVectors(text);
  CHECK(dim == 3);
  CHECK(back == rows);
  CHECK_THROWS_AS(parseVectors("dim 2\n1 2 3\n"), Error);
  CHECK_THROWS_AS(parseVectors("dims 2\n"), Error);
  CHECK(formatVectors(2, {}) == "dim 2\n");
}
