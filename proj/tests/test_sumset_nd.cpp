#include "sumsetlab/sumset_nd.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sumsetlab;

namespace {

VectorSetND make_set(std::initializer_list<VecZ> pts) {
  return validate_lattice(std::vector<VecZ>(pts));
}

const VectorSetND kEx1 = make_set({{0, 0}, {2, 0}, {0, 3}, {1, 1}});

bool in_some(const std::vector<VecZ>& list, const VecZ& v) {
  return std::binary_search(list.begin(), list.end(), v);
}

// Pointed random 2D set with nonnegative small coordinates spanning Z^2.
VectorSetND random_2d(std::mt19937& rng) {
  std::uniform_int_distribution<long long> cdist(0, 4);
  std::uniform_int_distribution<int> ndist(3, 6);
  for (;;) {
    std::vector<VecZ> pts{{0, 0}};
    const int extra = ndist(rng);
    for (int i = 0; i < extra; ++i) {
      VecZ p{cdist(rng), cdist(rng)};
      if (p != VecZ{0, 0} && std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(p);
    }
    try {
      return validate_lattice(pts);
    } catch (const LatticeError&) {
    }
  }
}

}  // namespace

TEST_CASE("iterated sumsets of the 2D example") {
  auto s2 = sumset_nd(kEx1, 2);
  std::vector<VecZ> expect{{0, 0}, {0, 3}, {0, 6}, {1, 1}, {1, 4},
                           {2, 0}, {2, 2}, {2, 3}, {3, 1}, {4, 0}};
  CHECK(s2.points == expect);
  CHECK(sumset_nd(kEx1, 0).points == std::vector<VecZ>{{0, 0}});
  CHECK(sumset_nd(kEx1, 1).points ==
        std::vector<VecZ>{{0, 0}, {0, 3}, {1, 1}, {2, 0}});
  CHECK_THROWS_AS(sumset_nd(kEx1, 30, BudgetND{100}), BudgetError);
}

TEST_CASE("least summand counts") {
  CHECK(mu(kEx1, {3, 3}).mu == 3);
  CHECK(mu(kEx1, {2, 0}).mu == 1);
  CHECK(mu(kEx1, {0, 0}).mu == 0);
  CHECK(!mu(kEx1, {1, 2}).mu);   // exceptional
  CHECK(!mu(kEx1, {-1, 0}).mu);  // outside the cone
  CHECK(p_membership(kEx1, {3, 3}));
  CHECK(!p_membership(kEx1, {1, 2}));
  CHECK(!p_membership(kEx1, {-1, 0}));
}

TEST_CASE("mu agrees with exhaustive search") {
  std::mt19937 rng(777001);
  std::uniform_int_distribution<long long> vdist(0, 10);
  for (int trial = 0; trial < 25; ++trial) {
    VectorSetND a = random_2d(rng);
    ConeND cone = pointedness(a.points);
    REQUIRE(cone.pointed_witness);
    MuEngine engine(cone.generators, *cone.pointed_witness);
    for (int q = 0; q < 40; ++q) {
      VecZ v{vdist(rng), vdist(rng)};
      CHECK(engine.mu(v) == oracles::oracle_mu(cone.generators, v, 12));
    }
  }
}

TEST_CASE("mu is subadditive along generators") {
  std::mt19937 rng(777002);
  std::uniform_int_distribution<long long> vdist(0, 12);
  for (int trial = 0; trial < 10; ++trial) {
    VectorSetND a = random_2d(rng);
    ConeND cone = pointedness(a.points);
    MuEngine engine(cone.generators, *cone.pointed_witness);
    for (int q = 0; q < 30; ++q) {
      VecZ v{vdist(rng), vdist(rng)};
      auto m = engine.mu(v);
      if (!m) continue;
      for (const VecZ& g : cone.generators) {
        auto mg = engine.mu(add(v, g));
        REQUIRE(mg);
        CHECK(*mg <= *m + 1);
      }
    }
  }
}

TEST_CASE("truncated exceptional sets") {
  RationalPolytope box = hull_of_rational(
      {VecQ{rat(0), rat(0)}, VecQ{rat(12), rat(0)}, VecQ{rat(0), rat(12)},
       VecQ{rat(12), rat(12)}},
      2);
  auto exc = exceptional_truncated(kEx1, box);
  CHECK(in_some(exc, {0, 1}));
  CHECK(in_some(exc, {1, 0}));
  CHECK(in_some(exc, {1, 2}));
  CHECK(in_some(exc, {3, 2}));
  CHECK(in_some(exc, {3, 0}));
  CHECK(!in_some(exc, {3, 3}));
  CHECK(!in_some(exc, {0, 0}));
  CHECK(!in_some(exc, {2, 2}));
  // cross-check every box point against direct membership
  for (long long x = 0; x <= 12; ++x)
    for (long long y = 0; y <= 12; ++y)
      CHECK(in_some(exc, {x, y}) == !p_membership(kEx1, {x, y}));
}

TEST_CASE("level slices of the exceptional set") {
  ENSlice s = e_n_slice(kEx1, 6);
  CHECK(in_some(s.points, {0, 1}));
  CHECK(in_some(s.points, {11, 0}));  // reflected part near 6*(2,0)
  CHECK(in_some(s.points, {0, 17}));  // reflected part near 6*(0,3)
  CHECK(!in_some(s.points, {0, 0}));
  CHECK(!in_some(s.points, {3, 3}));
  // every slice point lies in N*H and outside NA
  auto na = sumset_nd(kEx1, 6).points;
  RationalPolytope h = hull(kEx1);
  for (const VecZ& p : s.points) {
    CHECK(polytope_contains(h, to_q(p), 6));
    CHECK(!std::binary_search(na.begin(), na.end(), p));
  }
}

TEST_CASE("sumsets equal hull points minus the level slice") {
  Theorem2Report rep = verify_theorem2(kEx1, 12);
  REQUIRE(rep.holds.size() == 12);
  for (char h : rep.holds) CHECK(h == 1);
  REQUIRE(rep.onset);
  CHECK(*rep.onset == 1);
}

TEST_CASE("level slice rejects unusable input") {
  // (1,0) and (-1,0) span a line; no positive functional exists
  auto line = make_set({{0, 0}, {1, 0}, {-1, 0}, {0, 1}});
  CHECK_THROWS_AS(e_n_slice(line, 3), std::runtime_error);
}

TEST_CASE("minimal antichain matches quadratic reference") {
  std::mt19937 rng(424243);
  std::uniform_int_distribution<long long> cdist(0, 8);
  std::uniform_int_distribution<int> sizes(1, 30);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<VecZ> pts;
    const int k = sizes(rng);
    for (int i = 0; i < k; ++i) pts.push_back({cdist(rng), cdist(rng), cdist(rng)});
    CHECK(mann_minimal(pts) == oracles::oracle_minimal_antichain(pts));
  }
  CHECK_THROWS_AS(mann_minimal({{1, -1}}), std::invalid_argument);
}

TEST_CASE("structured decomposition reproduces membership on a box") {
  StructuredExceptionalSet s = structure_decompose(kEx1);
  for (const ExceptionalPiece& p : s.pieces) CHECK(p.b.size() <= 1);
  for (long long x = 0; x <= 20; ++x)
    for (long long y = 0; y <= 20; ++y) {
      VecZ v{x, y};
      CHECK(structured_contains(s, v) == !p_membership(kEx1, v));
    }
}

TEST_CASE("structured decomposition on random pointed sets") {
  std::mt19937 rng(90210);
  int done = 0;
  while (done < 8) {
    VectorSetND a = random_2d(rng);
    StructuredExceptionalSet s = structure_decompose(a);
    for (long long x = 0; x <= 14; ++x)
      for (long long y = 0; y <= 14; ++y) {
        VecZ v{x, y};
        bool exceptional = cone_contains(
                               [&] {
                                 std::vector<VecZ> g;
                                 for (const VecZ& p : a.points)
                                   if (p != VecZ{0, 0}) g.push_back(p);
                                 return g;
                               }(),
                               v) &&
                           !p_membership(a, v);
        CHECK(structured_contains(s, v) == exceptional);
      }
    ++done;
  }
}

TEST_CASE("polynomial growth fit") {
  KhovanskiiFit fit = khovanskii_fit(kEx1, 20);
  REQUIRE(fit.onset);
  CHECK(*fit.onset == 3);
  REQUIRE(fit.coefficients.size() == 3);
  CHECK(fit.coefficients[0] == rat(11));
  CHECK(fit.coefficients[1] == rat(-6));
  CHECK(fit.coefficients[2] == rat(3));
  CHECK(fit.leading == volume(hull(kEx1)));
  CHECK(fit.counts.front() == 4);
  CHECK(fit.counts[2] == 20);

  // unit interval: #N{0,1} = N+1 from the start
  KhovanskiiFit seg = khovanskii_fit(make_set({{0}, {1}}), 8);
  REQUIRE(seg.onset);
  CHECK(*seg.onset == 1);
  CHECK(seg.coefficients == std::vector<Rat>{rat(1), rat(1)});

  // too short a run reports no fit
  CHECK(!khovanskii_fit(kEx1, 3).onset.has_value());
}
