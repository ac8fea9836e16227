#include "sumsetlab/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace sumsetlab;

namespace {

MatI mat(std::initializer_list<std::initializer_list<long long>> rows) {
  MatI m;
  for (const auto& r : rows) {
    VecI row;
    for (long long v : r) row.push_back(Int(v));
    m.push_back(row);
  }
  return m;
}

MatQ matq(std::initializer_list<std::initializer_list<long long>> rows) {
  MatQ m;
  for (const auto& r : rows) {
    VecQ row;
    for (long long v : r) row.push_back(rat(v));
    m.push_back(row);
  }
  return m;
}

MatI mat_mul(const MatI& a, const MatI& b) {
  MatI c(a.size(), VecI(b[0].size(), Int(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Int det_int(MatI m) {
  // Bareiss-free exact determinant via rational elimination, small inputs only.
  MatQ q(m.size(), VecQ(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) q[i][j] = rat(m[i][j]);
  Rat d = det_rational(q);
  REQUIRE(d.denominator() == 1);
  return d.numerator();
}

}  // namespace

TEST_CASE("integer echelon factorization") {
  MatI a = mat({{4, 6}, {2, 2}, {6, 8}});
  EchelonResult r = integer_echelon(a);
  CHECK(r.rank == 2);
  CHECK(mat_mul(r.U, a) == r.H);
  CHECK(det_int(r.U) * det_int(r.U) == 1);  // unimodular
  // echelon: pivots strictly to the right as rows descend, zero rows last
  for (int i = 0; i < r.rank; ++i) {
    bool nonzero = false;
    for (const Int& v : r.H[static_cast<std::size_t>(i)]) nonzero |= (v != 0);
    CHECK(nonzero);
  }
  for (std::size_t i = static_cast<std::size_t>(r.rank); i < r.H.size(); ++i)
    for (const Int& v : r.H[i]) CHECK(v == 0);
}

TEST_CASE("smith divisors") {
  CHECK(smith_divisors(mat({{2, 0}, {0, 4}})) == std::vector<Int>{Int(2), Int(4)});
  CHECK(smith_divisors(mat({{1, 2}, {3, 4}})) == std::vector<Int>{Int(1), Int(2)});
  CHECK(smith_divisors(mat({{2, 0}, {0, 0}})) == std::vector<Int>{Int(2)});
  CHECK(smith_divisors(mat({{1, 0}, {0, 1}, {5, 7}})) == std::vector<Int>{Int(1), Int(1)});
  // divisibility chain
  auto d = smith_divisors(mat({{6, 4, 2}, {4, 8, 6}, {2, 6, 10}}));
  for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
}

TEST_CASE("integer combination solve") {
  MatI gens = mat({{2, 0}, {0, 3}, {1, 1}});
  auto sol = solve_integer_combination(gens, VecI{Int(3), Int(4)});
  REQUIRE(sol);
  Int x = (*sol)[0] * 2 + (*sol)[2];
  Int y = (*sol)[1] * 3 + (*sol)[2];
  CHECK(x == 3);
  CHECK(y == 4);
  // (1,0) is not in the lattice spanned by {(2,0),(0,2)}
  CHECK(!solve_integer_combination(mat({{2, 0}, {0, 2}}), VecI{Int(1), Int(0)}));
}

TEST_CASE("rational solve and inverse") {
  auto sol = solve_rational(matq({{2, 1}, {1, 3}}), VecQ{rat(5), rat(10)});
  REQUIRE(sol);
  CHECK((*sol)[0] == Rat(Int(1)));
  CHECK((*sol)[1] == Rat(Int(3)));
  CHECK(!solve_rational(matq({{1, 1}, {2, 2}}), VecQ{rat(1), rat(3)}));  // inconsistent

  CHECK(rank_rational(matq({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
  CHECK(det_rational(matq({{2, 0}, {0, 3}})) == rat(6));
  CHECK(det_rational(matq({{1, 2}, {2, 4}})) == rat(0));

  auto inv = invert_rational(matq({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK((*inv)[0][0] == rat(1));
  CHECK((*inv)[0][1] == rat(-1));
  CHECK(!invert_rational(matq({{1, 2}, {2, 4}})));
}

TEST_CASE("feasibility elimination") {
  // x >= 1, y >= 1, x + y <= 3
  std::vector<LinIneq> cons{{VecQ{rat(-1), rat(0)}, rat(-1)},
                            {VecQ{rat(0), rat(-1)}, rat(-1)},
                            {VecQ{rat(1), rat(1)}, rat(3)}};
  auto pt = fm_feasible(cons, 2);
  REQUIRE(pt);
  for (const LinIneq& c : cons) CHECK(dot(c.coef, *pt) <= c.rhs);

  // x >= 2 and x <= 1 contradict
  std::vector<LinIneq> bad{{VecQ{rat(-1)}, rat(-2)}, {VecQ{rat(1)}, rat(1)}};
  CHECK(!fm_feasible(bad, 1));
}

TEST_CASE("feasibility on random systems agrees with brute scan") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long long> cdist(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LinIneq> cons;
    for (int i = 0; i < 4; ++i)
      cons.push_back(LinIneq{VecQ{rat(cdist(rng)), rat(cdist(rng))}, rat(cdist(rng))});
    auto pt = fm_feasible(cons, 2);
    if (pt) {
      for (const LinIneq& c : cons) CHECK(dot(c.coef, *pt) <= c.rhs);
    } else {
      // no rational point found; certify no half-integer grid point works
      for (long long x2 = -40; x2 <= 40; ++x2)
        for (long long y2 = -40; y2 <= 40; ++y2) {
          VecQ p{Rat(Int(x2), Int(2)), Rat(Int(y2), Int(2))};
          bool all = true;
          for (const LinIneq& c : cons) all = all && dot(c.coef, p) <= c.rhs;
          CHECK(!all);
        }
    }
  }
}
