#include "sumsetlab/core1d.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace sumsetlab;

namespace {

std::vector<long long> random_normalized(std::mt19937& rng, long long b_max, int size_min,
                                         int size_max) {
  for (;;) {
    std::uniform_int_distribution<int> sdist(size_min, size_max);
    const int want = sdist(rng);
    // need want-2 distinct interior elements, so b-1 >= want-2
    std::uniform_int_distribution<long long> bdist(std::max<long long>(4, want - 1), b_max);
    const long long b = bdist(rng);
    std::vector<long long> elems{0, b};
    std::uniform_int_distribution<long long> edist(1, b - 1);
    while (static_cast<int>(elems.size()) < want) {
      long long e = edist(rng);
      if (std::find(elems.begin(), elems.end(), e) == elems.end()) elems.push_back(e);
    }
    StampSet1D a = normalize(elems);
    if (a.scale == 1 && static_cast<int>(a.size()) == want) return a.elements;
  }
}

}  // namespace

TEST_CASE("normalize translates and rescales") {
  StampSet1D a = normalize({10, 16, 22});
  CHECK(a.elements == std::vector<long long>{0, 1, 2});
  CHECK(a.translation == 10);
  CHECK(a.scale == 6);
  CHECK(a.b() == 2);
}

TEST_CASE("reflect is an involution") {
  StampSet1D a = normalize({0, 3, 5});
  StampSet1D r = reflect(a);
  CHECK(r.elements == std::vector<long long>{0, 2, 5});
  CHECK(reflect(r).elements == a.elements);
}

TEST_CASE("small exact sumsets") {
  StampSet1D a = normalize({0, 3, 5});
  CHECK(sumset_1d(a, 2).members.to_list() == std::vector<long long>{0, 3, 5, 6, 8, 10});
  CHECK(sumset_1d(a, 3).members.to_list() ==
        std::vector<long long>{0, 3, 5, 6, 8, 9, 10, 11, 13, 15});
  CHECK(sumset_1d(a, 0).members.to_list() == std::vector<long long>{0});
}

TEST_CASE("sumset budget enforced") {
  StampSet1D a = normalize({0, 3, 5});
  CHECK_THROWS_AS(sumset_1d(a, 100, Budget1D{200}), BudgetError);
}

TEST_CASE("exceptional sets and Frobenius numbers") {
  auto e = exceptional_set_1d(normalize({0, 3, 5}));
  CHECK(e.members == std::vector<long long>{1, 2, 4, 7});
  CHECK(e.frobenius == 7);

  auto full = exceptional_set_1d(normalize({0, 1}));
  CHECK(full.members.empty());
  CHECK(!full.frobenius);

  auto small = exceptional_set_1d(normalize({0, 2, 3}));
  CHECK(small.members == std::vector<long long>{1});
  CHECK(small.frobenius == 1);

  // Two-generator closed forms: largest gap ab-a-b, count (a-1)(b-1)/2.
  auto two = exceptional_set_1d(normalize({0, 4, 7}));
  CHECK(two.frobenius == 4 * 7 - 4 - 7);
  CHECK(two.members.size() == (4 - 1) * (7 - 1) / 2);
}

TEST_CASE("residue profile of {0,3,5}") {
  ResidueProfile p = residue_profile(normalize({0, 3, 5}));
  REQUIRE(p.b == 5);
  REQUIRE(p.rows.size() == 5);
  // rows indexed by residue a = 0..4
  CHECK(p.rows[1].n_aA == 6);
  CHECK(p.rows[1].N_aA == 2);
  CHECK(p.rows[2].n_aA == 12);
  CHECK(p.rows[2].N_aA == 4);
  CHECK(p.rows[3].n_aA == 3);
  CHECK(p.rows[3].N_aA == 1);
  CHECK(p.rows[4].n_aA == 9);
  CHECK(p.rows[4].N_aA == 3);
  // N*_{a,A} numerator: n_{a,A} + n_{b-a,b-A}
  CHECK(p.rows[1].nstar_num == 10);
  CHECK(p.rows[2].nstar_num == 20);
  for (const ResidueRow& r : p.rows) CHECK(r.threshold == 1);
}

TEST_CASE("residue profile of {0,1,5,6}") {
  ResidueProfile p = residue_profile(normalize({0, 1, 5, 6}));
  REQUIRE(p.b == 6);
  for (long long a = 1; a < 5; ++a) {
    CHECK(p.rows[static_cast<std::size_t>(a)].n_aA == a);
    CHECK(p.rows[static_cast<std::size_t>(a)].N_aA == a);
    CHECK(p.rows[static_cast<std::size_t>(a)].nstar_num == 6);
  }
  CHECK(p.rows[2].threshold == 4);
  CHECK(p.rows[3].threshold == 4);
  CHECK(p.rows[4].threshold == 4);
}

TEST_CASE("member matches bitmap membership") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 18, 3, 6));
    std::uniform_int_distribution<long long> ndist(1, 2 * a.b() + 4);
    const long long n = ndist(rng);
    Bitmap1D bm = sumset_1d(a, n).members;
    for (long long v = 0; v <= a.b() * n; ++v) CHECK(member(a, n, v) == bm.test(v));
    CHECK(!member(a, n, a.b() * n + 1));
    CHECK(!member(a, n, -1));
  }
}

TEST_CASE("member specific values") {
  StampSet1D a = normalize({0, 1, 5, 6});
  CHECK(!member(a, 3, 4));
  CHECK(member(a, 4, 4));
  CHECK(member(a, 3, 16));
}

TEST_CASE("structure statement and thresholds") {
  CHECK(threshold(normalize({0, 3, 5})) == 1);
  CHECK(threshold(normalize({0, 1, 5, 6})) == 4);
  CHECK(threshold(normalize({0})) == 0);
  CHECK(threshold(normalize({0, 1})) == 1);
  // the sharp family: b-2 copies needed
  for (long long b = 5; b <= 9; ++b)
    CHECK(threshold(normalize({0, 1, b - 1, b})) == b - 2);
}

TEST_CASE("statement holds from the threshold on, fails just below") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 40; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 20, 3, 7));
    const long long t = threshold(a);
    CHECK(t <= std::max<long long>(1, 2 * (a.b() / 2)));
    for (long long n = t; n <= t + 3; ++n) CHECK(theorem1_statement_holds(a, n));
    if (t >= 2) CHECK(!theorem1_statement_holds(a, t - 1));
  }
}

TEST_CASE("sumset agrees with reference table") {
  std::mt19937 rng(13579);
  for (int trial = 0; trial < 50; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 15, 2, 6));
    std::uniform_int_distribution<long long> ndist(0, 9);
    const long long n = ndist(rng);
    CHECK(sumset_1d(a, n).members.to_list() == oracles::oracle_sumset_1d(a.elements, n));
  }
}

TEST_CASE("long zero-sum certificates") {
  auto certs = savchev_chen_certify(normalize({0, 3, 5}));
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].residue == 2);
  CHECK(certs[0].h == 3);
  CHECK(certs[0].copies == 4);
  CHECK(certs[1].residue == 4);
  CHECK(certs[1].h == 3);
  CHECK(certs[1].copies == 3);
  for (const auto& c : certs)
    for (const auto& [k, ratio] : c.obstruction_checks) CHECK(ratio >= c.copies + 1);
}

TEST_CASE("certification never violates on random sets") {
  std::mt19937 rng(24680);
  for (int trial = 0; trial < 80; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 25, 3, 8));
    CHECK_NOTHROW(savchev_chen_certify(a));
  }
}

TEST_CASE("constructive containment bound dominates the exact set") {
  CHECK(ebound_construction(normalize({0, 3, 5})) == 40);
  CHECK(ebound_construction(normalize({0, 1})) == 0);
  std::mt19937 rng(112233);
  for (int trial = 0; trial < 30; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 18, 2, 6));
    auto e = exceptional_set_1d(a);
    if (e.frobenius) CHECK(ebound_construction(a) >= *e.frobenius);
  }
}

TEST_CASE("reflection symmetry of sumsets") {
  // n in NA iff b*N - n in N(b-A)
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 30; ++trial) {
    StampSet1D a = normalize(random_normalized(rng, 16, 3, 6));
    StampSet1D r = reflect(a);
    std::uniform_int_distribution<long long> ndist(1, 12);
    const long long n = ndist(rng);
    Bitmap1D fa = sumset_1d(a, n).members;
    Bitmap1D fr = sumset_1d(r, n).members;
    for (long long v = 0; v <= a.b() * n; ++v) CHECK(fa.test(v) == fr.test(a.b() * n - v));
  }
}
