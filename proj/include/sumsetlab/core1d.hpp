#pragma once

#include "sumsetlab/exact.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sumsetlab {

// Normalized finite subset of the nonnegative integers: min 0, gcd 1.
struct StampSet1D {
  std::vector<long long> elements;  // strictly increasing, elements[0] == 0
  long long translation = 0;        // subtracted minimum of the raw input
  long long scale = 1;              // divided-out gcd of the raw input

  long long b() const { return elements.empty() ? 0 : elements.back(); }
  std::size_t size() const { return elements.size(); }
};

StampSet1D normalize(std::vector<long long> raw);

// b - A; an involution on normalized sets.
StampSet1D reflect(const StampSet1D& a);

// Membership bitmap over [0, limit].
struct Bitmap1D {
  long long limit = 0;
  std::vector<std::uint64_t> words;

  explicit Bitmap1D(long long lim = 0) : limit(lim), words(static_cast<std::size_t>(lim / 64 + 1), 0) {}
  bool test(long long n) const {
    return (words[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1u;
  }
  void set(long long n) { words[static_cast<std::size_t>(n >> 6)] |= std::uint64_t(1) << (n & 63); }
  long long count() const;
  std::vector<long long> to_list() const;
  bool operator==(const Bitmap1D&) const = default;
};

struct Sumset1D {
  long long n_copies = 0;
  Bitmap1D members;  // over [0, b*N]
};

struct Budget1D {
  long long max_range = 10'000'000;  // cap on b*N
};

Sumset1D sumset_1d(const StampSet1D& a, long long n_copies, const Budget1D& budget = {});

struct ResidueRow {
  long long a = 0;
  long long n_aA = 0;       // least element of P(A) congruent to a mod b
  long long N_aA = 0;       // least N with n_aA in NA
  long long nstar_num = 0;  // n_{a,A} + n_{b-a,b-A}; N*_{a,A} = nstar_num / b
  long long threshold = 0;  // least N0 >= 1 from which the per-residue statement holds
};

struct ResidueProfile {
  long long b = 0;
  std::vector<ResidueRow> rows;
};

ResidueProfile residue_profile(const StampSet1D& a);

struct ExceptionalSet1D {
  std::vector<long long> members;  // sorted
  std::optional<long long> frobenius;
};

ExceptionalSet1D exceptional_set_1d(const StampSet1D& a);

// Exact point query for n in NA without materializing the bitmap.
bool member(const StampSet1D& a, long long n_copies, long long n);

// NA == {0..bN} \ (E(A) u (bN - E(b-A))), checked bitmap vs constructed RHS.
bool theorem1_statement_holds(const StampSet1D& a, long long n_copies);

// Least N0 with the statement holding for every N >= N0 (1 when it always holds;
// 0 for the degenerate singleton {0}).
long long threshold(const StampSet1D& a);

struct SavchevChenCertificate {
  long long residue = 0;
  long long h = 0;
  long long copies = 0;  // N_{a,A}
  // (k, (k/h)_b) for k in A \ {0, h, b}; every ratio must be >= copies + 1.
  std::vector<std::pair<long long, long long>> obstruction_checks;
};

// Certificates for every residue with N_{a,A} > b/2; throws StructureViolation
// if any certificate fails validation.
std::vector<SavchevChenCertificate> savchev_chen_certify(const StampSet1D& a);

// The explicit containment bound N with E(A) subset of [0, N], built from
// extended-gcd coefficients; coarse, used as a sanity oracle.
long long ebound_construction(const StampSet1D& a);

}  // namespace sumsetlab
