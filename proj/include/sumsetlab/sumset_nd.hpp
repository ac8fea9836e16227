#pragma once

#include "sumsetlab/geometry.hpp"

#include <memory>
#include <optional>
#include <unordered_map>

namespace sumsetlab {

struct BudgetND {
  long long max_points = 10'000'000;
};

struct SumsetImageND {
  long long n_copies = 0;
  std::vector<VecZ> points;  // sorted
};

SumsetImageND sumset_nd(const VectorSetND& a, long long n_copies, const BudgetND& budget = {});

// Bounded representation search over the pointed cone: enumerates P(A) within
// {u : w.u <= W} by breadth-first level (= summand count).
class MuEngine {
 public:
  MuEngine(std::vector<VecZ> generators, VecZ witness, long long max_points = 10'000'000);

  // Least summand count representing v, or nullopt when v is not in P(A).
  std::optional<long long> mu(const VecZ& v);
  void ensure(long long w_bound);

 private:
  std::vector<VecZ> gens_;
  VecZ witness_;
  long long max_points_;
  long long explored_ = -1;
  std::unordered_map<VecZ, long long, VecZHash> dist_;
};

struct MuValue {
  VecZ v;
  std::optional<long long> mu;
};

MuValue mu(const VectorSetND& a, const VecZ& v, const BudgetND& budget = {});

bool p_membership(const VectorSetND& a, const VecZ& v, const BudgetND& budget = {});

// Integer points of region that lie in C_A but not in P(A).
std::vector<VecZ> exceptional_truncated(const VectorSetND& a, const RationalPolytope& region,
                                        const BudgetND& budget = {});

struct ENSlice {
  long long n_copies = 0;
  std::vector<VecZ> points;  // sorted
};

ENSlice e_n_slice(const VectorSetND& a, long long n_copies, const BudgetND& budget = {});

struct Theorem2Report {
  long long n_max = 0;
  std::vector<char> holds;           // holds[N-1] for N = 1..n_max
  std::optional<long long> onset;    // least N' with equality on [N', n_max]
};

Theorem2Report verify_theorem2(const VectorSetND& a, long long n_max, const BudgetND& budget = {});

// Coordinatewise-minimal elements (the Dickson/Mann antichain).
std::vector<VecZ> mann_minimal(const std::vector<VecZ>& s);

struct ExceptionalPiece {
  VecZ v;
  std::vector<VecZ> b;  // <= n-1 linearly independent nonzero vectors
};

struct StructuredExceptionalSet {
  std::vector<ExceptionalPiece> pieces;
};

StructuredExceptionalSet structure_decompose(const VectorSetND& a, const BudgetND& budget = {});

bool structured_contains(const StructuredExceptionalSet& s, const VecZ& x);

struct KhovanskiiFit {
  std::optional<long long> onset;
  std::vector<Rat> coefficients;  // low degree first; size dim+1 when a fit exists
  Rat leading;
  std::vector<long long> counts;  // #NA for N = 1..n_max
};

KhovanskiiFit khovanskii_fit(const VectorSetND& a, long long n_max, const BudgetND& budget = {});

}  // namespace sumsetlab
