#pragma once

#include "sumsetlab/exact.hpp"

#include <optional>

namespace sumsetlab {

using MatI = std::vector<VecI>;
using MatQ = std::vector<VecQ>;

// Row echelon form over Z via unimodular row operations: U * A = H.
struct EchelonResult {
  MatI H;
  MatI U;
  int rank = 0;
  std::vector<int> pivot_cols;
};
EchelonResult integer_echelon(MatI a);

// Diagonal of the Smith normal form (nonzero entries only, each dividing the next).
std::vector<Int> smith_divisors(MatI a);

// Integer row-combination solve: x with sum_i x_i * gens[i] = target, if any.
std::optional<VecI> solve_integer_combination(const MatI& gens, const VecI& target);

// Gaussian elimination; returns a solution of rows * x = rhs when the system is
// consistent and has full column rank, nullopt otherwise.
std::optional<VecQ> solve_rational(MatQ rows, VecQ rhs);

int rank_rational(MatQ rows);

Rat det_rational(MatQ rows);  // square input

std::optional<MatQ> invert_rational(const MatQ& rows);  // square input

// One inequality coef . x <= rhs.
struct LinIneq {
  VecQ coef;
  Rat rhs;
};

// Fourier-Motzkin feasibility; returns a satisfying point when feasible.
std::optional<VecQ> fm_feasible(std::vector<LinIneq> cons, int nvars);

}  // namespace sumsetlab
