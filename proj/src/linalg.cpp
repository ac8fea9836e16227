#include "sumsetlab/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace sumsetlab {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

void add_row_multiple(MatI& m, std::size_t dst, std::size_t src, const Int& k) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

}  // namespace

EchelonResult integer_echelon(MatI a) {
  const std::size_t k = a.size();
  const std::size_t n = k == 0 ? 0 : a[0].size();
  MatI u(k, VecI(k, 0));
  for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;

  std::size_t r = 0;
  std::vector<int> pivots;
  for (std::size_t col = 0; col < n && r < k; ++col) {
    // Euclidean elimination within column `col`, rows r..k-1.
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i) {
        if (a[i][col] != 0 && (best == k || abs_int(a[i][col]) < abs_int(a[best][col])))
          best = i;
      }
      if (best == k) break;
      bool reduced_any = false;
      for (std::size_t i = r; i < k; ++i) {
        if (i == best || a[i][col] == 0) continue;
        Int q = a[i][col] / a[best][col];
        if (q != 0) {
          add_row_multiple(a, i, best, -q);
          add_row_multiple(u, i, best, -q);
        }
        if (a[i][col] != 0) reduced_any = true;
      }
      if (!reduced_any) {
        std::swap(a[r], a[best]);
        std::swap(u[r], u[best]);
        break;
      }
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  return EchelonResult{std::move(a), std::move(u), static_cast<int>(r), std::move(pivots)};
}

std::vector<Int> smith_divisors(MatI a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Int> divisors;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Locate smallest nonzero entry in the trailing submatrix.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs_int(a[i][j]) < abs_int(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0) add_row_multiple(a, i, t, -q);
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;

    // Enforce divisibility of the remaining submatrix by the pivot.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols && divisible; ++j)
        if (a[i][j] % a[t][t] != 0) {
          add_row_multiple(a, t, i, Int(1));
          divisible = false;
        }
    if (!divisible) continue;

    divisors.push_back(abs_int(a[t][t]));
    ++t;
  }
  return divisors;
}

std::optional<VecI> solve_integer_combination(const MatI& gens, const VecI& target) {
  if (gens.empty()) return std::nullopt;
  EchelonResult e = integer_echelon(gens);
  const std::size_t k = gens.size();
  VecI residual = target;
  VecI y(k, 0);
  for (int i = 0; i < e.rank; ++i) {
    const int c = e.pivot_cols[i];
    if (residual[c] % e.H[i][c] != 0) return std::nullopt;
    Int q = residual[c] / e.H[i][c];
    y[i] = q;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= q * e.H[i][j];
  }
  for (const Int& v : residual)
    if (v != 0) return std::nullopt;
  VecI x(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) x[j] += y[i] * e.U[i][j];
  return x;
}

std::optional<VecQ> solve_rational(MatQ rows, VecQ rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (rows[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    std::swap(rhs[r], rhs[p]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col] == Rat(0)) continue;
      Rat f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != Rat(0)) return std::nullopt;  // inconsistent
  VecQ x(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    const int c = pivot_col_of_row[i];
    x[c] = rhs[i] / rows[i][c];
  }
  return x;
}

int rank_rational(MatQ rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = m;
    for (std::size_t i = r; i < m; ++i)
      if (rows[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][col] == Rat(0)) continue;
      Rat f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Rat det_rational(MatQ rows) {
  const std::size_t n = rows.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n;
    for (std::size_t i = col; i < n; ++i)
      if (rows[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p == n) return Rat(0);
    if (p != col) {
      std::swap(rows[p], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (rows[i][col] == Rat(0)) continue;
      Rat f = rows[i][col] / rows[col][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[col][j];
    }
  }
  return det;
}

std::optional<MatQ> invert_rational(const MatQ& rows) {
  const std::size_t n = rows.size();
  MatQ a = rows;
  MatQ inv(n, VecQ(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = n;
    for (std::size_t i = col; i < n; ++i)
      if (a[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<VecQ> fm_feasible(std::vector<LinIneq> cons, int nvars) {
  std::vector<std::vector<LinIneq>> levels(nvars);
  std::vector<LinIneq> cur = std::move(cons);
  for (int v = nvars - 1; v >= 0; --v) {
    std::vector<LinIneq> pos, negs, next;
    for (auto& c : cur) {
      if (c.coef[v] > Rat(0))
        pos.push_back(c);
      else if (c.coef[v] < Rat(0))
        negs.push_back(c);
      else
        next.push_back(std::move(c));
    }
    for (const auto& p : pos)
      for (const auto& q : negs) {
        Rat alpha = p.coef[v];
        Rat beta = -q.coef[v];
        LinIneq combined;
        combined.coef.assign(nvars, Rat(0));
        for (int j = 0; j < v; ++j) combined.coef[j] = beta * p.coef[j] + alpha * q.coef[j];
        combined.rhs = beta * p.rhs + alpha * q.rhs;
        next.push_back(std::move(combined));
      }
    levels[v].reserve(pos.size() + negs.size());
    for (auto& c : pos) levels[v].push_back(std::move(c));
    for (auto& c : negs) levels[v].push_back(std::move(c));
    cur = std::move(next);
  }
  for (const auto& c : cur)
    if (c.rhs < Rat(0)) return std::nullopt;

  VecQ x(nvars, Rat(0));
  for (int v = 0; v < nvars; ++v) {
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    for (const auto& c : levels[v]) {
      Rat r = c.rhs;
      for (int j = 0; j < v; ++j) r -= c.coef[j] * x[j];
      Rat bound = r / c.coef[v];
      if (c.coef[v] > Rat(0)) {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi)
      x[v] = (lo + hi) / Rat(2);
    else if (has_lo)
      x[v] = lo;
    else if (has_hi)
      x[v] = hi;
  }
  return x;
}

}  // namespace sumsetlab
