#pragma once

// Deliberately naive reference implementations used only to cross-check the
// engines. Kept structurally different from the library code paths.

#include "sumsetlab/exact.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace oracles {

using sumsetlab::VecZ;

// Exact-N sumset by a copies-by-value boolean table.
inline std::vector<long long> oracle_sumset_1d(const std::vector<long long>& elems,
                                               long long n_copies) {
  long long top = 0;
  for (long long e : elems) top = std::max(top, e);
  const std::size_t width = static_cast<std::size_t>(top * n_copies + 1);
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n_copies) + 1,
                                       std::vector<char>(width, 0));
  reach[0][0] = 1;
  for (long long k = 1; k <= n_copies; ++k)
    for (std::size_t v = 0; v < width; ++v) {
      if (!reach[static_cast<std::size_t>(k - 1)][v]) continue;
      for (long long e : elems)
        if (v + static_cast<std::size_t>(e) < width)
          reach[static_cast<std::size_t>(k)][v + static_cast<std::size_t>(e)] = 1;
    }
  std::vector<long long> out;
  for (std::size_t v = 0; v < width; ++v)
    if (reach[static_cast<std::size_t>(n_copies)][v]) out.push_back(static_cast<long long>(v));
  return out;
}

// Least summand count representing target, trying every multiset of generators
// with at most max_summands elements.
inline std::optional<long long> oracle_mu(const std::vector<VecZ>& gens, const VecZ& target,
                                          long long max_summands) {
  std::optional<long long> best;
  std::vector<long long> counts(gens.size(), 0);
  std::function<void(std::size_t, long long, VecZ)> rec = [&](std::size_t idx, long long used,
                                                              VecZ acc) {
    if (acc == target) {
      if (!best || used < *best) best = used;
      return;
    }
    if (idx == gens.size() || used == max_summands) return;
    rec(idx + 1, used, acc);
    rec(idx, used + 1, sumsetlab::add(acc, gens[idx]));
  };
  rec(0, 0, VecZ(target.size(), 0));
  return best;
}

// Quadratic scan for coordinatewise-minimal elements.
inline std::vector<VecZ> oracle_minimal_antichain(const std::vector<VecZ>& pts) {
  std::vector<VecZ> out;
  for (const VecZ& p : pts) {
    bool minimal = true;
    for (const VecZ& q : pts) {
      if (q == p) continue;
      bool le = true, strict = false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (q[i] > p[i]) le = false;
        if (q[i] < p[i]) strict = true;
      }
      if (le && strict) minimal = false;
      if (le && !strict && q < p) minimal = false;  // duplicate tie-break
    }
    if (minimal && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const VecZ& x, const VecZ& y) {
    long long sx = 0, sy = 0;
    for (long long c : x) sx += c;
    for (long long c : y) sy += c;
    return sx != sy ? sx < sy : x < y;
  });
  return out;
}

}  // namespace oracles
