#include "sumsetlab/sumset_nd.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sumsetlab {

namespace {

using PointSet = std::unordered_set<VecZ, VecZHash>;

PointSet minkowski_step(const PointSet& cur, const std::vector<VecZ>& points, long long max_points) {
  PointSet next;
  next.reserve(cur.size() * 2);
  for (const VecZ& s : cur)
    for (const VecZ& p : points) {
      next.insert(add(s, p));
      if (static_cast<long long>(next.size()) > max_points)
        throw BudgetError("sumset point budget exceeded");
    }
  return next;
}

std::vector<VecZ> sorted_points(const PointSet& s) {
  std::vector<VecZ> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Certifies P(gens) contains every +-e_i (hence equals Z^n); positive answers
// only, via bounded search.
bool group_certified(const std::vector<VecZ>& gens, int dim) {
  if (gens.empty()) return false;
  long long max_abs = 1;
  for (const VecZ& g : gens)
    for (long long c : g) max_abs = std::max(max_abs, std::abs(c));
  const long long clamp = 8 * max_abs + 8;
  const long long cap = 200000;
  PointSet seen;
  std::deque<VecZ> queue;
  VecZ zero(static_cast<std::size_t>(dim), 0);
  seen.insert(zero);
  queue.push_back(zero);
  std::set<VecZ> targets;
  for (int i = 0; i < dim; ++i) {
    VecZ e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    targets.insert(e);
    e[static_cast<std::size_t>(i)] = -1;
    targets.insert(e);
  }
  while (!queue.empty() && !targets.empty() && static_cast<long long>(seen.size()) < cap) {
    VecZ u = std::move(queue.front());
    queue.pop_front();
    for (const VecZ& g : gens) {
      VecZ v = add(u, g);
      bool in_box = true;
      for (long long c : v)
        if (std::abs(c) > clamp) in_box = false;
      if (!in_box || !seen.insert(v).second) continue;
      targets.erase(v);
      queue.push_back(v);
    }
  }
  return targets.empty();
}

struct ReflectedFamily {
  VecZ element;                      // a in A
  bool trivial_empty = false;        // E(a-A) certified empty
  VecZ witness;                      // valid when engine is set
  std::unique_ptr<MuEngine> engine;  // set when a-A is pointed
};

std::string vec_str(const VecZ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<ReflectedFamily> build_reflected_families(const VectorSetND& a,
                                                      const BudgetND& budget) {
  std::vector<ReflectedFamily> families;
  for (const VecZ& p : a.points) {
    ReflectedFamily fam;
    fam.element = p;
    std::vector<VecZ> gens;
    for (const VecZ& q : a.points) gens.push_back(sub(p, q));
    ConeND cone = pointedness(gens);
    if (cone.pointed_witness) {
      fam.witness = *cone.pointed_witness;
      fam.engine = std::make_unique<MuEngine>(cone.generators, fam.witness, budget.max_points);
    } else if (group_certified(cone.generators, a.dim)) {
      fam.trivial_empty = true;  // P(a-A) = Z^n, so E(a-A) is empty
    } else {
      throw std::runtime_error("reflected cone for a=" + vec_str(p) +
                               " is not pointed and could not be certified trivial");
    }
    families.push_back(std::move(fam));
  }
  return families;
}

// Shared exceptional-point test for E_N(A) given precomputed engines.
bool in_e_n(const VecZ& x, long long n_copies, MuEngine& engine_a,
            std::vector<ReflectedFamily>& families) {
  if (!engine_a.mu(x)) return true;  // x in E(A); x in NH(A) subset of C_A
  for (auto& fam : families) {
    if (fam.trivial_empty) continue;
    VecZ y = sub(scale(fam.element, n_copies), x);
    if (!fam.engine->mu(y)) return true;  // y in E(a-A); y in N(a-H(A)) subset of the cone
  }
  return false;
}

Rat poly_eval(const std::vector<Rat>& coeffs, long long n) {
  Rat acc;
  Rat x = rat(n);
  Rat pw(1);
  for (const Rat& c : coeffs) {
    acc += c * pw;
    pw *= x;
  }
  return acc;
}

}  // namespace

SumsetImageND sumset_nd(const VectorSetND& a, long long n_copies, const BudgetND& budget) {
  if (n_copies < 0) throw std::invalid_argument("negative N");
  PointSet cur;
  cur.insert(VecZ(static_cast<std::size_t>(a.dim), 0));
  for (long long i = 0; i < n_copies; ++i) cur = minkowski_step(cur, a.points, budget.max_points);
  return SumsetImageND{n_copies, sorted_points(cur)};
}

MuEngine::MuEngine(std::vector<VecZ> generators, VecZ witness, long long max_points)
    : gens_(std::move(generators)), witness_(std::move(witness)), max_points_(max_points) {
  for (const VecZ& g : gens_)
    if (dot_ll(witness_, g) < 1) throw std::invalid_argument("witness not strictly positive on generators");
}

void MuEngine::ensure(long long w_bound) {
  if (w_bound <= explored_) return;
  dist_.clear();
  VecZ zero(witness_.size(), 0);
  dist_[zero] = 0;
  std::deque<VecZ> queue{zero};
  while (!queue.empty()) {
    VecZ u = std::move(queue.front());
    queue.pop_front();
    const long long du = dist_[u];
    for (const VecZ& g : gens_) {
      VecZ v = add(u, g);
      if (dot_ll(witness_, v) > w_bound) continue;
      auto [it, inserted] = dist_.emplace(v, du + 1);
      if (!inserted) continue;
      if (static_cast<long long>(dist_.size()) > max_points_)
        throw BudgetError("representation search budget exceeded");
      queue.push_back(std::move(v));
    }
  }
  explored_ = w_bound;
}

std::optional<long long> MuEngine::mu(const VecZ& v) {
  const long long w = dot_ll(witness_, v);
  if (w < 0) return std::nullopt;
  ensure(w);
  auto it = dist_.find(v);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

MuValue mu(const VectorSetND& a, const VecZ& v, const BudgetND& budget) {
  ConeND cone = pointedness(a.points);
  if (!cone.pointed_witness) throw std::runtime_error("unbounded search: cone not pointed");
  MuEngine engine(cone.generators, *cone.pointed_witness, budget.max_points);
  return MuValue{v, engine.mu(v)};
}

bool p_membership(const VectorSetND& a, const VecZ& v, const BudgetND& budget) {
  if (!cone_contains(a.points, v)) return false;
  return mu(a, v, budget).mu.has_value();
}

std::vector<VecZ> exceptional_truncated(const VectorSetND& a, const RationalPolytope& region,
                                        const BudgetND& budget) {
  ConeND cone = pointedness(a.points);
  if (!cone.pointed_witness) throw std::runtime_error("unbounded search: cone not pointed");
  MuEngine engine(cone.generators, *cone.pointed_witness, budget.max_points);
  std::vector<VecZ> out;
  for (const VecZ& x : polytope_lattice_points(region, 1, budget.max_points)) {
    if (!cone_contains(a.points, x)) continue;
    if (!engine.mu(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ENSlice e_n_slice(const VectorSetND& a, long long n_copies, const BudgetND& budget) {
  RationalPolytope h = hull(a);
  ConeND cone = pointedness(a.points);
  if (!cone.pointed_witness) throw std::runtime_error("unbounded search: cone not pointed");
  MuEngine engine_a(cone.generators, *cone.pointed_witness, budget.max_points);
  std::vector<ReflectedFamily> families = build_reflected_families(a, budget);
  ENSlice slice;
  slice.n_copies = n_copies;
  for (const VecZ& x : polytope_lattice_points(h, n_copies, budget.max_points))
    if (in_e_n(x, n_copies, engine_a, families)) slice.points.push_back(x);
  std::sort(slice.points.begin(), slice.points.end());
  return slice;
}

Theorem2Report verify_theorem2(const VectorSetND& a, long long n_max, const BudgetND& budget) {
  RationalPolytope h = hull(a);
  ConeND cone = pointedness(a.points);
  if (!cone.pointed_witness) throw std::runtime_error("unbounded search: cone not pointed");
  MuEngine engine_a(cone.generators, *cone.pointed_witness, budget.max_points);
  std::vector<ReflectedFamily> families = build_reflected_families(a, budget);

  Theorem2Report report;
  report.n_max = n_max;
  PointSet na;
  na.insert(VecZ(static_cast<std::size_t>(a.dim), 0));
  for (long long n = 1; n <= n_max; ++n) {
    na = minkowski_step(na, a.points, budget.max_points);
    std::vector<VecZ> rhs;
    for (const VecZ& x : polytope_lattice_points(h, n, budget.max_points))
      if (!in_e_n(x, n, engine_a, families)) rhs.push_back(x);
    std::sort(rhs.begin(), rhs.end());
    report.holds.push_back(sorted_points(na) == rhs ? 1 : 0);
  }
  if (!report.holds.empty() && report.holds.back()) {
    long long onset = n_max;
    while (onset > 1 && report.holds[static_cast<std::size_t>(onset - 2)]) --onset;
    report.onset = onset;
  }
  return report;
}

std::vector<VecZ> mann_minimal(const std::vector<VecZ>& s) {
  std::vector<VecZ> pts = s;
  for (const VecZ& p : pts)
    for (long long c : p)
      if (c < 0) throw std::invalid_argument("mann_minimal requires nonnegative coordinates");
  std::sort(pts.begin(), pts.end(), [](const VecZ& x, const VecZ& y) {
    long long sx = 0, sy = 0;
    for (long long c : x) sx += c;
    for (long long c : y) sy += c;
    return sx != sy ? sx < sy : x < y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<VecZ> antichain;
  for (const VecZ& p : pts) {
    bool dominated = false;
    for (const VecZ& t : antichain) {
      bool le = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (t[i] > p[i]) le = false;
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) antichain.push_back(p);
  }
  return antichain;
}

namespace {

struct MannGrid {
  MuEngine* engine;
  VecZ ell;
  const std::vector<VecZ>* bstar;
  std::vector<long long> t_bound;
  std::map<VecZ, bool>* memo;

  VecZ lift(const VecZ& s) const {
    VecZ p = ell;
    for (std::size_t i = 0; i < bstar->size(); ++i) p = add(p, scale((*bstar)[i], s[i]));
    return p;
  }
  bool in_s(const VecZ& s) {
    auto it = memo->find(s);
    if (it != memo->end()) return it->second;
    bool v = engine->mu(lift(s)).has_value();
    memo->emplace(s, v);
    return v;
  }
};

// Recursive Mann-type decomposition of the complement of the upward-closed
// grid set; `fixed` uses -1 for free coordinates.
void mann_decompose(MannGrid& grid, VecZ fixed, std::set<VecZ>* visited,
                    const std::function<void(const VecZ&)>& emit) {
  if (!visited->insert(fixed).second) return;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i] < 0) free_idx.push_back(i);
  if (free_idx.empty()) {
    if (!grid.in_s(fixed)) emit(fixed);
    return;
  }
  VecZ corner = fixed;
  for (std::size_t i : free_idx) corner[i] = grid.t_bound[i];
  if (!grid.in_s(corner)) {
    emit(fixed);  // the whole slice misses P(A)
    return;
  }
  for (std::size_t j : free_idx)
    for (long long r = 0; r < grid.t_bound[j]; ++r) {
      VecZ sub = fixed;
      sub[j] = r;
      mann_decompose(grid, std::move(sub), visited, emit);
    }
}

bool piece_contains(const ExceptionalPiece& big, const ExceptionalPiece& small) {
  // Sufficient test: small's directions are a subset of big's, and the offset
  // difference is a nonnegative integer combination of big's directions.
  for (const VecZ& d : small.b)
    if (std::find(big.b.begin(), big.b.end(), d) == big.b.end()) return false;
  VecZ diff = sub(small.v, big.v);
  const VecZ zero(diff.size(), 0);
  if (big.b.empty()) return diff == zero;
  auto coords = solve_rational(
      [&] {
        MatQ rows(diff.size(), VecQ(big.b.size()));
        for (std::size_t r = 0; r < diff.size(); ++r)
          for (std::size_t c = 0; c < big.b.size(); ++c) rows[r][c] = rat(big.b[c][r]);
        return rows;
      }(),
      to_q(diff));
  if (!coords) return false;
  // Verify the solution exactly (the system may be overdetermined).
  VecZ rebuilt(diff.size(), 0);
  for (std::size_t c = 0; c < big.b.size(); ++c) {
    const Rat& x = (*coords)[c];
    if (x.denominator() != 1 || x < Rat(0)) return false;
    rebuilt = add(rebuilt, scale(big.b[c], to_ll(x.numerator())));
  }
  return rebuilt == diff;
}

}  // namespace

StructuredExceptionalSet structure_decompose(const VectorSetND& a, const BudgetND& budget) {
  const int n = a.dim;
  ConeND cone = pointedness(a.points);
  if (!cone.pointed_witness) throw std::runtime_error("unbounded search: cone not pointed");
  const VecZ& w = *cone.pointed_witness;
  MuEngine engine(cone.generators, w, budget.max_points);

  VecZ sum_a(static_cast<std::size_t>(n), 0);
  for (const VecZ& p : a.points) sum_a = add(sum_a, p);
  MatI gens_rows;
  for (const VecZ& p : a.points) gens_rows.push_back(to_i(p));

  std::set<std::pair<VecZ, std::vector<VecZ>>> keys;
  std::vector<ExceptionalPiece> pieces;
  const VecZ zero(static_cast<std::size_t>(n), 0);

  for (const std::vector<VecZ>& b_set : caratheodory_cover(a)) {
    std::vector<VecZ> bstar;
    for (const VecZ& v : b_set)
      if (v != zero) bstar.push_back(v);
    LatticeBasisB fd = fundamental_domain(bstar);

    // Truncation bound from the interior translate c*M*gamma.
    VecQ t = basis_coordinates(bstar, to_q(sum_a));
    long long m_const = 1;
    for (const Rat& ti : t)
      if (ti < Rat(0)) m_const = std::max(m_const, to_ll(floor_rat(-ti)) + 1);
    long long c_const = 0;
    for (const VecZ& ell : fd.fundamental_points) {
      auto sol = solve_integer_combination(gens_rows, to_i(ell));
      if (!sol) throw std::logic_error("fundamental point not an integer combination of A");
      for (const Int& s : *sol)
        if (s < 0) c_const = std::max(c_const, to_ll(-s));
    }
    std::vector<long long> t_bound(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Rat r_i = rat(c_const) * (rat(m_const) + t[static_cast<std::size_t>(i)]);
      t_bound[static_cast<std::size_t>(i)] = std::max<long long>(1, to_ll(ceil_rat(r_i)) + 1);
    }

    long long w_max = 0;
    for (const VecZ& ell : fd.fundamental_points) {
      VecZ corner = ell;
      for (int i = 0; i < n; ++i)
        corner = add(corner, scale(bstar[static_cast<std::size_t>(i)],
                                   t_bound[static_cast<std::size_t>(i)] * 3 + 16));
      w_max = std::max(w_max, dot_ll(w, corner));
    }
    engine.ensure(w_max);

    for (const VecZ& ell : fd.fundamental_points) {
      std::map<VecZ, bool> memo;
      MannGrid grid{&engine, ell, &bstar, t_bound, &memo};
      std::set<VecZ> visited;
      VecZ all_free(static_cast<std::size_t>(n), -1);
      {
        VecZ corner = all_free;
        for (int i = 0; i < n; ++i)
          corner[static_cast<std::size_t>(i)] = t_bound[static_cast<std::size_t>(i)];
        if (!grid.in_s(corner))
          throw std::logic_error("truncation corner not representable; bound too small");
      }
      mann_decompose(grid, all_free, &visited, [&](const VecZ& fixed) {
        ExceptionalPiece piece;
        piece.v = ell;
        for (std::size_t i = 0; i < fixed.size(); ++i) {
          if (fixed[i] >= 0)
            piece.v = add(piece.v, scale(bstar[i], fixed[i]));
          else
            piece.b.push_back(bstar[i]);
        }
        if (static_cast<int>(piece.b.size()) > n - 1)
          throw std::logic_error("piece with too many free directions");
        // Spot-check free directions well beyond the truncation box.
        for (long long delta : {3, 11}) {
          if (piece.b.empty()) break;
          VecZ far = piece.v;
          for (std::size_t i = 0; i < fixed.size(); ++i)
            if (fixed[i] < 0)
              far = add(far, scale(bstar[i], grid.t_bound[i] + delta));
          if (engine.mu(far))
            throw std::logic_error("free piece misclassified; truncation bound too small");
        }
        auto key = std::make_pair(piece.v, piece.b);
        if (keys.insert(key).second) pieces.push_back(std::move(piece));
      });
    }
  }

  // Drop pieces strictly contained in others.
  std::vector<ExceptionalPiece> kept;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < pieces.size() && !redundant; ++j)
      if (i != j && piece_contains(pieces[j], pieces[i]) && !piece_contains(pieces[i], pieces[j]))
        redundant = true;
    if (!redundant) kept.push_back(pieces[i]);
  }
  return StructuredExceptionalSet{std::move(kept)};
}

bool structured_contains(const StructuredExceptionalSet& s, const VecZ& x) {
  for (const ExceptionalPiece& piece : s.pieces) {
    VecZ diff = sub(x, piece.v);
    const VecZ zero(diff.size(), 0);
    if (piece.b.empty()) {
      if (diff == zero) return true;
      continue;
    }
    MatQ rows(diff.size(), VecQ(piece.b.size()));
    for (std::size_t r = 0; r < diff.size(); ++r)
      for (std::size_t c = 0; c < piece.b.size(); ++c) rows[r][c] = rat(piece.b[c][r]);
    auto coords = solve_rational(rows, to_q(diff));
    if (!coords) continue;
    VecZ rebuilt(diff.size(), 0);
    bool ok = true;
    for (std::size_t c = 0; c < piece.b.size(); ++c) {
      const Rat& v = (*coords)[c];
      if (v.denominator() != 1 || v < Rat(0)) {
        ok = false;
        break;
      }
      rebuilt = add(rebuilt, scale(piece.b[c], to_ll(v.numerator())));
    }
    if (ok && rebuilt == diff) return true;
  }
  return false;
}

KhovanskiiFit khovanskii_fit(const VectorSetND& a, long long n_max, const BudgetND& budget) {
  const int n = a.dim;
  KhovanskiiFit fit;
  PointSet cur;
  cur.insert(VecZ(static_cast<std::size_t>(n), 0));
  for (long long i = 1; i <= n_max; ++i) {
    cur = minkowski_step(cur, a.points, budget.max_points);
    fit.counts.push_back(static_cast<long long>(cur.size()));
  }
  if (n_max < n + 2) return fit;  // not enough data to witness stabilization

  // Exact interpolation through the last n+1 counts.
  MatQ rows(static_cast<std::size_t>(n) + 1, VecQ(static_cast<std::size_t>(n) + 1));
  VecQ rhs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const long long nn = n_max - n + i;
    Rat pw(1);
    for (int j = 0; j <= n; ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw;
      pw *= rat(nn);
    }
    rhs[static_cast<std::size_t>(i)] = rat(fit.counts[static_cast<std::size_t>(nn - 1)]);
  }
  auto coeffs = solve_rational(rows, rhs);
  if (!coeffs) return fit;
  long long onset = n_max;
  while (onset > 1 &&
         poly_eval(*coeffs, onset - 1) == rat(fit.counts[static_cast<std::size_t>(onset - 2)]))
    --onset;
  if (onset <= n_max - n - 1) {
    fit.onset = onset;
    fit.coefficients = *coeffs;
    fit.leading = (*coeffs)[static_cast<std::size_t>(n)];
  }
  return fit;
}

}  // namespace sumsetlab
