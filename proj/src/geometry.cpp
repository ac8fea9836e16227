#include "sumsetlab/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sumsetlab {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int dot_i(const VecI& a, const VecI& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int det_int(MatI m) {
  MatQ q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const Int& v : m[i]) q[i].push_back(Rat(v));
  Rat d = det_rational(q);
  return d.numerator() / d.denominator();
}

// Generalized cross product: integer normal of the hyperplane spanned by the
// rows of `dirs` ((d-1) x d).
VecI hyperplane_normal(const MatI& dirs, int dim) {
  VecI normal(static_cast<std::size_t>(dim), 0);
  for (int j = 0; j < dim; ++j) {
    MatI minor;
    for (const VecI& row : dirs) {
      VecI r;
      for (int c = 0; c < dim; ++c)
        if (c != j) r.push_back(row[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(r));
    }
    Int d = minor.empty() ? Int(1) : det_int(minor);
    normal[static_cast<std::size_t>(j)] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

void visit_combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct Facet {
  VecI normal;  // in scaled integer coordinates
  Int offset;
  std::vector<int> tight;  // indices of input points on the hyperplane
};

struct HullData {
  Int denom = 1;                    // input scaled by denom to integer coords
  std::vector<VecI> scaled;         // denom * points
  std::vector<Facet> facets;
  std::vector<int> vertex_indices;  // indices of hull vertices
};

HullData build_hull(const std::vector<VecQ>& points, int dim) {
  HullData hd;
  Int denom = 1;
  for (const VecQ& p : points)
    for (const Rat& c : p) denom = denom / gcd_int(denom, c.denominator()) * c.denominator();
  hd.denom = denom;
  for (const VecQ& p : points) {
    VecI s;
    for (const Rat& c : p) s.push_back(c.numerator() * (denom / c.denominator()));
    hd.scaled.push_back(std::move(s));
  }
  const int k = static_cast<int>(points.size());

  {
    MatQ diffs;
    for (int i = 1; i < k; ++i) {
      VecQ row;
      for (int j = 0; j < dim; ++j)
        row.push_back(Rat(hd.scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          hd.scaled[0][static_cast<std::size_t>(j)]));
      diffs.push_back(std::move(row));
    }
    if (rank_rational(diffs) != dim) throw std::invalid_argument("hull not full-dimensional");
  }

  std::set<std::pair<std::vector<std::string>, std::string>> seen;
  visit_combinations(k, dim, [&](const std::vector<int>& idx) {
    MatI dirs;
    for (int i = 1; i < dim; ++i) {
      VecI row;
      for (int j = 0; j < dim; ++j)
        row.push_back(hd.scaled[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]
                               [static_cast<std::size_t>(j)] -
                      hd.scaled[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(j)]);
      dirs.push_back(std::move(row));
    }
    VecI normal = hyperplane_normal(dirs, dim);
    bool zero = true;
    for (const Int& v : normal)
      if (v != 0) zero = false;
    if (zero) return;
    Int offset = dot_i(normal, hd.scaled[static_cast<std::size_t>(idx[0])]);
    bool above = false, below = false;
    for (const VecI& p : hd.scaled) {
      Int d = dot_i(normal, p);
      if (d > offset) above = true;
      if (d < offset) below = true;
    }
    if (above && below) return;
    if (above) {  // orient so every point satisfies normal . x <= offset
      for (Int& v : normal) v = -v;
      offset = -offset;
    }
    Int g = abs_int(offset);
    for (const Int& v : normal) g = gcd_int(g, v);
    if (g > 1) {
      for (Int& v : normal) v /= g;
      offset /= g;
    }
    std::vector<std::string> key;
    for (const Int& v : normal) key.push_back(v.str());
    if (!seen.insert({key, offset.str()}).second) return;
    Facet f{std::move(normal), offset, {}};
    for (int i = 0; i < k; ++i)
      if (dot_i(f.normal, hd.scaled[static_cast<std::size_t>(i)]) == f.offset) f.tight.push_back(i);
    hd.facets.push_back(std::move(f));
  });

  for (int i = 0; i < k; ++i) {
    MatQ tight_normals;
    for (const Facet& f : hd.facets)
      if (dot_i(f.normal, hd.scaled[static_cast<std::size_t>(i)]) == f.offset) {
        VecQ row;
        for (const Int& v : f.normal) row.push_back(Rat(v));
        tight_normals.push_back(std::move(row));
      }
    if (static_cast<int>(tight_normals.size()) >= dim && rank_rational(tight_normals) == dim)
      hd.vertex_indices.push_back(i);
  }
  return hd;
}

RationalPolytope polytope_from_hull(const HullData& hd, const std::vector<VecQ>& points, int dim) {
  RationalPolytope p;
  p.dim = dim;
  for (int i : hd.vertex_indices) p.vertices.push_back(points[static_cast<std::size_t>(i)]);
  for (const Facet& f : hd.facets)
    p.halfspaces.push_back(Halfspace{f.normal, Rat(f.offset, hd.denom)});
  return p;
}

// Express the facet's points in a (dim-1)-dimensional coordinate system.
std::vector<VecQ> facet_local_coordinates(const std::vector<VecQ>& pts, int dim) {
  const VecQ& base = pts[0];
  MatQ basis_cols;  // rows = dim, cols accumulate
  std::vector<VecQ> dirs;
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(dirs.size()) < dim - 1; ++i) {
    VecQ d(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
      d[static_cast<std::size_t>(j)] = pts[i][static_cast<std::size_t>(j)] - base[static_cast<std::size_t>(j)];
    MatQ test;
    for (const VecQ& e : dirs) test.push_back(e);
    test.push_back(d);
    if (rank_rational(test) == static_cast<int>(test.size())) dirs.push_back(std::move(d));
  }
  if (static_cast<int>(dirs.size()) != dim - 1)
    throw std::logic_error("degenerate facet parametrization");
  std::vector<VecQ> local;
  for (const VecQ& p : pts) {
    MatQ rows(static_cast<std::size_t>(dim), VecQ(dirs.size()));
    VecQ rhs(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dirs.size(); ++c) rows[static_cast<std::size_t>(r)][c] = dirs[c][static_cast<std::size_t>(r)];
      rhs[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r)] - base[static_cast<std::size_t>(r)];
    }
    auto y = solve_rational(rows, rhs);
    if (!y) throw std::logic_error("facet point outside its hyperplane");
    local.push_back(std::move(*y));
  }
  return local;
}

std::vector<std::vector<int>> triangulate_from(const std::vector<VecQ>& points, int dim,
                                               int base_idx);

// Triangulate one facet into (dim-1)-simplices; returns index tuples into
// the global point list.
std::vector<std::vector<int>> facet_simplices(const std::vector<VecQ>& points, int dim,
                                              const std::vector<int>& facet_pts) {
  if (dim - 1 == 0) return {{facet_pts[0]}};
  std::vector<VecQ> pts;
  for (int i : facet_pts) pts.push_back(points[static_cast<std::size_t>(i)]);
  std::vector<VecQ> local = facet_local_coordinates(pts, dim);
  std::vector<std::vector<int>> subs = triangulate_from(local, dim - 1, -1);
  std::vector<std::vector<int>> out;
  for (const auto& s : subs) {
    std::vector<int> mapped;
    for (int i : s) mapped.push_back(facet_pts[static_cast<std::size_t>(i)]);
    out.push_back(std::move(mapped));
  }
  return out;
}

// base_idx = -1 means fan from the lexicographically least hull vertex.
std::vector<std::vector<int>> triangulate_from(const std::vector<VecQ>& points, int dim,
                                               int base_idx) {
  HullData hd = build_hull(points, dim);
  int v0 = base_idx;
  if (v0 < 0) {
    v0 = hd.vertex_indices[0];
    for (int i : hd.vertex_indices)
      if (points[static_cast<std::size_t>(i)] < points[static_cast<std::size_t>(v0)]) v0 = i;
  }
  std::vector<std::vector<int>> simplices;
  for (const Facet& f : hd.facets) {
    if (dot_i(f.normal, hd.scaled[static_cast<std::size_t>(v0)]) == f.offset) continue;
    // Restrict the facet to hull vertices.
    std::vector<int> fpts;
    for (int i : f.tight)
      if (std::find(hd.vertex_indices.begin(), hd.vertex_indices.end(), i) !=
          hd.vertex_indices.end())
        fpts.push_back(i);
    for (auto& sub : facet_simplices(points, dim, fpts)) {
      std::vector<int> s;
      s.push_back(v0);
      for (int i : sub) s.push_back(i);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

}  // namespace

VectorSetND validate_lattice(std::vector<VecZ> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const int dim = static_cast<int>(points[0].size());
  if (dim == 0) throw std::invalid_argument("zero-dimensional points");
  for (const VecZ& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("points of mixed dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const VecZ zero(static_cast<std::size_t>(dim), 0);
  if (std::find(points.begin(), points.end(), zero) == points.end())
    throw std::invalid_argument("set must contain the zero vector");

  MatI rows;
  for (const VecZ& p : points) rows.push_back(to_i(p));
  std::vector<Int> divisors = smith_divisors(rows);
  Int product = 1;
  for (const Int& d : divisors) product *= d;
  if (static_cast<int>(divisors.size()) != dim || product != 1) {
    std::vector<long long> divs;
    for (const Int& d : divisors) divs.push_back(to_ll(d));
    throw LatticeError("points do not generate Z^n", divs);
  }
  return VectorSetND{dim, std::move(points)};
}

RationalPolytope hull_of_rational(const std::vector<VecQ>& points, int dim) {
  HullData hd = build_hull(points, dim);
  return polytope_from_hull(hd, points, dim);
}

RationalPolytope hull(const VectorSetND& a) {
  std::vector<VecQ> pts;
  for (const VecZ& p : a.points) pts.push_back(to_q(p));
  return hull_of_rational(pts, a.dim);
}

bool polytope_contains(const RationalPolytope& p, const VecQ& x, long long n_scale) {
  for (const Halfspace& h : p.halfspaces) {
    Rat d;
    for (std::size_t i = 0; i < x.size(); ++i) d += Rat(h.normal[i]) * x[i];
    if (d > rat(n_scale) * h.offset) return false;
  }
  return true;
}

std::vector<VecZ> polytope_lattice_points(const RationalPolytope& p, long long n_scale,
                                          long long max_points) {
  const int dim = p.dim;
  std::vector<long long> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) {
    Rat mn = p.vertices[0][static_cast<std::size_t>(j)], mx = mn;
    for (const VecQ& v : p.vertices) {
      mn = std::min(mn, v[static_cast<std::size_t>(j)]);
      mx = std::max(mx, v[static_cast<std::size_t>(j)]);
    }
    lo[static_cast<std::size_t>(j)] = to_ll(ceil_rat(mn * rat(n_scale)));
    hi[static_cast<std::size_t>(j)] = to_ll(floor_rat(mx * rat(n_scale)));
  }
  long long box = 1;
  for (int j = 0; j < dim; ++j) {
    long long w = hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)] + 1;
    if (w <= 0) return {};
    box *= w;
    if (box > max_points) throw BudgetError("lattice point enumeration exceeds budget");
  }
  std::vector<VecZ> out;
  VecZ x = lo;
  for (;;) {
    VecQ xq = to_q(x);
    if (polytope_contains(p, xq, n_scale)) out.push_back(x);
    int j = dim - 1;
    while (j >= 0 && x[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
      x[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
    ++x[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<std::vector<int>> triangulate(const std::vector<VecQ>& points, int dim) {
  return triangulate_from(points, dim, -1);
}

Rat volume(const RationalPolytope& p) {
  const int dim = p.dim;
  std::vector<std::vector<int>> simplices = triangulate(p.vertices, dim);
  Rat vol;
  Int factorial = 1;
  for (int i = 2; i <= dim; ++i) factorial *= i;
  for (const auto& s : simplices) {
    MatQ m;
    for (int i = 1; i <= dim; ++i) {
      VecQ row(static_cast<std::size_t>(dim));
      for (int j = 0; j < dim; ++j)
        row[static_cast<std::size_t>(j)] =
            p.vertices[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])][static_cast<std::size_t>(j)] -
            p.vertices[static_cast<std::size_t>(s[0])][static_cast<std::size_t>(j)];
      m.push_back(std::move(row));
    }
    Rat d = det_rational(m);
    if (d < Rat(0)) d = -d;
    vol += d / Rat(factorial);
  }
  return vol;
}

std::vector<std::vector<VecZ>> caratheodory_cover(const VectorSetND& a) {
  std::vector<VecQ> pts;
  for (const VecZ& p : a.points) pts.push_back(to_q(p));
  const VecZ zero(static_cast<std::size_t>(a.dim), 0);
  int origin = -1;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (a.points[i] == zero) origin = static_cast<int>(i);
  std::vector<std::vector<int>> simplices = triangulate_from(pts, a.dim, origin);
  std::vector<std::vector<VecZ>> cover;
  for (const auto& s : simplices) {
    std::vector<VecZ> b;
    b.push_back(zero);
    for (int i : s)
      if (i != origin) b.push_back(a.points[static_cast<std::size_t>(i)]);
    cover.push_back(std::move(b));
  }
  return cover;
}

ConeND pointedness(const std::vector<VecZ>& points) {
  ConeND cone;
  int dim = points.empty() ? 0 : static_cast<int>(points[0].size());
  const VecZ zero(static_cast<std::size_t>(dim), 0);
  for (const VecZ& p : points)
    if (p != zero) cone.generators.push_back(p);
  if (cone.generators.empty()) {
    cone.pointed_witness = VecZ(static_cast<std::size_t>(dim), 1);
    return cone;
  }

  std::vector<LinIneq> cons;
  for (const VecZ& g : cone.generators) {
    LinIneq c;
    for (long long v : g) c.coef.push_back(rat(-v));
    c.rhs = rat(-1);
    cons.push_back(std::move(c));
  }
  if (auto w = fm_feasible(std::move(cons), dim)) {
    Int denom = 1;
    for (const Rat& c : *w) denom = denom / gcd_int(denom, c.denominator()) * c.denominator();
    VecZ wz;
    for (const Rat& c : *w) wz.push_back(to_ll(c.numerator() * (denom / c.denominator())));
    for (const VecZ& g : cone.generators)
      if (dot_ll(wz, g) < 1) throw std::logic_error("pointedness witness check failed");
    cone.pointed_witness = std::move(wz);
    return cone;
  }

  // Not pointed: 0 lies in the convex hull of the generators; find an affinely
  // independent subset carrying a convex combination of 0.
  const int k = static_cast<int>(cone.generators.size());
  for (int m = 2; m <= std::min(k, dim + 1) && cone.not_pointed_certificate.empty(); ++m) {
    visit_combinations(k, m, [&](const std::vector<int>& idx) {
      if (!cone.not_pointed_certificate.empty()) return;
      MatQ rows(static_cast<std::size_t>(dim) + 1, VecQ(static_cast<std::size_t>(m)));
      VecQ rhs(static_cast<std::size_t>(dim) + 1, Rat(0));
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < m; ++c)
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              rat(cone.generators[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])]
                                 [static_cast<std::size_t>(r)]);
      for (int c = 0; c < m; ++c) rows[static_cast<std::size_t>(dim)][static_cast<std::size_t>(c)] = Rat(1);
      rhs[static_cast<std::size_t>(dim)] = Rat(1);
      {
        MatQ cols(static_cast<std::size_t>(m), VecQ(static_cast<std::size_t>(dim) + 1));
        for (int r = 0; r <= dim; ++r)
          for (int c = 0; c < m; ++c)
            cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (rank_rational(cols) != m) return;  // need a unique solution
      }
      auto lambda = solve_rational(rows, rhs);
      if (!lambda) return;
      for (const Rat& l : *lambda)
        if (l < Rat(0)) return;
      Int denom = 1;
      for (const Rat& l : *lambda) denom = denom / gcd_int(denom, l.denominator()) * l.denominator();
      for (int c = 0; c < m; ++c) {
        const Rat& l = (*lambda)[static_cast<std::size_t>(c)];
        long long coeff = to_ll(l.numerator() * (denom / l.denominator()));
        if (coeff > 0)
          cone.not_pointed_certificate.emplace_back(
              cone.generators[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])], coeff);
      }
    });
  }
  if (cone.not_pointed_certificate.empty())
    throw std::logic_error("cone neither pointed nor certified; should not happen");
  return cone;
}

bool cone_contains(const std::vector<VecZ>& generators, const VecZ& x) {
  const int dim = static_cast<int>(x.size());
  const VecZ zero(static_cast<std::size_t>(dim), 0);
  if (x == zero) return true;
  std::vector<VecZ> gens;
  for (const VecZ& g : generators)
    if (g != zero) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const int k = static_cast<int>(gens.size());
  bool found = false;
  for (int m = 1; m <= std::min(k, dim) && !found; ++m) {
    visit_combinations(k, m, [&](const std::vector<int>& idx) {
      if (found) return;
      MatQ rows(static_cast<std::size_t>(dim), VecQ(static_cast<std::size_t>(m)));
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < m; ++c)
          rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              rat(gens[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])]
                      [static_cast<std::size_t>(r)]);
      {
        MatQ cols(static_cast<std::size_t>(m), VecQ(static_cast<std::size_t>(dim)));
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < m; ++c)
            cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        if (rank_rational(cols) != m) return;
      }
      auto coeff = solve_rational(rows, to_q(x));
      if (!coeff) return;
      for (const Rat& c : *coeff)
        if (c < Rat(0)) return;
      found = true;
    });
  }
  return found;
}

LatticeBasisB fundamental_domain(const std::vector<VecZ>& basis) {
  const int dim = static_cast<int>(basis.size());
  if (dim == 0 || static_cast<int>(basis[0].size()) != dim)
    throw std::invalid_argument("fundamental_domain needs a square basis");
  MatQ rows;
  for (const VecZ& b : basis) rows.push_back(to_q(b));
  Rat d = det_rational(rows);
  if (d == Rat(0)) throw std::invalid_argument("basis is singular");
  Int det = abs_int(d.numerator() / d.denominator());

  MatQ cols(static_cast<std::size_t>(dim), VecQ(static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      cols[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          rat(basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
  MatQ inv = *invert_rational(cols);

  std::vector<long long> lo(static_cast<std::size_t>(dim), 0), hi(static_cast<std::size_t>(dim), 0);
  for (int j = 0; j < dim; ++j)
    for (const VecZ& b : basis) {
      if (b[static_cast<std::size_t>(j)] < 0) lo[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(j)];
      if (b[static_cast<std::size_t>(j)] > 0) hi[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(j)];
    }

  LatticeBasisB out;
  out.basis = basis;
  out.det = det;
  VecZ x = lo;
  for (;;) {
    VecQ c(static_cast<std::size_t>(dim), Rat(0));
    for (int r = 0; r < dim; ++r)
      for (int j = 0; j < dim; ++j)
        c[static_cast<std::size_t>(r)] +=
            inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * rat(x[static_cast<std::size_t>(j)]);
    bool in_domain = true;
    for (const Rat& ci : c)
      if (ci < Rat(0) || ci >= Rat(1)) in_domain = false;
    if (in_domain) out.fundamental_points.push_back(x);
    int j = dim - 1;
    while (j >= 0 && x[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
      x[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
    ++x[static_cast<std::size_t>(j)];
  }
  if (Int(out.fundamental_points.size()) != det)
    throw std::logic_error("fundamental domain count disagrees with |det|");
  return out;
}

VecQ basis_coordinates(const std::vector<VecZ>& basis, const VecQ& x) {
  const int dim = static_cast<int>(x.size());
  MatQ rows(static_cast<std::size_t>(dim), VecQ(basis.size()));
  for (int r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < basis.size(); ++c)
      rows[static_cast<std::size_t>(r)][c] = rat(basis[c][static_cast<std::size_t>(r)]);
  auto sol = solve_rational(rows, x);
  if (!sol) throw std::invalid_argument("vector not in basis span");
  return *sol;
}

}  // namespace sumsetlab
