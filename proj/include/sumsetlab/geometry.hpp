#pragma once

#include "sumsetlab/exact.hpp"
#include "sumsetlab/linalg.hpp"

#include <optional>

namespace sumsetlab {

// Finite subset of Z^n containing 0 and generating Z^n as a lattice.
struct VectorSetND {
  int dim = 0;
  std::vector<VecZ> points;  // deduplicated; contains the zero vector
};

VectorSetND validate_lattice(std::vector<VecZ> points);

// normal . x <= offset, integer normal, primitive.
struct Halfspace {
  VecI normal;
  Rat offset;
};

struct RationalPolytope {
  int dim = 0;
  std::vector<VecQ> vertices;
  std::vector<Halfspace> halfspaces;
};

RationalPolytope hull(const VectorSetND& a);
RationalPolytope hull_of_rational(const std::vector<VecQ>& points, int dim);

// Is x in N * P (exact; N = 1 for the polytope itself)?
bool polytope_contains(const RationalPolytope& p, const VecQ& x, long long n_scale = 1);

// All integer points of N * P.
std::vector<VecZ> polytope_lattice_points(const RationalPolytope& p, long long n_scale,
                                          long long max_points = 10'000'000);

Rat volume(const RationalPolytope& p);

// Simplices (index tuples into `points`) triangulating the hull of `points`.
std::vector<std::vector<int>> triangulate(const std::vector<VecQ>& points, int dim);

// Simplicial subsets B containing the origin whose scaled hulls cover N*H(A).
std::vector<std::vector<VecZ>> caratheodory_cover(const VectorSetND& a);

struct ConeND {
  std::vector<VecZ> generators;            // the nonzero points of A
  std::optional<VecZ> pointed_witness;     // w with w.a >= 1 for every generator
  // When not pointed: nonzero nonnegative integer combination summing to 0,
  // as (generator, coefficient) pairs.
  std::vector<std::pair<VecZ, long long>> not_pointed_certificate;
};

ConeND pointedness(const std::vector<VecZ>& points);

// Exact membership of x in the cone generated by `generators` (conic
// Caratheodory over independent subsets; no floating point).
bool cone_contains(const std::vector<VecZ>& generators, const VecZ& x);

struct LatticeBasisB {
  std::vector<VecZ> basis;  // B* = B \ {0}, linearly independent
  Int det;                  // |det(basis)|
  std::vector<VecZ> fundamental_points;  // F(B) cap Z^n, one per residue class
};

LatticeBasisB fundamental_domain(const std::vector<VecZ>& basis);

// Coordinates of x in the given square basis (throws if singular).
VecQ basis_coordinates(const std::vector<VecZ>& basis, const VecQ& x);

}  // namespace sumsetlab
