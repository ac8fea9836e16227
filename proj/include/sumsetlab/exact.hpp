#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsetlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Lattice points: machine integers, hashable, cheap to copy.
using VecZ = std::vector<long long>;
// Exact rational vectors for all geometric decision paths.
using VecQ = std::vector<Rat>;
using VecI = std::vector<Int>;

inline Rat rat(long long n) { return Rat(Int(n)); }
inline Rat rat(const Int& n) { return Rat(n); }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
long long to_ll(const Int& v);

// "p" when integral, otherwise "p/q" in lowest terms with positive q.
std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

VecQ to_q(const VecZ& v);
VecI to_i(const VecZ& v);
VecZ to_z(const VecI& v);  // throws if out of long long range

Rat dot(const VecQ& a, const VecQ& b);
long long dot_ll(const VecZ& a, const VecZ& b);
VecZ add(const VecZ& a, const VecZ& b);
VecZ sub(const VecZ& a, const VecZ& b);
VecZ neg(const VecZ& a);
VecZ scale(const VecZ& a, long long k);

struct VecZHash {
  std::size_t operator()(const VecZ& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A validated mathematical claim failed; this falsifies a theorem (or
// exposes a bug) and must surface loudly.
struct StructureViolation : std::logic_error {
  explicit StructureViolation(const std::string& what) : std::logic_error(what) {}
};

struct LatticeError : std::invalid_argument {
  LatticeError(const std::string& what, std::vector<long long> divisors)
      : std::invalid_argument(what), elementary_divisors(std::move(divisors)) {}
  std::vector<long long> elementary_divisors;
};

}  // namespace sumsetlab
