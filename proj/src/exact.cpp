#include "sumsetlab/exact.hpp"

#include <limits>

namespace sumsetlab {

Int floor_rat(const Rat& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer out of machine range");
  return static_cast<long long>(v);
}

std::string rat_str(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

VecQ to_q(const VecZ& v) {
  VecQ out;
  out.reserve(v.size());
  for (long long x : v) out.push_back(rat(x));
  return out;
}

VecI to_i(const VecZ& v) {
  VecI out;
  out.reserve(v.size());
  for (long long x : v) out.push_back(Int(x));
  return out;
}

VecZ to_z(const VecI& v) {
  VecZ out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(to_ll(x));
  return out;
}

Rat dot(const VecQ& a, const VecQ& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long dot_ll(const VecZ& a, const VecZ& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecZ add(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecZ sub(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VecZ neg(const VecZ& a) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

VecZ scale(const VecZ& a, long long k) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * k;
  return out;
}

}  // namespace sumsetlab
