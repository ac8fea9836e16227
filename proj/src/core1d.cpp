#include "sumsetlab/core1d.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace sumsetlab {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                long long shift) {
  const std::size_t word_off = static_cast<std::size_t>(shift >> 6);
  const int bit = static_cast<int>(shift & 63);
  const std::size_t n = dst.size();
  for (std::size_t i = 0; i + word_off < n; ++i) {
    const std::uint64_t w = src[i];
    if (w == 0) continue;
    dst[i + word_off] |= w << bit;
    if (bit != 0 && i + word_off + 1 < n) dst[i + word_off + 1] |= w >> (64 - bit);
  }
}

// One shifted-OR pass: S -> union over a in A of (S + a).
Bitmap1D step(const Bitmap1D& cur, const std::vector<long long>& elements) {
  Bitmap1D next(cur.limit);
  for (long long a : elements) or_shifted(next.words, cur.words, a);
  return next;
}

// Apery values: n_{a,A} for every residue a mod b, by single-source shortest
// path on Z/bZ with an edge r -> r+c of weight c for each 0 < c < b in A.
std::vector<long long> apery_values(const StampSet1D& a) {
  const long long b = a.b();
  if (b <= 0) return {};
  std::vector<long long> dist(static_cast<std::size_t>(b), kInf);
  dist[0] = 0;
  using Node = std::pair<long long, long long>;  // (dist, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (long long c : a.elements) {
      if (c <= 0 || c >= b) continue;
      long long r2 = (r + c) % b;
      if (d + c < dist[static_cast<std::size_t>(r2)]) {
        dist[static_cast<std::size_t>(r2)] = d + c;
        pq.emplace(d + c, r2);
      }
    }
  }
  return dist;
}

// Minimum-coin DP to exact values, with the given coin set.
std::vector<long long> min_coin_table(const std::vector<long long>& coins, long long max_value) {
  std::vector<long long> dp(static_cast<std::size_t>(max_value) + 1, kInf);
  dp[0] = 0;
  for (long long v = 1; v <= max_value; ++v)
    for (long long c : coins)
      if (c <= v && dp[static_cast<std::size_t>(v - c)] + 1 < dp[static_cast<std::size_t>(v)])
        dp[static_cast<std::size_t>(v)] = dp[static_cast<std::size_t>(v - c)] + 1;
  return dp;
}

// Per-residue Theorem-1 statement at level N, against the exact bitmap of NA:
// every n = n_{a,A} + jb with n <= bN - n_{b-a,b-A} lies in NA.
bool residue_statement_holds(long long b, long long n_a, long long n_refl, long long n_copies,
                             const Bitmap1D& s) {
  const long long hi = b * n_copies - n_refl;
  for (long long n = n_a; n <= hi; n += b)
    if (!s.test(n)) return false;
  return true;
}

}  // namespace

long long Bitmap1D::count() const {
  long long c = 0;
  for (std::uint64_t w : words) c += __builtin_popcountll(w);
  return c;
}

std::vector<long long> Bitmap1D::to_list() const {
  std::vector<long long> out;
  for (long long n = 0; n <= limit; ++n)
    if (test(n)) out.push_back(n);
  return out;
}

StampSet1D normalize(std::vector<long long> raw) {
  if (raw.empty()) throw std::invalid_argument("empty set");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  StampSet1D out;
  out.translation = raw.front();
  for (long long& v : raw) v -= out.translation;
  long long g = 0;
  for (long long v : raw) g = std::gcd(g, v);
  out.scale = g > 1 ? g : 1;
  if (g > 1)
    for (long long& v : raw) v /= g;
  out.elements = std::move(raw);
  return out;
}

StampSet1D reflect(const StampSet1D& a) {
  StampSet1D out;
  const long long b = a.b();
  out.elements.reserve(a.elements.size());
  for (auto it = a.elements.rbegin(); it != a.elements.rend(); ++it)
    out.elements.push_back(b - *it);
  return out;
}

Sumset1D sumset_1d(const StampSet1D& a, long long n_copies, const Budget1D& budget) {
  if (n_copies < 0) throw std::invalid_argument("negative N");
  const long long limit = a.b() * n_copies;
  if (limit > budget.max_range)
    throw BudgetError("bitmap range " + std::to_string(limit) + " exceeds budget");
  Bitmap1D cur(limit);
  cur.set(0);
  for (long long i = 0; i < n_copies; ++i) cur = step(cur, a.elements);
  return Sumset1D{n_copies, std::move(cur)};
}

ResidueProfile residue_profile(const StampSet1D& a) {
  if (a.size() < 2) throw std::invalid_argument("residue_profile requires at least two elements");
  const long long b = a.b();
  const StampSet1D refl = reflect(a);
  const std::vector<long long> ap = apery_values(a);
  const std::vector<long long> ap_refl = apery_values(refl);

  long long max_ap = 0;
  for (long long v : ap) max_ap = std::max(max_ap, v);
  std::vector<long long> coins;
  for (long long c : a.elements)
    if (c > 0 && c < b) coins.push_back(c);
  const std::vector<long long> dp = min_coin_table(coins, max_ap);

  ResidueProfile profile;
  profile.b = b;
  profile.rows.resize(static_cast<std::size_t>(b));
  std::vector<long long> scan_start(static_cast<std::size_t>(b));
  for (long long r = 0; r < b; ++r) {
    ResidueRow& row = profile.rows[static_cast<std::size_t>(r)];
    row.a = r;
    row.n_aA = ap[static_cast<std::size_t>(r)];
    row.N_aA = r == 0 ? 0 : dp[static_cast<std::size_t>(row.n_aA)];
    row.nstar_num = ap[static_cast<std::size_t>(r)] + ap_refl[static_cast<std::size_t>((b - r) % b)];
    // Persistence kicks in from N*_{a,A} onward; scan from there.
    scan_start[static_cast<std::size_t>(r)] = std::max<long long>(1, (row.nstar_num + b - 1) / b);
  }

  const long long cap = 2 * (b / 2) + 1;
  Bitmap1D s(b * cap);
  s.set(0);
  std::vector<long long> first_success(static_cast<std::size_t>(b), 0);
  long long remaining = b;
  for (long long n_level = 1; n_level <= cap && remaining > 0; ++n_level) {
    s = step(s, a.elements);
    for (long long r = 0; r < b; ++r) {
      auto idx = static_cast<std::size_t>(r);
      if (first_success[idx] != 0 || n_level < scan_start[idx]) continue;
      if (residue_statement_holds(b, ap[idx], ap_refl[static_cast<std::size_t>((b - r) % b)],
                                  n_level, s)) {
        first_success[idx] = n_level;
        --remaining;
      }
    }
  }
  if (remaining > 0)
    throw StructureViolation("per-residue threshold exceeds the 2*floor(b/2) cap for b=" +
                             std::to_string(b));
  for (long long r = 0; r < b; ++r) {
    auto idx = static_cast<std::size_t>(r);
    profile.rows[idx].threshold = first_success[idx] == scan_start[idx] ? 1 : first_success[idx];
  }
  return profile;
}

ExceptionalSet1D exceptional_set_1d(const StampSet1D& a) {
  ExceptionalSet1D out;
  if (a.size() < 2) return out;  // {0}: everything representable
  const long long b = a.b();
  const std::vector<long long> ap = apery_values(a);
  for (long long r = 1; r < b; ++r)
    for (long long n = r; n < ap[static_cast<std::size_t>(r)]; n += b) out.members.push_back(n);
  std::sort(out.members.begin(), out.members.end());
  if (!out.members.empty()) out.frobenius = out.members.back();
  return out;
}

bool member(const StampSet1D& a, long long n_copies, long long n) {
  const long long b = a.b();
  if (n < 0 || n > b * n_copies) return false;
  if (a.size() < 2) return n == 0;
  if (n_copies >= 2 * (b / 2)) {
    const std::vector<long long> ap = apery_values(a);
    const std::vector<long long> ap_refl = apery_values(reflect(a));
    const long long r = n % b;
    return n >= ap[static_cast<std::size_t>(r)] &&
           b * n_copies - n >= ap_refl[static_cast<std::size_t>((b - r) % b)];
  }
  // Small N: direct min-coin count with all nonzero elements as coins.
  std::vector<long long> coins(a.elements.begin() + 1, a.elements.end());
  const std::vector<long long> dp = min_coin_table(coins, n);
  return dp[static_cast<std::size_t>(n)] <= n_copies;
}

bool theorem1_statement_holds(const StampSet1D& a, long long n_copies) {
  const Sumset1D s = sumset_1d(a, n_copies);
  const long long limit = a.b() * n_copies;
  Bitmap1D expected(limit);
  for (long long n = 0; n <= limit; ++n) expected.set(n);
  for (long long e : exceptional_set_1d(a).members)
    if (e <= limit) expected.words[static_cast<std::size_t>(e >> 6)] &= ~(std::uint64_t(1) << (e & 63));
  for (long long e : exceptional_set_1d(reflect(a)).members)
    if (limit - e >= 0) {
      const long long n = limit - e;
      expected.words[static_cast<std::size_t>(n >> 6)] &= ~(std::uint64_t(1) << (n & 63));
    }
  return s.members == expected;
}

long long threshold(const StampSet1D& a) {
  if (a.size() < 2) return 0;
  const ResidueProfile profile = residue_profile(a);
  long long out = 1;
  for (const ResidueRow& row : profile.rows) out = std::max(out, row.threshold);
  return out;
}

std::vector<SavchevChenCertificate> savchev_chen_certify(const StampSet1D& a) {
  std::vector<SavchevChenCertificate> certs;
  if (a.size() < 2) return certs;
  const long long b = a.b();
  const ResidueProfile profile = residue_profile(a);
  for (const ResidueRow& row : profile.rows) {
    if (row.a == 0 || 2 * row.N_aA <= b) continue;
    SavchevChenCertificate cert;
    cert.residue = row.a;
    cert.copies = row.N_aA;
    if (row.n_aA % row.N_aA != 0)
      throw StructureViolation("structure violation: n_aA not a multiple of N_aA at residue " +
                               std::to_string(row.a));
    cert.h = row.n_aA / row.N_aA;
    if (cert.h < 1 || cert.h > b - 1 || std::gcd(cert.h, b) != 1 ||
        !std::binary_search(a.elements.begin(), a.elements.end(), cert.h))
      throw StructureViolation("structure violation: invalid generator h at residue " +
                               std::to_string(row.a));
    // Modular inverse of h mod b.
    long long inv = 0;
    for (long long t = 1; t < b; ++t)
      if ((t * cert.h) % b == 1) {
        inv = t;
        break;
      }
    for (long long k : a.elements) {
      if (k == 0 || k == b || k == cert.h) continue;
      const long long ratio = ((k % b) * inv) % b;
      if (ratio < cert.copies + 1)
        throw StructureViolation("structure violation: (k/h)_b too small for k=" +
                                 std::to_string(k) + " at residue " + std::to_string(row.a));
      cert.obstruction_checks.emplace_back(k, ratio);
    }
    certs.push_back(std::move(cert));
  }
  return certs;
}

namespace {

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b).
struct ExtGcd {
  long long g, x, y;
};

ExtGcd ext_gcd(long long a, long long b) {
  if (b == 0) return {a, 1, 0};
  ExtGcd r = ext_gcd(b, a % b);
  return {r.g, r.y, r.x - (a / b) * r.y};
}

}  // namespace

long long ebound_construction(const StampSet1D& a) {
  if (a.size() < 2) return 0;
  long long g = 0;
  std::vector<long long> coeffs;
  for (long long e : a.elements) {
    ExtGcd r = ext_gcd(g, e);
    for (long long& c : coeffs) c *= r.x;
    coeffs.push_back(r.y);
    g = r.g;
  }
  if (g != 1) throw std::logic_error("normalized set must have gcd 1");
  long long m = 0;
  for (long long c : coeffs) m = std::max(m, -c);
  long long sum = 0;
  for (long long e : a.elements) sum += e;
  return a.b() * m * sum;
}

}  // namespace sumsetlab
