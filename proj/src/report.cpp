#include "sumsetlab/report.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sumsetlab {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_ll(const std::string& s) {
  const std::string t = strip(s);
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: '" + s + "'");
  }
  if (pos != t.size()) throw std::invalid_argument("bad integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<long long> parse_set_1d(const std::string& text) {
  std::vector<long long> out;
  for (const std::string& part : split(text, ','))
    out.push_back(parse_ll(part));
  if (out.empty()) throw std::invalid_argument("empty set literal");
  return out;
}

std::vector<VecZ> parse_set_nd(const std::string& text) {
  std::vector<VecZ> out;
  for (std::string part : split(text, ';')) {
    part = strip(part);
    if (part.size() < 2 || part.front() != '(' || part.back() != ')')
      throw std::invalid_argument("bad vector literal: '" + part + "'");
    VecZ v;
    for (const std::string& coord : split(part.substr(1, part.size() - 2), ','))
      v.push_back(parse_ll(coord));
    if (!out.empty() && v.size() != out.front().size())
      throw std::invalid_argument("inconsistent vector dimensions");
    out.push_back(std::move(v));
  }
  if (out.empty()) throw std::invalid_argument("empty set literal");
  return out;
}

ParsedSet parse_set(const std::string& text) {
  const std::string t = strip(text);
  if (t.find('(') != std::string::npos) return ParsedSet{parse_set_nd(t)};
  return ParsedSet{parse_set_1d(t)};
}

std::vector<ParsedSet> parse_corpus(const std::string& text) {
  std::vector<ParsedSet> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    out.push_back(parse_set(line));
  }
  return out;
}

std::string set_literal(const std::vector<long long>& elements) {
  std::string s;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements[i]);
  }
  return s;
}

std::string set_literal_nd(const std::vector<VecZ>& points) {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ";";
    s += "(";
    for (std::size_t j = 0; j < points[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(points[i][j]);
    }
    s += ")";
  }
  return s;
}

Json json_set(const std::vector<long long>& elements) {
  return Json(elements);
}

Json json_vec(const VecZ& v) { return Json(v); }

Json json_set_nd(const std::vector<VecZ>& points) {
  Json arr = Json::array();
  for (const VecZ& p : points) arr.push_back(json_vec(p));
  return arr;
}

Json json_rat(const Rat& r) {
  if (r.denominator() == 1) {
    // Keep integers as JSON numbers when they fit; exact strings otherwise.
    const Int& n = r.numerator();
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return Json(to_ll(n));
  }
  return Json(rat_str(r));
}

Json json_sumset_1d(const StampSet1D& a, const Sumset1D& s) {
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  j["n"] = s.n_copies;
  j["result"] = json_set(s.members.to_list());
  return j;
}

Json json_exceptional_1d(const StampSet1D& a, const ExceptionalSet1D& e) {
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  Json res;
  res["members"] = json_set(e.members);
  res["frobenius"] = e.frobenius ? Json(*e.frobenius) : Json(nullptr);
  j["result"] = res;
  return j;
}

Json json_profile(const StampSet1D& a, const ResidueProfile& profile) {
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = profile.b;
  Json rows = Json::array();
  for (const ResidueRow& r : profile.rows) {
    Json row;
    row["a"] = r.a;
    row["n_aA"] = r.n_aA;
    row["N_aA"] = r.N_aA;
    row["Nstar_num"] = r.nstar_num;
    row["threshold"] = r.threshold;
    rows.push_back(row);
  }
  j["result"] = rows;
  return j;
}

Json json_threshold(const StampSet1D& a, long long threshold_value) {
  Json j;
  j["set"] = json_set(a.elements);
  j["b"] = a.b();
  j["result"] = threshold_value;
  return j;
}

Json json_sumset_nd(const VectorSetND& a, const SumsetImageND& s) {
  Json j;
  j["set"] = json_set_nd(a.points);
  j["dim"] = a.dim;
  j["n"] = s.n_copies;
  j["result"] = json_set_nd(s.points);
  return j;
}

Json json_decomposition(const VectorSetND& a, const StructuredExceptionalSet& s) {
  Json j;
  j["set"] = json_set_nd(a.points);
  j["dim"] = a.dim;
  Json pieces = Json::array();
  for (const ExceptionalPiece& p : s.pieces) {
    Json piece;
    piece["v"] = json_vec(p.v);
    piece["B"] = json_set_nd(p.b);
    pieces.push_back(piece);
  }
  Json res;
  res["pieces"] = pieces;
  j["result"] = res;
  return j;
}

Json json_khovanskii(const VectorSetND& a, const KhovanskiiFit& fit) {
  Json j;
  j["set"] = json_set_nd(a.points);
  j["dim"] = a.dim;
  Json res;
  res["onset"] = fit.onset ? Json(*fit.onset) : Json(nullptr);
  Json coeffs = Json::array();
  for (const Rat& c : fit.coefficients) coeffs.push_back(json_rat(c));
  res["coefficients"] = coeffs;
  res["leading"] = fit.onset ? json_rat(fit.leading) : Json(nullptr);
  res["counts"] = Json(fit.counts);
  j["result"] = res;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sumsetlab
