#pragma once

#include "sumsetlab/core1d.hpp"
#include "sumsetlab/geometry.hpp"
#include "sumsetlab/sumset_nd.hpp"

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace sumsetlab {

using Json = nlohmann::ordered_json;

// Either a 1D stamp set literal "0,3,5" or a vector set "(0,0);(2,0);(0,3)".
struct ParsedSet {
  std::variant<std::vector<long long>, std::vector<VecZ>> value;

  bool is_1d() const { return value.index() == 0; }
  const std::vector<long long>& raw_1d() const { return std::get<0>(value); }
  const std::vector<VecZ>& raw_nd() const { return std::get<1>(value); }
};

ParsedSet parse_set(const std::string& text);
std::vector<long long> parse_set_1d(const std::string& text);
std::vector<VecZ> parse_set_nd(const std::string& text);

// One set per line; '#' starts a comment; blank lines skipped.
std::vector<ParsedSet> parse_corpus(const std::string& text);

std::string set_literal(const std::vector<long long>& elements);
std::string set_literal_nd(const std::vector<VecZ>& points);

Json json_set(const std::vector<long long>& elements);
Json json_set_nd(const std::vector<VecZ>& points);
Json json_vec(const VecZ& v);
Json json_rat(const Rat& r);  // integer, or "p/q" string

Json json_profile(const StampSet1D& a, const ResidueProfile& profile);
Json json_sumset_1d(const StampSet1D& a, const Sumset1D& s);
Json json_exceptional_1d(const StampSet1D& a, const ExceptionalSet1D& e);
Json json_threshold(const StampSet1D& a, long long threshold_value);
Json json_sumset_nd(const VectorSetND& a, const SumsetImageND& s);
Json json_decomposition(const VectorSetND& a, const StructuredExceptionalSet& s);
Json json_khovanskii(const VectorSetND& a, const KhovanskiiFit& fit);

// Canonical byte form used everywhere a report is written.
std::string dump(const Json& j);

}  // namespace sumsetlab
