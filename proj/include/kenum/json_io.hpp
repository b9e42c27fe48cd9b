#pragma once

// Canonical JSON encodings and stable digests for golden-file regression.
// Polynomial JSON: {"vars":[...],"terms":[{"e":[...stored doubled ints...],
// "c":"num/den"}]}, terms in canonical (lex) order.

#include "kenum/core.hpp"
#include "kenum/factored.hpp"
#include "kenum/partitions.hpp"
#include "kenum/series.hpp"

#include <json.hpp>

namespace kenum::io {

using nlohmann::json;

json to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const json& j);

json to_json(const FactoredRational& f);
json to_json(const RationalSum& s);
json to_json(const parts::Partition& p);
json to_json(const parts::PlanePartition& p);

template <class C>
json series_to_json(const TruncatedSeries<C>& s) {
  json out;
  out["var"] = s.var();
  out["order"] = s.order();
  json coeffs = json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(to_json(s[k]));
  out["coeffs"] = std::move(coeffs);
  return out;
}

// FNV-1a over the canonical serialization
uint64_t digest(const std::string& canonical);
std::string digest_hex(const std::string& canonical);

}  // namespace kenum::io
