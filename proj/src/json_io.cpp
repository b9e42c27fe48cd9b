#include "kenum/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace kenum::io {

json to_json(const LaurentPolynomial& p) {
  json out;
  out["vars"] = p.vars().names();
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["e"] = m.e;
    t["c"] = c.str();
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

LaurentPolynomial polynomial_from_json(const json& j) {
  VariableSet vars(j.at("vars").get<std::vector<std::string>>());
  LaurentPolynomial p(vars);
  for (const auto& t : j.at("terms")) {
    Monomial m(t.at("e").get<std::vector<int32_t>>());
    if (static_cast<int>(m.e.size()) != vars.size())
      fail(ErrorKind::Io, "term arity mismatch in JSON polynomial");
    p.add_term(m, Rational(t.at("c").get<std::string>()));
  }
  return p;
}

json to_json(const FactoredRational& f) {
  json out;
  out["vars"] = f.vars().names();
  out["coef"] = f.coef().str();
  out["mono"] = f.prefactor_monomial().e;
  json factors = json::array();
  for (const auto& [p, m] : f.factors()) {
    json e;
    e["poly"] = to_json(p);
    e["mult"] = m;
    factors.push_back(std::move(e));
  }
  out["factors"] = std::move(factors);
  return out;
}

json to_json(const RationalSum& s) {
  json out = json::array();
  for (const auto& part : s.parts()) out.push_back(to_json(part));
  return out;
}

json to_json(const parts::Partition& p) { return json(p.parts); }

json to_json(const parts::PlanePartition& p) { return json(p.heights); }

uint64_t digest(const std::string& canonical) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& canonical) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << digest(canonical);
  return os.str();
}

}  // namespace kenum::io
