#include "ppforge/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ppforge::io {

using u64 = std::uint64_t;

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON key \"") + key + "\"");
  return j.at(key);
}

u64 as_u64(const Json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  }
  return j.get<u64>();
}

std::vector<u64> as_u64_list(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<u64> out;
  for (const Json& v : j) out.push_back(as_u64(v, what));
  return out;
}

template <typename Seq, typename F>
std::string joined(const Seq& seq, F&& fmt) {
  std::string out;
  for (const auto& v : seq) {
    if (!out.empty()) out += ' ';
    out += fmt(v);
  }
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["n"] = f.n();
  j["modulus"] = f.modulus();
  j["xi"] = f.xi().index();
  return j;
}

FieldPtr field_from_json(const Json& j) {
  const u64 p = as_u64(require(j, "p"), "p");
  const u64 n = as_u64(require(j, "n"), "n");
  std::optional<std::vector<u64>> modulus;
  std::optional<u64> xi;
  if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = as_u64_list(j.at("modulus"), "modulus");
  if (j.contains("xi") && !j.at("xi").is_null()) xi = as_u64(j.at("xi"), "xi");
  if (n == 0 || n > 64) throw std::invalid_argument("n must lie in [1, 64]");
  return Field::make(p, static_cast<unsigned>(n), std::move(modulus), xi);
}

Json poly_to_json(const SparsePoly& f) {
  Json terms = Json::array();
  for (auto [e, c] : f.terms()) terms.push_back(Json::array({e, c}));
  Json j;
  j["field"] = field_to_json(f.field());
  j["terms"] = std::move(terms);
  return j;
}

SparsePoly poly_from_json(const Json& j) { return poly_from_json(j, field_from_json(require(j, "field"))); }

SparsePoly poly_from_json(const Json& j, const FieldPtr& field) {
  const Json& terms = require(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
  std::vector<RawTerm> raw;
  std::optional<u64> prev;
  for (const Json& t : terms) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("each term must be [exponent, coefficient]");
    const u64 e = as_u64(t[0], "exponent");
    const u64 c = as_u64(t[1], "coefficient");
    if (prev && e <= *prev) throw std::invalid_argument("term exponents must be strictly increasing");
    if (c >= field->q()) throw std::invalid_argument("coefficient index outside [0, q)");
    prev = e;
    raw.push_back({e, field->element(c)});
  }
  return SparsePoly::reduce(field, raw);
}

Json mapping_to_json(const CycloMapping& m) {
  Json a = Json::array();
  for (const Element& ai : m.a()) a.push_back(ai.index());
  Json j;
  j["field"] = field_to_json(m.field());
  j["d"] = m.d();
  j["a"] = std::move(a);
  j["r"] = m.r();
  return j;
}

CycloMapping mapping_from_json(const Json& j) {
  FieldPtr field = field_from_json(require(j, "field"));
  const u64 d = as_u64(require(j, "d"), "d");
  std::vector<Element> a;
  for (u64 idx : as_u64_list(require(j, "a"), "a")) {
    if (idx >= field->q()) throw std::invalid_argument("coefficient index outside [0, q)");
    a.push_back(field->element(idx));
  }
  std::vector<u64> r = as_u64_list(require(j, "r"), "r");
  return CycloMapping(CycloParams(field, d), std::move(a), std::move(r));
}

Json certificate_to_json(const InverseCertificate& c) {
  Json branches = Json::array();
  for (const BezoutPair& b : c.branches) {
    Json bj;
    bj["r_tilde"] = b.r_tilde;
    bj["t"] = b.t;
    branches.push_back(std::move(bj));
  }
  Json j;
  j["inverse"] = poly_to_json(c.inverse);
  j["branches"] = std::move(branches);
  j["u"] = c.u ? Json(*c.u) : Json(nullptr);
  j["verified"] = to_string(c.verified);
  return j;
}

InverseCertificate certificate_from_json(const Json& j) {
  InverseCertificate c{poly_from_json(require(j, "inverse")), {}, std::nullopt, Verification::none};
  const Json& branches = require(j, "branches");
  if (!branches.is_array()) throw std::invalid_argument("branches must be an array");
  for (const Json& b : branches) {
    const Json& t = require(b, "t");
    if (!t.is_number_integer()) throw std::invalid_argument("t must be an integer");
    c.branches.push_back({as_u64(require(b, "r_tilde"), "r_tilde"), t.get<std::int64_t>()});
  }
  if (j.contains("u") && !j.at("u").is_null()) c.u = as_u64(j.at("u"), "u");
  const Json& verified = require(j, "verified");
  if (!verified.is_string()) throw std::invalid_argument("verified must be a string");
  c.verified = verification_from_string(verified.get<std::string>());
  return c;
}

std::string catalog_csv(const std::vector<SelfInverseEntry>& catalog) {
  std::ostringstream out;
  out << "q,d,s,r,a,polynomial,verified\n";
  for (const SelfInverseEntry& e : catalog) {
    const CycloMapping& m = e.mapping;
    out << m.field().q() << ',' << m.d() << ',' << m.s() << ','
        << joined(m.r(), [](u64 v) { return std::to_string(v); }) << ','
        << joined(m.a(), [](const Element& v) { return std::to_string(v.index()); }) << ','
        << joined(e.poly.terms(),
                  [](const auto& t) { return std::to_string(t.first) + ":" + std::to_string(t.second); })
        << ',' << to_string(e.verified) << '\n';
  }
  return out.str();
}

}  // namespace ppforge::io
