#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ppforge/cyclotomic.hpp"
#include "ppforge/inverse.hpp"
#include "ppforge/poly.hpp"
#include "ppforge/selfinv.hpp"

namespace ppforge::io {

using Json = nlohmann::ordered_json;

// {"p": int, "n": int, "modulus": [int, ...], "xi": int}
Json field_to_json(const Field& f);
// modulus and xi are optional on input; when present they are validated.
FieldPtr field_from_json(const Json& j);

// {"field": <field>, "terms": [[exponent, coeff-index], ...]}, exponents strictly increasing.
Json poly_to_json(const SparsePoly& f);
// Exponents are reduced on input; unsorted or repeated exponents are rejected.
SparsePoly poly_from_json(const Json& j);
SparsePoly poly_from_json(const Json& j, const FieldPtr& field);

// {"field": ..., "d": int, "a": [coeff-index, ...], "r": [int, ...]}
Json mapping_to_json(const CycloMapping& m);
CycloMapping mapping_from_json(const Json& j);

// {"inverse": <poly>, "branches": [{"r_tilde": int, "t": int}, ...], "u": int|null, "verified": str}
Json certificate_to_json(const InverseCertificate& c);
InverseCertificate certificate_from_json(const Json& j);

// Columns: q,d,s,r,a,polynomial,verified. Lists are space-separated; the
// polynomial is a space-separated list of exponent:coefficient pairs.
std::string catalog_csv(const std::vector<SelfInverseEntry>& catalog);

}  // namespace ppforge::io
