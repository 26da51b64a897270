#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppforge/config.hpp"
#include "ppforge/field.hpp"

namespace ppforge {

// A term before reduction; the exponent may be any non-negative integer.
struct RawTerm {
  std::uint64_t exponent;
  Element coeff;
};

// Canonical exponent under x^q = x: 0 stays 0, e >= 1 maps to ((e-1) mod (q-1)) + 1.
// x^(q-1) is kept distinct from 1 since they differ at x = 0.
std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t q);

// A polynomial over F_q reduced modulo x^q - x: exponents in [0, q), no zero
// coefficients. Values are immutable once built.
class SparsePoly {
 public:
  using Terms = std::map<std::uint64_t, std::uint64_t>;  // exponent -> coefficient index

  explicit SparsePoly(FieldPtr field);

  static SparsePoly reduce(FieldPtr field, std::span<const RawTerm> raw);
  static SparsePoly monomial(FieldPtr field, const Element& coeff, std::uint64_t exponent);
  static SparsePoly x(FieldPtr field) { return monomial(field, field->one(), 1); }
  static SparsePoly constant(FieldPtr field, const Element& c) { return monomial(field, c, 0); }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Element coeff(std::uint64_t exponent) const;

  Element operator()(const Element& c) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Element& c, const SparsePoly& a);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  // e.g. "x^5 + 2*x^3 + 5*x" with coefficients printed as indices.
  std::string to_string() const;

 private:
  SparsePoly(FieldPtr field, Terms terms) : field_(std::move(field)), terms_(std::move(terms)) {}
  void check_same_field(const SparsePoly& o) const;

  FieldPtr field_;
  Terms terms_;
};

Element poly_eval(const SparsePoly& f, const Element& c);
SparsePoly poly_reduce(FieldPtr field, std::span<const RawTerm> raw);

// f^e mod x^q - x.
SparsePoly poly_pow(const SparsePoly& f, std::uint64_t e);

// Canonical form of f(g(x)) mod x^q - x.
SparsePoly poly_compose_mod(const SparsePoly& f, const SparsePoly& g);

// Values f(c) for every index c in [0, q).
std::vector<std::uint64_t> value_table(const SparsePoly& f, std::uint64_t cap = exhaustive_cap());

// Exhaustive bijection test.
bool is_permutation(const SparsePoly& f, std::uint64_t cap = exhaustive_cap());

// Inverse by the Lagrange interpolation formula sum_c c (1 - (x - f(c))^(q-1)).
// Throws PreconditionError when f is not a permutation.
SparsePoly lagrange_inverse(const SparsePoly& f, std::uint64_t cap = exhaustive_cap());

// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
// Throws std::invalid_argument on a size mismatch or repeated nodes.
SparsePoly interpolate(const FieldPtr& field, std::span<const Element> xs, std::span<const Element> ys);

}  // namespace ppforge
