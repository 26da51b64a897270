#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace ppforge {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Fields up to this size carry exp/log tables built at construction.
inline constexpr std::uint64_t kTableCap = std::uint64_t{1} << 20;

// One element of F_q. The index encodes the coefficient vector (c_0, ..., c_{n-1})
// as sum c_i p^i; the represented element is sum c_i alpha^i with alpha a root of
// the field modulus. An Element refers to its Field and must not outlive it.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint64_t index);

  const Field& field() const { return *field_; }
  std::uint64_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  // Negative exponents go through the inverse. 0^0 = 1.
  Element pow(std::int64_t e) const;
  Element pow_u(std::uint64_t e) const;
  Element inverse() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field* field_ = nullptr;
  std::uint64_t index_ = 0;
};

// A concrete finite field F_q, q = p^n, immutable after construction.
class Field {
 public:
  using u64 = std::uint64_t;

  // Throws std::invalid_argument on non-prime p, n == 0, q overflowing 2^63,
  // or a supplied modulus that is not monic irreducible of degree n. When the
  // modulus is omitted the lexicographically smallest monic irreducible is
  // chosen, comparing coefficients from the constant term upwards. When xi is
  // omitted the primitive element with the smallest index is chosen.
  static FieldPtr make(u64 p, unsigned n, std::optional<std::vector<u64>> modulus = std::nullopt,
                       std::optional<u64> xi = std::nullopt);

  u64 p() const { return p_; }
  unsigned n() const { return n_; }
  u64 q() const { return q_; }
  u64 order_minus_one() const { return q_ - 1; }
  // n + 1 coefficients, constant term first. For n == 1 this is always x.
  const std::vector<u64>& modulus() const { return modulus_; }
  const std::vector<std::pair<u64, unsigned>>& group_order_factors() const { return factors_; }
  bool has_tables() const { return !exp_.empty(); }

  Element element(u64 index) const;
  Element zero() const { return Element(*this, 0); }
  Element one() const { return Element(*this, 1); }
  Element xi() const { return Element(*this, xi_); }
  // Image of an integer under Z -> F_p subset F_q.
  Element from_int(std::int64_t k) const;

  std::vector<u64> decode(u64 index) const;
  u64 encode(const std::vector<u64>& coeffs) const;

  // Raw index arithmetic; inputs are assumed to lie in [0, q).
  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, std::int64_t e) const;
  u64 pow_u(u64 a, u64 e) const;

  // Multiplicative order; throws std::domain_error on zero.
  u64 element_order(u64 a) const;
  bool is_primitive(u64 a) const { return a != 0 && element_order(a) == q_ - 1; }

  // Same p, n, modulus and primitive element.
  bool same_as(const Field& other) const;

  // log_xi(a) via table; requires has_tables() and a != 0.
  u64 log_table(u64 a) const { return log_[a]; }
  u64 exp_table(u64 k) const { return exp_[k]; }

 private:
  Field() = default;

  u64 mul_generic(u64 a, u64 b) const;
  u64 pow_generic(u64 a, u64 e) const;
  void build_tables();

  u64 p_ = 0;
  unsigned n_ = 0;
  u64 q_ = 0;
  std::vector<u64> modulus_;
  std::vector<u64> p_powers_;
  std::vector<std::pair<u64, unsigned>> factors_;
  u64 xi_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

inline FieldPtr make_field(std::uint64_t p, unsigned n,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
  return Field::make(p, n, std::move(modulus));
}

// Dense polynomial helpers over the prime field F_p, constant term first.
namespace fp_poly {
using Poly = std::vector<std::uint64_t>;
void trim(Poly& a);
Poly mod(Poly a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
// x^(p^k) mod m
Poly frobenius_power(const Poly& m, std::uint64_t p, unsigned k);
// Rabin's test: x^(p^n) = x mod m and gcd(x^(p^(n/l)) - x, m) = 1 for primes l | n.
bool is_irreducible(const Poly& monic, std::uint64_t p);
}  // namespace fp_poly

}  // namespace ppforge
