#include "ppforge/field.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "ppforge/errors.hpp"
#include "ppforge/numtheory.hpp"

namespace ppforge {

using u64 = std::uint64_t;

namespace fp_poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod(Poly a, const Poly& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = nt::inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const u64 factor = nt::mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      const u64 sub = nt::mulmod(factor, m[j], p);
      a[shift + j] = (a[shift + j] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + nt::mulmod(a[i], b[j], p)) % p;
    }
  }
  return mod(std::move(prod), m, p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 lead_inv = nt::inverse_mod(a.back(), p);
    for (u64& c : a) c = nt::mulmod(c, lead_inv, p);
  }
  return a;
}

namespace {

Poly pow_mod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly result{1};
  result = mod(result, m, p);
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    e >>= 1;
    if (e != 0) base = mulmod(base, base, m, p);
  }
  return result;
}

}  // namespace

Poly frobenius_power(const Poly& m, u64 p, unsigned k) {
  Poly r = mod(Poly{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) r = pow_mod(r, p, m, p);
  return r;
}

bool is_irreducible(const Poly& monic, u64 p) {
  const std::size_t n = monic.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const Poly x = mod(Poly{0, 1}, monic, p);
  if (frobenius_power(monic, p, static_cast<unsigned>(n)) != x) return false;
  for (auto [l, e] : nt::factorize(n)) {
    Poly h = frobenius_power(monic, p, static_cast<unsigned>(n / l));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (gcd(h, monic, p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Field& common_field(const Element& a, const Element& b) {
  if (&a.field() == &b.field()) return a.field();
  if (!a.field().same_as(b.field())) throw FieldMismatch();
  return a.field();
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element::Element(const Field& field, u64 index) : field_(&field), index_(index) {
  if (index >= field.q()) throw std::out_of_range("element index outside [0, q)");
}

Element Element::pow(std::int64_t e) const { return Element(*field_, field_->pow(index_, e)); }
Element Element::pow_u(u64 e) const { return Element(*field_, field_->pow_u(index_, e)); }
Element Element::inverse() const { return Element(*field_, field_->inv(index_)); }

Element operator+(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.add(a.index_, b.index_));
}
Element operator-(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.sub(a.index_, b.index_));
}
Element operator*(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.mul(a.index_, b.index_));
}
Element operator/(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return Element(f, f.mul(a.index_, f.inv(b.index_)));
}
Element operator-(const Element& a) { return Element(*a.field_, a.field_->neg(a.index_)); }

bool operator==(const Element& a, const Element& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_ && a.index_ == b.index_;
  return a.index_ == b.index_ && (a.field_ == b.field_ || a.field_->same_as(*b.field_));
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::make(u64 p, unsigned n, std::optional<std::vector<u64>> modulus, std::optional<u64> xi) {
  if (n == 0) bad("extension degree n must be at least 1");
  if (!nt::is_prime(p)) bad("p = " + std::to_string(p) + " is not prime");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->n_ = n;
  u64 q = 1;
  f->p_powers_.reserve(n + 1);
  for (unsigned i = 0; i < n; ++i) {
    f->p_powers_.push_back(q);
    if (q > (std::numeric_limits<u64>::max() >> 1) / p) bad("field size p^n exceeds 2^63");
    q *= p;
  }
  f->q_ = q;

  if (n == 1) {
    if (modulus && (modulus->size() != 2 || (*modulus)[1] != 1 || (*modulus)[0] >= p)) {
      bad("modulus must be monic of degree 1");
    }
    f->modulus_ = {0, 1};
  } else if (modulus) {
    const auto& m = *modulus;
    if (m.size() != n + 1) bad("modulus must have n + 1 coefficients");
    if (m.back() != 1) bad("modulus must be monic");
    for (u64 c : m) {
      if (c >= p) bad("modulus coefficients must lie in [0, p)");
    }
    if (!fp_poly::is_irreducible(m, p)) bad("modulus is reducible over F_p");
    f->modulus_ = m;
  } else {
    // Odometer with the constant term most significant; a zero constant term
    // means x divides the candidate, so start at 1.
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    c[0] = 1;
    for (;;) {
      if (fp_poly::is_irreducible(c, p)) break;
      std::size_t pos = n - 1;
      for (;;) {
        if (++c[pos] < p) break;
        c[pos] = 0;
        if (pos == 0) bad("no irreducible polynomial found");
        --pos;
      }
    }
    f->modulus_ = c;
  }

  f->factors_ = nt::factorize(q - 1);

  if (xi) {
    if (*xi == 0 || *xi >= q || !f->is_primitive(*xi)) bad("xi is not a primitive element");
    f->xi_ = *xi;
  } else {
    // Indices below p are the prime subfield, which has no primitive element once n > 1.
    u64 cand = n == 1 ? 1 : p;
    while (!f->is_primitive(cand)) ++cand;
    f->xi_ = cand;
  }

  if (q <= kTableCap) f->build_tables();
  return f;
}

void Field::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  u64 cur = 1;
  for (u64 k = 0; k + 1 < q_; ++k) {
    exp_[k] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = mul_generic(cur, xi_);
  }
}

Element Field::element(u64 index) const { return Element(*this, index); }

Element Field::from_int(std::int64_t k) const { return Element(*this, nt::floor_mod(k, p_)); }

std::vector<u64> Field::decode(u64 index) const {
  std::vector<u64> c(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return c;
}

u64 Field::encode(const std::vector<u64>& coeffs) const {
  if (coeffs.size() > n_) throw std::invalid_argument("too many coefficients for this field");
  u64 index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient outside [0, p)");
    index = index * p_ + coeffs[i];
  }
  return index;
}

u64 Field::add(u64 a, u64 b) const {
  if (n_ == 1) {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  u64 out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    u64 d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * p_powers_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

u64 Field::neg(u64 a) const {
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  u64 out = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const u64 d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * p_powers_[i];
    a /= p_;
  }
  return out;
}

u64 Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Field::mul_generic(u64 a, u64 b) const {
  if (n_ == 1) return nt::mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  const std::vector<u64> x = decode(a);
  const std::vector<u64> y = decode(b);
  std::vector<u64> prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + nt::mulmod(x[i], y[j], p_)) % p_;
    }
  }
  for (std::size_t k = prod.size(); k-- > n_;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      const u64 sub = nt::mulmod(c, modulus_[j], p_);
      u64& slot = prod[k - n_ + j];
      slot = (slot + p_ - sub) % p_;
    }
    prod[k] = 0;
  }
  prod.resize(n_);
  return encode(prod);
}

u64 Field::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    u64 k = static_cast<u64>(log_[a]) + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }
  return mul_generic(a, b);
}

u64 Field::pow_generic(u64 a, u64 e) const {
  u64 result = 1;
  while (e != 0) {
    if (e & 1) result = mul_generic(result, a);
    e >>= 1;
    if (e != 0) a = mul_generic(a, a);
  }
  return result;
}

u64 Field::pow_u(u64 a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const u64 group = q_ - 1;
  const u64 er = e % group;
  if (!exp_.empty()) return exp_[nt::mulmod(log_[a], er, group)];
  return pow_generic(a, er);
}

u64 Field::pow(u64 a, std::int64_t e) const {
  if (e >= 0) return pow_u(a, static_cast<u64>(e));
  if (a == 0) throw std::domain_error("zero raised to a negative power");
  const u64 magnitude = static_cast<u64>(-(e + 1)) + 1;
  return pow_u(inv(a), magnitude);
}

u64 Field::inv(u64 a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  if (!exp_.empty()) {
    const u64 k = log_[a];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
  }
  if (n_ == 1) return nt::inverse_mod(a, p_);
  return pow_generic(a, q_ - 2);
}

u64 Field::element_order(u64 a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  u64 order = q_ - 1;
  for (auto [l, e] : factors_) {
    for (unsigned k = 0; k < e; ++k) order /= l;
    u64 x = pow_u(a, order);
    while (x != 1) {
      x = pow_u(x, l);
      order *= l;
    }
  }
  return order;
}

bool Field::same_as(const Field& other) const {
  return this == &other ||
         (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_ && xi_ == other.xi_);
}

}  // namespace ppforge
