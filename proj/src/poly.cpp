#include "ppforge/poly.hpp"

#include <stdexcept>
#include <utility>

#include "ppforge/errors.hpp"

namespace ppforge {

using u64 = std::uint64_t;

namespace {

// Below this size products accumulate into a dense array instead of a map.
constexpr u64 kDenseProductCap = 4096;

void accumulate(const Field& f, SparsePoly::Terms& terms, u64 exponent, u64 coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = f.add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

u64 reduce_exponent(u64 e, u64 q) {
  if (e == 0) return 0;
  return (e - 1) % (q - 1) + 1;
}

SparsePoly::SparsePoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("polynomial requires a field");
}

SparsePoly SparsePoly::reduce(FieldPtr field, std::span<const RawTerm> raw) {
  Terms terms;
  const Field& f = *field;
  for (const RawTerm& t : raw) {
    if (!t.coeff.field().same_as(f)) throw FieldMismatch();
    accumulate(f, terms, reduce_exponent(t.exponent, f.q()), t.coeff.index());
  }
  return SparsePoly(std::move(field), std::move(terms));
}

SparsePoly SparsePoly::monomial(FieldPtr field, const Element& coeff, u64 exponent) {
  const RawTerm t{exponent, coeff};
  return reduce(std::move(field), std::span<const RawTerm>(&t, 1));
}

Element SparsePoly::coeff(u64 exponent) const {
  auto it = terms_.find(exponent);
  return field_->element(it == terms_.end() ? 0 : it->second);
}

void SparsePoly::check_same_field(const SparsePoly& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch();
}

Element SparsePoly::operator()(const Element& c) const {
  if (!c.field().same_as(*field_)) throw FieldMismatch();
  const Field& f = *field_;
  u64 acc = 0;
  for (auto [e, coeff] : terms_) acc = f.add(acc, f.mul(coeff, f.pow_u(c.index(), e)));
  return f.element(acc);
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_field(b);
  SparsePoly::Terms terms = a.terms_;
  for (auto [e, c] : b.terms_) accumulate(*a.field_, terms, e, c);
  return SparsePoly(a.field_, std::move(terms));
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_field(b);
  SparsePoly::Terms terms = a.terms_;
  for (auto [e, c] : b.terms_) accumulate(*a.field_, terms, e, a.field_->neg(c));
  return SparsePoly(a.field_, std::move(terms));
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_field(b);
  const Field& f = *a.field_;
  const u64 q = f.q();
  SparsePoly::Terms terms;
  if (q <= kDenseProductCap && a.terms_.size() * b.terms_.size() > 16) {
    std::vector<u64> dense(q, 0);
    for (auto [ea, ca] : a.terms_) {
      for (auto [eb, cb] : b.terms_) {
        u64& slot = dense[reduce_exponent(ea + eb, q)];
        slot = f.add(slot, f.mul(ca, cb));
      }
    }
    for (u64 e = 0; e < q; ++e) {
      if (dense[e] != 0) terms.emplace_hint(terms.end(), e, dense[e]);
    }
  } else {
    for (auto [ea, ca] : a.terms_) {
      for (auto [eb, cb] : b.terms_) accumulate(f, terms, reduce_exponent(ea + eb, q), f.mul(ca, cb));
    }
  }
  return SparsePoly(a.field_, std::move(terms));
}

SparsePoly operator*(const Element& c, const SparsePoly& a) {
  if (!c.field().same_as(*a.field_)) throw FieldMismatch();
  SparsePoly::Terms terms;
  if (!c.is_zero()) {
    for (auto [e, coeff] : a.terms_) terms.emplace_hint(terms.end(), e, a.field_->mul(c.index(), coeff));
  }
  return SparsePoly(a.field_, std::move(terms));
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!out.empty()) out += " + ";
    const bool unit = c == 1 && e != 0;
    if (!unit) out += std::to_string(c);
    if (e != 0) {
      if (!unit) out += "*";
      out += "x";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Element poly_eval(const SparsePoly& f, const Element& c) { return f(c); }

SparsePoly poly_reduce(FieldPtr field, std::span<const RawTerm> raw) {
  return SparsePoly::reduce(std::move(field), raw);
}

SparsePoly poly_pow(const SparsePoly& f, u64 e) {
  SparsePoly result = SparsePoly::constant(f.field_ptr(), f.field().one());
  SparsePoly base = f;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

SparsePoly poly_compose_mod(const SparsePoly& f, const SparsePoly& g) {
  if (!f.field().same_as(g.field())) throw FieldMismatch();
  const FieldPtr& field = f.field_ptr();
  // g^(2^k), built on demand.
  std::vector<SparsePoly> squares{g};
  SparsePoly result(field);
  for (auto [e, c] : f.terms()) {
    SparsePoly power = SparsePoly::constant(field, field->one());
    u64 rest = e;
    for (std::size_t k = 0; rest != 0; ++k, rest >>= 1) {
      if (k == squares.size()) squares.push_back(squares.back() * squares.back());
      if (rest & 1) power = power * squares[k];
    }
    result = result + field->element(c) * power;
  }
  return result;
}

std::vector<u64> value_table(const SparsePoly& f, u64 cap) {
  const Field& field = f.field();
  require_within_cap(field.q(), cap, "value_table");
  std::vector<u64> values(field.q(), 0);
  for (u64 c = 0; c < field.q(); ++c) {
    u64 acc = 0;
    for (auto [e, coeff] : f.terms()) acc = field.add(acc, field.mul(coeff, field.pow_u(c, e)));
    values[c] = acc;
  }
  return values;
}

bool is_permutation(const SparsePoly& f, u64 cap) {
  require_within_cap(f.field().q(), cap, "is_permutation");
  const std::vector<u64> values = value_table(f, cap);
  std::vector<bool> seen(values.size(), false);
  for (u64 v : values) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

SparsePoly lagrange_inverse(const SparsePoly& f, u64 cap) {
  const Field& field = f.field();
  const u64 q = field.q();
  require_within_cap(q, cap, "lagrange_inverse");
  if (!is_permutation(f, cap)) throw PreconditionError("lagrange_inverse: polynomial is not a permutation");
  const std::vector<u64> values = value_table(f, cap);

  // In characteristic p, (x - b)^(q-1) = sum_{k=0}^{q-1} b^(q-1-k) x^k, so the
  // coefficient of x^k collects -c * f(c)^(q-1-k) over all c, plus sum c at k = 0.
  std::vector<u64> coeffs(q, 0);
  for (u64 c = 1; c < q; ++c) {
    coeffs[0] = field.add(coeffs[0], c);
    const u64 b = values[c];
    u64 power = 1;
    for (u64 k = q; k-- > 0;) {
      coeffs[k] = field.sub(coeffs[k], field.mul(c, power));
      power = field.mul(power, b);
    }
  }
  std::vector<RawTerm> raw;
  for (u64 k = 0; k < q; ++k) {
    if (coeffs[k] != 0) raw.push_back({k, field.element(coeffs[k])});
  }
  return SparsePoly::reduce(f.field_ptr(), raw);
}

SparsePoly interpolate(const FieldPtr& field, std::span<const Element> xs, std::span<const Element> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: node and value counts differ");
  SparsePoly out(field);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    SparsePoly basis = SparsePoly::constant(field, field->one());
    Element denom = field->one();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == i) continue;
      if (xs[k] == xs[i]) throw std::invalid_argument("interpolate: repeated node");
      basis = basis * (SparsePoly::x(field) - SparsePoly::constant(field, xs[k]));
      denom *= xs[i] - xs[k];
    }
    out = out + (ys[i] / denom) * basis;
  }
  return out;
}

}  // namespace ppforge
