#include "ppforge/cyclotomic.hpp"

#include <stdexcept>
#include <string>

#include "ppforge/numtheory.hpp"

namespace ppforge {

using u64 = std::uint64_t;

CycloParams::CycloParams(FieldPtr field, u64 d) : field_(std::move(field)), d_(d) {
  const u64 group = field_->q() - 1;
  if (d == 0 || group % d != 0) {
    throw std::invalid_argument("d = " + std::to_string(d) + " does not divide q - 1 = " + std::to_string(group));
  }
  s_ = group / d;
  omega_ = field_->xi().pow_u(s_);
  if (field_->element_order(omega_.index()) != d) throw std::logic_error("omega does not have order d");
  // d | q - 1 forces gcd(d, p) = 1.
  const Element d_elem = field_->from_int(static_cast<std::int64_t>(d % field_->p()));
  if (d_elem.is_zero()) throw std::logic_error("d is divisible by the characteristic");
  d_inv_ = d_elem.inverse();
  omega_log_ = std::make_shared<const DiscreteLog>(omega_);
}

CycloMapping::CycloMapping(CycloParams params, std::vector<Element> a, std::vector<u64> r)
    : params_(std::move(params)), a_(std::move(a)), r_(std::move(r)) {
  if (a_.size() != params_.d() || r_.size() != params_.d()) {
    throw std::invalid_argument("mapping needs exactly d coefficients and d exponents");
  }
  for (const Element& ai : a_) {
    if (!ai.field().same_as(params_.field())) throw std::invalid_argument("coefficient from another field");
    if (ai.is_zero()) throw std::invalid_argument("mapping coefficients must be nonzero");
  }
  for (u64 ri : r_) {
    if (ri == 0) throw std::invalid_argument("mapping exponents must be positive");
  }
}

CosetPartition cosets(const CycloParams& params, u64 cap) {
  const Field& f = params.field();
  require_within_cap(f.q(), cap, "cosets");
  const Element xi = f.xi();
  const Element xi_d = xi.pow_u(params.d());
  CosetPartition parts(params.d());
  Element head = f.one();
  for (u64 i = 0; i < params.d(); ++i) {
    parts[i].reserve(params.s());
    Element cur = head;
    for (u64 k = 0; k < params.s(); ++k) {
      parts[i].push_back(cur);
      cur *= xi_d;
    }
    head *= xi;
  }
  return parts;
}

u64 coset_index(const CycloParams& params, const Element& x) {
  if (x.is_zero()) throw std::domain_error("zero lies in no cyclotomic coset");
  if (!x.field().same_as(params.field())) throw std::invalid_argument("element from another field");
  auto k = params.omega_log().solve(x.pow_u(params.s()));
  if (!k) throw std::logic_error("x^s is not a power of omega");
  return *k;
}

Element mapping_eval(const CycloMapping& m, const Element& x) {
  if (x.is_zero()) return m.field().zero();
  const u64 i = coset_index(m.params(), x);
  return m.a()[i] * x.pow_u(m.r()[i]);
}

SparsePoly mapping_to_poly(const CycloMapping& m) {
  const CycloParams& cp = m.params();
  const u64 d = cp.d();
  const u64 s = cp.s();
  const u64 group = m.field().q() - 1;
  std::vector<RawTerm> raw;
  raw.reserve(d * d);
  for (u64 i = 0; i < d; ++i) {
    const Element scaled = cp.d_inverse() * m.a()[i];
    const u64 base = reduce_exponent(m.r()[i], m.field().q());
    for (u64 j = 0; j < d; ++j) {
      const u64 neg_ij = nt::floor_mod(-static_cast<nt::i128>(i) * static_cast<nt::i128>(j), group);
      raw.push_back({base + j * s, scaled * cp.omega().pow_u(neg_ij)});
    }
  }
  return SparsePoly::reduce(cp.field_ptr(), raw);
}

SparsePoly indicator_poly(const CycloParams& cp, const Element& c) {
  if (c.is_zero()) throw std::domain_error("indicator_poly: c must be nonzero");
  const Element inv_cs = c.pow_u(cp.s()).inverse();
  std::vector<RawTerm> raw;
  raw.reserve(cp.d());
  Element coeff = cp.d_inverse();
  for (u64 j = 1; j <= cp.d(); ++j) {
    coeff *= inv_cs;
    raw.push_back({j * cp.s(), coeff});
  }
  return SparsePoly::reduce(cp.field_ptr(), raw);
}

SparsePoly indicator_poly_power_form(const CycloParams& cp, const Element& c) {
  if (c.is_zero()) throw std::domain_error("indicator_poly_power_form: c must be nonzero");
  const FieldPtr& f = cp.field_ptr();
  const SparsePoly shifted =
      SparsePoly::monomial(f, f->one(), cp.s()) - SparsePoly::constant(f, c.pow_u(cp.s()));
  return SparsePoly::constant(f, f->one()) - poly_pow(shifted, f->q() - 1);
}

}  // namespace ppforge
