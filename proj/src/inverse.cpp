#include "ppforge/inverse.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ppforge/errors.hpp"
#include "ppforge/numtheory.hpp"

namespace ppforge {

using u64 = std::uint64_t;
using nt::i128;

namespace {

// Above this size exhaustive verification compares value tables instead of
// composing polynomials; both decide the same canonical identity.
constexpr u64 kAlgebraicVerifyCap = 256;

// (x/a)^(r_tilde + j s) with r_tilde = 0 = j only arises for s = 1; that factor
// vanishes at 0 in the interpolation it comes from, so it is x^(q-1), not 1.
u64 inverse_exponent(u64 raw, u64 q) { return raw == 0 ? q - 1 : raw; }

Element minus_one_pow(const Field& f, i128 e) { return (e % 2 == 0) ? f.one() : -f.one(); }

u64 gcd_of_product(const std::vector<u64>& r, u64 s) {
  u64 prod = 1 % s;
  for (u64 ri : r) prod = nt::mulmod(prod, ri % s, s);
  return nt::gcd(prod, s);
}

std::string u64s(u64 v) { return std::to_string(v); }

}  // namespace

const char* to_string(Verification v) {
  switch (v) {
    case Verification::exhaustive:
      return "exhaustive";
    case Verification::sampled:
      return "sampled";
    case Verification::none:
      break;
  }
  return "none";
}

Verification verification_from_string(const std::string& s) {
  if (s == "exhaustive") return Verification::exhaustive;
  if (s == "sampled") return Verification::sampled;
  if (s == "none") return Verification::none;
  throw std::invalid_argument("unknown verification verdict: " + s);
}

BezoutPair exponent_inverse(u64 r, u64 s) {
  if (s == 1) return {0, 1};
  if (nt::gcd(r % s, s) != 1) {
    throw PreconditionError("gcd(" + u64s(r) + ", " + u64s(s) + ") != 1, exponent has no inverse modulo s");
  }
  const u64 r_tilde = nt::inverse_mod(r % s, s);
  const i128 num = 1 - static_cast<i128>(r) * r_tilde;
  if (num % static_cast<i128>(s) != 0) throw std::logic_error("Bezout quotient is not an exact integer");
  const i128 t = num / static_cast<i128>(s);
  if (t < INT64_MIN || t > INT64_MAX) throw std::overflow_error("Bezout coefficient exceeds 64 bits");
  return {r_tilde, static_cast<std::int64_t>(t)};
}

PPDecision is_pp_cyclotomic(const CycloMapping& m) {
  PPDecision out;
  const u64 s = m.s();
  const u64 g = gcd_of_product(m.r(), s);
  if (g != 1) {
    out.failure = PPDecision::Failure::gcd;
    out.reason = "gcd(r_0 * ... * r_(d-1), s) = " + u64s(g) + " != 1 (s = " + u64s(s) + ")";
    return out;
  }
  const CycloParams& cp = m.params();
  std::unordered_map<u64, u64> first_seen;
  for (u64 i = 0; i < m.d(); ++i) {
    const u64 e = nt::mulmod(i, m.r()[i] % cp.d(), cp.d());
    const Element v = m.a()[i].pow_u(s) * cp.omega().pow_u(e);
    auto [it, inserted] = first_seen.emplace(v.index(), i);
    if (!inserted) {
      out.failure = PPDecision::Failure::collision;
      out.collision = std::make_pair(it->second, i);
      out.reason = "a_i^s omega^(i r_i) coincide for i = " + u64s(it->second) + " and j = " + u64s(i);
      return out;
    }
  }
  out.is_pp = true;
  out.reason = "gcd condition holds and all a_i^s omega^(i r_i) are distinct";
  return out;
}

InverseCertificate invert_theorem33(const CycloMapping& m) {
  const PPDecision decision = is_pp_cyclotomic(m);
  if (!decision.is_pp) throw PreconditionError("invert_theorem33: mapping is not a PP: " + decision.reason);
  const CycloParams& cp = m.params();
  const Field& f = m.field();
  const u64 d = cp.d(), s = cp.s(), q = f.q();

  InverseCertificate cert{SparsePoly(cp.field_ptr()), {}, std::nullopt, Verification::none};
  std::vector<RawTerm> raw;
  raw.reserve(d * d);
  for (u64 i = 0; i < d; ++i) {
    const BezoutPair bp = exponent_inverse(m.r()[i], s);
    cert.branches.push_back(bp);
    const Element inv_a = m.a()[i].inverse();
    const i128 r_mod_d = m.r()[i] % d;
    for (u64 j = 0; j < d; ++j) {
      const u64 e = inverse_exponent(bp.r_tilde + j * s, q);
      const u64 w = nt::floor_mod(static_cast<i128>(i) * (bp.t - static_cast<i128>(j) * r_mod_d), d);
      raw.push_back({e, cp.d_inverse() * cp.omega().pow_u(w) * inv_a.pow_u(e)});
    }
  }
  cert.inverse = SparsePoly::reduce(cp.field_ptr(), raw);
  return cert;
}

InverseCertificate invert_cor41(const CycloMapping& m) {
  const Field& f = m.field();
  if (f.p() == 2) throw PreconditionError("cor41: q must be odd");
  if (m.d() != 2) throw PreconditionError("cor41: d must be 2, got d = " + u64s(m.d()));
  const u64 s = m.s(), q = f.q();
  const u64 g = gcd_of_product(m.r(), s);
  if (g != 1) throw PreconditionError("cor41: gcd(r0 r1, s) = " + u64s(g) + " != 1");
  const Element& a0 = m.a()[0];
  const Element& a1 = m.a()[1];
  const u64 r1 = m.r()[1];
  if (!((a0 * a1).pow_u(s) == minus_one_pow(f, r1 + 1))) {
    throw PreconditionError("cor41: (a0 a1)^s != (-1)^(r1 + 1)");
  }
  const BezoutPair b0 = exponent_inverse(m.r()[0], s);
  const BezoutPair b1 = exponent_inverse(r1, s);
  const Element half = f.from_int(2).inverse();
  const Element inv0 = a0.inverse(), inv1 = a1.inverse();
  const Element sign1 = minus_one_pow(f, b1.t);
  const Element sign1r = minus_one_pow(f, static_cast<i128>(b1.t) + r1);

  auto term = [&](u64 raw_e, const Element& scale, const Element& inv_a) -> RawTerm {
    const u64 e = inverse_exponent(raw_e, q);
    return {e, half * scale * inv_a.pow_u(e)};
  };
  const std::vector<RawTerm> raw{
      term(b0.r_tilde, f.one(), inv0),
      term(b0.r_tilde + s, f.one(), inv0),
      term(b1.r_tilde, sign1, inv1),
      term(b1.r_tilde + s, sign1r, inv1),
  };
  return {SparsePoly::reduce(m.params().field_ptr(), raw), {b0, b1}, std::nullopt, Verification::none};
}

SparsePoly build_self_inverse_cor42(const FieldPtr& field, u64 r0, u64 r1) {
  if (field->p() == 2) throw PreconditionError("cor42: q must be odd");
  if (r0 == 0 || r1 == 0) throw PreconditionError("cor42: r0 and r1 must be positive");
  const u64 s = (field->q() - 1) / 2;
  const auto sq_minus_one_mod = [](u64 r, u64 m) {
    return nt::floor_mod(static_cast<i128>(r) * r - 1, m);
  };
  if (sq_minus_one_mod(r0, s) != 0) throw PreconditionError("cor42: s does not divide r0^2 - 1");
  if (sq_minus_one_mod(r1, 2 * s) != 0) throw PreconditionError("cor42: 2s does not divide r1^2 - 1");
  const Element half = field->from_int(2).inverse();
  const std::vector<RawTerm> raw{{r0, half}, {r0 + s, half}, {r1, half}, {r1 + s, -half}};
  return SparsePoly::reduce(field, raw);
}

Cor43Result check_and_invert_cor43(const FieldPtr& field, u64 d, const Element& a0, const Element& a1, u64 r0,
                                   u64 r1) {
  if (d < 3) throw PreconditionError("cor43: d must be at least 3");
  if ((field->q() - 1) % d != 0) throw PreconditionError("cor43: d does not divide q - 1");
  CycloParams cp(field, d);
  const u64 s = cp.s(), q = field->q();

  std::vector<Element> a(d, a1);
  std::vector<u64> r(d, r1);
  a[0] = a0;
  r[0] = r0;
  CycloMapping mapping(cp, a, r);

  std::vector<RawTerm> fraw;
  for (u64 j = 0; j < d; ++j) {
    fraw.push_back({r0 + j * s, cp.d_inverse() * a0});
    fraw.push_back({r1 + j * s, -(cp.d_inverse() * a1)});
  }
  fraw.push_back({r1, a1});
  SparsePoly f = SparsePoly::reduce(field, fraw);

  PPDecision decision;
  const u64 g_s = nt::gcd(nt::mulmod(r0 % s, r1 % s, s), s);
  const u64 g_d = nt::gcd(r1 % d, d);
  if (g_s != 1) {
    decision.failure = PPDecision::Failure::gcd;
    decision.reason = "gcd(r0 r1, s) = " + u64s(g_s) + " != 1";
  } else if (g_d != 1) {
    decision.failure = PPDecision::Failure::gcd;
    decision.reason = "gcd(r1, d) = " + u64s(g_d) + " != 1";
  } else if (!(a0.pow_u(s) == a1.pow_u(s))) {
    decision.failure = PPDecision::Failure::collision;
    decision.reason = "a0^s != a1^s";
  } else {
    decision.is_pp = true;
    decision.reason = "gcd(r0 r1, s) = gcd(r1, d) = 1 and a0^s = a1^s";
  }
  if (!decision.is_pp) return {std::move(mapping), std::move(f), std::move(decision), std::nullopt};

  const BezoutPair b0 = exponent_inverse(r0, s);
  const BezoutPair b1 = exponent_inverse(r1, s);
  const i128 num = 1 - static_cast<i128>(r1) * b1.r_tilde;
  if (num % static_cast<i128>(s) != 0) throw std::logic_error("cor43: (1 - r1 r1_tilde)/s is not an integer");
  const u64 r1_prime = nt::inverse_mod(r1 % d, d);
  const u64 u = nt::floor_mod(static_cast<i128>(r1_prime) * (num / static_cast<i128>(s)), d);

  const Element inv0 = a0.inverse(), inv1 = a1.inverse();
  std::vector<RawTerm> raw;
  for (u64 j = 0; j < d; ++j) {
    const u64 e0 = inverse_exponent(b0.r_tilde + j * s, q);
    const u64 e1 = inverse_exponent(b1.r_tilde + j * s, q);
    raw.push_back({e0, cp.d_inverse() * inv0.pow_u(b0.r_tilde) * inv1.pow_u(j * s)});
    raw.push_back({e1, -(cp.d_inverse() * inv1.pow_u(e1))});
  }
  const u64 eu = inverse_exponent(b1.r_tilde + u * s, q);
  raw.push_back({eu, inv1.pow_u(eu)});

  InverseCertificate cert{SparsePoly::reduce(field, raw), {b0, b1}, u, Verification::none};
  certify(cert, f);
  return {std::move(mapping), std::move(f), std::move(decision), std::move(cert)};
}

Cor44Result invert_cor44(unsigned n, unsigned i, unsigned j) {
  if (n == 0 || i == 0 || j == 0) throw PreconditionError("cor44: n, i and j must be positive");
  if (2 * n > 62 || i > 60 || j > 60) throw PreconditionError("cor44: parameters exceed 64-bit exponents");
  FieldPtr field = make_field(2, 2 * n);
  const u64 q = field->q();
  const u64 s = (q - 1) / 3;
  const u64 pi = u64{1} << i;
  const u64 pj = u64{1} << j;
  const Element one = field->one();

  std::vector<RawTerm> fraw;
  for (u64 m = 0; m < 3; ++m) {
    fraw.push_back({reduce_exponent(pi, q) + m * s, one});
    fraw.push_back({reduce_exponent(pj, q) + m * s, one});
  }
  fraw.push_back({pj, one});
  SparsePoly f = SparsePoly::reduce(field, fraw);

  const BezoutPair bi = exponent_inverse(pi, s);
  const BezoutPair bj = exponent_inverse(pj, s);
  const i128 num = 1 - static_cast<i128>(pj) * bj.r_tilde;
  if (num % static_cast<i128>(s) != 0) throw std::logic_error("cor44: (1 - 2^j 2~^j)/s is not an integer");
  const i128 sign = (j % 2 == 0) ? 1 : -1;
  const u64 u = nt::floor_mod(sign * (num / static_cast<i128>(s)), 3);

  std::vector<RawTerm> raw;
  for (u64 m = 0; m < 3; ++m) {
    raw.push_back({inverse_exponent(bi.r_tilde + m * s, q), one});
    raw.push_back({inverse_exponent(bj.r_tilde + m * s, q), one});
  }
  raw.push_back({inverse_exponent(bj.r_tilde + u * s, q), one});

  CycloParams cp(field, 3);
  CycloMapping mapping(cp, {one, one, one}, {pi, pj, pj});
  InverseCertificate cert{SparsePoly::reduce(field, raw), {bi, bj}, u, Verification::none};
  certify(cert, f);
  return {field, std::move(f), std::move(mapping), std::move(cert)};
}

SparsePoly cor45_polynomial(const CycloParams& cp, u64 r, const SparsePoly& h) {
  if (!h.field().same_as(cp.field())) throw FieldMismatch();
  const u64 q = cp.field().q();
  std::vector<RawTerm> raw;
  for (auto [e, c] : h.terms()) raw.push_back({reduce_exponent(r, q) + e * cp.s(), cp.field().element(c)});
  return SparsePoly::reduce(cp.field_ptr(), raw);
}

CycloMapping cor45_mapping(const CycloParams& cp, u64 r, const SparsePoly& h) {
  std::vector<Element> a;
  Element w = cp.field().one();
  for (u64 i = 0; i < cp.d(); ++i) {
    a.push_back(h(w));
    if (a.back().is_zero()) throw PreconditionError("cor45: h(omega^" + u64s(i) + ") = 0");
    w *= cp.omega();
  }
  return CycloMapping(cp, std::move(a), std::vector<u64>(cp.d(), r));
}

InverseCertificate invert_cor45(const FieldPtr& field, u64 d, u64 r, const SparsePoly& h) {
  if (r == 0) throw PreconditionError("cor45: r must be positive");
  if ((field->q() - 1) % d != 0 || d == 0) throw PreconditionError("cor45: d does not divide q - 1");
  CycloParams cp(field, d);
  const u64 s = cp.s(), q = field->q();
  if (nt::gcd(r % s, s) != 1) throw PreconditionError("cor45: gcd(r, s) != 1");

  std::vector<Element> hv;
  Element w = field->one();
  std::unordered_map<u64, u64> seen;
  for (u64 i = 0; i < d; ++i) {
    const Element hi = h(w);
    if (hi.is_zero()) throw PreconditionError("cor45: h(omega^" + u64s(i) + ") = 0");
    const Element image = w.pow_u(r) * hi.pow_u(s);
    if (!seen.emplace(image.index(), i).second) {
      throw PreconditionError("cor45: x^r h(x)^s does not permute the powers of omega");
    }
    hv.push_back(hi);
    w *= cp.omega();
  }

  const BezoutPair bp = exponent_inverse(r, s);
  const i128 r_mod_d = r % d;
  std::vector<RawTerm> raw;
  for (u64 i = 0; i < d; ++i) {
    const Element inv_h = hv[i].inverse();
    for (u64 j = 0; j < d; ++j) {
      const u64 e = inverse_exponent(bp.r_tilde + j * s, q);
      const u64 wexp = nt::floor_mod(static_cast<i128>(i) * (bp.t - static_cast<i128>(j) * r_mod_d), d);
      raw.push_back({e, cp.d_inverse() * cp.omega().pow_u(wexp) * inv_h.pow_u(e)});
    }
  }
  return {SparsePoly::reduce(field, raw), {bp}, std::nullopt, Verification::none};
}

std::optional<Cor43Shape> cor43_shape(const CycloMapping& m) {
  if (m.d() < 3) return std::nullopt;
  for (u64 i = 2; i < m.d(); ++i) {
    if (m.a()[i] != m.a()[1] || m.r()[i] != m.r()[1]) return std::nullopt;
  }
  return Cor43Shape{m.a()[0], m.a()[1], m.r()[0], m.r()[1]};
}

std::optional<Cor45Shape> cor45_shape(const CycloMapping& m) {
  for (u64 ri : m.r()) {
    if (ri != m.r()[0]) return std::nullopt;
  }
  std::vector<Element> nodes;
  Element w = m.field().one();
  for (u64 i = 0; i < m.d(); ++i) {
    nodes.push_back(w);
    w *= m.params().omega();
  }
  return Cor45Shape{m.r()[0], interpolate(m.params().field_ptr(), nodes, m.a())};
}

VerifyResult verify_inverse(const SparsePoly& f, const SparsePoly& g, const VerifyOptions& opts) {
  if (!f.field().same_as(g.field())) throw FieldMismatch();
  const Field& field = f.field();
  const u64 q = field.q();
  VerifyResult out;

  if (q <= opts.cap) {
    if (q <= kAlgebraicVerifyCap) {
      const SparsePoly id = SparsePoly::x(f.field_ptr());
      if (poly_compose_mod(g, f) == id && poly_compose_mod(f, g) == id) {
        out.verdict = Verification::exhaustive;
        return out;
      }
    }
    const std::vector<u64> vf = value_table(f, opts.cap);
    const std::vector<u64> vg = value_table(g, opts.cap);
    for (u64 c = 0; c < q; ++c) {
      if (vg[vf[c]] != c || vf[vg[c]] != c) {
        out.counterexample = field.element(c);
        return out;
      }
    }
    out.verdict = Verification::exhaustive;
    return out;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<u64> pick(0, q - 1);
  for (u64 k = 0; k < opts.samples; ++k) {
    const Element c = field.element(pick(rng));
    if (!(g(f(c)) == c) || !(f(g(c)) == c)) {
      out.counterexample = c;
      return out;
    }
  }
  out.verdict = Verification::sampled;
  return out;
}

void certify(InverseCertificate& cert, const SparsePoly& f, const VerifyOptions& opts) {
  cert.verified = verify_inverse(f, cert.inverse, opts).verdict;
}

}  // namespace ppforge
