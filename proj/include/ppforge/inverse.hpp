#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppforge/config.hpp"
#include "ppforge/cyclotomic.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

enum class Verification { none, sampled, exhaustive };

const char* to_string(Verification v);
Verification verification_from_string(const std::string& s);

// r * r_tilde + s * t = 1 with 1 <= r_tilde < s, or (r_tilde, t) = (0, 1) when s = 1.
struct BezoutPair {
  std::uint64_t r_tilde = 0;
  std::int64_t t = 0;
  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

// Throws PreconditionError when gcd(r, s) != 1.
BezoutPair exponent_inverse(std::uint64_t r, std::uint64_t s);

struct InverseCertificate {
  SparsePoly inverse;
  std::vector<BezoutPair> branches;
  std::optional<std::uint64_t> u;
  Verification verified = Verification::none;
};

struct PPDecision {
  enum class Failure { none, gcd, collision };
  bool is_pp = false;
  Failure failure = Failure::none;
  // Colliding branch pair (i, j), i < j, when failure == collision.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
  std::string reason;
};

// PP iff gcd(prod r_i, s) = 1 and the values a_i^s omega^(i r_i) are pairwise distinct.
PPDecision is_pp_cyclotomic(const CycloMapping& m);

// Closed-form inverse (1/d) sum_i sum_j omega^(i(t_i - j r_i)) (x/a_i)^(r_tilde_i + j s).
// Throws PreconditionError when the mapping is not a PP.
InverseCertificate invert_theorem33(const CycloMapping& m);

// Two-branch form for d = 2, q odd; preconditions gcd(r0 r1, s) = 1 and
// (a0 a1)^s = (-1)^(r1+1).
InverseCertificate invert_cor41(const CycloMapping& m);

// f = 1/2 x^r0 (1 + x^s) + 1/2 x^r1 (1 - x^s) for q odd, s | r0^2 - 1, 2s | r1^2 - 1.
SparsePoly build_self_inverse_cor42(const FieldPtr& field, std::uint64_t r0, std::uint64_t r1);

struct Cor43Result {
  CycloMapping mapping;  // (a0, a1, ..., a1), (r0, r1, ..., r1)
  SparsePoly f;
  PPDecision decision;
  std::optional<InverseCertificate> certificate;
};

// f = (1/d)(a0 x^r0 - a1 x^r1)(1 + x^s + ... + x^((d-1)s)) + a1 x^r1 for d >= 3.
// PP iff gcd(r0 r1, s) = gcd(r1, d) = 1 and a0^s = a1^s; the inverse uses
// u = r1' (1 - r1 r1_tilde)/s mod d. The certificate is run through certify().
Cor43Result check_and_invert_cor43(const FieldPtr& field, std::uint64_t d, const Element& a0,
                                   const Element& a1, std::uint64_t r0, std::uint64_t r1);

struct Cor43Shape {
  Element a0, a1;
  std::uint64_t r0 = 0, r1 = 0;
};

// Parameters when m has the form (a0, a1, ..., a1), (r0, r1, ..., r1) with d >= 3.
std::optional<Cor43Shape> cor43_shape(const CycloMapping& m);

struct Cor44Result {
  FieldPtr field;  // F_(2^(2n)) with the default modulus
  SparsePoly f;
  CycloMapping mapping;
  InverseCertificate certificate;
};

// f = (x^(2^i) + x^(2^j))(1 + x^s + x^(2s)) + x^(2^j) over F_(2^(2n)), s = (4^n - 1)/3.
// The certificate is run through certify().
Cor44Result invert_cor44(unsigned n, unsigned i, unsigned j);

// f = x^r h(x^s) with q - 1 = d s.
SparsePoly cor45_polynomial(const CycloParams& params, std::uint64_t r, const SparsePoly& h);
CycloMapping cor45_mapping(const CycloParams& params, std::uint64_t r, const SparsePoly& h);
// Single shared Bezout pair; preconditions: gcd(r, s) = 1, h(omega^i) != 0, and
// x^r h(x)^s permutes {1, omega, ..., omega^(d-1)}.
InverseCertificate invert_cor45(const FieldPtr& field, std::uint64_t d, std::uint64_t r, const SparsePoly& h);

struct Cor45Shape {
  std::uint64_t r = 0;
  SparsePoly h;
};

// When every r_i equals r, the h of degree < d with h(omega^i) = a_i.
std::optional<Cor45Shape> cor45_shape(const CycloMapping& m);

struct VerifyOptions {
  std::uint64_t cap = exhaustive_cap();
  std::uint64_t samples = 64;
  std::uint64_t seed = 0x5eed;
};

struct VerifyResult {
  Verification verdict = Verification::none;
  // Smallest failing point (exhaustive) or first failing sample.
  std::optional<Element> counterexample;
  bool ok() const { return verdict != Verification::none; }
};

// Checks g(f(x)) = f(g(x)) = x. Exhaustive under the cap, sampled above it.
VerifyResult verify_inverse(const SparsePoly& f, const SparsePoly& g, const VerifyOptions& opts = {});

// Runs verify_inverse(f, cert.inverse) and records the verdict.
void certify(InverseCertificate& cert, const SparsePoly& f, const VerifyOptions& opts = {});

}  // namespace ppforge
