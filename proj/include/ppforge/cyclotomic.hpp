#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ppforge/config.hpp"
#include "ppforge/dlog.hpp"
#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

// Splitting q - 1 = d * s with omega = xi^s of order exactly d.
class CycloParams {
 public:
  // Throws std::invalid_argument unless d >= 1 divides q - 1.
  CycloParams(FieldPtr field, std::uint64_t d);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::uint64_t d() const { return d_; }
  std::uint64_t s() const { return s_; }
  const Element& omega() const { return omega_; }
  // Field inverse of d * 1.
  const Element& d_inverse() const { return d_inv_; }
  // log base omega on the d-th roots of unity.
  const DiscreteLog& omega_log() const { return *omega_log_; }

 private:
  FieldPtr field_;
  std::uint64_t d_ = 0;
  std::uint64_t s_ = 0;
  Element omega_;
  Element d_inv_;
  std::shared_ptr<const DiscreteLog> omega_log_;
};

// x -> 0 at 0, x -> a_i x^(r_i) on D_i.
class CycloMapping {
 public:
  // Throws std::invalid_argument on length mismatch, a zero a_i, or r_i == 0.
  CycloMapping(CycloParams params, std::vector<Element> a, std::vector<std::uint64_t> r);

  const CycloParams& params() const { return params_; }
  const Field& field() const { return params_.field(); }
  std::uint64_t d() const { return params_.d(); }
  std::uint64_t s() const { return params_.s(); }
  const std::vector<Element>& a() const { return a_; }
  const std::vector<std::uint64_t>& r() const { return r_; }

 private:
  CycloParams params_;
  std::vector<Element> a_;
  std::vector<std::uint64_t> r_;
};

// D_i = { xi^(k d + i) : 0 <= k < s }, listed in increasing k.
using CosetPartition = std::vector<std::vector<Element>>;

CosetPartition cosets(const CycloParams& params, std::uint64_t cap = exhaustive_cap());

// The unique i in [0, d) with x^s = omega^i; throws std::domain_error on x = 0.
std::uint64_t coset_index(const CycloParams& params, const Element& x);

Element mapping_eval(const CycloMapping& m, const Element& x);

// (1/d) sum_i sum_j a_i omega^(-ij) x^(r_i + j s), reduced.
SparsePoly mapping_to_poly(const CycloMapping& m);

// (1/d) sum_{j=1}^{d} (x^s / c^s)^j: 1 on the coset of c, 0 elsewhere.
SparsePoly indicator_poly(const CycloParams& params, const Element& c);

// 1 - (x^s - c^s)^(q-1), expanded by repeated squaring. Same function as
// indicator_poly, computed without the geometric-sum shortcut.
SparsePoly indicator_poly_power_form(const CycloParams& params, const Element& c);

}  // namespace ppforge
