#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppforge/config.hpp"
#include "ppforge/cyclotomic.hpp"
#include "ppforge/inverse.hpp"

namespace ppforge {

// Coset-wise monomial fit: finds (a_i, r_i) with f = a_i x^(r_i) on every D_i,
// taking the smallest r_i in [1, q - 1]. Empty when f(0) != 0 or some coset has
// no such monomial.
std::optional<CycloMapping> fit_mapping(const SparsePoly& f, std::uint64_t d, std::uint64_t cap = exhaustive_cap());

// fit_mapping over the divisors of q - 1 in increasing order; first fit wins.
std::optional<CycloMapping> fit_mapping_any(const SparsePoly& f, std::uint64_t cap = exhaustive_cap());

struct SelfInverseOptions {
  std::uint64_t max_r = 6;
  // Coefficient indices allowed for a_i; empty means all of F_q^*.
  std::vector<std::uint64_t> a_set;
  // Divisors of q - 1 to search; empty means all of them.
  std::vector<std::uint64_t> d_values;
  std::uint64_t cap = exhaustive_cap();
};

struct SelfInverseEntry {
  CycloMapping mapping;
  SparsePoly poly;
  Verification verified = Verification::none;
};

// Cyclotomic-mapping PPs with r_i <= max_r and a_i in the allowed set whose
// closed-form inverse equals the polynomial itself. Each distinct polynomial
// appears once, under its first (d, r, a) in the order d ascending, then r
// lexicographic, then a lexicographic by index.
std::vector<SelfInverseEntry> search_self_inverse(const FieldPtr& field, const SelfInverseOptions& opts);

}  // namespace ppforge
