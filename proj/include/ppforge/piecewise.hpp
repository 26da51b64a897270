#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "ppforge/config.hpp"
#include "ppforge/cyclotomic.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

// Element index -> element index.
using ValueTable = std::map<std::uint64_t, std::uint64_t>;

// A map assembled from pieces: on parts[k] it agrees with pieces[k]. A table
// piece must define every point of its part.
struct PiecewiseSpec {
  FieldPtr field;
  std::vector<std::uint64_t> domain;
  std::vector<std::vector<std::uint64_t>> parts;
  std::vector<std::variant<ValueTable, SparsePoly>> pieces;
};

// True iff every piece is injective on its part, the images of distinct parts
// are disjoint, and all images stay inside the domain. Throws
// std::invalid_argument when the parts overlap or do not cover the domain.
bool piecewise_is_pp(const PiecewiseSpec& spec, std::uint64_t cap = exhaustive_cap());

// Inverse assembled from per-piece inverses on their image sets.
// Throws PreconditionError when the spec is not a permutation.
ValueTable piecewise_inverse(const PiecewiseSpec& spec, std::uint64_t cap = exhaustive_cap());

// {0} with the zero piece, then D_0..D_(d-1) with the monomials a_i x^(r_i).
// A precomputed partition for the same parameters may be supplied.
PiecewiseSpec piecewise_from_mapping(const CycloMapping& m, const CosetPartition* partition = nullptr,
                                     std::uint64_t cap = exhaustive_cap());

}  // namespace ppforge
