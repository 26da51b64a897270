#include "ppforge/piecewise.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ppforge/errors.hpp"

namespace ppforge {

using u64 = std::uint64_t;

namespace {

u64 apply_piece(const PiecewiseSpec& spec, std::size_t k, u64 x) {
  const auto& piece = spec.pieces[k];
  if (const auto* table = std::get_if<ValueTable>(&piece)) {
    auto it = table->find(x);
    if (it == table->end()) {
      throw std::invalid_argument("table piece " + std::to_string(k) + " is undefined at " + std::to_string(x));
    }
    return it->second;
  }
  const SparsePoly& poly = std::get<SparsePoly>(piece);
  return poly(spec.field->element(x)).index();
}

void validate(const PiecewiseSpec& spec, u64 cap) {
  if (!spec.field) throw std::invalid_argument("piecewise spec needs a field");
  require_within_cap(spec.domain.size(), cap, "piecewise harness");
  if (spec.parts.size() != spec.pieces.size()) throw std::invalid_argument("one piece per part is required");
  const std::unordered_set<u64> domain(spec.domain.begin(), spec.domain.end());
  if (domain.size() != spec.domain.size()) throw std::invalid_argument("domain lists an element twice");
  std::unordered_set<u64> covered;
  for (const auto& part : spec.parts) {
    for (u64 x : part) {
      if (!domain.contains(x)) throw std::invalid_argument("part element outside the declared domain");
      if (!covered.insert(x).second) throw std::invalid_argument("partition parts overlap");
    }
  }
  if (covered.size() != domain.size()) throw std::invalid_argument("parts do not cover the domain");
  for (const auto& piece : spec.pieces) {
    if (const auto* poly = std::get_if<SparsePoly>(&piece); poly && !poly->field().same_as(*spec.field)) {
      throw FieldMismatch();
    }
  }
}

// Empty optional when some piece is not injective or two images meet.
std::optional<ValueTable> assemble(const PiecewiseSpec& spec) {
  const std::unordered_set<u64> domain(spec.domain.begin(), spec.domain.end());
  ValueTable forward;
  std::unordered_set<u64> all_images;
  for (std::size_t k = 0; k < spec.parts.size(); ++k) {
    std::unordered_set<u64> image;
    for (u64 x : spec.parts[k]) {
      const u64 y = apply_piece(spec, k, x);
      if (!image.insert(y).second) return std::nullopt;  // not injective on its part
      forward.emplace(x, y);
    }
    for (u64 y : image) {
      if (!domain.contains(y)) return std::nullopt;
      if (!all_images.insert(y).second) return std::nullopt;  // images of two parts meet
    }
  }
  return forward;
}

}  // namespace

bool piecewise_is_pp(const PiecewiseSpec& spec, u64 cap) {
  validate(spec, cap);
  return assemble(spec).has_value();
}

ValueTable piecewise_inverse(const PiecewiseSpec& spec, u64 cap) {
  validate(spec, cap);
  // Each piece is inverted on its own image set; the image sets partition the
  // domain, so the union of the per-piece inverses is the inverse map.
  ValueTable inverse;
  for (std::size_t k = 0; k < spec.parts.size(); ++k) {
    ValueTable piece_inverse;
    for (u64 x : spec.parts[k]) {
      if (!piece_inverse.emplace(apply_piece(spec, k, x), x).second) {
        throw PreconditionError("piecewise_inverse: piece " + std::to_string(k) + " is not injective on its part");
      }
    }
    for (auto [y, x] : piece_inverse) {
      if (!inverse.emplace(y, x).second) {
        throw PreconditionError("piecewise_inverse: images of two parts intersect");
      }
    }
  }
  if (inverse.size() != spec.domain.size() || !assemble(spec)) {
    throw PreconditionError("piecewise_inverse: assembled map is not a permutation of the domain");
  }
  return inverse;
}

PiecewiseSpec piecewise_from_mapping(const CycloMapping& m, const CosetPartition* partition, u64 cap) {
  const CycloParams& cp = m.params();
  const FieldPtr& field = cp.field_ptr();
  require_within_cap(field->q(), cap, "piecewise_from_mapping");
  CosetPartition local;
  if (partition == nullptr) {
    local = cosets(cp, cap);
    partition = &local;
  }
  PiecewiseSpec spec{field, {}, {}, {}};
  spec.domain.reserve(field->q());
  for (u64 c = 0; c < field->q(); ++c) spec.domain.push_back(c);
  spec.parts.push_back({0});
  spec.pieces.emplace_back(ValueTable{{0, 0}});
  for (u64 i = 0; i < cp.d(); ++i) {
    std::vector<u64> part;
    part.reserve(cp.s());
    for (const Element& x : (*partition)[i]) part.push_back(x.index());
    spec.parts.push_back(std::move(part));
    spec.pieces.emplace_back(SparsePoly::monomial(field, m.a()[i], m.r()[i]));
  }
  return spec;
}

}  // namespace ppforge
