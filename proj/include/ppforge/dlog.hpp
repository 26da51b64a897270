#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "ppforge/field.hpp"

namespace ppforge {

// Baby-step giant-step over the cyclic subgroup generated by a fixed base.
// The baby-step table is built once; solve() is const and thread-safe.
class DiscreteLog {
 public:
  // Throws std::domain_error when base is zero.
  explicit DiscreteLog(Element base);

  const Element& base() const { return base_; }
  std::uint64_t subgroup_order() const { return order_; }

  // Least k >= 0 with base^k = target, or nullopt when target is zero or
  // outside <base>.
  std::optional<std::uint64_t> solve(const Element& target) const;

 private:
  Element base_;
  std::uint64_t order_ = 0;
  std::uint64_t stride_ = 0;
  Element giant_;  // base^(-stride)
  std::unordered_map<std::uint64_t, std::uint64_t> baby_;
};

// One-shot form of DiscreteLog::solve; throws std::domain_error for zero
// inputs or a target outside the subgroup.
std::uint64_t dlog(const Element& base, const Element& target);

}  // namespace ppforge
