#include "ppforge/dlog.hpp"

#include <cmath>
#include <stdexcept>

namespace ppforge {

DiscreteLog::DiscreteLog(Element base) : base_(base) {
  if (base_.is_zero()) throw std::domain_error("discrete log base must be nonzero");
  const Field& f = base_.field();
  order_ = f.element_order(base_.index());
  stride_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<long double>(order_))));
  if (stride_ == 0) stride_ = 1;
  baby_.reserve(stride_);
  Element cur = f.one();
  for (std::uint64_t j = 0; j < stride_; ++j) {
    baby_.emplace(cur.index(), j);  // keeps the smallest j on repeats
    cur *= base_;
  }
  giant_ = base_.pow_u(stride_).inverse();
}

std::optional<std::uint64_t> DiscreteLog::solve(const Element& target) const {
  if (target.is_zero()) return std::nullopt;
  Element gamma = target;
  for (std::uint64_t i = 0; i * stride_ < order_ + stride_; ++i) {
    if (auto it = baby_.find(gamma.index()); it != baby_.end()) {
      const std::uint64_t k = i * stride_ + it->second;
      if (k < order_) return k;
      return std::nullopt;
    }
    gamma *= giant_;
  }
  return std::nullopt;
}

std::uint64_t dlog(const Element& base, const Element& target) {
  if (target.is_zero()) throw std::domain_error("discrete log target must be nonzero");
  const DiscreteLog table(base);
  auto k = table.solve(target);
  if (!k) throw std::domain_error("target is not in the subgroup generated by base");
  return *k;
}

}  // namespace ppforge
