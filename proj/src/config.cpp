#include "ppforge/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ppforge/errors.hpp"

namespace ppforge {

std::uint64_t exhaustive_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("PPFORGE_EXHAUSTIVE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultExhaustiveCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return kDefaultExhaustiveCap;
    return std::min<std::uint64_t>(v, kMaxExhaustiveCap);
  }();
  return cap;
}

void require_within_cap(std::uint64_t q, std::uint64_t cap, const char* what) {
  if (q > cap) {
    throw CapExceeded(std::string(what) + ": field size " + std::to_string(q) +
                      " exceeds the exhaustive cap " + std::to_string(cap));
  }
}

}  // namespace ppforge
