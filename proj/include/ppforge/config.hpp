#pragma once

#include <cstdint>

namespace ppforge {

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 16;
inline constexpr std::uint64_t kMaxExhaustiveCap = std::uint64_t{1} << 32;

// Point cap shared by every exhaustive operation. Reads PPFORGE_EXHAUSTIVE_CAP
// once (clamped to 2^32); falls back to 2^16.
std::uint64_t exhaustive_cap();

// Throws CapExceeded when q exceeds cap.
void require_within_cap(std::uint64_t q, std::uint64_t cap, const char* what);

}  // namespace ppforge
