#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ppforge::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

// All positive divisors of n, ascending.
std::vector<u64> divisors(u64 n);

u64 gcd(u64 a, u64 b);

struct ExtGcd {
  i128 g;
  i128 x;
  i128 y;
};
// a*x + b*y = g = gcd(a, b).
ExtGcd ext_gcd(i128 a, i128 b);

// Inverse of a modulo m in [0, m); throws std::domain_error when gcd(a, m) != 1.
// m == 1 yields 0.
u64 inverse_mod(u64 a, u64 m);

// Mathematical (non-negative) remainder.
u64 floor_mod(i128 a, u64 m);

}  // namespace ppforge::nt
