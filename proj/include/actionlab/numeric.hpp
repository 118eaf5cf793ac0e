#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace actionlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

/// Prime factorization as ascending (prime, exponent) pairs. factorize(1) is empty.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

/// (p, k) with n = p^k, k >= 1, if n is a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 n);

/// Exact n choose k; throws OrderCapExceeded on 64-bit overflow.
u64 binomial(u64 n, u64 k);

/// base^exp, throws OrderCapExceeded on 64-bit overflow.
u64 checked_pow(u64 base, unsigned exp);

/// base^exp clamped to the largest u128.
u128 saturating_pow(u128 base, u64 exp);
u128 saturating_mul(u128 a, u128 b);
inline constexpr u128 kU128Max = ~u128{0};
std::string to_decimal(u128 v);

/// Largest k with base^k <= n (base >= 2, n >= 1).
unsigned floor_log(u64 n, u64 base);

u64 factorial_mod(u64 n, u64 m);

/// Regroups a multiset of cyclic orders (any positive integers) into the
/// invariant-factor chain d1 | d2 | ... with every di >= 2.
std::vector<u64> invariant_factors(const std::vector<u64>& cyclic_orders);

/// Splits cyclic orders into their prime-power parts, sorted.
std::vector<u64> elementary_divisors(const std::vector<u64>& cyclic_orders);

}  // namespace actionlab
