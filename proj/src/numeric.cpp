#include "actionlab/numeric.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "actionlab/error.hpp"

namespace actionlab {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<u64>::max()) fail(ErrorKind::OrderCapExceeded, "binomial overflow");
  }
  return static_cast<u64>(acc);
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 acc = 1;
  for (unsigned i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(acc, base, &acc)) fail(ErrorKind::OrderCapExceeded, "power overflow");
  return acc;
}

u128 saturating_mul(u128 a, u128 b) {
  constexpr u128 kMax = ~static_cast<u128>(0);
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

u128 saturating_pow(u128 base, u64 exp) {
  if (base <= 1) return exp == 0 ? 1 : base;
  u128 acc = 1;
  for (u64 i = 0; i < exp; ++i) {
    acc = saturating_mul(acc, base);
    if (acc == ~static_cast<u128>(0) || acc == 0) break;
  }
  return acc;
}

unsigned floor_log(u64 n, u64 base) {
  unsigned k = 0;
  u128 acc = base;
  while (acc <= n) {
    ++k;
    acc *= base;
  }
  return k;
}

u64 factorial_mod(u64 n, u64 m) {
  if (m == 1) return 0;
  u128 acc = 1;
  for (u64 i = 2; i <= n; ++i) {
    acc = acc * i % m;
    if (acc == 0) break;
  }
  return static_cast<u64>(acc);
}

std::vector<u64> elementary_divisors(const std::vector<u64>& cyclic_orders) {
  std::vector<u64> out;
  for (u64 n : cyclic_orders)
    for (auto [p, e] : factorize(n)) out.push_back(checked_pow(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> invariant_factors(const std::vector<u64>& cyclic_orders) {
  // prime -> descending list of prime powers
  std::map<u64, std::vector<u64>> by_prime;
  for (u64 q : elementary_divisors(cyclic_orders)) by_prime[factorize(q).front().first].push_back(q);
  std::size_t count = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.rbegin(), powers.rend());
    count = std::max(count, powers.size());
  }
  // position 0 is the largest invariant factor
  std::vector<u64> desc(count, 1);
  for (auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) desc[i] *= powers[i];
  std::reverse(desc.begin(), desc.end());
  return desc;
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace actionlab
