#include "actionlab/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "actionlab/error.hpp"

namespace actionlab {

FgAbelian FgAbelian::cyclic(u64 m) {
  if (m == 0) return integers();
  return from_cyclic(0, {m});
}

FgAbelian FgAbelian::from_cyclic(u64 free_rank, const std::vector<u64>& orders) {
  FgAbelian a;
  a.free_rank = free_rank;
  std::vector<u64> finite;
  for (u64 m : orders) {
    if (m == 0)
      ++a.free_rank;
    else if (m > 1)
      finite.push_back(m);
  }
  a.torsion = invariant_factors(finite);
  return a;
}

u128 FgAbelian::order() const {
  if (free_rank) fail(ErrorKind::PreconditionViolated, "order of an infinite group");
  u128 n = 1;
  for (u64 d : torsion) n = saturating_mul(n, d);
  return n;
}

u64 FgAbelian::log_order(u64 p) const {
  if (free_rank) fail(ErrorKind::PreconditionViolated, "log order of an infinite group");
  u64 e = 0;
  for (u64 d : torsion) {
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (d != 1) fail(ErrorKind::PreconditionViolated, "not a p-group");
  }
  return e;
}

std::vector<u64> FgAbelian::elementary_divisors() const { return actionlab::elementary_divisors(torsion); }

std::string FgAbelian::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  auto add = [&](const std::string& t) { s += (s.empty() ? "" : " + ") + t; };
  if (free_rank == 1) add("Z");
  if (free_rank > 1) add("Z^" + std::to_string(free_rank));
  // group equal factors
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    add("Z/" + std::to_string(torsion[i]) + (j - i > 1 ? "^" + std::to_string(j - i) : ""));
    i = j;
  }
  return s;
}

FgAbelian direct_sum(const FgAbelian& a, const FgAbelian& b) {
  std::vector<u64> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  return FgAbelian::from_cyclic(a.free_rank + b.free_rank, t);
}

FgAbelian power(const FgAbelian& a, u64 copies) {
  std::vector<u64> t;
  for (u64 i = 0; i < copies; ++i) t.insert(t.end(), a.torsion.begin(), a.torsion.end());
  return FgAbelian::from_cyclic(a.free_rank * copies, t);
}

namespace {

// Apply a bifunctor factor by factor. Each argument is split into cyclic
// summands (0 standing for Z) and rule(m, n) returns the order of the
// resulting cyclic group (0 for Z, 1 for the zero group).
template <class Rule>
FgAbelian bilinear(const FgAbelian& a, const FgAbelian& b, Rule rule) {
  std::vector<u64> fa(a.free_rank, 0), fb(b.free_rank, 0);
  fa.insert(fa.end(), a.torsion.begin(), a.torsion.end());
  fb.insert(fb.end(), b.torsion.begin(), b.torsion.end());
  std::vector<u64> out;
  for (u64 m : fa)
    for (u64 n : fb) out.push_back(rule(m, n));
  return FgAbelian::from_cyclic(0, out);
}

}  // namespace

FgAbelian hom(const FgAbelian& a, const FgAbelian& b) {
  return bilinear(a, b, [](u64 m, u64 n) -> u64 {
    if (m == 0) return n;                // Hom(Z, B) = B
    if (n == 0) return 1;                // Hom(Z/m, Z) = 0
    return std::gcd(m, n);
  });
}

FgAbelian ext(const FgAbelian& a, const FgAbelian& b) {
  return bilinear(a, b, [](u64 m, u64 n) -> u64 {
    if (m == 0) return 1;                // Ext(Z, B) = 0
    if (n == 0) return m;                // Ext(Z/m, Z) = Z/m
    return std::gcd(m, n);
  });
}

FgAbelian tor(const FgAbelian& a, const FgAbelian& b) {
  return bilinear(a, b, [](u64 m, u64 n) -> u64 {
    if (m == 0 || n == 0) return 1;
    return std::gcd(m, n);
  });
}

FgAbelian tensor(const FgAbelian& a, const FgAbelian& b) {
  return bilinear(a, b, [](u64 m, u64 n) -> u64 {
    if (m == 0) return n;
    if (n == 0) return m;
    return std::gcd(m, n);
  });
}

const FgAbelian& degree(const GradedAbelian& h, long long k) {
  static const FgAbelian zero;
  if (k < 0 || static_cast<std::size_t>(k) >= h.size()) return zero;
  return h[static_cast<std::size_t>(k)];
}

FgAbelian kunneth_cohomology(const GradedAbelian& hx, const GradedAbelian& hy, unsigned k) {
  FgAbelian out = kunneth_field(hx, hy, k);
  for (long long i = 0; i <= static_cast<long long>(k) + 1; ++i)
    out = direct_sum(out, tor(degree(hx, i), degree(hy, static_cast<long long>(k) + 1 - i)));
  return out;
}

FgAbelian kunneth_field(const GradedAbelian& hx, const GradedAbelian& hy, unsigned k) {
  FgAbelian out;
  for (long long i = 0; i <= static_cast<long long>(k); ++i)
    out = direct_sum(out, tensor(degree(hx, i), degree(hy, static_cast<long long>(k) - i)));
  return out;
}

FgAbelian ucf_cohomology(const FgAbelian& h_lower, const FgAbelian& h_this, const FgAbelian& coeff) {
  return direct_sum(hom(h_this, coeff), ext(h_lower, coeff));
}

FgAbelian ucf_from_cohomology(const FgAbelian& h_this, const FgAbelian& h_next, const FgAbelian& coeff) {
  return direct_sum(tensor(h_this, coeff), tor(h_next, coeff));
}

FgAbelian elementary_cohomology_closed(unsigned k, unsigned d, u64 p, unsigned a, unsigned b) {
  if (d < 1 || a < 1 || b < 1 || !is_prime(p)) fail(ErrorKind::ParamOutOfRange, "need d, a, b >= 1 and p prime");
  if (k == 0) return FgAbelian::cyclic(checked_pow(p, b));
  const u64 q = checked_pow(p, std::min(a, b));
  const u64 copies = binomial(k + d - 1, d - 1);
  if (copies > 100000) fail(ErrorKind::OrderCapExceeded, "too many cyclic summands");
  return FgAbelian::from_cyclic(0, std::vector<u64>(copies, q));
}

u64 f_recursion(unsigned k, unsigned d) {
  if (d < 1) fail(ErrorKind::ParamOutOfRange, "f needs d >= 1");
  // f(0, .) = 1 stands for the Z in degree 0
  std::vector<std::vector<u64>> f(d + 1, std::vector<u64>(k + 2, 0));
  for (unsigned j = 0; j <= k + 1; ++j) f[1][j] = j % 2 == 0 ? 1 : 0;
  for (unsigned dd = 2; dd <= d; ++dd) {
    f[dd][0] = 1;
    for (unsigned j = 1; j <= k + 1; ++j) {
      u64 s = 0;
      for (unsigned l = 0; 2 * l <= j; ++l) s += f[dd - 1][j - 2 * l];
      for (unsigned l = 1; 2 * l < j + 1; ++l) s += f[dd - 1][j + 1 - 2 * l];
      f[dd][j] = s;
    }
  }
  return f[d][k];
}

u64 e_recursion(unsigned k, unsigned d) {
  if (d < 1) fail(ErrorKind::ParamOutOfRange, "e needs d >= 1");
  std::vector<u64> row(k + 1, 1);  // d = 1
  for (unsigned dd = 2; dd <= d; ++dd)
    for (unsigned j = 1; j <= k; ++j) row[j] += row[j - 1];  // prefix sums: e(j,dd) = sum_{i<=j} e(i,dd-1)
  return row[k];
}

u64 e_from_f(unsigned k, unsigned d) {
  if (k == 0) return 1;
  if (k == 1) return f_recursion(2, d);
  return f_recursion(k + 1, d) + f_recursion(k, d);
}

FgAbelian cyclic_integral_cohomology(unsigned k, u64 m) {
  if (m < 1) fail(ErrorKind::ParamOutOfRange, "m must be positive");
  if (k == 0) return FgAbelian::integers();
  if (k % 2 == 1) return FgAbelian::zero();
  return FgAbelian::cyclic(m);
}

}  // namespace actionlab
