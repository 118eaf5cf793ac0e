#pragma once

#include <string>
#include <vector>

#include "actionlab/numeric.hpp"

namespace actionlab {

/// Z^free_rank + Z/d1 + Z/d2 + ... with d1 | d2 | ... and every di >= 2.
struct FgAbelian {
  u64 free_rank = 0;
  std::vector<u64> torsion;

  static FgAbelian zero() { return {}; }
  static FgAbelian integers(u64 rank = 1) { return {rank, {}}; }
  static FgAbelian cyclic(u64 m);  // Z/m; Z/1 is 0, m = 0 means Z
  /// Canonicalizes an arbitrary list of cyclic orders.
  static FgAbelian from_cyclic(u64 free_rank, const std::vector<u64>& orders);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Order of a finite group (saturating).
  u128 order() const;
  /// log_p of the order; requires a finite p-group.
  u64 log_order(u64 p) const;
  /// Prime-power parts of the torsion, ascending.
  std::vector<u64> elementary_divisors() const;
  /// Minimal number of generators.
  std::size_t generators() const { return free_rank + torsion.size(); }
  std::string to_string() const;

  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;
};

FgAbelian direct_sum(const FgAbelian& a, const FgAbelian& b);
FgAbelian power(const FgAbelian& a, u64 copies);

FgAbelian hom(const FgAbelian& a, const FgAbelian& b);
FgAbelian ext(const FgAbelian& a, const FgAbelian& b);
FgAbelian tor(const FgAbelian& a, const FgAbelian& b);
FgAbelian tensor(const FgAbelian& a, const FgAbelian& b);

/// Entries indexed by degree; missing degrees are 0.
using GradedAbelian = std::vector<FgAbelian>;

const FgAbelian& degree(const GradedAbelian& h, long long k);

/// Integral Kunneth for cohomology: sum of H^i(X) (x) H^j(Y) over i + j = k
/// plus Tor(H^i(X), H^j(Y)) over i + j = k + 1.
FgAbelian kunneth_cohomology(const GradedAbelian& hx, const GradedAbelian& hy, unsigned k);
/// Field coefficients: only the tensor terms.
FgAbelian kunneth_field(const GradedAbelian& hx, const GradedAbelian& hy, unsigned k);

/// H^k(X; coeff) = Hom(H_k, coeff) + Ext(H_{k-1}, coeff) from homology.
FgAbelian ucf_cohomology(const FgAbelian& h_lower, const FgAbelian& h_this, const FgAbelian& coeff);
/// H^k(X; M) = H^k(X) (x) M + Tor(H^{k+1}(X), M) from integral cohomology.
FgAbelian ucf_from_cohomology(const FgAbelian& h_this, const FgAbelian& h_next, const FgAbelian& coeff);

/// H^k((Z/p^a)^d; Z/p^b): (Z/p^min(a,b))^C(k+d-1, d-1) for k >= 1, Z/p^b for k = 0.
FgAbelian elementary_cohomology_closed(unsigned k, unsigned d, u64 p, unsigned a, unsigned b);

/// The two recursions for the ranks of H^k((Z/p)^d; Z/p).
u64 f_recursion(unsigned k, unsigned d);
u64 e_recursion(unsigned k, unsigned d);
/// e assembled from f: e(1,d) = f(2,d), e(k,d) = f(k+1,d) + f(k,d) for k >= 2.
u64 e_from_f(unsigned k, unsigned d);

/// H^k(Z/m; Z): Z for k = 0, 0 for odd k, Z/m for even k > 0.
FgAbelian cyclic_integral_cohomology(unsigned k, u64 m);

}  // namespace actionlab
