#include "actionlab/spectral.hpp"

#include "actionlab/error.hpp"

namespace actionlab {

XProfile x_profile(u64 p, unsigned r, unsigned t, TorsionModel torsion, H1Model h1) {
  if (!is_prime(p)) fail(ErrorKind::ParamOutOfRange, "p must be prime");
  if (r < 1) fail(ErrorKind::ParamOutOfRange, "r must be positive");
  if (r <= t) fail(ErrorKind::ProfileViolation, "need r > t");
  XProfile x{p, r, t, torsion, h1, {}};
  const FgAbelian Z = FgAbelian::integers();
  const FgAbelian tp = torsion == TorsionModel::Cyclic
                           ? FgAbelian::cyclic(checked_pow(p, t))
                           : FgAbelian::from_cyclic(0, std::vector<u64>(t, p));
  // homology H_0..H_5 of X
  GradedAbelian h = {Z, direct_sum(Z, tp), tp, Z, Z, {}};
  const FgAbelian coeff = FgAbelian::cyclic(checked_pow(p, r));
  for (unsigned j = 0; j < 6; ++j) x.graded.push_back(ucf_cohomology(degree(h, j - 1LL), h[j], coeff));
  if (h1 == H1Model::Tabulated) x.graded[1] = coeff;
  return x;
}

E2Ledger e2_matrix(const XProfile& x, unsigned d, unsigned imax) {
  if (d < 1) fail(ErrorKind::ParamOutOfRange, "d must be positive");
  if (x.r <= x.t) fail(ErrorKind::ProfileViolation, "need r > t");
  E2Ledger led{x, d, {}};
  led.entries.resize(imax + 1);
  for (unsigned j = 0; j < 6; ++j) {
    const FgAbelian& m = degree(x.graded, j);
    if (!m.is_finite()) fail(ErrorKind::ProfileViolation, "coefficients must be finite");
    // split the coefficients into cyclic p-power factors and use the closed formula on each
    std::vector<unsigned> exps;
    for (u64 q : m.elementary_divisors()) {
      auto pp = prime_power(q);
      if (!pp || pp->first != x.p) fail(ErrorKind::ProfileViolation, "coefficients must be a p-group");
      if (pp->second > x.r) fail(ErrorKind::ProfileViolation, "coefficient exponent exceeds p^r");
      exps.push_back(pp->second);
    }
    for (unsigned i = 0; i <= imax; ++i) {
      u64 s = 0;
      for (unsigned e : exps) s += elementary_cohomology_closed(i, d, x.p, x.r, e).log_order(x.p);
      led.entries[i][j] = s;
    }
  }
  return led;
}

ObstructionReport free_action_obstruction(const XProfile& x, unsigned d, bool d2_killed) {
  if (d != 2 && d != 3) fail(ErrorKind::UnsupportedRank, "only ranks 2 and 3 are tabulated");
  const E2Ledger led = e2_matrix(x, d, 4);
  ObstructionReport rep;
  rep.d = d;
  rep.r = x.r;
  rep.t = x.t;
  rep.d2_killed = d2_killed;
  rep.e40 = led.at(4, 0);
  rep.e21 = led.at(2, 1);
  rep.e12 = led.at(1, 2);
  rep.e03 = led.at(0, 3);
  rep.bound = static_cast<long long>(rep.e40) - static_cast<long long>(rep.e12) - static_cast<long long>(rep.e03);
  if (!d2_killed) rep.bound -= static_cast<long long>(rep.e21);
  rep.obstructed = rep.bound > static_cast<long long>(x.r);
  return rep;
}

CyclicE2Corner cyclic_e2_profile(u64 p, unsigned a, unsigned t) {
  if (!is_prime(p)) fail(ErrorKind::ParamOutOfRange, "p must be prime");
  if (a < 1) fail(ErrorKind::ParamOutOfRange, "a must be positive");
  CyclicE2Corner c;
  c.p = p;
  c.a = a;
  c.t = t;
  const u64 m = checked_pow(p, a);
  const FgAbelian Z = FgAbelian::integers(), tp = FgAbelian::cyclic(checked_pow(p, t));
  // integral cohomology of X with T replaced by T_p
  const std::array<FgAbelian, 6> hx = {Z, Z, tp, direct_sum(Z, tp), Z, {}};
  for (unsigned s = 0; s < 6; ++s)
    for (unsigned tau = 0; tau < 6; ++tau)
      c.entries[s][tau] =
          ucf_from_cohomology(cyclic_integral_cohomology(s, m), cyclic_integral_cohomology(s + 1, m), hx[tau]);
  c.h1_tp = c.entries[1][2];
  // the homology form gives the same group: Hom(H_1(BA), T_p) + Ext(H_0(BA), T_p)
  if (!(ucf_cohomology(Z, FgAbelian::cyclic(m), tp) == c.h1_tp))
    fail(ErrorKind::IllDefined, "the two universal coefficient forms disagree");
  c.h1_tp_log = c.h1_tp.log_order(p);
  c.bound_holds = c.h1_tp_log <= t;
  c.index_bound = checked_pow(p, t);
  return c;
}

}  // namespace actionlab
