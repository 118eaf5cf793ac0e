#pragma once

#include <array>
#include <string>
#include <vector>

#include "actionlab/homology.hpp"

namespace actionlab {

/// How the p-torsion T_p of H_1(X) is modeled; every ledger entry only sees its order.
enum class TorsionModel { Cyclic, Elementary };  // Z/p^t or (Z/p)^t

/// Which H^1(X; Z/p^r) to use. Tabulated is the value behind the printed
/// tables (Z/p^r); UniversalCoefficients is what UCT on H_1 = Z + T gives
/// (Z/p^r + T_p).
enum class H1Model { Tabulated, UniversalCoefficients };

/// H^j(X; Z/p^r) for j = 0..5 of a closed orientable four-manifold with
/// b_1 = 1 whose H_1 has p-torsion of order p^t.
struct XProfile {
  u64 p = 2;
  unsigned r = 1, t = 0;
  TorsionModel torsion = TorsionModel::Cyclic;
  H1Model h1 = H1Model::Tabulated;
  GradedAbelian graded;
};

XProfile x_profile(u64 p, unsigned r, unsigned t, TorsionModel torsion = TorsionModel::Cyclic,
                   H1Model h1 = H1Model::Tabulated);

/// entries[i][j] = log_p #H^i((Z/p^r)^d; H^j(X; Z/p^r)), j = 0..5.
struct E2Ledger {
  XProfile profile;
  unsigned d = 2;
  std::vector<std::array<u64, 6>> entries;

  u64 at(unsigned i, unsigned j) const { return entries.at(i).at(j); }
  unsigned imax() const { return static_cast<unsigned>(entries.size()) - 1; }
};

E2Ledger e2_matrix(const XProfile& x, unsigned d, unsigned imax);
inline E2Ledger e2_matrix(u64 p, unsigned r, unsigned t, unsigned d, unsigned imax) {
  return e2_matrix(x_profile(p, r, t), d, imax);
}

/// Corner bound on log_p #E_inf^{4,0}: E(4,0) minus the sources of the
/// differentials that can hit it. E(2,1) is dropped when d2 is known to vanish.
struct ObstructionReport {
  unsigned d = 2;
  unsigned r = 1, t = 0;
  bool d2_killed = false;
  u64 e40 = 0, e21 = 0, e12 = 0, e03 = 0;
  long long bound = 0;
  bool obstructed = false;  // bound > r
};

ObstructionReport free_action_obstruction(const XProfile& x, unsigned d, bool d2_killed);
inline ObstructionReport free_action_obstruction(u64 p, unsigned r, unsigned t, unsigned d, bool d2_killed) {
  return free_action_obstruction(x_profile(p, r, t), d, d2_killed);
}

/// Integer-coefficient E_2 corner for A = Z/p^a acting on the same manifold:
/// entries[sigma][tau] = H^sigma(BA; H^tau(X)) for sigma, tau = 0..5, with T
/// replaced by T_p = Z/p^t.
struct CyclicE2Corner {
  u64 p = 2;
  unsigned a = 1, t = 0;
  std::array<std::array<FgAbelian, 6>, 6> entries;
  FgAbelian h1_tp;          // H^1(BA; T_p)
  u64 h1_tp_log = 0;        // log_p of its order
  bool bound_holds = true;  // #H^1(BA; T_p) <= p^t
  u64 index_bound = 1;      // p^t, the bound on [A : A_gamma]
};

CyclicE2Corner cyclic_e2_profile(u64 p, unsigned a, unsigned t);

}  // namespace actionlab
