#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "actionlab/group.hpp"
#include "actionlab/numeric.hpp"

namespace actionlab {

struct AlphaResult {
  u64 index = 1;
  Subgroup witness;  // canonically least abelian subgroup of least index
};

/// alpha(G) = min [G:A] over abelian A <= G. `subgroups` may be passed in
/// when already enumerated (canonically sorted).
AlphaResult alpha(const Group& g, const std::vector<Subgroup>* subgroups = nullptr);

struct Beta2Result {
  u64 index = 1;
  Subgroup witness;  // canonically least subgroup of class <= 2 and least index
  Subgroup commutator;
  bool commutator_cyclic = true;
};

/// Least index of a subgroup of nilpotency class at most 2.
Beta2Result beta2(const Group& g, const std::vector<Subgroup>* subgroups = nullptr);

struct JordanReport {
  AlphaResult alpha;
  Beta2Result beta2;
};

JordanReport jordan_report(const Group& g);

struct JFailure {
  std::size_t position = 0;  // index into the collection
  /// Pareto-optimal (index, d(A)) over abelian A, ascending by index.
  std::vector<std::pair<u64, std::size_t>> frontier;
};

struct JResult {
  bool holds = true;
  std::vector<JFailure> failures;
};

/// Does every group have an abelian A with [G:A] <= C and d(A) <= d?
JResult j_property(const std::vector<Group>& collection, u64 c, std::size_t d);

struct TClassResult {
  bool member = false;
  u64 p = 0, q = 0;  // p = 0 for the trivial group; q = 0 when Q is trivial
  std::optional<Subgroup> P, Q;
};

/// G = PQ with P a normal Sylow p-subgroup and Q a Sylow q-subgroup (possibly trivial).
TClassResult in_T_class(const Group& g);

/// prod_p p^(sum_i floor(k / (p^i (p-1)))), for 1 <= k <= 8.
u64 minkowski_bound(unsigned k);

/// A finite group of k x k integer matrices given by generators (row-major),
/// closed under multiplication. Element 0 is the identity matrix.
Group integral_matrix_group(const std::vector<std::vector<long long>>& generators, unsigned k,
                            std::size_t closure_cap = default_limits().closure_cap);

}  // namespace actionlab
