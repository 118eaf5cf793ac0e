#pragma once

#include <optional>
#include <vector>

#include "actionlab/group.hpp"
#include "actionlab/numeric.hpp"

namespace actionlab {

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup normalizer(const Group& g, const Subgroup& h);
bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);

/// [A, B]: the subgroup generated by all commutators a^-1 b^-1 a b.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Group& g);

/// G = gamma_1 >= gamma_2 = [G,G] >= ... until it stabilises.
std::vector<Subgroup> lower_central_series(const Group& g);

/// Nilpotency class of a subgroup (0 for the trivial group); nullopt if not nilpotent.
std::optional<unsigned> nilpotency_class(const Subgroup& h);
std::optional<unsigned> nilpotency_class(const Group& g);

/// Invariant factors d1 | d2 | ... of an abelian subgroup (empty for trivial).
std::vector<u64> abelian_invariants(const Subgroup& h);
/// Minimal number of generators of an abelian subgroup.
std::size_t min_generators(const Subgroup& h);

/// The prime p if |h| is a power of p (h nontrivial).
std::optional<u64> p_group_prime(const Subgroup& h);

struct StructureReport {
  std::size_t order = 0;
  Subgroup center;
  Subgroup derived;
  std::optional<unsigned> nilpotency_class;
  bool abelian = false;
  std::vector<u64> invariant_factors;  // filled when abelian
  std::size_t min_generators = 0;      // filled when abelian
};

StructureReport structure_report(const Group& g);

}  // namespace actionlab
