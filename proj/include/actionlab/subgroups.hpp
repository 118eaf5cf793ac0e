#pragma once

#include <vector>

#include "actionlab/group.hpp"
#include "actionlab/numeric.hpp"

namespace actionlab {

/// Every subgroup of g, by cyclic extension: start from the cyclic subgroups
/// and repeatedly join with prime-power cyclic subgroups until closed.
/// Sorted canonically (order, then members). Throws OrderCapExceeded when
/// |g| exceeds max_order (0 = default cap).
std::vector<Subgroup> enumerate_subgroups(const Group& g, std::size_t max_order = 0);

/// Distinct conjugates x H x^-1, canonically sorted.
std::vector<Subgroup> conjugates(const Subgroup& h);

struct Quotient {
  Group group;
  std::vector<Elem> projection;  // g element -> coset index
  std::vector<Elem> section;     // coset index -> least representative
};

/// G/N for normal N; throws NotNormal otherwise. Coset 0 is N; cosets are
/// numbered by their least element.
Quotient quotient(const Subgroup& n);

/// A Sylow p-subgroup, grown from the trivial group through normalizers.
Subgroup sylow_subgroup(const Group& g, u64 p);

}  // namespace actionlab
