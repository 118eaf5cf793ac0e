#pragma once

#include <optional>
#include <vector>

#include "actionlab/group.hpp"

namespace actionlab {

/// An element permutation phi with phi[x] = image of x.
using ElementMap = std::vector<Elem>;

/// Aut(G) as element permutations, sorted lexicographically (identity first).
/// Throws OrderCapExceeded above limits.automorphism_order_cap or when the
/// count passes limits.automorphism_count_cap.
std::vector<ElementMap> automorphism_group(const Group& g, const Limits& limits = default_limits());

/// (a then b): x -> b[a[x]].
ElementMap compose(const ElementMap& a, const ElementMap& b);

/// An isomorphism G -> H found by generator-image search, if one exists.
std::optional<ElementMap> find_isomorphism(const Group& g, const Group& h);

}  // namespace actionlab
