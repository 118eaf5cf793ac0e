#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "actionlab/group.hpp"

namespace actionlab {

/// Builds a group from a spec document:
///   {"type":"cayley","table":[[...],...]}
///   {"type":"permutation","degree":m,"generators":["(1 2 3)(4 5)",...]}
///   {"type":"family","name":"heisenberg","params":[3]}
/// Family params are integers, except direct_product (a list of nested specs)
/// and the general semidirect form [base, acting, [[h, [image of N]], ...]].
Group build_group(const nlohmann::json& spec, const Limits& limits = default_limits());

/// A family instance from a name and integer parameters (the CLI form).
Group make_family(const std::string& name, const std::vector<long long>& params);

}  // namespace actionlab
