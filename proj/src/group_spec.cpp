#include "actionlab/group_spec.hpp"

#include "actionlab/error.hpp"
#include "actionlab/permutation.hpp"
#include "actionlab/zoo.hpp"

namespace actionlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidSpec, what); }

u64 positive(long long v, const std::string& what) {
  if (v < 1) fail(ErrorKind::ParamOutOfRange, what + " must be positive");
  return static_cast<u64>(v);
}

void arity(const std::string& name, const std::vector<long long>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi) bad(name + " takes " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                                        " parameter(s)");
}

std::vector<long long> integer_params(const json& params) {
  std::vector<long long> out;
  for (const auto& v : params) {
    if (!v.is_number_integer()) bad("family params must be integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

}  // namespace

Group make_family(const std::string& name, const std::vector<long long>& p) {
  if (name == "cyclic") {
    arity(name, p, 1, 1);
    return zoo::cyclic(positive(p[0], "n"));
  }
  if (name == "abelian") {
    std::vector<u64> orders;
    for (long long v : p) orders.push_back(positive(v, "factor order"));
    return zoo::abelian(orders);
  }
  if (name == "dihedral") {
    arity(name, p, 1, 1);
    return zoo::dihedral(positive(p[0], "n"));
  }
  if (name == "quaternion") {
    arity(name, p, 1, 1);
    return zoo::quaternion(positive(p[0], "order"));
  }
  if (name == "heisenberg") {
    arity(name, p, 1, 1);
    return zoo::heisenberg(positive(p[0], "n"));
  }
  if (name == "extraspecial") {
    arity(name, p, 2, 2);
    return zoo::extraspecial(positive(p[0], "p"), positive(p[1], "exponent"));
  }
  if (name == "symmetric" || name == "alternating") {
    arity(name, p, 1, 1);
    const u64 n = positive(p[0], "n");
    if (n > 5) fail(ErrorKind::ParamOutOfRange, name + "(n) needs n <= 5");
    return name == "symmetric" ? zoo::symmetric(static_cast<unsigned>(n)) : zoo::alternating(static_cast<unsigned>(n));
  }
  if (name == "semidirect") {
    arity(name, p, 3, 3);
    return zoo::semidirect_cyclic(positive(p[0], "n"), positive(p[1], "m"), positive(p[2], "multiplier"));
  }
  if (name == "direct_product") bad("direct_product needs nested specs (JSON form)");
  bad("unknown family '" + name + "'");
}

Group build_group(const json& spec, const Limits& limits) {
  if (!spec.is_object() || !spec.contains("type") || !spec["type"].is_string()) bad("spec needs a string \"type\"");
  const std::string type = spec["type"];
  if (type == "cayley") {
    if (!spec.contains("table") || !spec["table"].is_array()) bad("cayley spec needs \"table\"");
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : spec["table"]) {
      if (!r.is_array()) bad("table rows must be arrays");
      std::vector<Elem> row;
      for (const auto& v : r) {
        if (!v.is_number_integer() || v.get<long long>() < 0) fail(ErrorKind::InvalidTable, "table entries must be nonnegative integers");
        row.push_back(v.get<Elem>());
      }
      rows.push_back(std::move(row));
    }
    return Group::from_rows(rows, {}, limits);
  }
  if (type == "permutation") {
    if (!spec.contains("degree") || !spec["degree"].is_number_integer()) bad("permutation spec needs \"degree\"");
    const long long m = spec["degree"].get<long long>();
    if (m < 1) fail(ErrorKind::ParamOutOfRange, "degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& s : spec.value("generators", json::array())) {
      if (!s.is_string()) bad("generators must be cycle strings");
      gens.push_back(Permutation::parse(s.get<std::string>(), static_cast<std::size_t>(m)));
    }
    return permutation_group(gens, static_cast<std::size_t>(m), limits.closure_cap);
  }
  if (type == "family") {
    if (!spec.contains("name") || !spec["name"].is_string()) bad("family spec needs \"name\"");
    const std::string name = spec["name"];
    const json params = spec.value("params", json::array());
    if (!params.is_array()) bad("params must be an array");
    if (name == "direct_product") {
      if (params.empty()) bad("direct_product needs at least one factor");
      Group g = build_group(params[0], limits);
      for (std::size_t i = 1; i < params.size(); ++i) g = zoo::direct_product(g, build_group(params[i], limits));
      return g;
    }
    if (name == "semidirect" && params.size() == 3 && params[0].is_object()) {
      const Group n = build_group(params[0], limits);
      const Group h = build_group(params[1], limits);
      std::vector<Elem> gens;
      std::vector<ElementMap> images;
      for (const auto& a : params[2]) {
        if (!a.is_array() || a.size() != 2) bad("semidirect action entries are [generator, image]");
        gens.push_back(a[0].get<Elem>());
        images.push_back(a[1].get<ElementMap>());
      }
      for (Elem x : gens)
        if (x >= h.order()) fail(ErrorKind::ParamOutOfRange, "acting generator out of range");
      return zoo::semidirect(n, h, gens, images);
    }
    return make_family(name, integer_params(params));
  }
  bad("unknown spec type '" + type + "'");
}

}  // namespace actionlab
