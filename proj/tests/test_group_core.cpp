#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "actionlab/automorphisms.hpp"
#include "actionlab/error.hpp"
#include "actionlab/group_spec.hpp"
#include "actionlab/permutation.hpp"
#include "actionlab/structure.hpp"
#include "actionlab/subgroups.hpp"
#include "actionlab/zoo.hpp"

using namespace actionlab;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidSpec;
}

Group s3() { return build_group(json::parse(R"J({"type":"permutation","degree":3,"generators":["(1 2 3)","(1 2)"]})J")); }

}  // namespace

TEST_CASE("build_group from the three spec forms") {
  CHECK(build_group(json::parse(R"J({"type":"cayley","table":[[0]]})J")).order() == 1);
  CHECK(s3().order() == 6);
  CHECK(build_group(json::parse(R"J({"type":"permutation","degree":5,"generators":["(1 2 3 4 5)"]})J")).order() == 5);
  CHECK(build_group(json::parse(R"J({"type":"family","name":"heisenberg","params":[3]})J")).order() == 27);
  auto prod = json::parse(R"J({"type":"family","name":"direct_product","params":[
      {"type":"family","name":"cyclic","params":[2]},{"type":"family","name":"dihedral","params":[3]}]})J");
  CHECK(build_group(prod).order() == 12);
}

TEST_CASE("cayley validation") {
  // identity not at 0 gets relabelled
  Group z2 = build_group(json::parse(R"J({"type":"cayley","table":[[1,0],[0,1]]})J"));
  CHECK(z2.mul(0, 1) == 1);
  CHECK(kind_of([] { build_group(json::parse(R"J({"type":"cayley","table":[[0,1],[0,0]]})J")); }) ==
        ErrorKind::InvalidTable);
  // Latin square but not associative (order 5 loop)
  const std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK(kind_of([&] { Group::from_rows(loop); }) == ErrorKind::InvalidTable);
}

TEST_CASE("closure cap") {
  Limits small;
  small.closure_cap = 10;
  auto spec = json::parse(R"J({"type":"permutation","degree":4,"generators":["(1 2 3 4)","(1 2)"]})J");
  CHECK(kind_of([&] { build_group(spec, small); }) == ErrorKind::ClosureLimitExceeded);
}

TEST_CASE("structure reports") {
  auto ab = structure_report(zoo::abelian({2, 6}));
  CHECK(ab.abelian);
  CHECK(ab.nilpotency_class == 1u);
  CHECK(ab.derived.is_trivial());
  CHECK(ab.invariant_factors == std::vector<u64>{2, 6});
  CHECK(ab.min_generators == 2);
  CHECK(structure_report(zoo::cyclic(1)).nilpotency_class == 0u);

  auto d4 = structure_report(zoo::dihedral(4));
  CHECK(d4.center.order() == 2);
  CHECK(d4.derived.order() == 2);
  CHECK(d4.nilpotency_class == 2u);

  const Group h3 = zoo::heisenberg(3);
  auto hr = structure_report(h3);
  CHECK(hr.center.order() == 3);
  CHECK(hr.center == hr.derived);
  CHECK(hr.nilpotency_class == 2u);

  CHECK_FALSE(nilpotency_class(zoo::symmetric(3)).has_value());
  CHECK(nilpotency_class(zoo::quaternion(16)) == 3u);
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(zoo::cyclic(7)).size() == 2);
  CHECK(enumerate_subgroups(s3()).size() == 6);
  CHECK(enumerate_subgroups(zoo::abelian({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(zoo::dihedral(4)).size() == 10);
  CHECK(enumerate_subgroups(zoo::symmetric(4)).size() == 30);
  CHECK(enumerate_subgroups(zoo::alternating(5)).size() == 59);
  CHECK(enumerate_subgroups(zoo::quaternion(8)).size() == 6);
  CHECK(enumerate_subgroups(zoo::abelian({2, 2, 2})).size() == 16);
  CHECK(kind_of([] { enumerate_subgroups(zoo::cyclic(600)); }) == ErrorKind::OrderCapExceeded);

  const Group g = zoo::heisenberg(3);
  auto subs = enumerate_subgroups(g);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (const auto& h : subs) {
    CHECK(g.order() % h.order() == 0);
    CHECK(h.contains(0));
    for (Elem a : h.members()) {
      CHECK(h.contains(g.inv(a)));
      for (Elem b : h.members()) CHECK(h.contains(g.mul(a, b)));
    }
  }
}

TEST_CASE("subgroup calculus") {
  const Group g = s3();
  auto whole = Subgroup::whole(g);
  CHECK(normalizer(g, whole) == whole);

  Elem t = 0;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) t = x;
  const Elem gen[] = {t};
  auto h = generate(g, gen);
  CHECK(normalizer(g, h) == h);
  CHECK(normalizer(g, h).index() == 3);
  CHECK_FALSE(is_normal(h));
  CHECK(conjugates(h).size() == 3);
  CHECK(kind_of([&] { quotient(h); }) == ErrorKind::NotNormal);

  const Group d4 = zoo::dihedral(4);
  const Elem r[] = {1};
  auto rot = generate(d4, r);
  CHECK(is_normal(rot));
  auto q = quotient(rot);
  CHECK(q.group.order() == 2);
  CHECK(find_isomorphism(q.group, zoo::cyclic(2)).has_value());
  for (Elem a = 0; a < d4.order(); ++a)
    for (Elem b = 0; b < d4.order(); ++b)
      CHECK(q.projection[d4.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

  auto s4 = zoo::symmetric(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(zoo::alternating(5), 5).order() == 5);
  CHECK(centralizer(d4, whole.is_whole() ? Subgroup::whole(d4) : rot).order() == 2);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(zoo::cyclic(4)).size() == 2);
  CHECK(automorphism_group(zoo::abelian({2, 2})).size() == 6);
  CHECK(automorphism_group(zoo::cyclic(1)).size() == 1);
  CHECK(automorphism_group(s3()).size() == 6);
  CHECK(automorphism_group(zoo::dihedral(4)).size() == 8);
  CHECK(automorphism_group(zoo::quaternion(8)).size() == 24);
  CHECK(automorphism_group(zoo::abelian({3, 3})).size() == 48);
  CHECK(automorphism_group(zoo::heisenberg(3)).size() == 432);
  CHECK(kind_of([] { automorphism_group(zoo::cyclic(65)); }) == ErrorKind::OrderCapExceeded);

  for (const auto& e : zoo::standard_corpus(32)) {
    const Group& g = e.group;
    CAPTURE(e.name);
    if (e.name == "abelian(2,2,2,2,2)") {  // |GL(5,2)| is above the count cap
      CHECK(kind_of([&] { automorphism_group(g); }) == ErrorKind::OrderCapExceeded);
      continue;
    }
    auto auts = automorphism_group(g);
    CHECK(auts.front() == [&] {
      ElementMap id(g.order());
      for (Elem x = 0; x < g.order(); ++x) id[x] = x;
      return id;
    }());
    std::set<ElementMap> all(auts.begin(), auts.end());
    for (const auto& a : auts) {
      for (Elem x = 0; x < g.order(); ++x) CHECK(g.element_order(a[x]) == g.element_order(x));
    }
    // closed under composition (sampled pairs)
    for (std::size_t i = 0; i < auts.size(); i += 1 + auts.size() / 7)
      for (std::size_t j = 0; j < auts.size(); j += 1 + auts.size() / 5) CHECK(all.count(compose(auts[i], auts[j])));
  }
}

TEST_CASE("zoo families") {
  CHECK(zoo::cyclic(1).order() == 1);
  CHECK(find_isomorphism(zoo::heisenberg(2), zoo::dihedral(4)).has_value());
  CHECK_FALSE(find_isomorphism(zoo::quaternion(8), zoo::dihedral(4)).has_value());
  const Group h3 = zoo::heisenberg(3);
  CHECK(h3.exponent() == 3);
  CHECK(zoo::extraspecial(3, 9).exponent() == 9);
  for (u64 n = 2; n <= 5; ++n) {
    const Group h = zoo::heisenberg(n);
    auto rep = structure_report(h);
    CHECK(h.order() == n * n * n);
    CHECK(rep.center == rep.derived);
    CHECK(find_isomorphism(rep.center.as_group(), zoo::cyclic(n)).has_value());
    CHECK(rep.nilpotency_class == 2u);
  }
  for (u64 p : {3, 5})
    for (u64 e : {p, p * p}) {
      const Group g = zoo::extraspecial(p, e);
      CHECK(g.order() == p * p * p);
      CHECK(center(g).order() == p);
      CHECK(g.exponent() == e);
    }
  for (u64 n = 1; n <= 12; ++n) {
    const Group d = zoo::dihedral(n);
    const auto dg = derived_subgroup(d);
    // rotations r^i are 0..n-1; squares of rotations for even n
    std::vector<Elem> expect;
    for (Elem i = 0; i < n; ++i)
      if (n % 2 == 1 || i % 2 == 0) expect.push_back(i);
    if (n <= 2) expect = {0};
    CAPTURE(n);
    CHECK(dg.members() == expect);
  }
  CHECK(kind_of([] { zoo::quaternion(12); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { zoo::symmetric(6); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { zoo::extraspecial(2, 2); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { zoo::semidirect_cyclic(7, 3, 3); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("derived subgroup is the least normal subgroup with abelian quotient") {
  for (const auto& e : zoo::standard_corpus(64)) {
    const Group& g = e.group;
    CAPTURE(e.name);
    const auto dg = derived_subgroup(g);
    CHECK(is_normal(dg));
    CHECK(quotient(dg).group.is_abelian());
    CHECK((nilpotency_class(g) != 1u || g.is_abelian()));
    if (g.order() > 32) continue;
    for (const auto& n : enumerate_subgroups(g)) {
      if (n == dg || !n.is_subgroup_of(dg) || !is_normal(n)) continue;
      CHECK_FALSE(quotient(n).group.is_abelian());
    }
  }
}
