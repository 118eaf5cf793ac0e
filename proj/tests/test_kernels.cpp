#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "actionlab/kernels.hpp"
#include "actionlab/subgroups.hpp"
#include "actionlab/zoo.hpp"

using namespace actionlab;

// OpenMP kernels against their serial references.

TEST_CASE("associativity kernels agree") {
  for (const auto& e : zoo::standard_corpus(64)) {
    const Group& g = e.group;
    CHECK_FALSE(kernels::find_associativity_violation(g.table(), g.order()).has_value());
    CHECK_FALSE(kernels::serial::find_associativity_violation(g.table(), g.order()).has_value());
  }
  // break one entry of Z/6 x Z/2 by swapping two values in a row
  const Group g = zoo::abelian({6, 2});
  std::vector<Elem> t(g.table().begin(), g.table().end());
  const std::size_t n = g.order();
  std::swap(t[5 * n + 3], t[5 * n + 7]);
  const auto par = kernels::find_associativity_violation(t, n);
  const auto ser = kernels::serial::find_associativity_violation(t, n);
  REQUIRE(par.has_value());
  REQUIRE(ser.has_value());
  CHECK(par->a == ser->a);
}

TEST_CASE("subgroup enumeration matches naive closure") {
  for (const auto& e : zoo::standard_corpus(64)) {
    const Group& g = e.group;
    CAPTURE(e.name);
    auto fast = enumerate_subgroups(g);
    auto naive = kernels::serial::all_subgroups_naive(g);
    std::vector<Subgroup> slow;
    for (auto& m : naive) slow.push_back(Subgroup::assume_closed(g, m));
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
  }
}

TEST_CASE("automorphism search matches brute force") {
  for (const auto& e : zoo::standard_corpus(16)) {
    const Group& g = e.group;
    if (g.order() > 12 && !(e.name == "quaternion(8)xcyclic(2)" || e.name == "dihedral(8)")) continue;
    CAPTURE(e.name);
    const auto gens = greedy_generators(Subgroup::whole(g));
    CHECK(kernels::automorphism_search(g, gens, 1000000) == kernels::serial::automorphism_search(g, gens, 1000000));
  }
}
