#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actionlab/error.hpp"
#include "actionlab/spectral.hpp"

using namespace actionlab;

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

// printed row j as a function of (r, t), times C(i+d-1, d-1)
u64 printed(unsigned j, unsigned r, unsigned t) {
  switch (j) {
    case 0: case 1: case 4: return r;
    case 2: return 2 * t;
    case 3: return r + t;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("profile") {
  auto x = x_profile(3, 3, 1);
  CHECK(x.graded[0] == FgAbelian::cyclic(27));
  CHECK(x.graded[1] == FgAbelian::cyclic(27));
  CHECK(x.graded[2] == FgAbelian::from_cyclic(0, {3, 3}));
  CHECK(x.graded[3] == FgAbelian::from_cyclic(0, {3, 27}));
  CHECK(x.graded[4] == FgAbelian::cyclic(27));
  CHECK(x.graded[5].is_zero());
  auto u = x_profile(3, 3, 1, TorsionModel::Cyclic, H1Model::UniversalCoefficients);
  CHECK(u.graded[1] == FgAbelian::from_cyclic(0, {3, 27}));
  CHECK(kind_of([] { x_profile(2, 2, 2); }) == ErrorKind::ProfileViolation);
  CHECK(kind_of([] { x_profile(4, 2, 1); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("tables match the printed matrices") {
  for (u64 p : {2, 3, 5, 7})
    for (unsigned t = 0; t <= 3; ++t)
      for (unsigned r = t + 1; r <= t + 4; ++r)
        for (unsigned d : {2u, 3u}) {
          auto led = e2_matrix(p, r, t, d, 6);
          for (unsigned i = 0; i <= 6; ++i)
            for (unsigned j = 0; j < 6; ++j) CHECK(led.at(i, j) == printed(j, r, t) * binomial(i + d - 1, d - 1));
        }
  auto two = e2_matrix(5, 3, 1, 2, 5);
  CHECK(two.at(4, 0) == 5 * 3);
  auto three = e2_matrix(5, 3, 1, 3, 5);
  CHECK(three.at(1, 2) == 6 * 1);
  CHECK(three.at(4, 0) == 15 * 3);
  auto flat = e2_matrix(2, 2, 0, 2, 5);
  for (unsigned i = 0; i <= 5; ++i) CHECK(flat.at(i, 2) == 0);
}

TEST_CASE("torsion model does not change sizes") {
  for (u64 p : {2, 3})
    for (unsigned t = 0; t <= 3; ++t)
      for (unsigned r = t + 1; r <= t + 3; ++r)
        for (unsigned d = 1; d <= 3; ++d)
          for (H1Model h : {H1Model::Tabulated, H1Model::UniversalCoefficients}) {
            auto a = e2_matrix(x_profile(p, r, t, TorsionModel::Cyclic, h), d, 5);
            auto b = e2_matrix(x_profile(p, r, t, TorsionModel::Elementary, h), d, 5);
            CHECK(a.entries == b.entries);
          }
}

TEST_CASE("obstruction thresholds") {
  auto o = free_action_obstruction(2, 1, 0, 2, true);
  CHECK(o.bound == 4);
  CHECK(o.obstructed);
  CHECK(free_action_obstruction(3, 5, 3, 2, true).bound == 5);
  CHECK(!free_action_obstruction(3, 5, 3, 2, true).obstructed);
  CHECK(free_action_obstruction(3, 6, 3, 2, true).bound == 9);
  CHECK(free_action_obstruction(3, 6, 3, 2, true).obstructed);
  CHECK(free_action_obstruction(2, 2, 1, 3, false).bound == 9);
  CHECK(free_action_obstruction(2, 2, 1, 3, false).obstructed);

  for (unsigned t = 0; t <= 6; ++t) {
    const unsigned least = 5 * t / 3 + 1;  // least integer > 5t/3
    for (unsigned r = t + 1; r <= t + 12; ++r) {
      auto rep = free_action_obstruction(2, r, t, 2, true);
      CHECK(rep.bound == 4LL * r - 5LL * t);
      CHECK(rep.obstructed == (r >= least));
      CHECK(rep.bound <= static_cast<long long>(rep.e40));
      auto rep3 = free_action_obstruction(3, r, t, 3, false);
      CHECK(rep3.bound == 8LL * r - 7LL * t);
      CHECK(rep3.bound <= static_cast<long long>(rep3.e40));
    }
    CHECK(free_action_obstruction(5, t + 1, t, 3, false).obstructed);
  }
  // without d2 vanishing the rank-2 corner never obstructs
  for (unsigned t = 0; t <= 4; ++t)
    for (unsigned r = t + 1; r <= t + 6; ++r) CHECK(!free_action_obstruction(2, r, t, 2, false).obstructed);
  // the UCT value of H^1 enlarges E(2,1)
  auto u = x_profile(2, 3, 1, TorsionModel::Cyclic, H1Model::UniversalCoefficients);
  CHECK(free_action_obstruction(u, 3, false).bound == 8 * 3 - 13 * 1);
  CHECK(free_action_obstruction(u, 2, true).bound == 4 * 3 - 5 * 1);

  CHECK(kind_of([] { free_action_obstruction(2, 2, 1, 4, true); }) == ErrorKind::UnsupportedRank);
  CHECK(kind_of([] { free_action_obstruction(2, 1, 1, 2, true); }) == ErrorKind::ProfileViolation);
}

TEST_CASE("cyclic corner") {
  auto z = cyclic_e2_profile(3, 2, 0);
  CHECK(z.h1_tp.is_zero());
  CHECK(z.bound_holds);
  auto c = cyclic_e2_profile(3, 2, 1);
  CHECK(c.h1_tp == FgAbelian::cyclic(3));
  CHECK(c.h1_tp_log == 1);
  CHECK(c.index_bound == 3);
  CHECK(c.entries[3][2] == FgAbelian::cyclic(3));
  // bottom row: H^sigma(BA; Z)
  CHECK(c.entries[0][0] == FgAbelian::integers());
  CHECK(c.entries[1][0].is_zero());
  CHECK(c.entries[2][0] == FgAbelian::cyclic(9));
  CHECK(c.entries[5][0].is_zero());
  CHECK(c.entries[0][5].is_zero());
  for (u64 p : {2, 3, 5})
    for (unsigned a = 1; a <= 4; ++a)
      for (unsigned t = 0; t <= 4; ++t) {
        auto e = cyclic_e2_profile(p, a, t);
        CHECK(e.bound_holds);
        CHECK(e.h1_tp_log == std::min(a, t));
        for (unsigned s = 1; s < 6; s += 2) CHECK(e.entries[s][0].is_zero());
      }
}
