#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "actionlab/error.hpp"
#include "actionlab/fixed_point.hpp"

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

FixedSurfaceDatum fs(const char* q, std::int64_t s) { return {Rational::parse(q), s}; }

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-1/3").frac() == Rational(2, 3));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK((Rational(1, 3) + Rational(2, 3)).is_integer());
  CHECK(Rational(1, 6) + Rational(1, 4) == Rational(5, 12));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(kind_of([] { Rational::parse("1/x"); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("g-signature sums") {
  std::vector<FixedSurfaceDatum> sym = {fs("1/2", 1), fs("1/2", -1)};
  CHECK(std::fabs(g_signature_sum(sym).value) < 1e-12);
  std::vector<FixedSurfaceDatum> one = {fs("1/4", 2)};
  auto s = g_signature_sum(one);
  CHECK(std::fabs(s.value - 4.0L) < 1e-15L);
  CHECK(s.error_bound > 0);
  CHECK(s.error_bound < 1e-15L);
  std::vector<FixedSurfaceDatum> thirds = {fs("1/3", 3), fs("1/3", -3)};
  CHECK(std::fabs(g_signature_sum(thirds).value) < 1e-12);
  CHECK(g_signature_sum(std::vector<FixedSurfaceDatum>{}).value == 0);
  std::vector<FixedSurfaceDatum> bad = {fs("0/5", 1)};
  CHECK(kind_of([&] { g_signature_sum(bad); }) == ErrorKind::DegenerateRotation);
  std::vector<FixedSurfaceDatum> whole = {fs("1", 1)};
  CHECK(kind_of([&] { g_signature_sum(whole); }) == ErrorKind::DegenerateRotation);
}

TEST_CASE("g-signature linearity, permutation and complement invariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FixedSurfaceDatum> d, d2, comp;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 30);
      const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (m - 1));
      const std::int64_t s = static_cast<std::int64_t>(rng() % 21) - 10, s2 = static_cast<std::int64_t>(rng() % 21) - 10;
      d.push_back({Rational(a, m), s});
      d2.push_back({Rational(a, m), s2});
      comp.push_back({Rational(m - a, m), s});
    }
    const long double x = g_signature_sum(d).value, y = g_signature_sum(d2).value;
    std::vector<FixedSurfaceDatum> sum = d;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i].self_intersection = 3 * d[i].self_intersection + d2[i].self_intersection;
    const long double tol = 1e-12L * (1 + std::fabs(x) + std::fabs(y));
    CHECK(std::fabs(g_signature_sum(sum).value - (3 * x + y)) < 4 * tol);
    std::vector<FixedSurfaceDatum> rev(d.rbegin(), d.rend());
    CHECK(std::fabs(g_signature_sum(rev).value - x) < tol);
    CHECK(std::fabs(g_signature_sum(comp).value - x) < tol);
  }
}

TEST_CASE("signature consistency") {
  std::vector<FixedSurfaceDatum> none;
  CHECK(signature_consistency(0, none, 1e-9));
  CHECK(!signature_consistency(1, none, 1e-9));
  std::vector<FixedSurfaceDatum> one = {fs("1/4", 2)};
  CHECK(signature_consistency(4, one, 1e-9));
  CHECK(!signature_consistency(3, one, 1e-9));
  CHECK(kind_of([&] { signature_consistency(4, one, 0); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("roots constants and exponents") {
  auto c1 = roots_constants(1);
  CHECK(std::fabs(static_cast<double>(c1.delta) - 0.3826834323650898) < 1e-12);
  CHECK(c1.k0 == 8);
  CHECK(roots_constants(2).k0 == 12);
  long double prev = 1;
  for (unsigned n = 1; n <= 200; ++n) {
    CHECK(roots_constants(n).delta < prev);
    prev = roots_constants(n).delta;
  }
  std::vector<std::int64_t> c = {1};
  CHECK(find_good_exponent(4, c) == 1);
  CHECK(find_good_exponent(8, c) == 1);  // sin(pi/4) already clears sin(pi/8)
  std::vector<std::int64_t> c2 = {1, 5};
  const auto a = find_good_exponent(12, c2);
  const long double d2 = roots_constants(2).delta;
  for (auto cj : c2) CHECK(std::fabs(std::sin(2 * M_PIl * static_cast<long double>(a * cj) / 12)) >= d2 - 1e-15L);
  std::vector<std::int64_t> nonunit = {2};
  CHECK(kind_of([&] { find_good_exponent(8, nonunit); }) == ErrorKind::ParamOutOfRange);
  // below k0 the search can fail: every power of -1 has zero sine
  CHECK(kind_of([&] { find_good_exponent(2, c); }) == ErrorKind::NoExponentFound);
}

TEST_CASE("integer admissibility agrees with floating point away from the boundary") {
  for (unsigned n = 1; n <= 3; ++n) {
    const long double delta = roots_constants(n).delta;
    for (std::uint64_t k = 2; k <= 120; ++k)
      for (std::uint64_t x = 0; x < k; ++x) {
        const long double v = std::fabs(std::sin(2 * M_PIl * static_cast<long double>(x) / static_cast<long double>(k)));
        if (std::fabs(v - delta) < 1e-15L) continue;
        CHECK(sine_admissible(x, k, n) == (v >= delta));
      }
  }
  // sin(2 pi/16) is exactly delta(1)
  CHECK(sine_admissible(1, 16, 1));
}

TEST_CASE("exhaustive roots verification") {
  auto r1 = exhaustive_roots_verify(1, 60);
  CHECK(r1.holds);
  CHECK(r1.tuples_checked > 0);
  auto r2 = exhaustive_roots_verify(2, 48);
  CHECK(r2.holds);
  auto s2 = serial::exhaustive_roots_verify(2, 48);
  CHECK(s2.holds);
  CHECK(s2.tuples_checked == r2.tuples_checked);
  CHECK(exhaustive_roots_verify(1, 7).tuples_checked == 0);
  CHECK(kind_of([] { exhaustive_roots_verify(4, 60); }) == ErrorKind::ParamOutOfRange);
  CHECK(kind_of([] { exhaustive_roots_verify(1, 121); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("sign balance examples") {
  std::vector<FixedSurfaceDatum> sym = {fs("1/2", 1), fs("1/2", -1)};
  auto r = lemma104_check(sym, 2, 1e-9);
  CHECK(r.mu_max == 1);
  CHECK(r.mu_min == -1);
  CHECK(r.holds);
  std::vector<FixedSurfaceDatum> mixed = {fs("1/4", 1), fs("1/2", -2)};
  auto m = lemma104_check(mixed, 2, 1e-9);
  CHECK(m.holds);
  CHECK(std::fabs(static_cast<double>(m.lambda) - 0.0334936) < 1e-6);
  std::vector<FixedSurfaceDatum> same = {fs("1/2", 1), fs("1/3", 2)};
  CHECK(kind_of([&] { lemma104_check(same, 2, 1e-9); }) == ErrorKind::PreconditionViolated);
  std::vector<FixedSurfaceDatum> tiny = {fs("1/50", 1), fs("49/50", -1)};
  CHECK(kind_of([&] { lemma104_check(tiny, 2, 1e-9); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { lemma104_check(sym, 1, 1e-9); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("sign balance on random zero-sum configurations") {
  // weights 1, 2, 4 from rotations 1/2, 1/4, 1/6
  const char* rot[] = {"1/2", "1/4", "1/6"};
  const std::int64_t weight[] = {1, 2, 4};
  std::mt19937_64 rng(104);
  int done = 0;
  while (done < 1000) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<FixedSurfaceDatum> d;
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::int64_t s = static_cast<std::int64_t>(rng() % 19) - 9;
      if (s == 0) s = 1;
      const std::size_t w = rng() % 3;
      d.push_back(fs(rot[w], s));
      total += weight[w] * s;
    }
    if (total == 0) continue;
    d.push_back(fs("1/2", -total));  // balance with weight 1
    const unsigned bound = static_cast<unsigned>(n);
    auto rep = lemma104_check(d, bound, 1e-9);
    CHECK(rep.mu_max > 0);
    CHECK(rep.mu_min < 0);
    CHECK(rep.margin_max >= 0);
    CHECK(rep.margin_min >= 0);
    CHECK(rep.holds);
    ++done;
  }
}

TEST_CASE("commuting rotations in SO(4)") {
  auto R = [](std::int64_t a, std::int64_t m) { return Rational(a, m); };
  CHECK(so4_product_fixed_dim({R(0, 1), R(0, 1)}, {R(0, 1), R(0, 1)}) == 4);
  CHECK(so4_product_fixed_dim({R(0, 1), R(1, 3)}, {R(1, 3), R(0, 1)}) == 0);
  CHECK(so4_product_fixed_dim({R(0, 1), R(1, 3)}, {R(0, 1), R(2, 3)}) == 4);
  CHECK(so4_product_fixed_dim({R(1, 2), R(1, 3)}, {R(1, 2), R(1, 3)}) == 2);
  for (std::int64_t p : {3, 5, 7, 11})
    for (std::int64_t a = 1; a < p; ++a)
      for (std::int64_t b = 1; b < p; ++b) CHECK(so4_product_fixed_dim({R(0, 1), R(a, p)}, {R(b, p), R(0, 1)}) == 0);
  CHECK(kind_of([&] { so4_product_fixed_dim({R(1, 1), R(0, 1)}, {R(0, 1), R(0, 1)}); }) == ErrorKind::ParamOutOfRange);
}
