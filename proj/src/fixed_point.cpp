#include "actionlab/fixed_point.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "actionlab/error.hpp"

namespace actionlab {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// |sin(pi q)| for q = num/den in [0, 1), folded into [0, 1/2] first
long double sin_pi(const Rational& q) {
  const std::int64_t n = std::min(q.num, q.den - q.num);
  return std::sin(kPi * static_cast<long double>(n) / static_cast<long double>(q.den));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) fail(ErrorKind::ParamOutOfRange, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational Rational::parse(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto slash = s.find('/');
    std::int64_t n = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    if (slash == std::string::npos) return Rational(n);
    const std::string rest = s.substr(slash + 1);
    std::int64_t d = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidSpec, "not a rational: '" + s + "'");
  }
}

Rational Rational::frac() const { return Rational(mod(num, den), den); }

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den, b.den);
  return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
}

SignatureSum g_signature_sum(std::span<const FixedSurfaceDatum> data) {
  SignatureSum out;
  long double mass = 0;
  for (const auto& f : data) {
    const Rational q = f.rotation.frac();
    if (q.num == 0) fail(ErrorKind::DegenerateRotation, "rotation " + f.rotation.to_string() + " is trivial");
    const long double s = sin_pi(q);
    const long double term = static_cast<long double>(f.self_intersection) / (s * s);
    out.value += term;
    mass += std::fabs(term);
  }
  out.error_bound = mass * 16 * LDBL_EPSILON;
  return out;
}

bool signature_consistency(std::int64_t sigma, std::span<const FixedSurfaceDatum> data, double tol) {
  if (!(tol > 0)) fail(ErrorKind::ParamOutOfRange, "tolerance must be positive");
  if (sigma != 0 && data.empty()) return false;
  return std::fabs(g_signature_sum(data).value - static_cast<long double>(sigma)) < tol;
}

RootsConstants roots_constants(unsigned n) {
  if (n < 1) fail(ErrorKind::ParamOutOfRange, "n must be positive");
  return {std::sin(kPi / (4.0L * (n + 1))), 4ULL * (n + 1)};
}

bool sine_admissible(std::uint64_t x, std::uint64_t k, unsigned n) {
  // |sin(2 pi x/k)| = sin(pi y) with y = min(u, k-u)/k, u = 2x mod k, and sin is
  // increasing on [0, pi/2]
  const std::uint64_t u = (2 * (x % k)) % k;
  const std::uint64_t y = std::min(u, k - u);
  return 4 * (static_cast<std::uint64_t>(n) + 1) * y >= k;
}

namespace {

std::optional<std::uint64_t> good_exponent(std::uint64_t k, std::span<const std::int64_t> c) {
  const auto n = static_cast<unsigned>(c.size());
  for (std::uint64_t a = 1; a <= k; ++a) {
    bool ok = true;
    for (std::int64_t cj : c) {
      const auto x = static_cast<std::uint64_t>(mod(cj, static_cast<std::int64_t>(k)));
      if (!sine_admissible(a * x % k, k, n)) {
        ok = false;
        break;
      }
    }
    if (ok) return a;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t find_good_exponent(std::uint64_t k, std::span<const std::int64_t> exponents) {
  if (k < 2) fail(ErrorKind::ParamOutOfRange, "k must be at least 2");
  if (exponents.empty()) fail(ErrorKind::ParamOutOfRange, "need at least one exponent");
  for (std::int64_t c : exponents)
    if (std::gcd(mod(c, static_cast<std::int64_t>(k)), static_cast<std::int64_t>(k)) != 1)
      fail(ErrorKind::ParamOutOfRange, "exponent " + std::to_string(c) + " is not a unit mod " + std::to_string(k));
  auto a = good_exponent(k, exponents);
  if (!a) fail(ErrorKind::NoExponentFound, "no good exponent for k = " + std::to_string(k));
  return *a;
}

namespace {

struct KResult {
  std::uint64_t checked = 0;
  std::vector<std::int64_t> failing;
  bool failed = false;
};

// Nondecreasing tuples of units; a tuple is skipped when its negation sorts lower.
KResult verify_k(unsigned n, std::uint64_t k) {
  KResult res;
  std::vector<std::int64_t> units;
  for (std::uint64_t x = 1; x < k; ++x)
    if (std::gcd(x, k) == 1) units.push_back(static_cast<std::int64_t>(x));
  std::vector<std::size_t> idx(n, 0);
  std::vector<std::int64_t> tup(n), neg(n);
  const auto kk = static_cast<std::int64_t>(k);
  for (;;) {
    for (unsigned j = 0; j < n; ++j) {
      tup[j] = units[idx[j]];
      neg[j] = kk - tup[j];
    }
    std::sort(neg.begin(), neg.end());
    if (!(neg < tup)) {
      ++res.checked;
      if (!good_exponent(k, tup)) {
        res.failed = true;
        res.failing = tup;
        return res;
      }
    }
    // next nondecreasing index tuple
    int j = static_cast<int>(n) - 1;
    while (j >= 0 && idx[j] + 1 == units.size()) --j;
    if (j < 0) break;
    ++idx[j];
    for (unsigned l = j + 1; l < n; ++l) idx[l] = idx[j];
  }
  return res;
}

template <bool Parallel>
RootsVerification roots_verify_impl(unsigned n, std::uint64_t kmax) {
  if (n < 1 || n > 3) fail(ErrorKind::ParamOutOfRange, "n must be 1, 2 or 3");
  if (kmax > 120) fail(ErrorKind::ParamOutOfRange, "kmax must be at most 120");
  RootsVerification out;
  out.n = n;
  out.kmax = kmax;
  const std::uint64_t k0 = roots_constants(n).k0;
  if (kmax < k0) return out;
  std::vector<KResult> per(kmax - k0 + 1);
  const auto count = static_cast<std::int64_t>(per.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::int64_t i = 0; i < count; ++i) per[i] = verify_k(n, k0 + static_cast<std::uint64_t>(i));
  for (std::size_t i = 0; i < per.size(); ++i) {
    out.tuples_checked += per[i].checked;
    if (per[i].failed && out.holds) {
      out.holds = false;
      out.failing_k = k0 + i;
      out.failing_exponents = per[i].failing;
    }
  }
  return out;
}

}  // namespace

RootsVerification exhaustive_roots_verify(unsigned n, std::uint64_t kmax) { return roots_verify_impl<true>(n, kmax); }

namespace serial {
RootsVerification exhaustive_roots_verify(unsigned n, std::uint64_t kmax) {
  return roots_verify_impl<false>(n, kmax);
}
}  // namespace serial

SignBalanceReport lemma104_check(std::span<const FixedSurfaceDatum> data, unsigned n_bound, double tol) {
  if (n_bound < 1) fail(ErrorKind::ParamOutOfRange, "n_bound must be positive");
  if (!(tol > 0)) fail(ErrorKind::ParamOutOfRange, "tolerance must be positive");
  if (data.empty()) fail(ErrorKind::PreconditionViolated, "no fixed surfaces");
  if (data.size() > n_bound)
    fail(ErrorKind::PreconditionViolated,
         std::to_string(data.size()) + " surfaces exceed the bound " + std::to_string(n_bound));
  SignBalanceReport rep;
  rep.delta = roots_constants(n_bound).delta;
  rep.lambda = rep.delta * rep.delta / n_bound;
  for (const auto& f : data) {
    const Rational q = f.rotation.frac();
    if (q.num == 0) fail(ErrorKind::DegenerateRotation, "rotation " + f.rotation.to_string() + " is trivial");
    // |sin(pi q)| >= sin(pi/(4(n+1))) iff min(q, 1-q) >= 1/(4(n+1))
    const std::int64_t y = std::min(q.num, q.den - q.num);
    if (4 * (static_cast<std::int64_t>(n_bound) + 1) * y < q.den)
      fail(ErrorKind::PreconditionViolated, "rotation " + f.rotation.to_string() + " has weight above delta^-2");
  }
  const SignatureSum s = g_signature_sum(data);
  rep.weighted_sum = s.value;
  if (std::fabs(s.value) > tol)
    fail(ErrorKind::PreconditionViolated, "weighted self-intersections do not sum to zero");
  rep.mu_max = rep.mu_min = data[0].self_intersection;
  for (const auto& f : data) {
    rep.mu_max = std::max(rep.mu_max, f.self_intersection);
    rep.mu_min = std::min(rep.mu_min, f.self_intersection);
  }
  const auto mM = static_cast<long double>(rep.mu_max), mm = static_cast<long double>(rep.mu_min);
  rep.margin_max = mM + rep.lambda * mm;
  rep.margin_min = -rep.lambda * mM - mm;
  rep.holds = rep.margin_max >= 0 && -rep.lambda * mm >= 0 && rep.margin_min >= 0 && -rep.lambda * mM <= 0;
  return rep;
}

unsigned so4_product_fixed_dim(const RotationBlockPair& u, const RotationBlockPair& v) {
  for (const Rational* q : {&u.q1, &u.q2, &v.q1, &v.q2})
    if (q->num < 0 || q->num >= q->den) fail(ErrorKind::ParamOutOfRange, "rotation numbers must lie in [0, 1)");
  unsigned dim = 0;
  if ((u.q1 + v.q1).is_integer()) dim += 2;
  if ((u.q2 + v.q2).is_integer()) dim += 2;
  return dim;
}

}  // namespace actionlab
