#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace actionlab {

/// Exact rational in lowest terms with positive denominator.
struct Rational {
  std::int64_t num = 0, den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  /// "a/m" or "a".
  static Rational parse(const std::string& s);

  /// Representative of this mod 1 in [0, 1).
  Rational frac() const;
  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A fixed surface: normal rotation by 2*pi*rotation, self-intersection S.S.
struct FixedSurfaceDatum {
  Rational rotation;
  std::int64_t self_intersection = 0;
};

struct SignatureSum {
  long double value = 0;
  long double error_bound = 0;
};

/// Sum of sin^-2(pi q) * S.S. Rotations are taken mod 1; q = 0 throws DegenerateRotation.
SignatureSum g_signature_sum(std::span<const FixedSurfaceDatum> data);

/// |g_signature_sum - sigma| < tol, and a nonzero signature needs a fixed surface.
bool signature_consistency(std::int64_t sigma, std::span<const FixedSurfaceDatum> data, double tol);

struct RootsConstants {
  long double delta = 0;  // sin(pi / (4(n+1)))
  std::uint64_t k0 = 0;   // 4(n+1)
};

RootsConstants roots_constants(unsigned n);

/// |sin(2 pi x / k)| >= sin(pi / (4(n+1))) for the residue x, decided in integers.
bool sine_admissible(std::uint64_t x, std::uint64_t k, unsigned n);

/// Least a in 1..k with |sin(2 pi a c_j / k)| >= delta(n) for all j, n = exponents.size().
/// Throws ParamOutOfRange when some c_j is not a unit mod k and NoExponentFound
/// when no a works (only possible below k0).
std::uint64_t find_good_exponent(std::uint64_t k, std::span<const std::int64_t> exponents);

struct RootsVerification {
  bool holds = true;
  unsigned n = 1;
  std::uint64_t kmax = 0;
  std::uint64_t tuples_checked = 0;
  std::optional<std::uint64_t> failing_k;
  std::vector<std::int64_t> failing_exponents;
};

/// Every k in [k0(n), kmax] and every n-tuple of units mod k, up to order and a
/// simultaneous sign change. n <= 3, kmax <= 120.
RootsVerification exhaustive_roots_verify(unsigned n, std::uint64_t kmax);
namespace serial {
RootsVerification exhaustive_roots_verify(unsigned n, std::uint64_t kmax);
}

struct SignBalanceReport {
  long double delta = 0, lambda = 0;
  std::int64_t mu_max = 0, mu_min = 0;
  long double weighted_sum = 0;
  long double margin_max = 0;  // mu_M - (-lambda mu_m)
  long double margin_min = 0;  // (-lambda mu_M) - mu_m
  bool holds = false;
};

/// Sign balance for a zero-signature fixed set. lambda = delta(n_bound)^2 / n_bound.
/// Throws PreconditionViolated unless 1 <= size <= n_bound, every |sin(pi q)| >=
/// delta(n_bound), and the weighted sum vanishes within tol.
SignBalanceReport lemma104_check(std::span<const FixedSurfaceDatum> data, unsigned n_bound, double tol);

/// Block rotations on the two planes of a fixed orthogonal splitting of R^4.
struct RotationBlockPair {
  Rational q1, q2;
};

/// dim Ker(UV - 1) = 2 #{i : u_i + v_i = 0 mod 1}.
unsigned so4_product_fixed_dim(const RotationBlockPair& u, const RotationBlockPair& v);

}  // namespace actionlab
