#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "actionlab/automorphisms.hpp"
#include "actionlab/group.hpp"
#include "actionlab/numeric.hpp"
#include "actionlab/subgroups.hpp"

namespace actionlab {

/// 1 -> Z -> G -> A -> 1 with Z central. A fresh extension refers to the
/// caller's G (which must outlive it); reductions own the group they build.
struct CentralExtension {
  std::shared_ptr<const Group> g;
  Subgroup z;
  std::shared_ptr<const Quotient> a;  // a->group is G/Z, a->projection is pi
  /// Element i of *g as an element of the group it was reduced from
  /// (the identity map for a fresh extension).
  std::vector<Elem> embedding;

  const Group& group() const { return *g; }
  const Group& quotient_group() const { return a->group; }
  Elem project(Elem x) const { return a->projection[x]; }
};

/// Throws NotCentral if Z is not contained in the center of G.
CentralExtension make_central_extension(const Group& g, const Subgroup& z);

/// G_p = pi^-1(A_p[p]) over the same Z, so that the quotient is elementary
/// abelian. Throws NotAbelian if G/Z is not abelian.
CentralExtension elementary_reduction(const CentralExtension& ext, u64 p);

struct SkewFormWitness {
  u64 p = 0;                            // set when G/Z is elementary abelian p
  std::vector<Elem> basis;              // elements of A
  std::vector<std::vector<Elem>> values;  // Omega(basis_i, basis_j), elements of G
  std::vector<Elem> table;              // Omega(x, y) at x |A| + y
  Subgroup image;                       // Z_Omega
  std::size_t image_rank = 0;           // d(Z_Omega)
  bool bilinear_checked = false;        // A abelian, so bilinearity was verified
  std::size_t lifts_checked = 0;
};

/// Omega(a, b) = [a~, b~]. Verified independent of the lift (a second lift and
/// `random_lifts` random ones), skew, and bilinear when A is abelian; any
/// failure throws IllDefined.
SkewFormWitness omega_form(const CentralExtension& ext, unsigned random_lifts = 200,
                           std::uint64_t seed = 0x0e6a5eedULL);

/// A skew form on F_p^dim with values in F_p^target_dim:
/// omega[(i dim + j) target_dim + k] is coordinate k of Omega(e_i, e_j).
struct FpSkewForm {
  u64 p = 2;
  std::size_t dim = 0;
  std::size_t target_dim = 0;
  std::vector<u64> omega;
};

struct IsotropicResult {
  std::vector<std::vector<u64>> basis;  // of I, in the order chosen
  std::size_t dim = 0;
  std::size_t form_rank = 0;  // dim of the span of the values of Omega
  bool self_perp = false;     // I == I^perp
  bool dimension_bound = false;  // dim I >= dim A / (1 + form_rank)
};

/// Greedy maximal isotropic subspace: adjoin the first gamma in I^perp \ I
/// (vectors ordered by their base-p encoding, coordinate 0 least significant,
/// unless `order` lists the encodings to try).
IsotropicResult maximal_isotropic(const FpSkewForm& form, const std::vector<u64>* order = nullptr);

/// The F_p form of a witness over elementary abelian A.
FpSkewForm to_fp_form(const CentralExtension& ext, const SkewFormWitness& w);

struct IsotropicSubgroup {
  IsotropicResult fp;
  std::vector<Elem> members;  // I as elements of A, candidates tried by least index
};

/// Throws NotElementaryAbelian unless A is elementary abelian.
IsotropicSubgroup maximal_isotropic(const CentralExtension& ext, const SkewFormWitness& w);

struct PrimeReduction {
  u64 p = 0;
  std::size_t s_p = 0;          // rank of A_p[p]
  std::size_t isotropic_dim = 0;
  std::size_t omega_rank = 0;
  bool preimage_abelian = false;
  std::size_t preimage_generators = 0;  // d(pi^-1(I))
  Subgroup preimage;                    // pi^-1(I) as a subgroup of the input group
};

struct GenerationBoundReport {
  std::size_t s = 0;   // d(A)
  std::size_t r = 0;   // max d(B) over abelian B <= G
  u64 z_order = 1;
  u64 bound = 0;       // floor(r (log2 |Z| + 1))
  bool holds = false;
  std::vector<PrimeReduction> primes;
  std::optional<Subgroup> witness;  // pi^-1(I) for the prime with largest s_p
};

GenerationBoundReport generation_bound_check(const CentralExtension& ext);

struct AutPointwiseReport {
  u64 count = 0;        // #Aut_B^0(A)
  std::size_t r = 0;    // d(A)
  u64 index = 1;        // [A:B]
  u128 bound = 1;       // [A:B]^(r^2), saturating
  bool holds = false;
  std::optional<u64> enumerated;  // brute-force count, when requested and feasible
};

/// #Aut_B^0(A) counted exactly: endomorphisms as matrices on a cyclic
/// decomposition of A, rows constrained by B, invertibility read mod p.
AutPointwiseReport aut_pointwise_bound(const Group& a, const Subgroup& b, bool cross_check = false);

struct MnasEntry {
  Subgroup a;
  std::size_t r = 0;  // d(A)
  bool injective = false;
  std::size_t abelian_checked = 0;
  bool inequality_holds = true;
  std::optional<Subgroup> violating;  // first abelian B breaking [G:A] <= [G:B]^(r^2+1)
};

struct MnasReport {
  u64 p = 0;
  std::vector<MnasEntry> mnas;
  bool holds = true;
};

/// Throws NotPGroup unless |G| is a prime power.
MnasReport mnas_suite(const Group& g);

struct CharacteristicCoreReport {
  Subgroup a0, a1;
  u64 c = 1;
  std::size_t r = 0;
  u64 aut_order = 0, aut_a_order = 0;
  u64 aut_index = 0;          // [Aut(G):Aut_A(G)]
  u128 core_index_bound = 0;  // (C!)^r
  u128 aut_index_bound = 0;   // 2^(C (C!)^r), saturating
  bool chain = false;         // A0 <= A1 <= A
  bool characteristic = false;
  bool holds = false;
};

CharacteristicCoreReport characteristic_core(const Group& g, const Subgroup& a, u64 c);

}  // namespace actionlab
