#pragma once

#include <string>
#include <vector>

#include "actionlab/automorphisms.hpp"
#include "actionlab/group.hpp"
#include "actionlab/numeric.hpp"

namespace actionlab::zoo {

// Element orderings:
//   cyclic(n)          i <-> i
//   abelian([n1..nk])  mixed radix, last factor fastest
//   dihedral(n)        r^i <-> i, s r^i <-> n + i
//   quaternion(2^k)    a^i <-> i, a^i b <-> 2^(k-1) + i   (a^m = b^2, b a b^-1 = a^-1)
//   heisenberg(n)      [[1,a,c],[0,1,b],[0,0,1]] <-> a n^2 + b n + c
//   symmetric(n)       permutations of 0..n-1 in lexicographic image order
//   direct_product     (g, h) <-> g |H| + h
//   semidirect N x| H  (x, h) <-> x + |N| h, (x,h)(y,k) = (x phi_h(y), hk)

Group cyclic(u64 n);
Group abelian(const std::vector<u64>& orders);
Group dihedral(u64 n);
/// Generalized quaternion group of the given order 2^k, k >= 3.
Group quaternion(u64 order);
/// Upper unitriangular 3x3 matrices over Z/n.
Group heisenberg(u64 n);
/// Extraspecial group of order p^3 (p odd) with exponent p or p^2.
Group extraspecial(u64 p, u64 exponent);
Group symmetric(unsigned n);
Group alternating(unsigned n);
Group direct_product(const Group& g, const Group& h);

/// N x| H where generator h_gens[i] of H acts by the automorphism images[i]
/// of N. The action is extended along words and checked to be a well-defined
/// homomorphism H -> Aut(N).
Group semidirect(const Group& n, const Group& h, const std::vector<Elem>& h_gens,
                 const std::vector<ElementMap>& images);
/// Z/n x| Z/m with the generator of Z/m acting by x -> mult * x.
Group semidirect_cyclic(u64 n, u64 m, u64 mult);

struct CorpusEntry {
  std::string name;
  Group group;
};

/// Named groups of order <= max_order from every family, small products
/// included. Deterministic order.
std::vector<CorpusEntry> standard_corpus(std::size_t max_order = 128);

}  // namespace actionlab::zoo
