#include "actionlab/zoo.hpp"

#include <algorithm>
#include <numeric>

#include "actionlab/error.hpp"
#include "actionlab/permutation.hpp"

namespace actionlab::zoo {

namespace {

constexpr u64 kMaxFamilyOrder = 1u << 16;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::ParamOutOfRange, what);
}

template <class Mul>
Group tabulate(std::size_t n, Mul mul) {
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Elem>(mul(i, j));
  return Group::trusted(std::move(flat), n);
}

}  // namespace

Group cyclic(u64 n) {
  require(n >= 1 && n <= kMaxFamilyOrder, "cyclic(n) needs 1 <= n <= 65536");
  return tabulate(n, [n](u64 i, u64 j) { return (i + j) % n; });
}

Group abelian(const std::vector<u64>& orders) {
  u64 total = 1;
  for (u64 m : orders) {
    require(m >= 1, "abelian factors must be positive");
    total *= m;
    require(total <= kMaxFamilyOrder, "abelian group too large");
  }
  const std::size_t k = orders.size();
  return tabulate(total, [&](u64 i, u64 j) {
    u64 out = 0, place = 1;
    for (std::size_t f = k; f-- > 0;) {
      const u64 m = orders[f];
      const u64 d = ((i / place) % m + (j / place) % m) % m;
      out += d * place;
      place *= m;
    }
    return out;
  });
}

Group dihedral(u64 n) {
  require(n >= 1 && 2 * n <= kMaxFamilyOrder, "dihedral(n) needs n >= 1");
  // s^e r^i with r^i s = s r^-i; index = e n + i
  return tabulate(2 * n, [n](u64 x, u64 y) {
    const u64 e1 = x / n, i1 = x % n, e2 = y / n, i2 = y % n;
    const u64 i = (e2 ? (n - i1) % n + i2 : i1 + i2) % n;
    return ((e1 + e2) % 2) * n + i;
  });
}

Group quaternion(u64 order) {
  const auto pp = prime_power(order);
  require(pp && pp->first == 2 && pp->second >= 3 && order <= kMaxFamilyOrder, "quaternion needs order 2^k, k >= 3");
  const u64 n = order / 2;  // |<a>|, b^2 = a^(n/2), b a = a^-1 b
  // elements a^i b^e, index e n + i
  return tabulate(order, [n](u64 x, u64 y) {
    const u64 e1 = x / n, i1 = x % n, e2 = y / n, i2 = y % n;
    if (!e1) return e2 * n + (i1 + i2) % n;
    // a^i1 b a^i2 b^e2 = a^(i1 - i2) b^(1+e2)
    u64 i = (i1 + n - i2) % n;
    if (e2) i = (i + n / 2) % n;  // b^2 = a^(n/2)
    return (e2 ? 0 : n) + i;
  });
}

Group heisenberg(u64 n) {
  require(n >= 2 && n * n * n <= kMaxFamilyOrder, "heisenberg(n) needs n >= 2");
  return tabulate(n * n * n, [n](u64 x, u64 y) {
    const u64 a = x / (n * n), b = (x / n) % n, c = x % n;
    const u64 a2 = y / (n * n), b2 = (y / n) % n, c2 = y % n;
    return ((a + a2) % n) * n * n + ((b + b2) % n) * n + (c + c2 + a * b2) % n;
  });
}

Group extraspecial(u64 p, u64 exponent) {
  require(is_prime(p) && p % 2 == 1, "extraspecial needs an odd prime");
  require(exponent == p || exponent == p * p, "extraspecial exponent must be p or p^2");
  if (exponent == p) return heisenberg(p);
  return semidirect_cyclic(p * p, p, 1 + p);
}

Group symmetric(unsigned n) {
  require(n >= 1 && n <= 5, "symmetric(n) needs 1 <= n <= 5");
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> perms;
  do perms.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return group_from_permutations(perms);
}

Group alternating(unsigned n) {
  require(n >= 1 && n <= 5, "alternating(n) needs 1 <= n <= 5");
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<Permutation> perms;
  do {
    Permutation p(img);
    if (p.is_even()) perms.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return group_from_permutations(perms);
}

Group direct_product(const Group& g, const Group& h) {
  const std::size_t m = h.order();
  require(g.order() * m <= kMaxFamilyOrder, "direct product too large");
  return tabulate(g.order() * m, [&](std::size_t x, std::size_t y) {
    return static_cast<std::size_t>(g.mul(static_cast<Elem>(x / m), static_cast<Elem>(y / m))) * m +
           h.mul(static_cast<Elem>(x % m), static_cast<Elem>(y % m));
  });
}

Group semidirect(const Group& n, const Group& h, const std::vector<Elem>& h_gens,
                 const std::vector<ElementMap>& images) {
  require(h_gens.size() == images.size(), "semidirect: one image per acting generator");
  require(n.order() * h.order() <= kMaxFamilyOrder, "semidirect product too large");
  const std::size_t nn = n.order();
  for (const auto& phi : images) {
    require(phi.size() == nn, "semidirect: action map has the wrong size");
    ElementSet hit(nn);
    for (Elem x : phi) require(x < nn && hit.insert(x), "semidirect: action map is not a bijection");
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        require(phi[n.mul(a, b)] == n.mul(phi[a], phi[b]), "semidirect: action map is not an automorphism");
  }
  // extend along right multiplication by generators
  std::vector<ElementMap> act(h.order());
  ElementMap id(nn);
  std::iota(id.begin(), id.end(), Elem{0});
  act[0] = id;
  std::vector<Elem> queue{0};
  ElementSet seen(h.order());
  seen.insert(0);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t j = 0; j < h_gens.size(); ++j) {
      const Elem y = h.mul(queue[k], h_gens[j]);
      // phi_{x g} = phi_x o phi_g
      ElementMap m(nn);
      for (Elem v = 0; v < nn; ++v) m[v] = act[queue[k]][images[j][v]];
      if (seen.insert(y)) {
        act[y] = std::move(m);
        queue.push_back(y);
      } else {
        require(act[y] == m, "semidirect: action is not a homomorphism");
      }
    }
  require(queue.size() == h.order(), "semidirect: acting generators do not generate");
  return tabulate(nn * h.order(), [&](std::size_t x, std::size_t y) {
    const Elem x1 = static_cast<Elem>(x % nn), h1 = static_cast<Elem>(x / nn);
    const Elem x2 = static_cast<Elem>(y % nn), h2 = static_cast<Elem>(y / nn);
    return static_cast<std::size_t>(n.mul(x1, act[h1][x2])) + nn * h.mul(h1, h2);
  });
}

Group semidirect_cyclic(u64 n, u64 m, u64 mult) {
  require(n >= 1 && m >= 1, "semidirect_cyclic needs positive orders");
  require(std::gcd(mult % n, n) == 1 || n == 1, "multiplier must be a unit mod n");
  u64 pw = 1;
  for (u64 i = 0; i < m; ++i) pw = static_cast<u64>(static_cast<u128>(pw) * mult % n);
  require(pw % n == 1 % n, "multiplier^m must be 1 mod n");
  const Group base = cyclic(n), top = cyclic(m);
  ElementMap phi(n);
  for (u64 x = 0; x < n; ++x) phi[x] = static_cast<Elem>(static_cast<u128>(x) * mult % n);
  const std::vector<Elem> gens = m > 1 ? std::vector<Elem>{1} : std::vector<Elem>{};
  std::vector<ElementMap> images;
  if (m > 1) images.push_back(phi);
  return semidirect(base, top, gens, images);
}

std::vector<CorpusEntry> standard_corpus(std::size_t max_order) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, u64 order, auto make) {
    if (order <= max_order) out.push_back({std::move(name), make()});
  };
  for (u64 n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 27, 32})
    add("cyclic(" + std::to_string(n) + ")", n, [n] { return cyclic(n); });
  const std::vector<std::vector<u64>> types = {{2, 2},    {2, 4},    {2, 2, 2}, {3, 3},    {2, 8},   {4, 4},
                                               {2, 2, 4}, {2, 2, 2, 2}, {3, 9},  {3, 3, 3}, {2, 2, 2, 2, 2},
                                               {4, 8},    {5, 5},    {2, 6}};
  for (const auto& t : types) {
    std::string name = "abelian(";
    u64 order = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      name += (i ? "," : "") + std::to_string(t[i]);
      order *= t[i];
    }
    add(name + ")", order, [&t] { return abelian(t); });
  }
  for (u64 n : {3, 4, 5, 6, 8, 16})
    add("dihedral(" + std::to_string(n) + ")", 2 * n, [n] { return dihedral(n); });
  for (u64 q : {8, 16, 32}) add("quaternion(" + std::to_string(q) + ")", q, [q] { return quaternion(q); });
  for (u64 n : {2, 3, 4, 5})
    add("heisenberg(" + std::to_string(n) + ")", n * n * n, [n] { return heisenberg(n); });
  add("extraspecial(3,9)", 27, [] { return extraspecial(3, 9); });
  add("extraspecial(5,5)", 125, [] { return extraspecial(5, 5); });
  add("extraspecial(5,25)", 125, [] { return extraspecial(5, 25); });
  add("symmetric(3)", 6, [] { return symmetric(3); });
  add("alternating(4)", 12, [] { return alternating(4); });
  add("symmetric(4)", 24, [] { return symmetric(4); });
  add("alternating(5)", 60, [] { return alternating(5); });
  add("quaternion(8)xcyclic(2)", 16, [] { return direct_product(quaternion(8), cyclic(2)); });
  add("dihedral(4)xcyclic(2)", 16, [] { return direct_product(dihedral(4), cyclic(2)); });
  add("dihedral(4)xcyclic(4)", 32, [] { return direct_product(dihedral(4), cyclic(4)); });
  add("heisenberg(2)xheisenberg(2)", 64, [] { return direct_product(heisenberg(2), heisenberg(2)); });
  add("heisenberg(3)xcyclic(3)", 81, [] { return direct_product(heisenberg(3), cyclic(3)); });
  add("semidirect(7,3,2)", 21, [] { return semidirect_cyclic(7, 3, 2); });
  add("semidirect(16,2,9)", 32, [] { return semidirect_cyclic(16, 2, 9); });
  add("semidirect(16,2,7)", 32, [] { return semidirect_cyclic(16, 2, 7); });
  return out;
}

}  // namespace actionlab::zoo
