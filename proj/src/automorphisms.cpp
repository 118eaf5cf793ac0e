#include "actionlab/automorphisms.hpp"

#include <algorithm>

#include "actionlab/error.hpp"
#include "actionlab/kernels.hpp"

namespace actionlab {

std::vector<ElementMap> automorphism_group(const Group& g, const Limits& limits) {
  if (g.order() > limits.automorphism_order_cap)
    fail(ErrorKind::OrderCapExceeded, "automorphism search needs |G| <= " +
                                          std::to_string(limits.automorphism_order_cap) + ", got " +
                                          std::to_string(g.order()));
  const auto gens = greedy_generators(Subgroup::whole(g));
  return kernels::automorphism_search(g, gens, limits.automorphism_count_cap);
}

ElementMap compose(const ElementMap& a, const ElementMap& b) {
  ElementMap out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

namespace {

std::vector<std::size_t> order_histogram(const Group& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

struct IsoSearch {
  const Group& g;
  const Group& h;
  std::vector<Elem> gens, order, parent;
  std::vector<unsigned> via;
  std::vector<Elem> img;

  bool leaf(ElementMap& phi) const {
    phi.assign(g.order(), 0);
    for (std::size_t k = 1; k < order.size(); ++k) phi[order[k]] = h.mul(phi[parent[order[k]]], img[via[order[k]]]);
    ElementSet hit(h.order());
    for (Elem x = 0; x < g.order(); ++x)
      if (!hit.insert(phi[x])) return false;
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
    return true;
  }

  bool dfs(std::size_t i, ElementMap& phi) {
    if (i == gens.size()) return leaf(phi);
    for (Elem c = 0; c < h.order(); ++c) {
      if (h.element_order(c) != g.element_order(gens[i])) continue;
      // images of generators must commute exactly when the generators do
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = (g.mul(gens[i], gens[j]) == g.mul(gens[j], gens[i])) == (h.mul(c, img[j]) == h.mul(img[j], c));
      if (!ok) continue;
      img[i] = c;
      if (dfs(i + 1, phi)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<ElementMap> find_isomorphism(const Group& g, const Group& h) {
  if (g.order() != h.order() || order_histogram(g) != order_histogram(h)) return std::nullopt;
  IsoSearch s{g, h, greedy_generators(Subgroup::whole(g)), {0}, {}, {}, {}};
  s.parent.assign(g.order(), 0);
  s.via.assign(g.order(), 0);
  ElementSet seen(g.order());
  seen.insert(0);
  for (std::size_t k = 0; k < s.order.size(); ++k)
    for (unsigned j = 0; j < s.gens.size(); ++j) {
      const Elem y = g.mul(s.order[k], s.gens[j]);
      if (seen.insert(y)) {
        s.order.push_back(y);
        s.parent[y] = s.order[k];
        s.via[y] = j;
      }
    }
  s.img.assign(s.gens.size(), 0);
  ElementMap phi;
  if (s.dfs(0, phi)) return phi;
  return std::nullopt;
}

}  // namespace actionlab
