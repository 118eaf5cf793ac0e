#include "actionlab/structure.hpp"

#include <map>

#include "actionlab/error.hpp"

namespace actionlab {

Subgroup centralizer(const Group& g, const Subgroup& h) {
  const auto gens = greedy_generators(h);
  ElementSet mask(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) mask.insert(x);
  }
  return Subgroup::assume_closed(g, std::move(mask));
}

Subgroup center(const Group& g) { return centralizer(g, Subgroup::whole(g)); }

Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto gens = greedy_generators(h);
  ElementSet mask(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem s : gens)
      if (!h.contains(g.conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) mask.insert(x);
  }
  return Subgroup::assume_closed(g, std::move(mask));
}

bool is_normal(const Subgroup& h) {
  const Group& g = h.parent();
  const auto gens = greedy_generators(h);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : gens)
      if (!h.contains(g.conjugate(s, x))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto gens = greedy_generators(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const Group& g = a.parent();
  ElementSet comms(g.order());
  std::vector<Elem> gens;
  for (Elem x : a.members())
    for (Elem y : b.members())
      if (comms.insert(g.commutator(x, y))) gens.push_back(g.commutator(x, y));
  return generate(g, gens);
}

Subgroup derived_subgroup(const Group& g) {
  const auto w = Subgroup::whole(g);
  return commutator_subgroup(w, w);
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  const auto whole = series.front();
  while (true) {
    auto next = commutator_subgroup(series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> nilpotency_class(const Group& g) {
  if (g.order() == 1) return 0U;
  const auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

std::optional<unsigned> nilpotency_class(const Subgroup& h) {
  if (h.is_whole()) return nilpotency_class(h.parent());
  return nilpotency_class(h.as_group());
}

std::vector<u64> abelian_invariants(const Subgroup& h) {
  const Group& g = h.parent();
  if (!is_abelian(h)) fail(ErrorKind::NotAbelian, "invariant factors need an abelian group");
  std::vector<u64> prime_powers;
  for (auto [p, e] : factorize(h.order())) {
    // cnt[k] = #{x : x^(p^k) = 1} = p^(n_k); factors of exponent >= k number n_k - n_{k-1}
    std::vector<unsigned> n_k{0};
    for (unsigned k = 1; k <= e; ++k) {
      const u64 pk = checked_pow(p, k);
      std::size_t cnt = 0;
      for (Elem x : h.members())
        if (pk % g.element_order(x) == 0) ++cnt;
      n_k.push_back(floor_log(cnt, p));
    }
    for (unsigned k = 1; k <= e; ++k) {
      const unsigned at_least_k = n_k[k] - n_k[k - 1];
      const unsigned at_least_next = k < e ? n_k[k + 1] - n_k[k] : 0;
      for (unsigned c = 0; c < at_least_k - at_least_next; ++c) prime_powers.push_back(checked_pow(p, k));
    }
  }
  return invariant_factors(prime_powers);
}

std::size_t min_generators(const Subgroup& h) { return abelian_invariants(h).size(); }

std::optional<u64> p_group_prime(const Subgroup& h) {
  auto pp = prime_power(h.order());
  if (!pp) return std::nullopt;
  return pp->first;
}

StructureReport structure_report(const Group& g) {
  StructureReport r;
  r.order = g.order();
  r.center = center(g);
  r.derived = derived_subgroup(g);
  r.nilpotency_class = nilpotency_class(g);
  r.abelian = g.is_abelian();
  if (r.abelian) {
    r.invariant_factors = abelian_invariants(Subgroup::whole(g));
    r.min_generators = r.invariant_factors.size();
  }
  return r;
}

}  // namespace actionlab
