#include "actionlab/subgroups.hpp"

#include <algorithm>
#include <unordered_map>

#include "actionlab/error.hpp"
#include "actionlab/kernels.hpp"
#include "actionlab/structure.hpp"

namespace actionlab {

std::vector<Subgroup> enumerate_subgroups(const Group& g, std::size_t max_order) {
  if (max_order == 0) max_order = default_limits().subgroup_order_cap;
  if (g.order() > max_order)
    fail(ErrorKind::OrderCapExceeded,
         "subgroup enumeration needs |G| <= " + std::to_string(max_order) + ", got " + std::to_string(g.order()));

  std::vector<kernels::GeneratedSubgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto add = [&](kernels::GeneratedSubgroup s) {
    if (index.emplace(s.mask, found.size()).second) {
      found.push_back(std::move(s));
      return true;
    }
    return false;
  };

  ElementSet trivial(g.order());
  trivial.insert(0);
  add({trivial, {}});

  std::vector<kernels::GeneratedSubgroup> frontier;
  std::vector<Elem> extenders;  // one generator per prime-power cyclic subgroup
  for (Elem x = 1; x < g.order(); ++x) {
    const Elem gen[] = {x};
    auto c = generate(g, gen);
    kernels::GeneratedSubgroup s{c.mask(), {x}};
    if (add(s)) {
      frontier.push_back(s);
      if (prime_power(g.element_order(x))) extenders.push_back(x);
    }
  }
  while (!frontier.empty()) {
    auto joins = kernels::extend_frontier(g, frontier, extenders);
    std::vector<kernels::GeneratedSubgroup> next;
    for (auto& per : joins)
      for (auto& s : per)
        if (add(s)) next.push_back(s);
    frontier = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Subgroup::assume_closed(g, std::move(s.mask)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> conjugates(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<Subgroup> out;
  for (Elem x = 0; x < g.order(); ++x) {
    ElementSet mask(g.order());
    for (Elem m : h.members()) mask.insert(g.conjugate(m, x));
    auto c = Subgroup::assume_closed(g, std::move(mask));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Quotient quotient(const Subgroup& n) {
  const Group& g = n.parent();
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "quotient by a non-normal subgroup");
  Quotient q;
  q.projection.assign(g.order(), 0);
  std::vector<char> assigned(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    const auto c = static_cast<Elem>(q.section.size());
    q.section.push_back(x);
    for (Elem m : n.members()) {
      const Elem y = g.mul(x, m);
      assigned[y] = 1;
      q.projection[y] = c;
    }
  }
  const std::size_t k = q.section.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = q.projection[g.mul(q.section[i], q.section[j])];
  q.group = Group::trusted(std::move(flat), k);
  return q;
}

Subgroup sylow_subgroup(const Group& g, u64 p) {
  if (!is_prime(p)) fail(ErrorKind::ParamOutOfRange, "Sylow subgroup needs a prime");
  u64 target = 1;
  for (auto [q, e] : factorize(g.order()))
    if (q == p) target = checked_pow(p, e);
  Subgroup h = Subgroup::trivial(g);
  while (h.order() < target) {
    const auto nh = normalizer(g, h);
    bool grown = false;
    for (Elem x : nh.members()) {
      if (h.contains(x)) continue;
      // p-part of x
      std::size_t ord = g.element_order(x), m = ord;
      while (m % p == 0) m /= p;
      const Elem y = g.pow(x, static_cast<long long>(m));
      if (h.contains(y)) continue;
      h = join(h, y);
      grown = true;
      break;
    }
    if (!grown) fail(ErrorKind::IllDefined, "Sylow growth stalled");
  }
  return h;
}

}  // namespace actionlab
