#include "actionlab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <unordered_set>

#include "actionlab/error.hpp"

namespace actionlab::kernels {

std::optional<Triple> find_associativity_violation(std::span<const Elem> t, std::size_t n) {
  const auto sn = static_cast<long long>(n);
  long long first_bad = sn;  // smallest a with a violation
  Triple witness{};
#pragma omp parallel for schedule(dynamic, 4)
  for (long long a = 0; a < sn; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = t[static_cast<std::size_t>(a) * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[static_cast<std::size_t>(a) * n + t[b * n + c]]) {
#pragma omp critical
          if (a < first_bad) {
            first_bad = a;
            witness = {static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)};
          }
          b = n;
          break;
        }
      }
    }
  }
  if (first_bad == sn) return std::nullopt;
  return witness;
}

std::optional<Triple> find_associativity_violation_sampled(std::span<const Elem> t, std::size_t n,
                                                           std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
      return Triple{static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)};
  }
  return std::nullopt;
}

namespace {

ElementSet close_from(const Group& g, const ElementSet& start, const std::vector<Elem>& gens) {
  ElementSet mask = start;
  std::vector<Elem> frontier = start.to_vector();
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        const Elem y = g.mul(x, s);
        if (mask.insert(y)) next.push_back(y);
      }
    frontier.swap(next);
  }
  return mask;
}

}  // namespace

std::vector<std::vector<GeneratedSubgroup>> extend_frontier(const Group& g,
                                                           const std::vector<GeneratedSubgroup>& frontier,
                                                           std::span<const Elem> extenders) {
  std::vector<std::vector<GeneratedSubgroup>> out(frontier.size());
  const auto count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    const auto& h = frontier[static_cast<std::size_t>(i)];
    std::unordered_set<ElementSet, ElementSetHash> local;
    auto& dst = out[static_cast<std::size_t>(i)];
    for (Elem x : extenders) {
      if (h.mask.contains(x)) continue;
      std::vector<Elem> gens = h.gens;
      gens.push_back(x);
      ElementSet k = close_from(g, h.mask, gens);
      if (local.insert(k).second) dst.push_back({std::move(k), std::move(gens)});
    }
  }
  return out;
}

namespace {

struct Level {
  // elements of H_i \ H_{i-1} in BFS order with x = parent * gens[gen]
  std::vector<Elem> fresh, parent;
  std::vector<unsigned> gen;
  std::vector<Elem> members;  // all of H_i
};

std::vector<Level> build_levels(const Group& g, std::span<const Elem> gens) {
  std::vector<Level> levels(gens.size());
  ElementSet prev(g.order());
  prev.insert(0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Level& lv = levels[i];
    ElementSet seen(g.order());
    seen.insert(0);
    std::vector<Elem> order{0};
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Elem x = order[head];
      for (unsigned j = 0; j <= i; ++j) {
        const Elem y = g.mul(x, gens[j]);
        if (seen.insert(y)) {
          order.push_back(y);
          if (!prev.contains(y)) {
            lv.fresh.push_back(y);
            lv.parent.push_back(x);
            lv.gen.push_back(j);
          }
        }
      }
    }
    lv.members = order;
    prev = seen;
  }
  return levels;
}

struct AutSearch {
  const Group& g;
  std::span<const Elem> gens;
  const std::vector<Level>& levels;
  std::vector<std::vector<Elem>> candidates;
  std::size_t cap;
  std::atomic<std::size_t>* total;
  std::atomic<bool>* abort;

  // phi is valid on H_{i-1}; used_img marks its image
  void run(std::size_t i, std::vector<Elem>& phi, std::vector<Elem>& img, std::vector<std::vector<Elem>>& out) {
    if (abort->load(std::memory_order_relaxed)) return;
    if (i == gens.size()) {
      out.push_back(phi);
      if (total->fetch_add(1) + 1 > cap) abort->store(true);
      return;
    }
    for (Elem c : candidates[i]) {
      img[i] = c;
      if (extend(i, phi, img)) run(i + 1, phi, img, out);
    }
  }

  bool extend(std::size_t i, std::vector<Elem>& phi, const std::vector<Elem>& img) const {
    const Level& lv = levels[i];
    for (std::size_t k = 0; k < lv.fresh.size(); ++k) phi[lv.fresh[k]] = g.mul(phi[lv.parent[k]], img[lv.gen[k]]);
    ElementSet hit(g.order());
    for (Elem x : lv.members)
      if (!hit.insert(phi[x])) return false;
    for (Elem x : lv.members)
      for (std::size_t j = 0; j <= i; ++j)
        if (phi[g.mul(x, gens[j])] != g.mul(phi[x], img[j])) return false;
    return true;
  }
};

}  // namespace

std::vector<std::vector<Elem>> automorphism_search(const Group& g, std::span<const Elem> gens,
                                                   std::size_t count_cap) {
  if (gens.empty()) {
    std::vector<Elem> id(g.order());
    for (Elem x = 0; x < g.order(); ++x) id[x] = x;
    return {id};
  }
  const auto levels = build_levels(g, gens);
  std::atomic<std::size_t> total{0};
  std::atomic<bool> abort{false};
  AutSearch search{g, gens, levels, {}, count_cap, &total, &abort};
  for (Elem s : gens) {
    std::vector<Elem> c;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.element_order(s)) c.push_back(x);
    search.candidates.push_back(std::move(c));
  }
  const auto& top = search.candidates[0];
  std::vector<std::vector<std::vector<Elem>>> per(top.size());
  const auto count = static_cast<long long>(top.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k) {
    std::vector<Elem> phi(g.order(), 0);
    std::vector<Elem> img(gens.size(), 0);
    img[0] = top[static_cast<std::size_t>(k)];
    if (search.extend(0, phi, img)) search.run(1, phi, img, per[static_cast<std::size_t>(k)]);
  }
  if (abort.load()) fail(ErrorKind::OrderCapExceeded, "automorphism count exceeds cap");
  std::vector<std::vector<Elem>> out;
  for (auto& v : per)
    for (auto& a : v) out.push_back(std::move(a));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace serial {

std::optional<Triple> find_associativity_violation(std::span<const Elem> t, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]])
          return Triple{static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)};
  return std::nullopt;
}

std::vector<ElementSet> all_subgroups_naive(const Group& g) {
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet trivial(g.order());
  trivial.insert(0);
  found.push_back(trivial);
  seen.insert(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem x = 0; x < g.order(); ++x) {
      if (found[i].contains(x)) continue;
      auto gens = found[i].to_vector();
      gens.push_back(x);
      auto k = close_from(g, found[i], gens);
      if (seen.insert(k).second) found.push_back(std::move(k));
    }
  }
  return found;
}

std::vector<std::vector<Elem>> automorphism_search(const Group& g, std::span<const Elem> gens,
                                                   std::size_t count_cap) {
  const std::size_t s = gens.size();
  // BFS words for every element over all generators
  std::vector<Elem> order{0}, parent(g.order(), 0);
  std::vector<unsigned> via(g.order(), 0);
  ElementSet seen(g.order());
  seen.insert(0);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (unsigned j = 0; j < s; ++j) {
      const Elem y = g.mul(order[h], gens[j]);
      if (seen.insert(y)) {
        order.push_back(y);
        parent[y] = order[h];
        via[y] = j;
      }
    }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> img(s, 0);
  std::vector<std::size_t> idx(s, 0);
  const std::size_t n = g.order();
  while (true) {
    for (std::size_t j = 0; j < s; ++j) img[j] = static_cast<Elem>(idx[j]);
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) ok = g.element_order(img[j]) == g.element_order(gens[j]);
    if (ok) {
      std::vector<Elem> phi(n, 0);
      for (std::size_t h = 1; h < order.size(); ++h) phi[order[h]] = g.mul(phi[parent[order[h]]], img[via[order[h]]]);
      ElementSet hit(n);
      for (Elem x = 0; x < n && ok; ++x) ok = hit.insert(phi[x]);
      for (Elem a = 0; a < n && ok; ++a)
        for (Elem b = 0; b < n && ok; ++b) ok = phi[g.mul(a, b)] == g.mul(phi[a], phi[b]);
      if (ok) {
        out.push_back(std::move(phi));
        if (out.size() > count_cap) fail(ErrorKind::OrderCapExceeded, "automorphism count exceeds cap");
      }
    }
    std::size_t j = 0;
    while (j < s && ++idx[j] == n) idx[j++] = 0;
    if (j == s) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace serial

}  // namespace actionlab::kernels
