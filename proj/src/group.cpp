#include "actionlab/group.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

#include "actionlab/error.hpp"
#include "actionlab/kernels.hpp"

namespace actionlab {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("ACTIONLAB_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) {
      limits.subgroup_order_cap = v;
      limits.automorphism_order_cap = v;
    }
  }
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

namespace {

void check_latin(const std::vector<Elem>& t, std::size_t n) {
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem v = t[i * n + j];
      if (v >= n || seen[v]) fail(ErrorKind::InvalidTable, "row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Elem v = t[i * n + j];
      if (seen[v]) fail(ErrorKind::InvalidTable, "column " + std::to_string(j) + " is not a permutation");
      seen[v] = 1;
    }
  }
}

}  // namespace

Group Group::from_table(std::vector<Elem> flat, std::size_t order, std::vector<std::string> labels,
                        const Limits& limits) {
  if (order == 0) fail(ErrorKind::InvalidTable, "empty table");
  if (flat.size() != order * order) fail(ErrorKind::InvalidTable, "table is not order x order");
  if (!labels.empty() && labels.size() != order) fail(ErrorKind::InvalidTable, "label count mismatch");
  check_latin(flat, order);

  // locate a two-sided identity
  std::size_t e = order;
  for (std::size_t i = 0; i < order && e == order; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < order && ok; ++j) ok = flat[i * order + j] == j && flat[j * order + i] == j;
    if (ok) e = i;
  }
  if (e == order) fail(ErrorKind::InvalidTable, "no identity element");
  if (e != 0) {
    // swap the names of 0 and e
    std::vector<Elem> relabel(order);
    std::iota(relabel.begin(), relabel.end(), Elem{0});
    std::swap(relabel[0], relabel[e]);
    std::vector<Elem> next(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        next[relabel[i] * order + relabel[j]] = relabel[flat[i * order + j]];
    flat = std::move(next);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  const auto bad = order <= limits.full_associativity_order
                       ? kernels::find_associativity_violation(flat, order)
                       : kernels::find_associativity_violation_sampled(flat, order, 10ULL * order * order,
                                                                       0x5eed0f9a11ULL);
  if (bad)
    fail(ErrorKind::InvalidTable, "associativity fails at (" + std::to_string(bad->a) + "," +
                                      std::to_string(bad->b) + "," + std::to_string(bad->c) + ")");
  return trusted(std::move(flat), order, std::move(labels));
}

Group Group::from_rows(const std::vector<std::vector<Elem>>& rows, std::vector<std::string> labels,
                       const Limits& limits) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) fail(ErrorKind::InvalidTable, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_table(std::move(flat), n, std::move(labels), limits);
}

Group Group::trusted(std::vector<Elem> flat, std::size_t order, std::vector<std::string> labels) {
  if (flat.size() != order * order) fail(ErrorKind::InvalidTable, "table is not order x order");
  Group g;
  g.order_ = order;
  g.table_ = std::move(flat);
  g.labels_ = std::move(labels);
  g.finish();
  return g;
}

void Group::finish() {
  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  element_order_.assign(order_, 1);
  for (Elem a = 1; a < order_; ++a) {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a)) ++k;
    element_order_[a] = k;
  }
}

Elem Group::pow(Elem a, long long k) const {
  const auto ord = static_cast<long long>(element_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool Group::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (auto o : element_order_) e = std::lcm(e, o);
  return e;
}

std::string Group::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return "g" + std::to_string(a);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const Group* parent, ElementSet mask)
    : parent_(parent), mask_(std::move(mask)), members_(mask_.to_vector()) {}

Subgroup Subgroup::assume_closed(const Group& parent, ElementSet mask) { return Subgroup(&parent, std::move(mask)); }

Subgroup Subgroup::from_members(const Group& parent, std::vector<Elem> members) {
  ElementSet mask(parent.order());
  for (Elem x : members) {
    if (x >= parent.order()) fail(ErrorKind::NotASubgroup, "element out of range");
    mask.insert(x);
  }
  if (!mask.contains(0)) fail(ErrorKind::NotASubgroup, "identity missing");
  const auto list = mask.to_vector();
  for (Elem a : list) {
    if (!mask.contains(parent.inv(a))) fail(ErrorKind::NotASubgroup, "not closed under inversion");
    for (Elem b : list)
      if (!mask.contains(parent.mul(a, b))) fail(ErrorKind::NotASubgroup, "not closed under multiplication");
  }
  if (parent.order() % list.size() != 0) fail(ErrorKind::NotASubgroup, "order does not divide the group order");
  return Subgroup(&parent, std::move(mask));
}

Subgroup Subgroup::trivial(const Group& parent) {
  ElementSet mask(parent.order());
  mask.insert(0);
  return Subgroup(&parent, std::move(mask));
}

Subgroup Subgroup::whole(const Group& parent) {
  ElementSet mask(parent.order());
  for (Elem x = 0; x < parent.order(); ++x) mask.insert(x);
  return Subgroup(&parent, std::move(mask));
}

Group Subgroup::as_group() const {
  const std::size_t n = members_.size();
  std::vector<Elem> local(parent_->order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members_[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = local[parent_->mul(members_[i], members_[j])];
  std::vector<std::string> labels;
  if (!parent_->labels().empty())
    for (Elem m : members_) labels.push_back(parent_->labels()[m]);
  return Group::trusted(std::move(flat), n, std::move(labels));
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                b.members_.end());
}

Subgroup generate(const Group& g, std::span<const Elem> gens, std::size_t cap) {
  if (cap == 0) cap = g.order();
  ElementSet mask(g.order());
  mask.insert(0);
  std::vector<Elem> frontier{0};
  std::vector<Elem> seen{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        const Elem y = g.mul(x, s);
        if (mask.insert(y)) {
          next.push_back(y);
          if (mask.count() > cap) fail(ErrorKind::ClosureLimitExceeded, "closure exceeds cap");
        }
      }
    frontier = std::move(next);
  }
  return Subgroup::assume_closed(g, std::move(mask));
}

Subgroup join(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  auto gens = greedy_generators(h);
  gens.push_back(x);
  return generate(h.parent(), gens);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  auto gens = greedy_generators(a);
  for (Elem x : greedy_generators(b)) gens.push_back(x);
  return generate(a.parent(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  ElementSet mask(a.parent().order());
  for (Elem x : a.members())
    if (b.contains(x)) mask.insert(x);
  return Subgroup::assume_closed(a.parent(), std::move(mask));
}

Subgroup image(const Subgroup& h, std::span<const Elem> map) {
  ElementSet mask(h.parent().order());
  for (Elem x : h.members()) mask.insert(map[x]);
  return Subgroup::assume_closed(h.parent(), std::move(mask));
}

std::vector<Elem> greedy_generators(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<Elem> by_order = h.members();
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  Subgroup current = Subgroup::trivial(g);
  for (Elem x : by_order) {
    if (current.order() == h.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = generate(g, gens);
  }
  return gens;
}

}  // namespace actionlab
