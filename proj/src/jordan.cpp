#include "actionlab/jordan.hpp"

#include <map>

#include "actionlab/error.hpp"
#include "actionlab/structure.hpp"
#include "actionlab/subgroups.hpp"

namespace actionlab {

namespace {

bool members_commute(const Subgroup& h) {
  const Group& g = h.parent();
  const auto gens = greedy_generators(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

// flags[i] = pred(subs[i]), evaluated in parallel
template <class Pred>
std::vector<char> scan(const std::vector<Subgroup>& subs, Pred pred) {
  std::vector<char> flags(subs.size(), 0);
  const auto n = static_cast<long long>(subs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) flags[static_cast<std::size_t>(i)] = pred(subs[static_cast<std::size_t>(i)]) ? 1 : 0;
  return flags;
}

const std::vector<Subgroup>& use(const Group& g, const std::vector<Subgroup>* given, std::vector<Subgroup>& own) {
  if (given) return *given;
  own = enumerate_subgroups(g);
  return own;
}

// least index, ties to the canonically least (the list is sorted ascending)
std::size_t best(const std::vector<Subgroup>& subs, const std::vector<char>& flags) {
  std::size_t pick = 0;
  bool found = false;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (flags[i] && (!found || subs[i].order() > subs[pick].order())) {
      pick = i;
      found = true;
    }
  return pick;  // the trivial subgroup always qualifies
}

}  // namespace

AlphaResult alpha(const Group& g, const std::vector<Subgroup>* subgroups) {
  std::vector<Subgroup> own;
  const auto& subs = use(g, subgroups, own);
  const auto flags = scan(subs, members_commute);
  const auto& w = subs[best(subs, flags)];
  return {w.index(), w};
}

Beta2Result beta2(const Group& g, const std::vector<Subgroup>* subgroups) {
  std::vector<Subgroup> own;
  const auto& subs = use(g, subgroups, own);
  const auto flags = scan(subs, [](const Subgroup& h) {
    const auto c = nilpotency_class(h);
    return c && *c <= 2;
  });
  const auto& w = subs[best(subs, flags)];
  Beta2Result r;
  r.index = w.index();
  r.witness = w;
  r.commutator = commutator_subgroup(w, w);
  r.commutator_cyclic = greedy_generators(r.commutator).size() <= 1;
  return r;
}

JordanReport jordan_report(const Group& g) {
  const auto subs = enumerate_subgroups(g);
  return {alpha(g, &subs), beta2(g, &subs)};
}

JResult j_property(const std::vector<Group>& collection, u64 c, std::size_t d) {
  JResult out;
  for (std::size_t k = 0; k < collection.size(); ++k) {
    const Group& g = collection[k];
    const auto subs = enumerate_subgroups(g);
    const auto flags = scan(subs, members_commute);
    // least d(A) for each index
    std::map<u64, std::size_t> least;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!flags[i]) continue;
      const std::size_t dA = min_generators(subs[i]);
      auto [it, fresh] = least.emplace(subs[i].index(), dA);
      if (!fresh && dA < it->second) it->second = dA;
    }
    bool ok = false;
    for (auto [idx, dA] : least) ok = ok || (idx <= c && dA <= d);
    if (ok) continue;
    out.holds = false;
    JFailure f{k, {}};
    for (auto [idx, dA] : least)
      if (f.frontier.empty() || dA < f.frontier.back().second) f.frontier.emplace_back(idx, dA);
    out.failures.push_back(std::move(f));
  }
  return out;
}

TClassResult in_T_class(const Group& g) {
  TClassResult r;
  const auto primes = prime_divisors(g.order());
  if (primes.empty()) {
    r.member = true;
    r.P = Subgroup::trivial(g);
    r.Q = Subgroup::trivial(g);
    return r;
  }
  if (primes.size() == 1) {
    r.member = true;
    r.p = primes[0];
    r.P = Subgroup::whole(g);
    r.Q = Subgroup::trivial(g);
    return r;
  }
  if (primes.size() > 2) return r;
  for (int swap = 0; swap < 2; ++swap) {
    const u64 p = primes[swap], q = primes[1 - swap];
    auto P = sylow_subgroup(g, p);
    if (!is_normal(P)) continue;
    r.member = true;
    r.p = p;
    r.q = q;
    r.P = std::move(P);
    r.Q = sylow_subgroup(g, q);
    return r;
  }
  return r;
}

u64 minkowski_bound(unsigned k) {
  if (k < 1 || k > 8) fail(ErrorKind::ParamOutOfRange, "minkowski_bound needs 1 <= k <= 8");
  u64 m = 1;
  for (u64 p = 2; p <= k + 1; ++p) {
    if (!is_prime(p)) continue;
    unsigned e = 0;
    for (u64 pi = 1; pi * (p - 1) <= k; pi *= p) e += static_cast<unsigned>(k / (pi * (p - 1)));
    m *= checked_pow(p, e);
  }
  return m;
}

Group integral_matrix_group(const std::vector<std::vector<long long>>& generators, unsigned k,
                            std::size_t closure_cap) {
  using Mat = std::vector<long long>;
  auto mul = [k](const Mat& a, const Mat& b) {
    Mat c(k * k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned l = 0; l < k; ++l)
        for (unsigned j = 0; j < k; ++j) c[i * k + j] += a[i * k + l] * b[l * k + j];
    return c;
  };
  for (const auto& g : generators)
    if (g.size() != k * k) fail(ErrorKind::InvalidSpec, "matrix generator has the wrong size");
  Mat id(k * k, 0);
  for (unsigned i = 0; i < k; ++i) id[i * k + i] = 1;
  std::vector<Mat> elems{id};
  std::map<Mat, Elem> index{{id, 0}};
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (const auto& s : generators) {
      Mat y = mul(elems[h], s);
      for (long long v : y)
        if (v > 1'000'000 || v < -1'000'000) fail(ErrorKind::ClosureLimitExceeded, "matrix group is not finite");
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > closure_cap) fail(ErrorKind::ClosureLimitExceeded, "matrix closure exceeds cap");
      }
    }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index.at(mul(elems[i], elems[j]));
  return Group::trusted(std::move(flat), n);
}

}  // namespace actionlab
