#include "actionlab/extensions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "actionlab/error.hpp"
#include "actionlab/structure.hpp"

namespace actionlab {

namespace {

CentralExtension assemble(std::shared_ptr<const Group> g, const ElementSet& zmask, std::vector<Elem> embedding) {
  CentralExtension ext;
  ext.g = std::move(g);
  ext.z = Subgroup::assume_closed(*ext.g, zmask);
  ext.a = std::make_shared<const Quotient>(quotient(ext.z));
  ext.embedding = std::move(embedding);
  return ext;
}

bool elementary_abelian(const Group& a, u64 p) {
  if (!a.is_abelian()) return false;
  for (Elem x = 1; x < a.order(); ++x)
    if (a.element_order(x) != p) return false;
  return true;
}

// x -> base-p encoding of its coordinates in `basis` (an F_p basis of an
// elementary abelian group, listed inside `g`)
std::unordered_map<Elem, u64> coordinates(const Group& g, const std::vector<Elem>& basis, u64 p) {
  std::unordered_map<Elem, u64> out;
  u64 total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
  for (u64 code = 0; code < total; ++code) {
    Elem x = 0;
    u64 c = code;
    for (Elem b : basis) {
      x = g.mul(x, g.pow(b, static_cast<long long>(c % p)));
      c /= p;
    }
    out.emplace(x, code);
  }
  return out;
}

std::vector<u64> decode(u64 code, u64 p, std::size_t dim) {
  std::vector<u64> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = code % p;
    code /= p;
  }
  return v;
}

u64 encode(const std::vector<u64>& v, u64 p) {
  u64 code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

// rank over F_p of a list of vectors
std::size_t rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    // scale the pivot to 1
    u64 inv = 1;
    while (rows[rank][c] * inv % p != 1) ++inv;
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const u64 f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CentralExtension make_central_extension(const Group& g, const Subgroup& z) {
  if (z.parent().order() != g.order()) fail(ErrorKind::NotASubgroup, "Z is not a subgroup of G");
  const auto zg = center(g);
  for (Elem x : z.members())
    if (!zg.contains(x)) fail(ErrorKind::NotCentral, "Z is not contained in the center of G");
  std::vector<Elem> id(g.order());
  for (Elem x = 0; x < g.order(); ++x) id[x] = x;
  // not owned: subgroups in reports point into the caller's group
  return assemble(std::shared_ptr<const Group>(&g, [](const Group*) {}), z.mask(), std::move(id));
}

CentralExtension elementary_reduction(const CentralExtension& ext, u64 p) {
  const Group& g = ext.group();
  const Group& a = ext.quotient_group();
  if (!a.is_abelian()) fail(ErrorKind::NotAbelian, "G/Z is not abelian");
  ElementSet mask(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (p % a.element_order(ext.project(x)) == 0) mask.insert(x);
  const auto sub = Subgroup::assume_closed(g, mask);
  const auto& members = sub.members();
  ElementSet zmask(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    if (ext.z.contains(members[i])) zmask.insert(static_cast<Elem>(i));
  return assemble(std::make_shared<const Group>(sub.as_group()), zmask, members);
}

SkewFormWitness omega_form(const CentralExtension& ext, unsigned random_lifts, std::uint64_t seed) {
  const Group& g = ext.group();
  const Group& a = ext.quotient_group();
  const auto& sec = ext.a->section;
  const std::size_t n = a.order();
  SkewFormWitness w;
  w.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = g.commutator(sec[x], sec[y]);
      if (!ext.z.contains(v)) fail(ErrorKind::IllDefined, "a commutator of lifts leaves Z (G/Z is not abelian)");
      w.table[x * n + y] = v;
    }

  auto check_lift = [&](const std::vector<Elem>& lift) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (g.commutator(lift[x], lift[y]) != w.table[x * n + y])
          fail(ErrorKind::IllDefined, "Omega depends on the choice of lifts");
  };
  const auto& zs = ext.z.members();
  std::vector<Elem> lift(n);
  for (std::size_t x = 0; x < n; ++x) lift[x] = g.mul(sec[x], zs.back());
  check_lift(lift);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, zs.size() - 1);
  for (unsigned round = 0; round < random_lifts; ++round) {
    for (std::size_t x = 0; x < n; ++x) lift[x] = g.mul(sec[x], zs[pick(rng)]);
    check_lift(lift);
  }
  w.lifts_checked = random_lifts + 1;

  for (std::size_t x = 0; x < n; ++x) {
    if (w.table[x * n + x] != 0) fail(ErrorKind::IllDefined, "Omega(a, a) is not trivial");
    for (std::size_t y = 0; y < n; ++y)
      if (w.table[x * n + y] != g.inv(w.table[y * n + x])) fail(ErrorKind::IllDefined, "Omega is not skew");
  }

  w.basis = greedy_generators(Subgroup::whole(a));
  if (a.is_abelian()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Elem xy = a.mul(static_cast<Elem>(x), static_cast<Elem>(y));
        for (Elem b : w.basis)
          if (w.table[xy * n + b] != g.mul(w.table[x * n + b], w.table[y * n + b]))
            fail(ErrorKind::IllDefined, "Omega is not bilinear");
      }
    w.bilinear_checked = true;
  }
  w.values.assign(w.basis.size(), std::vector<Elem>(w.basis.size()));
  for (std::size_t i = 0; i < w.basis.size(); ++i)
    for (std::size_t j = 0; j < w.basis.size(); ++j) w.values[i][j] = w.table[w.basis[i] * n + w.basis[j]];

  std::vector<Elem> vals(w.table.begin(), w.table.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  w.image = generate(g, vals);
  w.image_rank = min_generators(w.image);
  if (n > 1) {
    const auto pp = prime_power(n);
    if (pp && elementary_abelian(a, pp->first)) w.p = pp->first;
  }
  return w;
}

IsotropicResult maximal_isotropic(const FpSkewForm& form, const std::vector<u64>* order) {
  const u64 p = form.p;
  const std::size_t d = form.dim, t = form.target_dim;
  if (!is_prime(p)) fail(ErrorKind::NotElementaryAbelian, "form needs a prime p");
  if (form.omega.size() != d * d * t) fail(ErrorKind::IllDefined, "form table has the wrong size");
  for (u64 v : form.omega)
    if (v >= p) fail(ErrorKind::IllDefined, "form values must be reduced mod p");
  auto om = [&](std::size_t i, std::size_t j, std::size_t k) { return form.omega[(i * d + j) * t + k]; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < t; ++k)
        if ((om(i, j, k) + om(j, i, k)) % p != 0 || (i == j && om(i, i, k) != 0))
          fail(ErrorKind::IllDefined, "form is not alternating");

  u64 total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > (1u << 20)) fail(ErrorKind::OrderCapExceeded, "form dimension too large");
  }
  auto pair = [&](const std::vector<u64>& u, const std::vector<u64>& v) {
    std::vector<u64> out(t, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (!u[i]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!v[j]) continue;
        for (std::size_t k = 0; k < t; ++k) out[k] = (out[k] + u[i] * v[j] % p * om(i, j, k)) % p;
      }
    }
    return out;
  };
  auto zero = [](const std::vector<u64>& v) { return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; }); };

  std::vector<u64> candidates;
  if (order) {
    candidates = *order;
  } else {
    for (u64 c = 0; c < total; ++c) candidates.push_back(c);
  }

  IsotropicResult res;
  std::vector<char> in_span(total, 0);
  in_span[0] = 1;
  std::vector<u64> span{0};
  auto orthogonal_to_basis = [&](const std::vector<u64>& v) {
    for (const auto& b : res.basis)
      if (!zero(pair(v, b))) return false;
    return true;
  };
  while (true) {
    bool grown = false;
    for (u64 c : candidates) {
      if (in_span[c]) continue;
      const auto v = decode(c, p, d);
      if (!orthogonal_to_basis(v)) continue;
      std::vector<u64> next;
      for (u64 s : span) {
        const auto sv = decode(s, p, d);
        for (u64 m = 1; m < p; ++m) {
          std::vector<u64> w(d);
          for (std::size_t i = 0; i < d; ++i) w[i] = (sv[i] + m * v[i]) % p;
          const u64 e = encode(w, p);
          if (!in_span[e]) {
            in_span[e] = 1;
            next.push_back(e);
          }
        }
      }
      span.insert(span.end(), next.begin(), next.end());
      res.basis.push_back(v);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  res.dim = res.basis.size();
  std::size_t perp = 0;
  for (u64 c = 0; c < total; ++c)
    if (orthogonal_to_basis(decode(c, p, d))) ++perp;
  res.self_perp = perp == span.size();

  std::vector<std::vector<u64>> vals;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<u64> v(t);
      for (std::size_t k = 0; k < t; ++k) v[k] = om(i, j, k);
      vals.push_back(std::move(v));
    }
  res.form_rank = t ? rank_mod_p(vals, p) : 0;
  res.dimension_bound = res.dim * (1 + res.form_rank) >= d;
  return res;
}

FpSkewForm to_fp_form(const CentralExtension& ext, const SkewFormWitness& w) {
  if (w.p == 0) fail(ErrorKind::NotElementaryAbelian, "G/Z is not elementary abelian");
  const Group& g = ext.group();
  const auto zbasis = greedy_generators(w.image);
  const auto zc = coordinates(g, zbasis, w.p);
  FpSkewForm f;
  f.p = w.p;
  f.dim = w.basis.size();
  f.target_dim = zbasis.size();
  f.omega.resize(f.dim * f.dim * f.target_dim);
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t j = 0; j < f.dim; ++j) {
      const auto it = zc.find(w.values[i][j]);
      if (it == zc.end()) fail(ErrorKind::IllDefined, "Omega value outside Z_Omega");
      const auto v = decode(it->second, w.p, f.target_dim);
      for (std::size_t k = 0; k < f.target_dim; ++k) f.omega[(i * f.dim + j) * f.target_dim + k] = v[k];
    }
  return f;
}

IsotropicSubgroup maximal_isotropic(const CentralExtension& ext, const SkewFormWitness& w) {
  const Group& a = ext.quotient_group();
  IsotropicSubgroup out;
  if (a.order() == 1) {
    out.fp.self_perp = out.fp.dimension_bound = true;
    out.members = {0};
    return out;
  }
  const FpSkewForm f = to_fp_form(ext, w);
  const auto ac = coordinates(a, w.basis, w.p);
  if (ac.size() != a.order()) fail(ErrorKind::NotElementaryAbelian, "basis does not coordinatize G/Z");
  std::vector<u64> order;
  for (Elem x = 0; x < a.order(); ++x) order.push_back(ac.at(x));
  out.fp = maximal_isotropic(f, &order);
  // members: every combination of the chosen basis
  std::vector<Elem> chosen;
  std::unordered_map<u64, Elem> back;
  for (const auto& [x, c] : ac) back.emplace(c, x);
  for (const auto& v : out.fp.basis) chosen.push_back(back.at(encode(v, w.p)));
  out.members = generate(a, chosen).members();
  return out;
}

GenerationBoundReport generation_bound_check(const CentralExtension& ext) {
  const Group& g = ext.group();
  const Group& a = ext.quotient_group();
  if (!a.is_abelian()) fail(ErrorKind::NotAbelian, "G/Z is not abelian");
  GenerationBoundReport rep;
  const auto subs = enumerate_subgroups(g);
  for (const auto& b : subs)
    if (is_abelian(b)) rep.r = std::max(rep.r, min_generators(b));
  rep.s = min_generators(Subgroup::whole(a));
  rep.z_order = ext.z.order();
  // floor(r log2 |Z|) = floor(log2(|Z|^r))
  const u128 zr = saturating_pow(rep.z_order, rep.r);
  if (zr == kU128Max) fail(ErrorKind::OrderCapExceeded, "|Z|^r overflows");
  unsigned lg = 0;
  while ((zr >> (lg + 1)) != 0) ++lg;
  rep.bound = rep.r + lg;
  rep.holds = rep.s <= rep.bound;

  std::size_t best = 0;
  for (u64 p : prime_divisors(a.order())) {
    const auto red = elementary_reduction(ext, p);
    const auto w = omega_form(red);
    const auto iso = maximal_isotropic(red, w);
    PrimeReduction pr;
    pr.p = p;
    pr.s_p = w.basis.size();
    pr.isotropic_dim = iso.fp.dim;
    pr.omega_rank = iso.fp.form_rank;
    ElementSet in_i(red.quotient_group().order());
    for (Elem x : iso.members) in_i.insert(x);
    ElementSet mask(g.order());
    for (Elem x = 0; x < red.group().order(); ++x)
      if (in_i.contains(red.project(x))) mask.insert(red.embedding[x]);
    pr.preimage = Subgroup::assume_closed(g, mask);
    pr.preimage_abelian = is_abelian(pr.preimage);
    if (pr.preimage_abelian) pr.preimage_generators = min_generators(pr.preimage);
    rep.holds = rep.holds && pr.preimage_abelian && iso.fp.self_perp && iso.fp.dimension_bound &&
                pr.isotropic_dim <= pr.preimage_generators && pr.preimage_generators <= rep.r;
    if (rep.primes.empty() || pr.s_p > rep.primes[best].s_p) best = rep.primes.size();
    rep.primes.push_back(std::move(pr));
  }
  if (!rep.primes.empty()) rep.witness = rep.primes[best].preimage;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// a_1..a_k with orders p^e_i (e descending) such that A = (+) <a_i>
bool find_cyclic_basis(const Group& a, const std::vector<u64>& orders, std::vector<Elem>& chosen, u64 span) {
  const std::size_t i = chosen.size();
  if (i == orders.size()) return true;
  for (Elem x = 1; x < a.order(); ++x) {
    if (a.element_order(x) != orders[i]) continue;
    chosen.push_back(x);
    if (generate(a, chosen).order() == span * orders[i] && find_cyclic_basis(a, orders, chosen, span * orders[i]))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

AutPointwiseReport aut_pointwise_bound(const Group& a, const Subgroup& b, bool cross_check) {
  if (!a.is_abelian()) fail(ErrorKind::NotAbelian, "A must be abelian");
  const auto whole = Subgroup::whole(a);
  AutPointwiseReport rep;
  rep.index = b.index();
  if (a.order() == 1) {
    rep.count = 1;
    rep.holds = true;
    return rep;
  }
  const auto pp = prime_power(a.order());
  if (!pp) fail(ErrorKind::NotPGroup, "A must be a p-group");
  if (a.order() > default_limits().subgroup_order_cap) fail(ErrorKind::OrderCapExceeded, "A is too large");
  const u64 p = pp->first;

  auto orders = abelian_invariants(whole);
  std::sort(orders.rbegin(), orders.rend());
  const std::size_t d = orders.size();
  rep.r = d;
  std::vector<unsigned> e(d);
  for (std::size_t i = 0; i < d; ++i) e[i] = floor_log(orders[i], p);

  std::vector<Elem> basis;
  if (!find_cyclic_basis(a, orders, basis, 1)) fail(ErrorKind::IllDefined, "no cyclic decomposition found");

  // coordinates of every element
  std::vector<std::vector<u64>> coord(a.order());
  {
    std::vector<u64> c(d, 0);
    while (true) {
      Elem x = 0;
      for (std::size_t i = 0; i < d; ++i) x = a.mul(x, a.pow(basis[i], static_cast<long long>(c[i])));
      coord[x] = c;
      std::size_t i = 0;
      while (i < d && ++c[i] == orders[i]) c[i++] = 0;
      if (i == d) break;
    }
  }
  std::vector<std::vector<u64>> bgen;
  for (Elem x : greedy_generators(b)) bgen.push_back(coord[x]);

  // n[l][v]: admissible rows l whose reduction mod p encodes to v
  u64 nred = 1;
  for (std::size_t i = 0; i < d; ++i) nred *= p;
  if (nred > 128) fail(ErrorKind::OrderCapExceeded, "Frattini quotient too large for the row count");
  std::vector<std::vector<u64>> n(d, std::vector<u64>(nred, 0));
  for (std::size_t l = 0; l < d; ++l) {
    const u64 mod = orders[l];
    std::vector<u64> step(d), choices(d);
    for (std::size_t i = 0; i < d; ++i) {
      step[i] = checked_pow(p, e[l] > e[i] ? e[l] - e[i] : 0);
      choices[i] = checked_pow(p, std::min(e[l], e[i]));
    }
    std::vector<u64> t(d, 0);
    while (true) {
      bool ok = true;
      for (const auto& bk : bgen) {
        u64 acc = 0;
        for (std::size_t i = 0; i < d; ++i) acc = (acc + t[i] * step[i] % mod * (bk[i] % mod)) % mod;
        if (acc != bk[l] % mod) {
          ok = false;
          break;
        }
      }
      if (ok) {
        u64 code = 0;
        for (std::size_t i = d; i-- > 0;) code = code * p + (t[i] * step[i]) % p;
        ++n[l][code];
      }
      std::size_t i = 0;
      while (i < d && ++t[i] == choices[i]) t[i++] = 0;
      if (i == d) break;
    }
  }

  // vector arithmetic on encodings of F_p^d
  std::vector<std::vector<u64>> add(nred, std::vector<u64>(nred));
  for (u64 x = 0; x < nred; ++x)
    for (u64 y = 0; y < nred; ++y) {
      u64 code = 0, px = x, py = y, place = 1;
      for (std::size_t i = 0; i < d; ++i) {
        code += ((px % p + py % p) % p) * place;
        px /= p;
        py /= p;
        place *= p;
      }
      add[x][y] = code;
    }
  auto bit = [](u64 x) { return u128{1} << x; };
  // a state is the set of vectors in the span of the rows chosen so far
  std::map<u128, u64> states{{bit(0), 1}};
  for (std::size_t l = 0; l < d; ++l) {
    std::map<u128, u64> next;
    for (const auto& [span, count] : states) {
      for (u64 v = 0; v < nred; ++v) {
        if (!n[l][v] || (span & bit(v))) continue;
        u128 grown = span;
        u64 mv = v;
        for (u64 m = 1; m < p; ++m, mv = add[mv][v])
          for (u64 x = 0; x < nred; ++x)
            if (span & bit(x)) grown |= bit(add[x][mv]);
        next[grown] += count * n[l][v];
      }
    }
    states = std::move(next);
  }
  for (const auto& [span, count] : states) rep.count += count;

  rep.bound = saturating_pow(rep.index, static_cast<u64>(d * d));
  rep.holds = rep.count <= rep.bound;

  if (cross_check && a.order() <= default_limits().automorphism_order_cap) {
    try {
      u64 fixed = 0;
      for (const auto& phi : automorphism_group(a)) {
        bool ok = true;
        for (Elem x : b.members()) ok = ok && phi[x] == x;
        fixed += ok;
      }
      rep.enumerated = fixed;
    } catch (const Error& err) {
      if (!is_cap_error(err.kind())) throw;
    }
  }
  return rep;
}

MnasReport mnas_suite(const Group& g) {
  MnasReport rep;
  const auto whole = Subgroup::whole(g);
  if (g.order() > 1) {
    const auto pp = prime_power(g.order());
    if (!pp) fail(ErrorKind::NotPGroup, "MNAS suite needs a p-group");
    rep.p = pp->first;
  }
  const auto subs = enumerate_subgroups(g);
  std::vector<const Subgroup*> abelian, normal_abelian;
  for (const auto& h : subs)
    if (is_abelian(h)) {
      abelian.push_back(&h);
      if (is_normal(h)) normal_abelian.push_back(&h);
    }
  for (const Subgroup* a : normal_abelian) {
    bool maximal = true;
    for (const Subgroup* b : normal_abelian)
      if (b->order() > a->order() && a->is_subgroup_of(*b)) maximal = false;
    if (!maximal) continue;
    MnasEntry e;
    e.a = *a;
    e.r = min_generators(*a);
    // conjugation action of each coset on A; injective iff all distinct
    const auto q = quotient(*a);
    std::vector<std::vector<Elem>> actions;
    for (Elem s : q.section) {
      std::vector<Elem> act;
      for (Elem x : a->members()) act.push_back(g.conjugate(x, s));
      actions.push_back(std::move(act));
    }
    std::sort(actions.begin(), actions.end());
    e.injective = std::adjacent_find(actions.begin(), actions.end()) == actions.end();
    const u64 idx = a->index();
    for (const Subgroup* b : abelian) {
      ++e.abelian_checked;
      if (saturating_pow(b->index(), static_cast<u64>(e.r * e.r + 1)) < idx) {
        e.inequality_holds = false;
        if (!e.violating) e.violating = *b;
      }
    }
    rep.holds = rep.holds && e.injective && e.inequality_holds;
    rep.mnas.push_back(std::move(e));
  }
  return rep;
}

CharacteristicCoreReport characteristic_core(const Group& g, const Subgroup& a, u64 c) {
  if (c < 1) fail(ErrorKind::ParamOutOfRange, "C must be positive");
  if (!is_abelian(a)) fail(ErrorKind::NotAbelian, "A must be abelian");
  if (a.index() > c) fail(ErrorKind::IndexTooLarge, "[G:A] exceeds C");
  CharacteristicCoreReport rep;
  rep.c = c;
  rep.r = min_generators(a);
  const auto auts = automorphism_group(g);

  u64 ea = 1;
  for (Elem x : a.members()) ea = std::lcm(ea, static_cast<u64>(g.element_order(x)));
  const u64 m = factorial_mod(c, ea);
  ElementSet a0(g.order());
  for (Elem x : a.members()) a0.insert(g.pow(x, static_cast<long long>(m)));
  rep.a0 = Subgroup::assume_closed(g, a0);

  rep.a1 = a;
  std::size_t stabilizer = 0;
  for (const auto& phi : auts) {
    const auto img = image(a, phi);
    if (img == a) ++stabilizer;
    rep.a1 = intersect(rep.a1, img);
  }
  rep.chain = rep.a0.is_subgroup_of(rep.a1) && rep.a1.is_subgroup_of(a);
  rep.characteristic = std::all_of(auts.begin(), auts.end(), [&](const ElementMap& phi) { return image(rep.a1, phi) == rep.a1; });
  rep.aut_order = auts.size();
  rep.aut_a_order = stabilizer;
  rep.aut_index = auts.size() / stabilizer;

  u128 cf = 1;
  for (u64 i = 2; i <= c; ++i) cf = saturating_mul(cf, i);
  rep.core_index_bound = saturating_pow(cf, rep.r);
  const u128 ex = saturating_mul(c, rep.core_index_bound);
  rep.aut_index_bound = ex >= 128 ? kU128Max : (u128{1} << static_cast<unsigned>(ex));
  const u64 core_index = a.order() / rep.a1.order();
  rep.holds = rep.chain && rep.characteristic && core_index <= rep.core_index_bound &&
              rep.aut_index <= rep.aut_index_bound;
  return rep;
}

}  // namespace actionlab
