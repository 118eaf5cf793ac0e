#include "actionlab/cochain.hpp"

#include <algorithm>

#include "actionlab/error.hpp"

namespace actionlab {

namespace {

u64 mod_inverse(u64 a, u64 q) {
  // extended Euclid; a is a unit mod q
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(q), nr = static_cast<std::int64_t>(a % q);
  while (nr) {
    std::int64_t k = r / nr;
    std::tie(t, nt) = std::pair{nt, t - k * nt};
    std::tie(r, nr) = std::pair{nr, r - k * nr};
  }
  return static_cast<u64>((t % static_cast<std::int64_t>(q) + static_cast<std::int64_t>(q)) % static_cast<std::int64_t>(q));
}

unsigned valuation(u64 x, u64 p, unsigned cap) {
  if (x == 0) return cap;
  unsigned v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

std::vector<u64> reduce(const IntMatrix& m, u64 q) {
  std::vector<u64> a(m.data.size());
  const auto sq = static_cast<std::int64_t>(q);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<u64>(((m.data[i] % sq) + sq) % sq);
  return a;
}

// Elimination over the local ring Z/p^b. Pivot on an entry of least
// valuation; it divides everything left in the active block, so clearing
// its column by row operations and then dropping its row and column leaves
// the remaining block's Smith form unchanged.
template <bool Parallel>
LocalSmith local_smith_impl(const IntMatrix& m, u64 p, unsigned b) {
  const u64 q = checked_pow(p, b);
  std::vector<u64> a = reduce(m, q);
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<char> row_live(rows, 1), col_live(cols, 1);
  LocalSmith out;
  for (;;) {
    unsigned best = b;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = 0; i < rows && best > 0; ++i) {
      if (!row_live[i]) continue;
      const u64* row = &a[i * cols];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!col_live[j] || row[j] == 0) continue;
        unsigned v = valuation(row[j], p, b);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == b) break;
    ++out.nonzero;
    if (best > 0) out.valuations.push_back(best);
    const u64 pv = checked_pow(p, best);
    const u64 unit_inv = mod_inverse(a[pr * cols + pc] / pv, q);
    const u64* prow = &a[pr * cols];
    const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t si = 0; si < n; ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (i == pr || !row_live[i]) continue;
      u64* row = &a[i * cols];
      const u64 c = row[pc];
      if (c == 0) continue;
      const u64 factor = (c / pv) % q * unit_inv % q;
      for (std::size_t j = 0; j < cols; ++j) {
        if (prow[j] == 0) continue;
        row[j] = (row[j] + q - factor * prow[j] % q) % q;
      }
    }
    row_live[pr] = 0;
    col_live[pc] = 0;
  }
  std::sort(out.valuations.begin(), out.valuations.end());
  return out;
}

}  // namespace

LocalSmith local_smith(const IntMatrix& m, u64 p, unsigned b) { return local_smith_impl<true>(m, p, b); }

namespace serial {
LocalSmith local_smith(const IntMatrix& m, u64 p, unsigned b) { return local_smith_impl<false>(m, p, b); }
}  // namespace serial

FgAbelian cohomology_mod_n(const IntMatrix& delta_prev, const IntMatrix& delta_this, std::size_t dim, u64 n) {
  if (n < 1) fail(ErrorKind::ParamOutOfRange, "modulus must be positive");
  if (delta_prev.rows != dim && delta_prev.cols != 0) fail(ErrorKind::InvalidSpec, "coboundary shapes disagree");
  if (delta_this.cols != dim) fail(ErrorKind::InvalidSpec, "coboundary shapes disagree");
  // With free cochains, H^k(C; Z/p^b) has one Z/p^b for each dimension not
  // hit by a nonzero Smith entry of either coboundary, plus Z/p^v for each
  // entry of valuation 0 < v < b (the Z/n reduction of the integral UCT).
  std::vector<u64> orders;
  for (auto [p, b] : factorize(n)) {
    const u64 q = checked_pow(p, b);
    LocalSmith s1 = delta_prev.cols ? local_smith(delta_prev, p, b) : LocalSmith{};
    LocalSmith s2 = local_smith(delta_this, p, b);
    const std::size_t hit = s1.nonzero + s2.nonzero;
    for (std::size_t i = hit; i < dim; ++i) orders.push_back(q);
    for (unsigned v : s1.valuations) orders.push_back(checked_pow(p, v));
    for (unsigned v : s2.valuations) orders.push_back(checked_pow(p, v));
  }
  return FgAbelian::from_cyclic(0, orders);
}

namespace {

u64 tuple_count(u64 base, unsigned k, u64 cap) {
  u64 n = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (base && n > cap / base) return cap + 1;
    n *= base;
  }
  return n;
}

}  // namespace

IntMatrix bar_coboundary(const Group& g, unsigned k) {
  // non-identity elements are 1..N-1; tuple digit i has weight (N-1)^(k-i)
  const u64 base = g.order() - 1;
  const u64 ncols = tuple_count(base, k, ~u64{0} >> 1);
  const u64 nrows = tuple_count(base, k + 1, ~u64{0} >> 1);
  IntMatrix d(nrows, ncols);
  if (base == 0) return d;
  std::vector<Elem> tup(k + 1);
  std::vector<Elem> face(k);
  auto index = [&](const std::vector<Elem>& t) {
    u64 x = 0;
    for (Elem e : t) x = x * base + (e - 1);
    return x;
  };
  for (u64 row = 0; row < nrows; ++row) {
    u64 x = row;
    for (unsigned i = k + 1; i-- > 0;) {
      tup[i] = static_cast<Elem>(x % base + 1);
      x /= base;
    }
    // d f(g1..g_{k+1}) = f(g2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{k+1} f(g1..gk)
    std::copy(tup.begin() + 1, tup.end(), face.begin());
    d.at(row, index(face)) += 1;
    for (unsigned i = 0; i < k; ++i) {
      Elem prod = g.mul(tup[i], tup[i + 1]);
      if (prod == 0) continue;  // normalized cochains vanish there
      for (unsigned j = 0, o = 0; j <= k; ++j) {
        if (j == i + 1) continue;
        face[o++] = j == i ? prod : tup[j];
      }
      d.at(row, index(face)) += (i % 2 == 0) ? -1 : 1;
    }
    std::copy(tup.begin(), tup.end() - 1, face.begin());
    d.at(row, index(face)) += (k % 2 == 0) ? -1 : 1;
  }
  return d;
}

FgAbelian bar_cohomology_oracle(const Group& g, unsigned k, u64 n, u64 entry_cap) {
  if (n < 1) fail(ErrorKind::ParamOutOfRange, "modulus must be positive");
  const u64 base = g.order() - 1;
  const u64 big = ~u64{0} >> 1;
  const u64 nk = tuple_count(base, k, big), nk1 = tuple_count(base, k + 1, big);
  const u64 prev = k ? tuple_count(base, k - 1, big) : 0;
  auto too_big = [&](u64 r, u64 c) { return r > big || c > big || (c && r > entry_cap / c); };
  if (too_big(nk1, nk) || too_big(nk, prev))
    fail(ErrorKind::OracleCapExceeded, "bar complex in degree " + std::to_string(k) + " for a group of order " +
                                           std::to_string(g.order()) + " exceeds the oracle cap");
  IntMatrix d_prev = k ? bar_coboundary(g, k - 1) : IntMatrix(1, 0);
  IntMatrix d_this = bar_coboundary(g, k);
  return cohomology_mod_n(d_prev, d_this, nk, n);
}

namespace {

// Multi-indices (n_1, .., n_d) with sum n, in lexicographic order.
void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned total, std::size_t parts) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  compositions(total, parts, cur, out);
  return out;
}

// Hom of the product resolution into a trivial module: each factor
// contributes 0 out of even degrees and m_i out of odd ones, with the
// Koszul sign of the earlier degrees.
IntMatrix product_coboundary(const std::vector<u64>& m, unsigned k) {
  auto src = compositions(k, m.size()), dst = compositions(k + 1, m.size());
  IntMatrix d(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    unsigned before = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (src[c][i] % 2 == 1) {
        auto t = src[c];
        ++t[i];
        auto r = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), t) - dst.begin());
        d.at(r, c) += (before % 2 ? -1 : 1) * static_cast<std::int64_t>(m[i]);
      }
      before += src[c][i];
    }
  }
  return d;
}

}  // namespace

FgAbelian resolution_cohomology(const std::vector<u64>& cyclic_orders, unsigned k, u64 n) {
  if (cyclic_orders.empty()) return k == 0 ? FgAbelian::cyclic(n) : FgAbelian::zero();
  for (u64 m : cyclic_orders)
    if (m < 1) fail(ErrorKind::ParamOutOfRange, "cyclic orders must be positive");
  IntMatrix d_prev = k ? product_coboundary(cyclic_orders, k - 1) : IntMatrix(1, 0);
  IntMatrix d_this = product_coboundary(cyclic_orders, k);
  return cohomology_mod_n(d_prev, d_this, d_this.cols, n);
}

}  // namespace actionlab
