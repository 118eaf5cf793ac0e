#pragma once

#include <cstdint>
#include <vector>

#include "actionlab/group.hpp"
#include "actionlab/homology.hpp"

namespace actionlab {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Smith form of m reduced mod p^b: the number of diagonal entries that are
/// nonzero mod p^b, and the valuations 0 < v < b of the non-unit ones.
struct LocalSmith {
  std::size_t nonzero = 0;
  std::vector<unsigned> valuations;
};

LocalSmith local_smith(const IntMatrix& m, u64 p, unsigned b);
namespace serial {
LocalSmith local_smith(const IntMatrix& m, u64 p, unsigned b);
}

/// H^k of a cochain complex of free modules C^{k-1} -> C^k -> C^{k+1} with
/// coefficients Z/n, given the two integral coboundary matrices (delta_prev
/// may have zero columns when k = 0).
FgAbelian cohomology_mod_n(const IntMatrix& delta_prev, const IntMatrix& delta_this, std::size_t dim, u64 n);

/// Coboundary C^k -> C^{k+1} of the normalized bar complex of g, trivial action.
/// Rows index (k+1)-tuples of non-identity elements, columns k-tuples.
IntMatrix bar_coboundary(const Group& g, unsigned k);

inline constexpr u64 kOracleEntryCap = 4'000'000;

/// H^k(G; Z/n) with trivial action via the normalized bar complex.
/// Throws OracleCapExceeded when a coboundary matrix would exceed the cap.
FgAbelian bar_cohomology_oracle(const Group& g, unsigned k, u64 n, u64 entry_cap = kOracleEntryCap);

/// H^k(Z/m1 x ... x Z/md; Z/n) from the tensor product of the periodic
/// resolutions of the cyclic factors.
FgAbelian resolution_cohomology(const std::vector<u64>& cyclic_orders, unsigned k, u64 n);

}  // namespace actionlab
