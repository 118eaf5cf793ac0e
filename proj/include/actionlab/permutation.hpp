#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "actionlab/group.hpp"

namespace actionlab {

/// Permutation of points 0..degree-1 stored as an image array.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 0);
  explicit Permutation(std::vector<unsigned> images);

  /// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::string_view cycles, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  unsigned operator[](unsigned x) const { return images_[x]; }
  const std::vector<unsigned>& images() const { return images_; }
  bool is_identity() const;

  /// Apply *this first, then rhs (left-to-right composition).
  Permutation then(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_even() const;

  std::string to_cycles() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

/// Closure of permutation generators by breadth-first search. Element 0 is the
/// identity; elements are numbered in discovery order; labels are cycle strings.
Group permutation_group(const std::vector<Permutation>& gens, std::size_t degree,
                        std::size_t closure_cap = default_limits().closure_cap);

/// Group on an explicitly listed, multiplication-closed set of permutations;
/// element i is perms[i] and perms[0] must be the identity.
Group group_from_permutations(const std::vector<Permutation>& perms);

}  // namespace actionlab
