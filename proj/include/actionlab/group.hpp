#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace actionlab {

/// Elements are indices 0..order-1; 0 is always the identity.
using Elem = std::uint32_t;

struct Limits {
  std::size_t closure_cap = 20000;
  std::size_t full_associativity_order = 256;
  std::size_t subgroup_order_cap = 512;
  std::size_t automorphism_order_cap = 64;
  std::size_t automorphism_count_cap = 2'000'000;

  /// Defaults, with ACTIONLAB_MAX_ORDER (if set) replacing the enumeration caps.
  static Limits from_environment();
};

const Limits& default_limits();

/// Fixed-size membership mask over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  /// Returns true if x was newly inserted.
  bool insert(Elem x) {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  std::size_t count() const;
  std::vector<Elem> to_vector() const;
  bool is_subset_of(const ElementSet& other) const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

class Group {
 public:
  Group() = default;

  /// Validates a row-major Cayley table: Latin square, an identity (relabelled
  /// to index 0 if it sits elsewhere) and associativity, exhaustive up to
  /// limits.full_associativity_order and sampled above.
  static Group from_table(std::vector<Elem> flat, std::size_t order, std::vector<std::string> labels = {},
                          const Limits& limits = default_limits());
  static Group from_rows(const std::vector<std::vector<Elem>>& rows, std::vector<std::string> labels = {},
                         const Limits& limits = default_limits());

  /// For tables produced internally from a known group; only shape is checked.
  static Group trusted(std::vector<Elem> flat, std::size_t order, std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const { return element_order_[a]; }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// g x g^-1
  Elem conjugate(Elem x, Elem g) const { return mul(mul(g, x), inv(g)); }
  bool is_abelian() const;
  std::size_t exponent() const;

  std::span<const Elem> table() const { return table_; }
  std::span<const Elem> row(Elem a) const {
    return std::span<const Elem>(table_).subspan(static_cast<std::size_t>(a) * order_, order_);
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::string> labels_;
};

/// A subset of a parent group closed under multiplication and inversion.
/// Holds a non-owning reference: the parent must outlive it.
class Subgroup {
 public:
  Subgroup() = default;

  /// Checks identity membership and closure.
  static Subgroup from_members(const Group& parent, std::vector<Elem> members);
  /// The caller guarantees `mask` is a subgroup of `parent`.
  static Subgroup assume_closed(const Group& parent, ElementSet mask);
  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  const Group& parent() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Elem x) const { return mask_.contains(x); }
  const std::vector<Elem>& members() const { return members_; }
  const ElementSet& mask() const { return mask_; }
  bool is_subgroup_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  /// The subgroup as a standalone group; element i is members()[i].
  Group as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }
  /// Canonical order: by order, then lexicographically by sorted members.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(const Group* parent, ElementSet mask);

  const Group* parent_ = nullptr;
  ElementSet mask_;
  std::vector<Elem> members_;
};

/// Closure of `gens` under multiplication.
Subgroup generate(const Group& g, std::span<const Elem> gens, std::size_t cap = 0);
Subgroup join(const Subgroup& h, Elem x);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Image of h under an element map (for example an automorphism).
Subgroup image(const Subgroup& h, std::span<const Elem> map);

/// Greedy small generating set: elements taken by descending order, then index.
std::vector<Elem> greedy_generators(const Subgroup& h);

}  // namespace actionlab
