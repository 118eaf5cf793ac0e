#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version (default
// namespace) and a plain serial reference in `serial`, which the tests use as
// the oracle and the benchmark uses as the baseline.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "actionlab/group.hpp"

namespace actionlab::kernels {

struct Triple {
  Elem a, b, c;
};

/// Exhaustive check of (ab)c == a(bc) over all triples.
std::optional<Triple> find_associativity_violation(std::span<const Elem> table, std::size_t n);
/// Checks `samples` pseudo-random triples drawn from a fixed seed.
std::optional<Triple> find_associativity_violation_sampled(std::span<const Elem> table, std::size_t n,
                                                           std::uint64_t samples, std::uint64_t seed);

/// A subgroup together with a generating set for it.
struct GeneratedSubgroup {
  ElementSet mask;
  std::vector<Elem> gens;
};

/// For each frontier subgroup H and each extender x not in H, the closure of
/// H.gens + {x}. Result i holds the joins of frontier[i], deduplicated within i.
std::vector<std::vector<GeneratedSubgroup>> extend_frontier(const Group& g,
                                                           const std::vector<GeneratedSubgroup>& frontier,
                                                           std::span<const Elem> extenders);

/// All bijective homomorphisms fixing the order of each generator image,
/// found by extending images generator by generator and pruning on the
/// subgroup generated so far. Output sorted lexicographically.
std::vector<std::vector<Elem>> automorphism_search(const Group& g, std::span<const Elem> gens,
                                                   std::size_t count_cap);

namespace serial {

std::optional<Triple> find_associativity_violation(std::span<const Elem> table, std::size_t n);

/// Fixed-point iteration: join every known subgroup with every element until
/// nothing new appears. Slow; used as an oracle for the parallel enumerator.
std::vector<ElementSet> all_subgroups_naive(const Group& g);

/// Tries every image tuple and checks the full Cayley table at each leaf.
std::vector<std::vector<Elem>> automorphism_search(const Group& g, std::span<const Elem> gens,
                                                   std::size_t count_cap);

}  // namespace serial

}  // namespace actionlab::kernels
