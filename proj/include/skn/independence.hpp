#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skn/generators.hpp"
#include "skn/graph.hpp"

namespace skn {

/// Stars of a stable Kneser graph: stars[i] holds the vertices whose subset
/// contains residue i.
struct StarFamily {
  std::uint32_t n = 0;
  std::vector<Bitset> stars;

  /// No two stars coincide.
  bool pairwise_distinct() const;
};

/// Reads the stars off the vertex labels of build_stable_kneser(p) and
/// checks each is independent (InvariantViolation otherwise).
StarFamily build_stars(const Params& p, const Graph& kg);

struct IndependentSet {
  std::size_t size = 0;
  Bitset members;
};

/// Exact independence number with a witness, by branch and bound over a
/// greedy clique cover. Throws BudgetExceeded past `node_budget` nodes.
IndependentSet max_independent_set(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// Every independent set of exactly `alpha` vertices, where alpha must be the
/// independence number. Sorted by ascending member lists.
std::vector<Bitset> all_maximum_independent_sets(const Graph& g, std::size_t alpha,
                                                 std::uint64_t node_budget = 10'000'000);

/// Whether no two members of `set` are adjacent.
bool is_independent(const Graph& g, const Bitset& set);

}  // namespace skn
