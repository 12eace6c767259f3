#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "skn/generators.hpp"
#include "skn/graph.hpp"
#include "skn/independence.hpp"

namespace skn {

using Rational = boost::rational<std::int64_t>;

/// Matching lower and upper certificates for the fractional chromatic
/// number of a stable Kneser graph.
struct FractionalCertificate {
  /// |V| / alpha.
  Rational lower;
  /// Total weight of the star fractional coloring.
  Rational upper;
  /// Weight of each star, indexed by residue (1/k each).
  std::vector<Rational> weights;
  /// Total star weight on each vertex.
  std::vector<Rational> coverage;

  /// lower == upper, which pins the fractional chromatic number.
  bool tight() const { return lower == upper; }
  /// Every vertex is covered with weight exactly one.
  bool exact_cover() const;
};

/// Builds both certificates from the stars and an exact alpha. Throws
/// InvariantViolation if some vertex is covered with weight below one.
FractionalCertificate fractional_chromatic(const Params& p, const Graph& kg,
                                           const StarFamily& stars, std::size_t alpha);

/// Exact chromatic number by DSATUR-ordered backtracking, testing
/// q-colorability upward from a clique lower bound. Throws
/// ChromaticBudgetExceeded with the best known interval when the node budget
/// runs out.
std::uint32_t chromatic_number(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// Greedy DSATUR coloring; returns one color per vertex.
std::vector<std::uint32_t> dsatur_coloring(const Graph& g);

/// Whether `colors` is a proper coloring of g.
bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& colors);

/// ceil(n/k) <= chi <= n - (k-1)s.
bool verify_chromatic_bounds(const Params& p, std::uint32_t chi);

}  // namespace skn
