#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skn/graph.hpp"

namespace skn {

/// Validated parameter triple of a stable Kneser graph: ground set size n,
/// subset size k, stability s. Guarantees k >= 1, s >= 2 and n >= s*k.
class Params {
 public:
  /// Throws ParameterError when the triple is out of range.
  static Params make(std::uint32_t n, std::uint32_t k, std::uint32_t s);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t s() const { return s_; }
  /// Slack r = n - s*k.
  std::uint32_t r() const { return n_ - s_ * k_; }

  /// n == s*k: the graph collapses to K_s.
  bool degenerate() const { return n_ == s_ * k_; }

  /// Throws ParameterError unless n >= s*k + 1.
  void require_nondegenerate(const char* what) const;

  std::string to_string() const;

  auto operator<=>(const Params&) const = default;

 private:
  Params(std::uint32_t n, std::uint32_t k, std::uint32_t s) : n_(n), k_(k), s_(s) {}

  std::uint32_t n_;
  std::uint32_t k_;
  std::uint32_t s_;
};

/// An s-stable k-subset of Z_n.
struct StableSet {
  /// Strictly increasing residues in 0..n-1.
  std::vector<std::uint32_t> elements;
  /// gaps[i] = elements[i+1] - elements[i]; the last gap wraps around:
  /// elements[0] + n - elements[k-1].
  std::vector<std::uint32_t> gaps;

  auto operator<=>(const StableSet&) const = default;
};

/// Circular distance between residues a and b of Z_n.
inline std::uint32_t circular_distance(std::uint32_t a, std::uint32_t b, std::uint32_t n) {
  const std::uint32_t d = a > b ? a - b : b - a;
  return d < n - d ? d : n - d;
}

/// Gap vector of an ascending residue sequence in Z_n.
std::vector<std::uint32_t> gap_vector(const std::vector<std::uint32_t>& elements,
                                      std::uint32_t n);

/// All s-stable k-subsets of Z_n, lexicographically ordered.
std::vector<StableSet> enumerate_stable_sets(const Params& p);

/// Binomial coefficient; throws ParameterError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// (n/k) * C(n - (s-1)k - 1, k - 1). Requires n >= sk+1. Throws
/// InvariantViolation if k does not divide the product.
std::uint64_t count_formula(const Params& p);

/// C(n - (s-1)k - 1, k - 1), the common size of every star.
std::uint64_t star_size_formula(const Params& p);

/// The s-stable Kneser graph: one vertex per stable set in lexicographic
/// order, labelled with its elements; adjacent iff disjoint.
Graph build_stable_kneser(const Params& p);

/// Co-membership graph on Z_n: i ~ j iff no s-stable k-subset contains both.
/// Requires n >= sk+1.
Graph build_g_definitional(const Params& p);

/// Closed form of the co-membership graph. For n >= s(k+1)-1 this is
/// cycle_power(n, s-1); below that, i ~ j iff |i - j| avoids every band
/// {ds, ..., ds+r}, d = 1..k-1. Requires n >= sk+1, k >= 2 and s >= 3.
Graph build_g_closed_form(const Params& p);

/// Forbidden differences of the closed form (union of the bands), as a
/// membership table indexed 0..n-1. Throws InvariantViolation unless the
/// table is symmetric under x -> n - x.
std::vector<bool> closed_form_band_table(const Params& p);

/// C_n^d: i ~ j iff their circular distance is at most d. Requires n >= 3,
/// d >= 1 and 2d + 1 < n (otherwise the result would be complete).
Graph cycle_power(std::uint32_t n, std::uint32_t d);

}  // namespace skn
