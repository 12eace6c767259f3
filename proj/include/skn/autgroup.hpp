#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "skn/generators.hpp"
#include "skn/graph.hpp"
#include "skn/independence.hpp"
#include "skn/permutation.hpp"

namespace skn {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::size_t kDefaultVertexCeiling = 5000;

struct SearchLimits {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t vertex_ceiling = kDefaultVertexCeiling;
  std::size_t max_order = kDefaultMaxGroupOrder;
};

/// Ordered vertex coloring; colors are 0..num_colors-1 and every color is
/// used. Colors are assigned canonically, so refining the image of a
/// partition under an automorphism yields the image of the refinement.
struct OrderedPartition {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;

  bool discrete() const { return num_colors == color.size(); }
  /// Cell sizes indexed by color.
  std::vector<std::uint32_t> cell_sizes() const;
};

/// Iterated color refinement to the coarsest equitable partition finer than
/// the input. Returns a hash of the refinement trace; equal inputs related by
/// an automorphism give equal traces.
std::uint64_t refine(const Graph& g, OrderedPartition& partition);

/// Splits v off its cell; v's new singleton cell precedes the remainder.
OrderedPartition individualize(const OrderedPartition& partition, Vertex v);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Complete automorphism group by individualization-refinement. The first
/// path of the search tree is fixed; every compatible branch on the image
/// side is explored and its leaf verified with is_automorphism.
///
/// Throws BudgetExceeded when more than limits.node_budget search nodes are
/// visited, and ParameterError when the graph exceeds limits.vertex_ceiling.
PermutationGroup automorphisms(const Graph& g, const SearchLimits& limits = {},
                               SearchStats* stats = nullptr);

/// Image of the ground-set dihedral group on the vertices of a labelled
/// graph whose labels are subsets of Z_n.
struct DihedralCert {
  std::uint32_t n = 0;
  /// Induced by i -> i+1.
  Permutation rotation;
  /// Induced by i -> -i.
  Permutation reflection;
  /// rho^t for t = 0..n-1 followed by rho^t tau for t = 0..n-1.
  std::vector<Permutation> induced_elements;

  /// All 2n induced permutations are distinct.
  bool faithful() const;
};

/// Induces the 2n ground maps i -> i+t and i -> t-i on the vertices of `g`.
/// Unlabelled graphs on exactly n vertices are treated as having vertex i
/// labelled {i}. Each induced map is checked with is_automorphism; a failure
/// throws InvariantViolation.
DihedralCert induced_dihedral(const Params& p, const Graph& g);

/// The dihedral group of the n-cycle acting on 0..n-1.
PermutationGroup ground_dihedral_group(std::uint32_t n);

/// True iff the element set of `aut` is exactly the induced dihedral image
/// and that image is faithful.
bool certify_dihedral(const PermutationGroup& aut, const DihedralCert& cert);

/// phi(alpha)(i) = j iff alpha maps star I_i onto star I_j setwise.
struct StarMap {
  Permutation source;
  Permutation image;
};

/// Computes the ground permutation of a Kneser automorphism from its action
/// on stars. Build once per graph and reuse for every automorphism.
class StarMapper {
 public:
  /// Requires s >= 3 and n >= sk+1; `kg` must be build_stable_kneser(p).
  StarMapper(const Params& p, const Graph& kg);

  /// Throws TheoremViolation (with a witness) if some star is not mapped
  /// onto a star, or if the induced ground map is not a bijection.
  StarMap map(const Permutation& alpha) const;

  const StarFamily& stars() const { return stars_; }

 private:
  Params params_;
  StarFamily stars_;
  std::map<Bitset, std::uint32_t> star_index_;
};

/// One-shot form of StarMapper::map.
StarMap star_map(const Params& p, const Graph& kg, const Permutation& alpha);

/// Vertex orbits, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> orbits(const PermutationGroup& aut);

/// True iff p(i+1) is p(i)+1 or p(i)-1 (mod n) for every i.
bool consecutive_criterion(const Permutation& p, std::uint32_t n);

}  // namespace skn
