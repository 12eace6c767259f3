#include <gtest/gtest.h>

#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skn/autgroup.hpp"
#include "skn/errors.hpp"
#include "skn/generators.hpp"

using namespace skn;

TEST(Refinement, RegularGraphStaysUnit) {
  const Graph g = cycle_power(9, 2);
  OrderedPartition part{std::vector<std::uint32_t>(9, 0), 1};
  refine(g, part);
  EXPECT_EQ(part.num_colors, 1u);
  const OrderedPartition split = individualize(part, 4);
  EXPECT_EQ(split.num_colors, 2u);
  EXPECT_EQ(split.color[4], 0u);
  EXPECT_EQ(split.cell_sizes(), (std::vector<std::uint32_t>{1, 8}));
}

TEST(Refinement, PathSplitsByDistanceFromEnds) {
  const Graph g = corpus::path(5);
  OrderedPartition part{std::vector<std::uint32_t>(5, 0), 1};
  refine(g, part);
  EXPECT_EQ(part.num_colors, 3u);
  EXPECT_EQ(part.color[0], part.color[4]);
  EXPECT_EQ(part.color[1], part.color[3]);
  EXPECT_NE(part.color[0], part.color[2]);
}

TEST(Refinement, TraceIsInvariantUnderAutomorphisms) {
  const Graph g = cycle_power(11, 3);
  OrderedPartition a = individualize(OrderedPartition{std::vector<std::uint32_t>(11, 0), 1}, 2);
  OrderedPartition b = individualize(OrderedPartition{std::vector<std::uint32_t>(11, 0), 1}, 7);
  EXPECT_EQ(refine(g, a), refine(g, b));
  const Permutation shift = Permutation::rotation(11, 5);
  for (std::uint32_t v = 0; v < 11; ++v) EXPECT_EQ(a.color[v], b.color[shift(v)]);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(complete_graph(4)).order(), 24u);
  EXPECT_EQ(automorphisms(corpus::cycle(5)).order(), 10u);
  EXPECT_EQ(automorphisms(build_stable_kneser(Params::make(7, 2, 3))).order(), 14u);
  EXPECT_EQ(automorphisms(corpus::empty(0)).order(), 1u);
}

TEST(Automorphisms, MatchBruteForceOnCorpus) {
  for (const auto& entry : corpus::small_graphs()) {
    const PermutationGroup found = automorphisms(entry.graph);
    EXPECT_EQ(found.elements(), oracle::automorphisms(entry.graph)) << entry.name;
  }
}

TEST(Automorphisms, MatchBruteForceOnAllFiveVertexGraphs) {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::uint32_t bit = 0;
    const Graph g = Graph::from_predicate(5, [&](Vertex, Vertex) { return (mask >> bit++) & 1; });
    ASSERT_EQ(automorphisms(g).elements(), oracle::automorphisms(g)) << mask;
  }
}

TEST(Automorphisms, Limits) {
  EXPECT_THROW(automorphisms(corpus::cycle(12), {.node_budget = 3}), BudgetExceeded);
  EXPECT_THROW(automorphisms(corpus::cycle(12), {.vertex_ceiling = 10}), ParameterError);
  SearchStats stats;
  automorphisms(corpus::cycle(12), {}, &stats);
  EXPECT_GT(stats.nodes, 0u);
  EXPECT_GE(stats.leaves, 24u);
}

TEST(Dihedral, InducedAction) {
  const Params p = Params::make(7, 2, 3);
  const Graph kg = build_stable_kneser(p);
  const DihedralCert cert = induced_dihedral(p, kg);
  // {0,3} goes to {1,4} under i -> i+1.
  EXPECT_EQ(kg.labels()[cert.rotation(0)], (Label{1, 4}));
  EXPECT_EQ(cert.induced_elements.size(), 14u);
  EXPECT_TRUE(cert.faithful());
  EXPECT_TRUE(certify_dihedral(automorphisms(kg), cert));
}

TEST(Dihedral, CertifiesNineTwoFour) {
  const Params p = Params::make(9, 2, 4);
  const Graph kg = build_stable_kneser(p);
  EXPECT_TRUE(certify_dihedral(automorphisms(kg), induced_dihedral(p, kg)));
}

TEST(Dihedral, RejectsWrongGroup) {
  const Params p = Params::make(4, 1, 3);
  const DihedralCert cert = induced_dihedral(p, complete_graph(4));
  EXPECT_FALSE(certify_dihedral(automorphisms(complete_graph(4)), cert));
}

TEST(Dihedral, DegenerateIsNotFaithful) {
  const Params p = Params::make(6, 2, 3);
  const DihedralCert cert = induced_dihedral(p, build_stable_kneser(p));
  EXPECT_FALSE(cert.faithful());
}

TEST(Dihedral, GroundGroup) {
  const PermutationGroup d = ground_dihedral_group(7);
  EXPECT_EQ(d.order(), 14u);
  EXPECT_TRUE(d.contains(Permutation::reflection(7)));
  EXPECT_TRUE(groups_equal(d, automorphisms(cycle_power(7, 2))));
}

TEST(StarMap, IdentityAndRotation) {
  const Params p = Params::make(7, 2, 3);
  const Graph kg = build_stable_kneser(p);
  const StarMap id = star_map(p, kg, Permutation::identity(7));
  EXPECT_TRUE(id.image.is_identity());
  const DihedralCert cert = induced_dihedral(p, kg);
  EXPECT_EQ(star_map(p, kg, cert.rotation).image, Permutation::rotation(7, 1));
  EXPECT_EQ(star_map(p, kg, cert.reflection).image, Permutation::reflection(7));
}

TEST(StarMap, IsAnInjectiveHomomorphism) {
  const Params p = Params::make(11, 3, 3);
  const Graph kg = build_stable_kneser(p);
  const StarMapper mapper(p, kg);
  const PermutationGroup aut = automorphisms(kg);
  const std::vector<Permutation> elems(aut.elements().begin(), aut.elements().end());
  std::set<Permutation> images;
  for (const Permutation& a : elems) {
    images.insert(mapper.map(a).image);
    for (const Permutation& b : elems) {
      EXPECT_EQ(mapper.map(a * b).image, mapper.map(a).image * mapper.map(b).image);
    }
  }
  EXPECT_EQ(images.size(), elems.size());
  EXPECT_EQ(images, automorphisms(build_g_definitional(p)).elements());
}

TEST(StarMap, RejectsNonAutomorphism) {
  const Params p = Params::make(8, 2, 3);
  const Graph kg = build_stable_kneser(p);
  std::vector<std::uint32_t> swap(kg.num_vertices());
  std::iota(swap.begin(), swap.end(), 0u);
  std::swap(swap[0], swap[1]);
  EXPECT_THROW(star_map(p, kg, Permutation(swap)), TheoremViolation);
  EXPECT_THROW(StarMapper(Params::make(7, 3, 2), build_stable_kneser(Params::make(7, 3, 2))),
               ParameterError);
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits(automorphisms(build_stable_kneser(Params::make(7, 2, 3)))).size(), 1u);
  EXPECT_GE(orbits(automorphisms(build_stable_kneser(Params::make(8, 2, 3)))).size(), 2u);
  const std::vector<Permutation> none;
  const auto trivial = orbits(group_closure(3, none));
  EXPECT_EQ(trivial, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
}

TEST(Consecutive, Examples) {
  EXPECT_TRUE(consecutive_criterion(Permutation::rotation(7, 3), 7));
  EXPECT_TRUE(consecutive_criterion(Permutation::reflection(7), 7));
  EXPECT_FALSE(consecutive_criterion(Permutation({0, 2, 1, 3, 4}), 5));
}

TEST(CyclePowerControl, DihedralOrders) {
  for (auto [m, q] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {7, 2}, {9, 2}, {9, 3}, {11, 4}, {13, 5}}) {
    EXPECT_EQ(automorphisms(cycle_power(m, q)).order(), 2u * m) << m << "," << q;
  }
  // m = 2q+2 is the complement of a perfect matching: much larger group.
  EXPECT_EQ(automorphisms(cycle_power(8, 3)).order(), 384u);
}
