#include <gtest/gtest.h>

#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skn/errors.hpp"
#include "skn/generators.hpp"

using namespace skn;

namespace {

std::vector<std::vector<std::uint32_t>> elements_of(const std::vector<StableSet>& sets) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const StableSet& set : sets) out.push_back(set.elements);
  return out;
}

}  // namespace

TEST(Params, Validation) {
  EXPECT_THROW(Params::make(5, 0, 2), ParameterError);
  EXPECT_THROW(Params::make(5, 2, 1), ParameterError);
  EXPECT_THROW(Params::make(5, 2, 3), ParameterError);
  const Params p = Params::make(6, 2, 3);
  EXPECT_TRUE(p.degenerate());
  EXPECT_EQ(p.r(), 0u);
  EXPECT_THROW(p.require_nondegenerate("test"), ParameterError);
  EXPECT_EQ(Params::make(13, 3, 4).r(), 1u);
}

TEST(StableSets, SevenTwoThree) {
  const auto sets = enumerate_stable_sets(Params::make(7, 2, 3));
  const std::vector<std::vector<std::uint32_t>> expected{{0, 3}, {0, 4}, {1, 4}, {1, 5},
                                                         {2, 5}, {2, 6}, {3, 6}};
  EXPECT_EQ(elements_of(sets), expected);
}

TEST(StableSets, DegenerateAndSingletons) {
  EXPECT_EQ(elements_of(enumerate_stable_sets(Params::make(6, 2, 3))),
            (std::vector<std::vector<std::uint32_t>>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(enumerate_stable_sets(Params::make(5, 1, 2)).size(), 5u);
}

TEST(StableSets, GapVectors) {
  EXPECT_EQ(gap_vector({0, 3}, 7), (std::vector<std::uint32_t>{3, 4}));
  EXPECT_EQ(gap_vector({0, 3}, 8), (std::vector<std::uint32_t>{3, 5}));
  EXPECT_EQ(gap_vector({0, 3, 6}, 10), (std::vector<std::uint32_t>{3, 3, 4}));
  for (const StableSet& set : enumerate_stable_sets(Params::make(11, 3, 3))) {
    EXPECT_EQ(set.gaps, gap_vector(set.elements, 11));
    std::uint32_t total = 0;
    for (std::uint32_t g : set.gaps) {
      EXPECT_GE(g, 3u);
      total += g;
    }
    EXPECT_EQ(total, 11u);
  }
}

TEST(StableSets, MatchBitmaskOracle) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    for (std::uint32_t s = 2; s <= n; ++s) {
      for (std::uint32_t k = 1; k * s <= n; ++k) {
        const Params p = Params::make(n, k, s);
        EXPECT_EQ(elements_of(enumerate_stable_sets(p)), oracle::stable_sets(n, k, s))
            << p.to_string();
      }
    }
  }
}

TEST(Counting, Binomial) {
  EXPECT_EQ(binomial(5, 1), 5u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088u);
  EXPECT_THROW(binomial(200, 100), ParameterError);
}

TEST(Counting, Examples) {
  EXPECT_EQ(count_formula(Params::make(7, 2, 3)), 7u);
  EXPECT_EQ(count_formula(Params::make(10, 2, 3)), 25u);
  EXPECT_EQ(count_formula(Params::make(7, 3, 2)), 7u);
  EXPECT_THROW(count_formula(Params::make(6, 2, 3)), ParameterError);
}

TEST(Counting, FormulaMatchesEnumeration) {
  for (std::uint32_t s = 2; s <= 5; ++s) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      for (std::uint32_t n = s * k + 1; n <= s * k + 8; ++n) {
        const Params p = Params::make(n, k, s);
        EXPECT_EQ(count_formula(p), enumerate_stable_sets(p).size()) << p.to_string();
      }
    }
  }
}

TEST(Kneser, SmallInstances) {
  const Graph k3 = build_stable_kneser(Params::make(6, 2, 3));
  EXPECT_TRUE(same_adjacency(k3, complete_graph(3)));

  const Graph kg = build_stable_kneser(Params::make(7, 2, 3));
  EXPECT_EQ(kg.num_vertices(), 7u);
  EXPECT_TRUE(kg.is_regular());
  EXPECT_EQ(kg.degree(0), 4u);
  EXPECT_EQ(kg.labels()[0], (Label{0, 3}));

  // 2-stable pairs of Z_5 form the 5-cycle 13-24-35-14-25 (1-based labels).
  const Graph sg = build_stable_kneser(Params::make(5, 2, 2));
  EXPECT_EQ(sg.num_vertices(), 5u);
  EXPECT_EQ(sg.num_edges(), 5u);
  EXPECT_TRUE(sg.is_regular());
  EXPECT_EQ(sg.degree(0), 2u);
}

TEST(Kneser, AdjacencyIsDisjointness) {
  const Params p = Params::make(11, 3, 3);
  const Graph kg = build_stable_kneser(p);
  const auto& labels = kg.labels();
  for (std::size_t i = 0; i < kg.num_vertices(); ++i) {
    for (std::size_t j = 0; j < kg.num_vertices(); ++j) {
      if (i == j) continue;
      bool disjoint = true;
      for (auto a : labels[i]) {
        for (auto b : labels[j]) disjoint = disjoint && a != b;
      }
      EXPECT_EQ(kg.has_edge(i, j), disjoint);
    }
  }
}

TEST(AuxiliaryGraph, Definitional) {
  EXPECT_TRUE(same_adjacency(build_g_definitional(Params::make(7, 2, 3)), cycle_power(7, 2)));
  EXPECT_TRUE(same_adjacency(build_g_definitional(Params::make(10, 2, 3)), cycle_power(10, 2)));
  EXPECT_THROW(build_g_definitional(Params::make(6, 2, 3)), ParameterError);
}

TEST(AuxiliaryGraph, ClosedFormExamples) {
  EXPECT_TRUE(same_adjacency(build_g_closed_form(Params::make(10, 2, 3)), cycle_power(10, 2)));
  EXPECT_TRUE(same_adjacency(build_g_closed_form(Params::make(7, 2, 3)), cycle_power(7, 2)));
  const Params p = Params::make(13, 3, 4);
  EXPECT_FALSE(first_adjacency_difference(build_g_closed_form(p), build_g_definitional(p)));
  EXPECT_THROW(build_g_closed_form(Params::make(7, 3, 2)), ParameterError);
  EXPECT_THROW(build_g_closed_form(Params::make(4, 1, 3)), ParameterError);
  EXPECT_THROW(build_g_closed_form(Params::make(6, 2, 3)), ParameterError);
}

TEST(AuxiliaryGraph, ClosedFormMatchesDefinitionalWidely) {
  for (std::uint32_t s = 3; s <= 6; ++s) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      for (std::uint32_t n = s * k + 1; n <= s * k + 2 * s + 2; ++n) {
        const Params p = Params::make(n, k, s);
        const Graph def = build_g_definitional(p);
        EXPECT_FALSE(first_adjacency_difference(build_g_closed_form(p), def)) << p.to_string();
        if (n >= s * (k + 1) - 1) {
          EXPECT_TRUE(same_adjacency(def, cycle_power(n, s - 1))) << p.to_string();
        }
        const auto bands = closed_form_band_table(p);
        for (std::uint32_t x = 1; x < n; ++x) EXPECT_EQ(bands[x], bands[n - x]);
      }
    }
  }
}

TEST(CyclePower, Construction) {
  EXPECT_TRUE(same_adjacency(cycle_power(5, 1), corpus::cycle(5)));
  const Graph c72 = cycle_power(7, 2);
  EXPECT_TRUE(c72.is_regular());
  EXPECT_EQ(c72.degree(3), 4u);
  EXPECT_TRUE(c72.has_edge(0, 5));
  EXPECT_FALSE(c72.has_edge(0, 3));
  EXPECT_THROW(cycle_power(7, 3), ParameterError);
  EXPECT_THROW(cycle_power(2, 1), ParameterError);
  EXPECT_THROW(cycle_power(7, 0), ParameterError);
}
