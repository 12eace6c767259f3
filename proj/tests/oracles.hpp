#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the Graph and Permutation containers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skn/graph.hpp"
#include "skn/permutation.hpp"

namespace oracle {

using skn::Graph;
using skn::Permutation;

inline bool preserves_edges(const Graph& g, const std::vector<std::uint32_t>& p) {
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) != g.has_edge(p[i], p[j])) return false;
    }
  }
  return true;
}

/// Every permutation of the vertex set that preserves adjacency.
inline std::set<Permutation> automorphisms(const Graph& g) {
  std::vector<std::uint32_t> p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0u);
  std::set<Permutation> out;
  do {
    if (preserves_edges(g, p)) out.insert(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool independent_mask(const Graph& g, std::uint64_t mask) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (!(mask >> i & 1)) continue;
    for (std::size_t j = i + 1; j < g.num_vertices(); ++j) {
      if ((mask >> j & 1) && g.has_edge(i, j)) return false;
    }
  }
  return true;
}

/// Independence number and every maximum independent set as a sorted list
/// of member lists, by scanning all subsets.
inline std::pair<std::size_t, std::vector<std::vector<std::uint32_t>>> maximum_independent_sets(
    const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  std::vector<std::uint64_t> winners;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < best || !independent_mask(g, mask)) continue;
    if (size > best) {
      best = size;
      winners.clear();
    }
    winners.push_back(mask);
  }
  std::vector<std::vector<std::uint32_t>> sets;
  for (std::uint64_t mask : winners) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    sets.push_back(members);
  }
  std::sort(sets.begin(), sets.end());
  return {best, sets};
}

inline bool colorable(const Graph& g, std::uint32_t q, std::vector<std::uint32_t>& color,
                      std::size_t v) {
  if (v == g.num_vertices()) return true;
  for (std::uint32_t c = 0; c < q; ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) ok = !(g.has_edge(u, v) && color[u] == c);
    if (!ok) continue;
    color[v] = c;
    if (colorable(g, q, color, v + 1)) return true;
  }
  return false;
}

/// Chromatic number by trying q = 0, 1, 2, ... with plain backtracking in
/// vertex order.
inline std::uint32_t chromatic_number(const Graph& g) {
  std::vector<std::uint32_t> color(g.num_vertices());
  for (std::uint32_t q = 0;; ++q) {
    if (colorable(g, q, color, 0)) return q;
  }
}

/// s-stable k-subsets of {0..n-1}, by filtering all n-bit masks. Each set is
/// an ascending list; the result is sorted.
inline std::vector<std::vector<std::uint32_t>> stable_sets(std::uint32_t n, std::uint32_t k,
                                                           std::uint32_t s) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != k) continue;
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) {
      for (std::uint32_t b = a + 1; b < n && ok; ++b) {
        if (!(mask >> a & 1) || !(mask >> b & 1)) continue;
        const std::uint32_t d = std::min(b - a, n - (b - a));
        ok = d >= s;
      }
    }
    if (!ok) continue;
    std::vector<std::uint32_t> set;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) set.push_back(i);
    }
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Plain graph6 decoder for n < 63.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> graph6_edges(const std::string& text,
                                                                           std::uint32_t& n) {
  n = static_cast<std::uint32_t>(text.at(0) - 63);
  std::vector<int> bits;
  for (std::size_t i = 1; i < text.size() && text[i] != '\n'; ++i) {
    const int value = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(value >> b & 1);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t pos = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i, ++pos) {
      if (bits.at(pos)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

/// Erdos-Renyi graph from a fixed seed.
inline Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  return Graph::from_predicate(n, [&](skn::Vertex, skn::Vertex) { return coin(rng); });
}

}  // namespace oracle
