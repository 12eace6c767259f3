#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "skn/errors.hpp"

namespace skn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Opaque vertex label. Kneser-type graphs store the underlying subset
/// (0-based ground residues, ascending) here.
using Label = std::vector<std::uint32_t>;

class Permutation;

/// Immutable simple undirected graph on vertices 0..n-1 with one packed
/// adjacency row per vertex.
///
/// Every constructor validates symmetry and loop-freeness, so a Graph value
/// is always well formed.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges (in either orientation) collapse. Throws
  /// ConstructionError on an out-of-range endpoint or a self-loop.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

  /// Takes ownership of prebuilt rows; throws ConstructionError unless they
  /// form a symmetric loop-free n x n matrix.
  static Graph from_rows(std::vector<Bitset> rows);

  /// Builds the graph where i~j iff adjacent(i, j), evaluated once per
  /// unordered pair with i < j.
  template <class Pred>
  static Graph from_predicate(std::size_t num_vertices, Pred&& adjacent) {
    std::vector<Bitset> rows(num_vertices, Bitset(num_vertices));
    for (std::size_t i = 0; i < num_vertices; ++i) {
      for (std::size_t j = i + 1; j < num_vertices; ++j) {
        if (adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
          rows[i].set(j);
          rows[j].set(i);
        }
      }
    }
    return from_rows(std::move(rows));
  }

  /// Returns a copy carrying `labels`; they must be pairwise distinct and
  /// one per vertex.
  Graph with_labels(std::vector<Label> labels) const;

  std::size_t num_vertices() const { return rows_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  const std::vector<Bitset>& rows() const { return rows_; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  /// Edges (i, j) with i < j in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return labels_.has_value(); }
  /// Requires has_labels().
  const std::vector<Label>& labels() const { return *labels_; }

  /// Complement on the same vertex set (labels are kept).
  Graph complement() const;

  /// Regular of some degree (vacuously true when empty).
  bool is_regular() const;

  /// Adjacency equality; labels are ignored.
  friend bool same_adjacency(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  explicit Graph(std::vector<Bitset> rows);

  std::vector<Bitset> rows_;
  std::size_t num_edges_ = 0;
  std::optional<std::vector<Label>> labels_;
};

/// First vertex pair (i < j) on which two equally sized graphs disagree.
std::optional<Edge> first_adjacency_difference(const Graph& a, const Graph& b);

/// True iff `p` maps edges onto edges. Throws ParameterError when the
/// permutation degree differs from the vertex count.
bool is_automorphism(const Graph& g, const Permutation& p);

/// Complete graph K_n.
Graph complete_graph(std::size_t n);

/// Members of a bitset in ascending order.
std::vector<Vertex> members(const Bitset& set);

}  // namespace skn
