#include "skn/graph.hpp"

#include <set>
#include <string>

#include "skn/permutation.hpp"

namespace skn {

Graph::Graph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
  std::size_t degree_sum = 0;
  for (const Bitset& row : rows_) degree_sum += row.count();
  num_edges_ = degree_sum / 2;
}

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  std::vector<Bitset> rows(num_vertices, Bitset(num_vertices));
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw ConstructionError("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") has an endpoint outside 0.." +
                              std::to_string(num_vertices) + "-1");
    }
    if (u == v) {
      throw ConstructionError("self-loop at vertex " + std::to_string(u));
    }
    rows[u].set(v);
    rows[v].set(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ConstructionError("adjacency row " + std::to_string(i) +
                              " has the wrong width");
    }
    if (rows[i].test(i)) {
      throw ConstructionError("self-loop at vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = rows[i].find_first(); j != Bitset::npos; j = rows[i].find_next(j)) {
      if (!rows[j].test(i)) {
        throw ConstructionError("asymmetric adjacency between " + std::to_string(i) +
                                " and " + std::to_string(j));
      }
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::with_labels(std::vector<Label> labels) const {
  if (labels.size() != num_vertices()) {
    throw ConstructionError("expected " + std::to_string(num_vertices()) +
                            " labels, got " + std::to_string(labels.size()));
  }
  std::set<Label> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw ConstructionError("vertex labels are not pairwise distinct");
  }
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto j = rows_[i].find_next(i); j != Bitset::npos; j = rows_[i].find_next(j)) {
      out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

Graph Graph::complement() const {
  const std::size_t n = num_vertices();
  std::vector<Bitset> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = ~rows_[i];
    rows[i].reset(i);
  }
  Graph g(std::move(rows));
  g.labels_ = labels_;
  return g;
}

bool Graph::is_regular() const {
  if (rows_.empty()) return true;
  const std::size_t d = rows_.front().count();
  for (const Bitset& row : rows_) {
    if (row.count() != d) return false;
  }
  return true;
}

std::optional<Edge> first_adjacency_difference(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw ParameterError("graphs differ in vertex count");
  }
  for (std::size_t i = 0; i < a.num_vertices(); ++i) {
    if (a.neighbors(i) == b.neighbors(i)) continue;
    const Bitset diff = a.neighbors(i) ^ b.neighbors(i);
    return Edge{static_cast<Vertex>(i), static_cast<Vertex>(diff.find_first())};
  }
  return std::nullopt;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.num_vertices()) {
    throw ParameterError("permutation degree " + std::to_string(p.degree()) +
                         " does not match vertex count " +
                         std::to_string(g.num_vertices()));
  }
  // A bijection on vertices that maps every edge to an edge is onto E.
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const Bitset& row = g.neighbors(i);
    const Bitset& image_row = g.neighbors(p(i));
    if (row.count() != image_row.count()) return false;
    for (auto j = row.find_next(i); j != Bitset::npos; j = row.find_next(j)) {
      if (!image_row.test(p(j))) return false;
    }
  }
  return true;
}

Graph complete_graph(std::size_t n) {
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

std::vector<Vertex> members(const Bitset& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != Bitset::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

}  // namespace skn
