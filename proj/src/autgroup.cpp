#include "skn/autgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace skn {

std::vector<std::uint32_t> OrderedPartition::cell_sizes() const {
  std::vector<std::uint32_t> sizes(num_colors, 0);
  for (std::uint32_t c : color) ++sizes[c];
  return sizes;
}

namespace {

constexpr std::uint64_t kMixPrime = 0x100000001b3ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * kMixPrime;
}

}  // namespace

std::uint64_t refine(const Graph& g, OrderedPartition& partition) {
  const std::size_t n = g.num_vertices();
  std::uint64_t trace = 0xcbf29ce484222325ULL;
  std::vector<std::vector<std::uint32_t>> signature(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      sig.push_back(partition.color[v]);
      const Bitset& row = g.neighbors(v);
      for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
        sig.push_back(partition.color[u]);
      }
      std::sort(sig.begin() + 1, sig.end());
    }
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });

    std::uint32_t next_color = 0;
    std::uint32_t class_size = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Vertex v = order[idx];
      if (idx > 0 && signature[v] != signature[order[idx - 1]]) {
        trace = mix(trace, class_size);
        ++next_color;
        class_size = 0;
      }
      if (class_size == 0) {
        for (std::uint32_t x : signature[v]) trace = mix(trace, x);
      }
      ++class_size;
      partition.color[v] = next_color;
    }
    trace = mix(trace, class_size);
    const std::uint32_t count = n == 0 ? 0 : next_color + 1;
    const bool stable = count == partition.num_colors;
    partition.num_colors = count;
    if (stable) break;
  }
  return mix(trace, partition.num_colors);
}

OrderedPartition individualize(const OrderedPartition& partition, Vertex v) {
  OrderedPartition out = partition;
  const std::uint32_t target = partition.color[v];
  const auto sizes = partition.cell_sizes();
  if (sizes[target] == 1) return out;
  for (std::size_t u = 0; u < out.color.size(); ++u) {
    if (out.color[u] > target || (out.color[u] == target && u != v)) ++out.color[u];
  }
  ++out.num_colors;
  return out;
}

namespace {

struct Level {
  OrderedPartition partition;
  std::uint64_t trace = 0;
  std::uint32_t target = 0;  // cell split at this level (left path)
  Vertex chosen = 0;         // vertex individualized on the left path
};

// First smallest non-singleton cell.
std::uint32_t target_cell(const OrderedPartition& partition) {
  const auto sizes = partition.cell_sizes();
  std::uint32_t best = 0;
  std::uint32_t best_size = 0;
  for (std::uint32_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] > 1 && (best_size == 0 || sizes[c] < best_size)) {
      best = c;
      best_size = sizes[c];
    }
  }
  return best;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, const SearchLimits& limits)
      : g_(g), limits_(limits) {}

  std::set<Permutation> run() {
    const std::size_t n = g_.num_vertices();
    OrderedPartition root{std::vector<std::uint32_t>(n, 0), n == 0 ? 0u : 1u};
    const std::uint64_t root_trace = refine(g_, root);
    levels_.push_back({root, root_trace, 0, 0});
    while (!levels_.back().partition.discrete()) {
      Level& top = levels_.back();
      top.target = target_cell(top.partition);
      top.chosen = 0;
      while (top.partition.color[top.chosen] != top.target) ++top.chosen;
      OrderedPartition child = individualize(top.partition, top.chosen);
      const std::uint64_t trace = refine(g_, child);
      levels_.push_back({std::move(child), trace, 0, 0});
    }
    left_leaf_ = levels_.back().partition.color;

    search(0, levels_.front().partition);
    return std::move(found_);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  void search(std::size_t depth, const OrderedPartition& partition) {
    if (++stats_.nodes > limits_.node_budget) {
      throw BudgetExceeded("automorphism search exceeded node budget " +
                               std::to_string(limits_.node_budget),
                           stats_.nodes);
    }
    if (depth + 1 == levels_.size()) {
      record_leaf(partition);
      return;
    }
    const Level& level = levels_[depth];
    const Level& next = levels_[depth + 1];
    for (std::size_t w = 0; w < partition.color.size(); ++w) {
      if (partition.color[w] != level.target) continue;
      if (!consistent_with_path(depth, static_cast<Vertex>(w))) continue;
      OrderedPartition child = individualize(partition, static_cast<Vertex>(w));
      const std::uint64_t trace = refine(g_, child);
      if (trace != next.trace || child.num_colors != next.partition.num_colors) continue;
      image_path_.push_back(static_cast<Vertex>(w));
      search(depth + 1, child);
      image_path_.pop_back();
    }
  }

  // The individualized vertices so far must induce the same adjacency on
  // both sides.
  bool consistent_with_path(std::size_t depth, Vertex w) const {
    const Vertex v = levels_[depth].chosen;
    for (std::size_t i = 0; i < depth; ++i) {
      if (g_.has_edge(levels_[i].chosen, v) != g_.has_edge(image_path_[i], w)) return false;
    }
    return true;
  }

  void record_leaf(const OrderedPartition& leaf) {
    ++stats_.leaves;
    const std::size_t n = leaf.color.size();
    std::vector<std::uint32_t> vertex_of_color(n);
    for (std::size_t v = 0; v < n; ++v) vertex_of_color[leaf.color[v]] = static_cast<std::uint32_t>(v);
    std::vector<std::uint32_t> images(n);
    for (std::size_t u = 0; u < n; ++u) images[u] = vertex_of_color[left_leaf_[u]];
    Permutation candidate(std::move(images));
    if (!is_automorphism(g_, candidate)) return;
    found_.insert(std::move(candidate));
    if (found_.size() > limits_.max_order) {
      throw BudgetExceeded("automorphism group order exceeds max_order=" +
                               std::to_string(limits_.max_order),
                           stats_.nodes);
    }
  }

  const Graph& g_;
  const SearchLimits& limits_;
  std::vector<Level> levels_;
  std::vector<std::uint32_t> left_leaf_;
  std::vector<Vertex> image_path_;
  std::set<Permutation> found_;
  SearchStats stats_;
};

}  // namespace

PermutationGroup automorphisms(const Graph& g, const SearchLimits& limits, SearchStats* stats) {
  if (g.num_vertices() > limits.vertex_ceiling) {
    throw ParameterError("graph has " + std::to_string(g.num_vertices()) +
                         " vertices, above the ceiling of " +
                         std::to_string(limits.vertex_ceiling));
  }
  AutomorphismSearch search(g, limits);
  std::set<Permutation> elements = search.run();
  if (stats != nullptr) *stats = search.stats();
  return PermutationGroup::from_elements(g.num_vertices(), std::move(elements));
}

bool DihedralCert::faithful() const {
  const std::set<Permutation> distinct(induced_elements.begin(), induced_elements.end());
  return distinct.size() == 2 * static_cast<std::size_t>(n);
}

DihedralCert induced_dihedral(const Params& p, const Graph& g) {
  const std::uint32_t n = p.n();
  std::vector<Label> labels;
  if (g.has_labels()) {
    labels = g.labels();
  } else if (g.num_vertices() == n) {
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back({i});
  } else {
    throw ParameterError("induced_dihedral needs subset labels or exactly n vertices");
  }
  std::map<Label, Vertex> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index.emplace(labels[v], static_cast<Vertex>(v));

  auto induce = [&](auto&& ground) {
    std::vector<std::uint32_t> images(labels.size());
    Label moved;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      moved.clear();
      for (std::uint32_t x : labels[v]) moved.push_back(ground(x));
      std::sort(moved.begin(), moved.end());
      const auto it = index.find(moved);
      if (it == index.end()) {
        throw InvariantViolation("ground map sends a vertex label outside the vertex set");
      }
      images[v] = it->second;
    }
    Permutation induced(std::move(images));
    if (!is_automorphism(g, induced)) {
      throw InvariantViolation("induced dihedral map is not an automorphism: " +
                               induced.to_cycle_string());
    }
    return induced;
  };

  DihedralCert cert;
  cert.n = n;
  cert.induced_elements.reserve(2 * n);
  for (std::uint32_t t = 0; t < n; ++t) {
    cert.induced_elements.push_back(induce([&](std::uint32_t x) { return (x + t) % n; }));
  }
  for (std::uint32_t t = 0; t < n; ++t) {
    cert.induced_elements.push_back(induce([&](std::uint32_t x) { return (t + n - x) % n; }));
  }
  cert.rotation = cert.induced_elements[1 % n];
  cert.reflection = cert.induced_elements[n];
  return cert;
}

PermutationGroup ground_dihedral_group(std::uint32_t n) {
  const std::vector<Permutation> gens{Permutation::rotation(n, 1), Permutation::reflection(n)};
  return group_closure(n, gens);
}

bool certify_dihedral(const PermutationGroup& aut, const DihedralCert& cert) {
  if (!cert.faithful()) return false;
  if (aut.degree() != cert.rotation.degree()) return false;
  const std::set<Permutation> induced(cert.induced_elements.begin(),
                                      cert.induced_elements.end());
  return aut.elements() == induced;
}

StarMapper::StarMapper(const Params& p, const Graph& kg)
    : params_(p), stars_([&] {
        if (p.s() < 3) throw ParameterError("star map needs s >= 3, got " + p.to_string());
        p.require_nondegenerate("star map");
        return build_stars(p, kg);
      }()) {
  for (std::uint32_t i = 0; i < stars_.n; ++i) star_index_.emplace(stars_.stars[i], i);
}

StarMap StarMapper::map(const Permutation& alpha) const {
  const std::size_t num_vertices = stars_.stars.front().size();
  if (alpha.degree() != num_vertices) {
    throw ParameterError("automorphism degree does not match the Kneser graph");
  }
  std::vector<std::uint32_t> images(stars_.n);
  std::vector<bool> hit(stars_.n, false);
  for (std::uint32_t i = 0; i < stars_.n; ++i) {
    Bitset image(num_vertices);
    for (Vertex v : members(stars_.stars[i])) image.set(alpha(v));
    const auto it = star_index_.find(image);
    if (it == star_index_.end()) {
      throw TheoremViolation("image of star I_" + std::to_string(i + 1) + " under " +
                             alpha.to_cycle_string() + " is not a star " +
                             params_.to_string());
    }
    if (hit[it->second]) {
      throw TheoremViolation("two stars map onto star I_" + std::to_string(it->second + 1));
    }
    hit[it->second] = true;
    images[i] = it->second;
  }
  return {alpha, Permutation(std::move(images))};
}

StarMap star_map(const Params& p, const Graph& kg, const Permutation& alpha) {
  return StarMapper(p, kg).map(alpha);
}

std::vector<std::vector<Vertex>> orbits(const PermutationGroup& aut) {
  const std::size_t n = aut.degree();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& p : aut.elements()) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const std::uint32_t a = find(v), b = find(p(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::uint32_t, std::vector<Vertex>> by_root;
  for (std::uint32_t v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
  return out;
}

bool consecutive_criterion(const Permutation& p, std::uint32_t n) {
  if (p.degree() != n) throw ParameterError("permutation degree differs from n");
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t a = p(i), b = p((i + 1) % n);
    if (b != (a + 1) % n && b != (a + n - 1) % n) return false;
  }
  return true;
}

}  // namespace skn
