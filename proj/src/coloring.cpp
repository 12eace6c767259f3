#include "skn/coloring.hpp"

#include <algorithm>
#include <string>

namespace skn {

bool FractionalCertificate::exact_cover() const {
  return std::all_of(coverage.begin(), coverage.end(),
                     [](const Rational& c) { return c == Rational(1); });
}

FractionalCertificate fractional_chromatic(const Params& p, const Graph& kg,
                                           const StarFamily& stars, std::size_t alpha) {
  if (alpha == 0) throw ParameterError("alpha must be positive");
  if (stars.stars.size() != p.n()) throw ParameterError("star family does not match n");
  FractionalCertificate cert;
  cert.lower = Rational(static_cast<std::int64_t>(kg.num_vertices()),
                        static_cast<std::int64_t>(alpha));
  cert.weights.assign(p.n(), Rational(1, p.k()));
  cert.upper = Rational(0);
  for (const Rational& w : cert.weights) cert.upper += w;
  cert.coverage.assign(kg.num_vertices(), Rational(0));
  for (std::uint32_t i = 0; i < p.n(); ++i) {
    for (Vertex v : members(stars.stars[i])) cert.coverage[v] += cert.weights[i];
  }
  for (std::size_t v = 0; v < cert.coverage.size(); ++v) {
    if (cert.coverage[v] < Rational(1)) {
      throw InvariantViolation("star weighting covers vertex " + std::to_string(v) +
                               " with weight below 1");
    }
  }
  return cert;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.num_vertices()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

namespace {

constexpr std::uint32_t kUncolored = ~0u;

// Incremental DSATUR state: per-vertex counts of neighbors holding each color.
class ColoringState {
 public:
  ColoringState(const Graph& g, std::uint32_t max_colors)
      : g_(g),
        colors_(g.num_vertices(), kUncolored),
        neighbor_count_(g.num_vertices() * max_colors, 0),
        saturation_(g.num_vertices(), 0),
        uncolored_degree_(g.num_vertices()),
        width_(max_colors) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v) uncolored_degree_[v] = g.degree(v);
  }

  bool blocked(Vertex v, std::uint32_t c) const { return neighbor_count_[v * width_ + c] > 0; }

  // Uncolored vertex of maximum saturation, ties by uncolored degree then
  // index. Returns num_vertices when all are colored.
  Vertex pick() const {
    const std::size_t n = colors_.size();
    Vertex best = static_cast<Vertex>(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (colors_[v] != kUncolored) continue;
      if (best == n || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           uncolored_degree_[v] > uncolored_degree_[best])) {
        best = static_cast<Vertex>(v);
      }
    }
    return best;
  }

  void assign(Vertex v, std::uint32_t c) {
    colors_[v] = c;
    const Bitset& row = g_.neighbors(v);
    for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
      if (neighbor_count_[u * width_ + c]++ == 0) ++saturation_[u];
      --uncolored_degree_[u];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = colors_[v];
    colors_[v] = kUncolored;
    const Bitset& row = g_.neighbors(v);
    for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
      if (--neighbor_count_[u * width_ + c] == 0) --saturation_[u];
      ++uncolored_degree_[u];
    }
  }

  const std::vector<std::uint32_t>& colors() const { return colors_; }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> colors_;
  std::vector<std::uint32_t> neighbor_count_;
  std::vector<std::uint32_t> saturation_;
  std::vector<std::size_t> uncolored_degree_;
  std::size_t width_;
};

class ColorabilitySearch {
 public:
  ColorabilitySearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  bool colorable(std::uint32_t q) {
    ColoringState state(g_, q);
    return extend(state, q, 0, g_.num_vertices());
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return nodes_ > budget_; }

 private:
  // New colors are opened in increasing order only, so colorings equal up to
  // renaming are visited once.
  bool extend(ColoringState& state, std::uint32_t q, std::uint32_t used,
              std::size_t remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) return false;
    const Vertex v = state.pick();
    const std::uint32_t limit = std::min(q, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (state.blocked(v, c)) continue;
      state.assign(v, c);
      const bool ok = extend(state, q, std::max(used, c + 1), remaining - 1);
      state.unassign(v);
      if (ok) return true;
      if (exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

std::uint32_t clique_lower_bound(const Graph& g, std::uint64_t budget) {
  try {
    return static_cast<std::uint32_t>(max_independent_set(g.complement(), budget).size);
  } catch (const BudgetExceeded&) {
  }
  // Greedy fallback: grow a clique from every vertex.
  std::uint32_t best = g.num_vertices() > 0 ? 1 : 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Bitset open = g.neighbors(v);
    std::uint32_t size = 1;
    for (auto u = open.find_first(); u != Bitset::npos; u = open.find_next(u)) {
      ++size;
      open &= g.neighbors(u);
    }
    best = std::max(best, size);
  }
  return best;
}

}  // namespace

std::vector<std::uint32_t> dsatur_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  ColoringState state(g, static_cast<std::uint32_t>(std::max<std::size_t>(n, 1)));
  for (std::size_t step = 0; step < n; ++step) {
    const Vertex v = state.pick();
    std::uint32_t c = 0;
    while (state.blocked(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

std::uint32_t chromatic_number(const Graph& g, std::uint64_t node_budget) {
  if (g.num_vertices() == 0) return 0;
  const auto greedy = dsatur_coloring(g);
  const std::uint32_t upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  std::uint32_t lower = clique_lower_bound(g, std::min<std::uint64_t>(node_budget, 1'000'000));
  ColorabilitySearch search(g, node_budget);
  for (std::uint32_t q = lower; q < upper; ++q) {
    if (search.colorable(q)) return q;
    if (search.exhausted()) {
      throw ChromaticBudgetExceeded("chromatic search exceeded node budget " +
                                        std::to_string(node_budget),
                                    search.nodes(), q, upper);
    }
    lower = q + 1;
  }
  return upper;
}

bool verify_chromatic_bounds(const Params& p, std::uint32_t chi) {
  const std::uint64_t lower = (p.n() + p.k() - 1) / p.k();
  const std::int64_t upper = static_cast<std::int64_t>(p.n()) -
                             static_cast<std::int64_t>(p.k() - 1) * p.s();
  return chi >= lower && static_cast<std::int64_t>(chi) <= upper;
}

}  // namespace skn
