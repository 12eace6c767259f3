#include "skn/independence.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace skn {

bool StarFamily::pairwise_distinct() const {
  const std::set<Bitset> distinct(stars.begin(), stars.end());
  return distinct.size() == stars.size();
}

bool is_independent(const Graph& g, const Bitset& set) {
  for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
    if (g.neighbors(v).intersects(set)) return false;
  }
  return true;
}

StarFamily build_stars(const Params& p, const Graph& kg) {
  if (!kg.has_labels()) throw ParameterError("build_stars needs a labelled Kneser graph");
  StarFamily family;
  family.n = p.n();
  family.stars.assign(p.n(), Bitset(kg.num_vertices()));
  for (std::size_t v = 0; v < kg.num_vertices(); ++v) {
    const Label& label = kg.labels()[v];
    if (label.size() != p.k()) throw ParameterError("vertex label is not a k-subset");
    for (std::uint32_t x : label) {
      if (x >= p.n()) throw ParameterError("vertex label leaves the ground set");
      family.stars[x].set(v);
    }
  }
  for (std::uint32_t i = 0; i < p.n(); ++i) {
    if (!is_independent(kg, family.stars[i])) {
      throw InvariantViolation("star I_" + std::to_string(i + 1) + " contains an edge");
    }
  }
  return family;
}

namespace {

// Branch and bound for large independent sets. Candidates are colored
// greedily into cliques of g; a clique holds at most one member of any
// independent set, so `size + cliques` bounds what a branch can reach.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
    const std::size_t n = g.num_vertices();
    non_neighbors_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      Bitset row = ~g.neighbors(v);
      row.reset(v);
      non_neighbors_.push_back(std::move(row));
    }
  }

  IndependentSet maximum() {
    enumerate_ = false;
    best_ = IndependentSet{0, Bitset(g_.num_vertices())};
    run();
    return best_;
  }

  std::vector<Bitset> all_of_size(std::size_t alpha) {
    enumerate_ = true;
    target_ = alpha;
    found_.clear();
    if (alpha == 0) {
      found_.push_back(Bitset(g_.num_vertices()));
      return found_;
    }
    run();
    std::sort(found_.begin(), found_.end(), [](const Bitset& a, const Bitset& b) {
      return members(a) < members(b);
    });
    return found_;
  }

 private:
  void run() {
    const std::size_t n = g_.num_vertices();
    Bitset current(n);
    Bitset candidates(n);
    candidates.set();
    if (n > 0) expand(current, 0, candidates);
  }

  void expand(Bitset& current, std::size_t size, Bitset candidates) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("independent set search exceeded node budget " +
                               std::to_string(budget_),
                           nodes_);
    }
    std::vector<Vertex> order;
    std::vector<std::uint32_t> bound;
    clique_cover(candidates, order, bound);

    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (enumerate_) {
        if (size + bound[idx] < target_) return;
      } else if (size + bound[idx] <= best_.size) {
        return;
      }
      const Vertex v = order[idx];
      current.set(v);
      if (enumerate_ && size + 1 == target_) {
        found_.push_back(current);
      } else {
        Bitset next = candidates & non_neighbors_[v];
        if (next.none()) {
          if (!enumerate_ && size + 1 > best_.size) best_ = {size + 1, current};
        } else {
          expand(current, size + 1, std::move(next));
        }
      }
      current.reset(v);
      candidates.reset(v);
    }
  }

  // Greedy cover of `candidates` by cliques of g. bound[i] is the number of
  // cliques used up to and including order[i].
  void clique_cover(const Bitset& candidates, std::vector<Vertex>& order,
                    std::vector<std::uint32_t>& bound) const {
    Bitset uncolored = candidates;
    std::uint32_t cliques = 0;
    while (uncolored.any()) {
      ++cliques;
      Bitset open = uncolored;
      for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
        uncolored.reset(v);
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(cliques);
        open &= g_.neighbors(v);
      }
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Bitset> non_neighbors_;
  bool enumerate_ = false;
  std::size_t target_ = 0;
  IndependentSet best_;
  std::vector<Bitset> found_;
};

}  // namespace

IndependentSet max_independent_set(const Graph& g, std::uint64_t node_budget) {
  return IndependentSetSearch(g, node_budget).maximum();
}

std::vector<Bitset> all_maximum_independent_sets(const Graph& g, std::size_t alpha,
                                                 std::uint64_t node_budget) {
  return IndependentSetSearch(g, node_budget).all_of_size(alpha);
}

}  // namespace skn
