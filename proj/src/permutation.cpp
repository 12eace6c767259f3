#include "skn/permutation.hpp"

#include <deque>
#include <numeric>
#include <sstream>

namespace skn {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || hit[x]) {
      throw ParameterError("image table is not a bijection on 0.." +
                           std::to_string(images_.size()) + "-1");
    }
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(std::size_t n, std::size_t shift) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<std::uint32_t>((i + shift) % n);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::reflection(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << ' ';
      out << j;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ParameterError("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

namespace {

// Breadth-first closure of `seed` under right multiplication by `gens`.
// Returns false if the set would grow beyond max_order.
bool close_under(std::set<Permutation>& elements, std::span<const Permutation> gens,
                 std::size_t max_order) {
  std::deque<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = current * g;
      if (elements.contains(next)) continue;
      if (elements.size() >= max_order) return false;
      frontier.push_back(next);
      elements.insert(std::move(next));
    }
  }
  return true;
}

}  // namespace

PermutationGroup group_closure(std::size_t degree, std::span<const Permutation> generators,
                               std::size_t max_order) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw ParameterError("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
  }
  PermutationGroup group;
  group.degree_ = degree;
  group.generators_.assign(generators.begin(), generators.end());
  group.elements_.insert(Permutation::identity(degree));
  if (!close_under(group.elements_, generators, max_order)) {
    throw BudgetExceeded("group order exceeds max_order=" + std::to_string(max_order),
                         group.elements_.size());
  }
  return group;
}

PermutationGroup PermutationGroup::from_elements(std::size_t degree,
                                                 std::set<Permutation> elements) {
  const Permutation id = Permutation::identity(degree);
  if (!elements.contains(id)) {
    throw InvariantViolation("element set does not contain the identity");
  }
  PermutationGroup group;
  group.degree_ = degree;
  std::set<Permutation> generated{id};
  for (const Permutation& p : elements) {
    if (p.degree() != degree) {
      throw InvariantViolation("element of wrong degree in group");
    }
    if (generated.contains(p)) continue;
    group.generators_.push_back(p);
    if (!close_under(generated, group.generators_, elements.size())) {
      throw InvariantViolation("element set is not closed under composition");
    }
  }
  if (generated != elements) {
    throw InvariantViolation("element set is not closed under composition");
  }
  group.elements_ = std::move(elements);
  return group;
}

bool groups_equal(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) {
    throw ParameterError("cannot compare groups of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  return a.elements() == b.elements();
}

bool is_closed_group(std::size_t degree, const std::set<Permutation>& elements) {
  if (!elements.contains(Permutation::identity(degree))) return false;
  for (const Permutation& p : elements) {
    if (!elements.contains(p.inverse())) return false;
    for (const Permutation& q : elements) {
      if (!elements.contains(p * q)) return false;
    }
  }
  return true;
}

}  // namespace skn
