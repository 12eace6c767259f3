#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "skn/errors.hpp"

namespace skn {

/// Bijection on {0, ..., degree-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ParameterError unless `images` is a bijection on 0..m-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// i -> i + shift (mod n).
  static Permutation rotation(std::size_t n, std::size_t shift);
  /// i -> -i (mod n).
  static Permutation reflection(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Multiplicative order.
  std::size_t order() const;

  /// Cycle notation with 0-based points, fixed points omitted; "()" for the
  /// identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (a * b)(i) = a(b(i)). Throws ParameterError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

/// Finite permutation group held as its explicit element set.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::set<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const { return elements_.contains(p); }

  /// Wraps an element set already known to be a group (e.g. the output of an
  /// exhaustive automorphism search). Throws InvariantViolation if the set is
  /// not closed or lacks the identity. A small generating subset is chosen
  /// greedily in element order.
  static PermutationGroup from_elements(std::size_t degree,
                                        std::set<Permutation> elements);

  friend PermutationGroup group_closure(std::size_t degree,
                                        std::span<const Permutation> generators,
                                        std::size_t max_order);

 private:
  std::size_t degree_ = 0;
  std::set<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// The group generated by `generators`. Throws ParameterError on a degree
/// mismatch and BudgetExceeded as soon as the order would pass `max_order`.
PermutationGroup group_closure(std::size_t degree,
                               std::span<const Permutation> generators,
                               std::size_t max_order = kDefaultMaxGroupOrder);

/// Element-set equality. Throws ParameterError on degree mismatch.
bool groups_equal(const PermutationGroup& a, const PermutationGroup& b);

/// Whether the element set is closed under composition and inverses and
/// contains the identity.
bool is_closed_group(std::size_t degree, const std::set<Permutation>& elements);

}  // namespace skn
