#include "skn/generators.hpp"

#include <limits>

namespace skn {

namespace {
__extension__ using Wide = unsigned __int128;
}  // namespace

Params Params::make(std::uint32_t n, std::uint32_t k, std::uint32_t s) {
  if (k < 1) throw ParameterError("k must be at least 1");
  if (s < 2) throw ParameterError("s must be at least 2");
  if (static_cast<std::uint64_t>(s) * k > n) {
    throw ParameterError("n=" + std::to_string(n) + " is below s*k=" +
                         std::to_string(static_cast<std::uint64_t>(s) * k));
  }
  return Params(n, k, s);
}

void Params::require_nondegenerate(const char* what) const {
  if (degenerate()) {
    throw ParameterError(std::string(what) + " requires n >= s*k+1, got " + to_string());
  }
}

std::string Params::to_string() const {
  return "(n=" + std::to_string(n_) + ", k=" + std::to_string(k_) +
         ", s=" + std::to_string(s_) + ")";
}

std::vector<std::uint32_t> gap_vector(const std::vector<std::uint32_t>& elements,
                                      std::uint32_t n) {
  std::vector<std::uint32_t> gaps(elements.size());
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    gaps[i] = elements[i + 1] - elements[i];
  }
  if (!elements.empty()) gaps.back() = elements.front() + n - elements.back();
  return gaps;
}

namespace {

// Places elements left to right: each at least s after the previous one, the
// last at most first + n - s so that the closing gap is also >= s.
void extend_stable(const Params& p, std::vector<std::uint32_t>& prefix,
                   std::vector<StableSet>& out) {
  const std::uint32_t n = p.n(), k = p.k(), s = p.s();
  if (prefix.size() == k) {
    out.push_back({prefix, gap_vector(prefix, n)});
    return;
  }
  const std::uint64_t remaining = k - prefix.size();
  const std::uint64_t limit = static_cast<std::uint64_t>(prefix.front()) + n - s;
  // The remaining elements need (remaining-1)*s room after the next one.
  const std::uint64_t next_max = limit - (remaining - 1) * s;
  for (std::uint64_t x = prefix.back() + s; x <= next_max && x < n; ++x) {
    prefix.push_back(static_cast<std::uint32_t>(x));
    extend_stable(p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StableSet> enumerate_stable_sets(const Params& p) {
  std::vector<StableSet> out;
  std::vector<std::uint32_t> prefix;
  prefix.reserve(p.k());
  for (std::uint32_t first = 0; first < p.n(); ++first) {
    prefix.assign(1, first);
    extend_stable(p, prefix, out);
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw ParameterError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t star_size_formula(const Params& p) {
  const std::uint64_t top = static_cast<std::uint64_t>(p.n()) -
                            static_cast<std::uint64_t>(p.s() - 1) * p.k() - 1;
  return binomial(top, p.k() - 1);
}

std::uint64_t count_formula(const Params& p) {
  p.require_nondegenerate("count_formula");
  const Wide product =
      static_cast<Wide>(p.n()) * star_size_formula(p);
  if (product % p.k() != 0) {
    throw InvariantViolation("k does not divide n * C(n-(s-1)k-1, k-1) for " +
                             p.to_string());
  }
  return static_cast<std::uint64_t>(product / p.k());
}

namespace {

bool disjoint_sorted(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return true;
}

}  // namespace

Graph build_stable_kneser(const Params& p) {
  std::vector<StableSet> sets = enumerate_stable_sets(p);
  std::vector<Label> labels;
  labels.reserve(sets.size());
  for (StableSet& set : sets) labels.push_back(std::move(set.elements));
  return Graph::from_predicate(labels.size(), [&](Vertex i, Vertex j) {
           return disjoint_sorted(labels[i], labels[j]);
         })
      .with_labels(std::move(labels));
}

Graph build_g_definitional(const Params& p) {
  p.require_nondegenerate("build_g_definitional");
  const std::uint32_t n = p.n();
  std::vector<Bitset> together(n, Bitset(n));
  for (const StableSet& set : enumerate_stable_sets(p)) {
    for (std::uint32_t a : set.elements) {
      for (std::uint32_t b : set.elements) together[a].set(b);
    }
  }
  return Graph::from_predicate(n, [&](Vertex i, Vertex j) { return !together[i].test(j); });
}

std::vector<bool> closed_form_band_table(const Params& p) {
  const std::uint32_t n = p.n(), s = p.s(), r = p.r();
  std::vector<bool> forbidden(n, false);
  for (std::uint32_t d = 1; d + 1 <= p.k(); ++d) {
    for (std::uint32_t t = 0; t <= r; ++t) {
      const std::uint64_t x = static_cast<std::uint64_t>(d) * s + t;
      if (x >= n) throw InvariantViolation("band value reaches n for " + p.to_string());
      forbidden[x] = true;
    }
  }
  for (std::uint32_t x = 1; x < n; ++x) {
    if (forbidden[x] != forbidden[n - x]) {
      throw InvariantViolation("band union is not symmetric under x -> n-x at x=" +
                               std::to_string(x) + " for " + p.to_string());
    }
  }
  return forbidden;
}

Graph build_g_closed_form(const Params& p) {
  p.require_nondegenerate("build_g_closed_form");
  if (p.s() < 3) {
    throw ParameterError("closed form of G(n,k,s) needs s >= 3, got " + p.to_string());
  }
  if (p.k() < 2) {
    throw ParameterError("closed form of G(n,k,s) needs k >= 2, got " + p.to_string());
  }
  if (p.n() >= p.s() * (p.k() + 1) - 1) return cycle_power(p.n(), p.s() - 1);
  // Symmetry of the bands lets the plain difference stand in for the
  // circular one.
  const std::vector<bool> forbidden = closed_form_band_table(p);
  return Graph::from_predicate(p.n(), [&](Vertex i, Vertex j) { return !forbidden[j - i]; });
}

Graph cycle_power(std::uint32_t n, std::uint32_t d) {
  if (n < 3) throw ParameterError("cycle_power needs n >= 3");
  if (d < 1) throw ParameterError("cycle_power needs d >= 1");
  if (2 * static_cast<std::uint64_t>(d) + 1 >= n) {
    throw ParameterError("cycle_power(" + std::to_string(n) + ", " + std::to_string(d) +
                         ") would be complete; need 2d+1 < n");
  }
  return Graph::from_predicate(n, [&](Vertex i, Vertex j) {
    return circular_distance(i, j, n) <= d;
  });
}

}  // namespace skn
