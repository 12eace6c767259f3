#include "skn/verify.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "skn/coloring.hpp"
#include "skn/independence.hpp"

namespace skn {

using nlohmann::json;

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view text) {
  if (text == "pass") return Status::kPass;
  if (text == "fail") return Status::kFail;
  if (text == "skipped") return Status::kSkipped;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kAut: return "aut";
    case Suite::kGStructure: return "g-structure";
    case Suite::kIndependence: return "independence";
    case Suite::kColoring: return "coloring";
    case Suite::kTransitivity: return "transitivity";
    case Suite::kDegenerate: return "degenerate";
  }
  return "?";
}

std::optional<std::set<Suite>> parse_suites(std::string_view text) {
  static const std::map<std::string_view, Suite> kByName = {
      {"aut", Suite::kAut},           {"g-structure", Suite::kGStructure},
      {"independence", Suite::kIndependence}, {"coloring", Suite::kColoring},
      {"transitivity", Suite::kTransitivity}, {"degenerate", Suite::kDegenerate}};
  std::set<Suite> out;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view name = text.substr(0, comma);
    if (name == "all") {
      for (const auto& [_, suite] : kByName) out.insert(suite);
    } else if (const auto it = kByName.find(name); it != kByName.end()) {
      out.insert(it->second);
    } else {
      return std::nullopt;
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

const std::vector<CheckSpec>& registered_checks() {
  static const std::vector<CheckSpec> kChecks = {
      {"aut.kg-dihedral", Suite::kAut, "Aut(KG) is exactly the induced dihedral group"},
      {"aut.star-map", Suite::kAut, "star map is an isomorphism Aut(KG) -> Aut(G)"},
      {"g.closed-form", Suite::kGStructure, "G(n,k,s) matches its closed form"},
      {"g.dihedral", Suite::kGStructure, "Aut(G) is the ground dihedral group"},
      {"indep.count", Suite::kIndependence, "vertex count matches the counting formula"},
      {"indep.alpha", Suite::kIndependence, "independence number matches the star size"},
      {"indep.stars-distinct", Suite::kIndependence, "the n stars are pairwise distinct"},
      {"indep.stars-maximum", Suite::kIndependence, "maximum independent sets are the stars"},
      {"color.fractional", Suite::kColoring, "fractional chromatic certificates meet at n/k"},
      {"color.chromatic", Suite::kColoring, "chromatic number within its bounds"},
      {"trans.orbits", Suite::kTransitivity, "vertex transitive iff n = sk+1"},
      {"degen.complete", Suite::kDegenerate, "KG(sk,k) is complete on s vertices"},
      {"degen.aut-order", Suite::kDegenerate, "|Aut(KG(sk,k))| = s!"},
  };
  return kChecks;
}

std::size_t TripleReport::count(Status status) const {
  std::size_t c = 0;
  for (const CheckResult& r : checks) c += r.status == status ? 1 : 0;
  return c;
}

std::string ground_set_string(const std::vector<std::uint32_t>& residues) {
  std::string out = "{";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(residues[i] + 1);
  }
  return out + "}";
}

namespace {

// Raised inside a check to mark it skipped.
struct Skip {
  std::string reason;
};

json ground_permutation_json(const Permutation& p) {
  json images = json::array();
  for (std::uint32_t x : p.images()) images.push_back(x + 1);
  return images;
}

json vertex_permutation_json(const Permutation& p, const Graph& g) {
  json out = {{"cycles", p.to_cycle_string()}};
  if (g.has_labels()) {
    json moves = json::array();
    for (std::size_t v = 0; v < p.degree() && moves.size() < 8; ++v) {
      if (p(v) == v) continue;
      moves.push_back(ground_set_string(g.labels()[v]) + "->" +
                      ground_set_string(g.labels()[p(v)]));
    }
    out["moves"] = std::move(moves);
  }
  return out;
}

std::uint64_t factorial(std::uint32_t m) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= m; ++i) f *= i;
  return f;
}

std::string rational_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Lazily built objects shared by the checks of one triple. A failed build
// (budget, ceiling) is remembered so later checks skip without retrying.
class TripleContext {
 public:
  TripleContext(const Params& p, const VerifyOptions& options) : p_(p), options_(options) {}

  const Params& params() const { return p_; }
  const VerifyOptions& options() const { return options_; }

  std::size_t expected_vertices() const {
    return p_.degenerate() ? p_.s() : static_cast<std::size_t>(count_formula(p_));
  }

  const Graph& kg() {
    return cached(kg_, [&] {
      const std::size_t v = expected_vertices();
      if (v > options_.max_vertices) {
        throw Skip{"Kneser graph has " + std::to_string(v) + " vertices, above --max-vertices " +
                   std::to_string(options_.max_vertices)};
      }
      return build_stable_kneser(p_);
    });
  }

  const PermutationGroup& aut_kg() {
    return cached(aut_kg_, [&] { return search(kg()); });
  }

  const Graph& g_def() {
    return cached(g_def_, [&] { return build_g_definitional(p_); });
  }

  const PermutationGroup& aut_g() {
    return cached(aut_g_, [&] { return search(g_def()); });
  }

  const StarFamily& stars() {
    return cached(stars_, [&] { return build_stars(p_, kg()); });
  }

  std::size_t alpha() {
    return cached(alpha_, [&] {
      try {
        return max_independent_set(kg(), options_.limits.node_budget).size;
      } catch (const BudgetExceeded& e) {
        throw Skip{std::string("independence search: ") + e.what()};
      }
    });
  }

 private:
  template <class T>
  struct Slot {
    std::optional<T> value;
    std::optional<Skip> skipped;
  };

  template <class T, class Build>
  const T& cached(Slot<T>& slot, Build&& build) {
    if (slot.value) return *slot.value;
    if (slot.skipped) throw *slot.skipped;
    try {
      slot.value.emplace(build());
    } catch (const Skip& s) {
      slot.skipped = s;
      throw;
    }
    return *slot.value;
  }

  PermutationGroup search(const Graph& g) {
    try {
      return automorphisms(g, options_.limits);
    } catch (const BudgetExceeded& e) {
      throw Skip{std::string("automorphism search: ") + e.what()};
    } catch (const ParameterError& e) {
      throw Skip{std::string("automorphism search: ") + e.what()};
    }
  }

  Params p_;
  const VerifyOptions& options_;
  Slot<Graph> kg_;
  Slot<PermutationGroup> aut_kg_;
  Slot<Graph> g_def_;
  Slot<PermutationGroup> aut_g_;
  Slot<StarFamily> stars_;
  Slot<std::size_t> alpha_;
};

void require_nondegenerate(const Params& p) {
  if (p.degenerate()) throw Skip{"requires n >= sk+1"};
}

void require_s3(const Params& p) {
  if (p.s() < 3) throw Skip{"requires s >= 3"};
}

void fail(CheckResult& r, json witness) {
  r.status = Status::kFail;
  r.witness = std::move(witness);
}

void check_kg_dihedral(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  const PermutationGroup& aut = ctx.aut_kg();
  const DihedralCert cert = induced_dihedral(p, ctx.kg());
  r.detail = {{"order", aut.order()}, {"expected_order", 2 * p.n()},
              {"vertices", ctx.kg().num_vertices()}};
  if (!cert.faithful()) return fail(r, {{"unfaithful_induced_action", true}});
  if (certify_dihedral(aut, cert)) {
    r.status = Status::kPass;
    return;
  }
  const std::set<Permutation> induced(cert.induced_elements.begin(), cert.induced_elements.end());
  for (const Permutation& a : aut.elements()) {
    if (!induced.contains(a)) {
      return fail(r, {{"extra_automorphism", vertex_permutation_json(a, ctx.kg())}});
    }
  }
  for (const Permutation& d : induced) {
    if (!aut.contains(d)) {
      return fail(r, {{"missing_induced", vertex_permutation_json(d, ctx.kg())}});
    }
  }
}

void check_star_map(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  require_s3(p);
  const PermutationGroup& aut_kg = ctx.aut_kg();
  const PermutationGroup& aut_g = ctx.aut_g();
  const StarMapper mapper(p, ctx.kg());

  const std::vector<Permutation> elements(aut_kg.elements().begin(), aut_kg.elements().end());
  std::map<Permutation, Permutation> phi;
  std::set<Permutation> image;
  for (const Permutation& alpha : elements) {
    Permutation ground = mapper.map(alpha).image;
    image.insert(ground);
    phi.emplace(alpha, std::move(ground));
  }
  r.detail = {{"aut_kg_order", aut_kg.order()}, {"aut_g_order", aut_g.order()}};

  if (!phi.at(Permutation::identity(ctx.kg().num_vertices())).is_identity()) {
    return fail(r, {{"identity_not_preserved", true}});
  }
  if (image.size() != elements.size()) {
    return fail(r, {{"not_injective", true}, {"image_size", image.size()}});
  }
  if (image != aut_g.elements()) {
    for (const Permutation& g : image) {
      if (!aut_g.contains(g)) return fail(r, {{"image_not_in_aut_g", ground_permutation_json(g)}});
    }
    for (const Permutation& g : aut_g.elements()) {
      if (!image.contains(g)) return fail(r, {{"aut_g_not_hit", ground_permutation_json(g)}});
    }
  }

  // Homomorphism: full table for small n, deterministic sample otherwise.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t m = elements.size();
  if (p.n() <= p.s() * p.k() + 3) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) pairs.emplace_back(a, b);
    }
  } else {
    for (std::size_t i = 0; i < 100; ++i) pairs.emplace_back((i * 7919) % m, (i * 104729 + 1) % m);
  }
  for (const auto& [a, b] : pairs) {
    const Permutation product = elements[a] * elements[b];
    const auto it = phi.find(product);
    if (it == phi.end()) return fail(r, {{"product_not_in_aut_kg", product.to_cycle_string()}});
    if (it->second != phi.at(elements[a]) * phi.at(elements[b])) {
      return fail(r, {{"composition_broken",
                       {vertex_permutation_json(elements[a], ctx.kg()),
                        vertex_permutation_json(elements[b], ctx.kg())}}});
    }
  }
  r.detail["pairs_checked"] = pairs.size();
  r.status = Status::kPass;
}

void check_g_closed_form(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  require_s3(p);
  if (p.k() < 2) throw Skip{"requires k >= 2"};
  const Graph& definitional = ctx.g_def();
  const Graph closed = build_g_closed_form(p);
  const bool power_case = p.n() >= p.s() * (p.k() + 1) - 1;
  r.detail = {{"case", power_case ? "cycle-power" : "bands"}, {"r", p.r()},
              {"degree", definitional.degree(0)}};
  if (const auto diff = first_adjacency_difference(definitional, closed)) {
    return fail(r, {{"closed_form_pair", {diff->first + 1, diff->second + 1}},
                    {"definitional_adjacent", definitional.has_edge(diff->first, diff->second)}});
  }
  if (power_case) {
    const Graph power = cycle_power(p.n(), p.s() - 1);
    if (const auto diff = first_adjacency_difference(definitional, power)) {
      return fail(r, {{"cycle_power_pair", {diff->first + 1, diff->second + 1}}});
    }
  }
  r.status = Status::kPass;
}

void check_g_dihedral(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  require_s3(p);
  const PermutationGroup& aut = ctx.aut_g();
  const PermutationGroup dihedral = ground_dihedral_group(p.n());
  r.detail = {{"order", aut.order()}, {"expected_order", 2 * p.n()}};
  for (const Permutation& a : aut.elements()) {
    if (!consecutive_criterion(a, p.n())) {
      return fail(r, {{"not_consecutive", ground_permutation_json(a)}});
    }
  }
  if (!groups_equal(aut, dihedral)) {
    for (const Permutation& a : aut.elements()) {
      if (!dihedral.contains(a)) return fail(r, {{"extra_automorphism", ground_permutation_json(a)}});
    }
    for (const Permutation& d : dihedral.elements()) {
      if (!aut.contains(d)) return fail(r, {{"missing_dihedral", ground_permutation_json(d)}});
    }
  }
  r.status = Status::kPass;
}

void check_count(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  const std::uint64_t formula = count_formula(p);
  const auto sets = enumerate_stable_sets(p);
  r.detail = {{"vertices", sets.size()}, {"formula", formula}};
  if (sets.size() != formula) return fail(r, {{"enumerated", sets.size()}});
  for (const StableSet& set : sets) {
    std::uint64_t total = 0;
    for (std::uint32_t gap : set.gaps) {
      total += gap;
      if (gap < p.s()) return fail(r, {{"short_gap", ground_set_string(set.elements)}});
    }
    if (total != p.n()) return fail(r, {{"gap_sum", ground_set_string(set.elements)}});
  }
  r.status = Status::kPass;
}

void check_alpha(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  const std::size_t alpha = ctx.alpha();
  const std::uint64_t formula = star_size_formula(p);
  const StarFamily& stars = ctx.stars();
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < p.n(); ++i) {
    const std::size_t size = stars.stars[i].count();
    total += size;
    if (size != formula) {
      return fail(r, {{"star", i + 1}, {"star_size", size}, {"formula", formula}});
    }
  }
  r.detail = {{"alpha", alpha}, {"formula", formula}, {"star_size_sum", total}};
  if (alpha != formula) return fail(r, {{"alpha", alpha}});
  if (total != static_cast<std::uint64_t>(p.k()) * ctx.kg().num_vertices()) {
    return fail(r, {{"double_count", total}});
  }
  r.status = Status::kPass;
}

void check_stars_distinct(TripleContext& ctx, CheckResult& r) {
  require_nondegenerate(ctx.params());
  const StarFamily& stars = ctx.stars();
  for (std::uint32_t i = 0; i < stars.n; ++i) {
    for (std::uint32_t j = i + 1; j < stars.n; ++j) {
      if (stars.stars[i] == stars.stars[j]) return fail(r, {{"equal_stars", {i + 1, j + 1}}});
    }
  }
  r.detail = {{"stars", stars.n}};
  r.status = Status::kPass;
}

void check_stars_maximum(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  require_s3(p);
  const std::size_t alpha = ctx.alpha();
  std::vector<Bitset> maximum;
  try {
    maximum = all_maximum_independent_sets(ctx.kg(), alpha, ctx.options().limits.node_budget);
  } catch (const BudgetExceeded& e) {
    throw Skip{std::string("independent set enumeration: ") + e.what()};
  }
  const StarFamily& stars = ctx.stars();
  const std::set<Bitset> star_set(stars.stars.begin(), stars.stars.end());
  r.detail = {{"maximum_sets", maximum.size()}, {"stars", star_set.size()}};
  for (const Bitset& set : maximum) {
    if (!star_set.contains(set)) {
      json members_json = json::array();
      for (Vertex v : members(set)) members_json.push_back(ground_set_string(ctx.kg().labels()[v]));
      return fail(r, {{"non_star_maximum_set", members_json}});
    }
  }
  if (maximum.size() != star_set.size()) return fail(r, {{"star_not_maximum", true}});
  r.status = Status::kPass;
}

void check_fractional(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  const FractionalCertificate cert = fractional_chromatic(p, ctx.kg(), ctx.stars(), ctx.alpha());
  r.detail = {{"lower", rational_string(cert.lower)}, {"upper", rational_string(cert.upper)}};
  if (!cert.exact_cover()) {
    for (std::size_t v = 0; v < cert.coverage.size(); ++v) {
      if (cert.coverage[v] != Rational(1)) {
        return fail(r, {{"vertex", ground_set_string(ctx.kg().labels()[v])},
                        {"coverage", rational_string(cert.coverage[v])}});
      }
    }
  }
  if (!cert.tight()) return fail(r, {{"certificate_gap", true}});
  r.status = Status::kPass;
}

void check_chromatic(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  std::uint32_t chi = 0;
  try {
    chi = chromatic_number(ctx.kg(), ctx.options().limits.node_budget);
  } catch (const ChromaticBudgetExceeded& e) {
    r.detail = {{"lower", e.lower()}, {"upper", e.upper()}};
    throw Skip{std::string(e.what()) + "; chi in [" + std::to_string(e.lower()) + ", " +
               std::to_string(e.upper()) + "]"};
  }
  const std::uint64_t lower = (p.n() + p.k() - 1) / p.k();
  const std::int64_t upper = static_cast<std::int64_t>(p.n()) -
                             static_cast<std::int64_t>(p.k() - 1) * p.s();
  r.detail = {{"chi", chi}, {"lower_bound", lower}, {"upper_bound", upper}};
  if (!verify_chromatic_bounds(p, chi)) return fail(r, {{"chi", chi}});
  if (p.n() == p.s() * p.k() + 1 && chi != p.s() + 1) {
    return fail(r, {{"chi", chi}, {"expected", p.s() + 1}});
  }
  r.status = Status::kPass;
}

void check_orbits(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  require_nondegenerate(p);
  const auto parts = orbits(ctx.aut_kg());
  const bool tight = p.n() == p.s() * p.k() + 1;
  r.detail = {{"orbits", parts.size()}, {"n_equals_sk_plus_1", tight}};
  if ((parts.size() == 1) != tight) return fail(r, {{"orbits", parts.size()}});
  if (tight) {
    // Every vertex has exactly one gap of s+1, the rest equal to s.
    for (const Label& label : ctx.kg().labels()) {
      std::size_t wide = 0;
      for (std::uint32_t gap : gap_vector(label, p.n())) {
        if (gap == p.s() + 1) ++wide;
        else if (gap != p.s()) return fail(r, {{"unexpected_gap", ground_set_string(label)}});
      }
      if (wide != 1) return fail(r, {{"unexpected_gap", ground_set_string(label)}});
    }
  }
  r.status = Status::kPass;
}

void check_degenerate_complete(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  if (!p.degenerate()) throw Skip{"requires n = sk"};
  const Graph& kg = ctx.kg();
  r.detail = {{"vertices", kg.num_vertices()}, {"edges", kg.num_edges()}};
  if (kg.num_vertices() != p.s()) return fail(r, {{"vertices", kg.num_vertices()}});
  if (const auto diff = first_adjacency_difference(kg, complete_graph(p.s()))) {
    return fail(r, {{"non_adjacent", {ground_set_string(kg.labels()[diff->first]),
                                      ground_set_string(kg.labels()[diff->second])}}});
  }
  r.status = Status::kPass;
}

void check_degenerate_aut(TripleContext& ctx, CheckResult& r) {
  const Params& p = ctx.params();
  if (!p.degenerate()) throw Skip{"requires n = sk"};
  const std::size_t order = ctx.aut_kg().order();
  r.detail = {{"order", order}, {"expected_order", factorial(p.s())}};
  if (order != factorial(p.s())) return fail(r, {{"order", order}});
  r.status = Status::kPass;
}

using CheckFn = void (*)(TripleContext&, CheckResult&);

CheckFn check_function(std::string_view id) {
  static const std::map<std::string_view, CheckFn> kFns = {
      {"aut.kg-dihedral", check_kg_dihedral},
      {"aut.star-map", check_star_map},
      {"g.closed-form", check_g_closed_form},
      {"g.dihedral", check_g_dihedral},
      {"indep.count", check_count},
      {"indep.alpha", check_alpha},
      {"indep.stars-distinct", check_stars_distinct},
      {"indep.stars-maximum", check_stars_maximum},
      {"color.fractional", check_fractional},
      {"color.chromatic", check_chromatic},
      {"trans.orbits", check_orbits},
      {"degen.complete", check_degenerate_complete},
      {"degen.aut-order", check_degenerate_aut},
  };
  return kFns.at(id);
}

}  // namespace

TripleReport verify_triple(const Params& p, const VerifyOptions& options) {
  TripleReport report{p, {}};
  TripleContext ctx(p, options);
  for (const CheckSpec& spec : registered_checks()) {
    if (!options.suites.contains(spec.suite)) continue;
    CheckResult result;
    result.id = std::string(spec.id);
    const auto start = std::chrono::steady_clock::now();
    try {
      check_function(spec.id)(ctx, result);
    } catch (const Skip& skip) {
      result.status = Status::kSkipped;
      result.reason = skip.reason;
    } catch (const TheoremViolation& e) {
      result.status = Status::kFail;
      result.witness = {{"violation", e.what()}};
    } catch (const InvariantViolation& e) {
      result.status = Status::kFail;
      result.witness = {{"invariant", e.what()}};
    } catch (const std::exception& e) {
      result.status = Status::kFail;
      result.witness = {{"error", e.what()}};
    }
    if (result.status == Status::kFail && result.witness.is_null()) {
      result.witness = {{"unspecified", true}};
    }
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::vector<std::string> to_json_lines(const TripleReport& report, bool timing) {
  std::vector<std::string> lines;
  const Params& p = report.params;
  for (const CheckResult& r : report.checks) {
    json record = {{"record", "check"}, {"s", p.s()},          {"k", p.k()},
                   {"n", p.n()},        {"check", r.id},       {"status", to_string(r.status)},
                   {"detail", r.detail}};
    if (r.status == Status::kFail) record["witness"] = r.witness;
    if (r.status == Status::kSkipped) record["reason"] = r.reason;
    if (timing) record["elapsed_ms"] = r.elapsed_ms;
    lines.push_back(record.dump());
  }
  json summary = {{"record", "summary"},
                  {"s", p.s()},
                  {"k", p.k()},
                  {"n", p.n()},
                  {"passed", report.count(Status::kPass)},
                  {"failed", report.count(Status::kFail)},
                  {"skipped", report.count(Status::kSkipped)},
                  {"tool_version", kToolVersion},
                  {"seed", nullptr}};
  lines.push_back(summary.dump());
  return lines;
}

std::vector<std::string> to_text_lines(const TripleReport& report) {
  std::vector<std::string> lines;
  const Params& p = report.params;
  for (const CheckResult& r : report.checks) {
    std::ostringstream line;
    line << "s=" << p.s() << " k=" << p.k() << " n=" << p.n() << "  " << r.id << "  ";
    switch (r.status) {
      case Status::kPass: line << "PASS  " << r.detail.dump(); break;
      case Status::kFail: line << "FAIL  " << r.witness.dump(); break;
      case Status::kSkipped: line << "SKIP  " << r.reason; break;
    }
    lines.push_back(line.str());
  }
  return lines;
}

}  // namespace skn
