#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "skn/autgroup.hpp"
#include "skn/generators.hpp"

namespace skn {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Status { kPass, kFail, kSkipped };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

enum class Suite { kAut, kGStructure, kIndependence, kColoring, kTransitivity, kDegenerate };

std::string_view to_string(Suite suite);

/// Parses a comma-separated suite list; "all" selects every suite. Returns
/// nullopt on an unknown name.
std::optional<std::set<Suite>> parse_suites(std::string_view text);

struct CheckSpec {
  std::string_view id;
  Suite suite;
  std::string_view summary;
};

/// Every check in fixed registration order. Report columns follow it.
const std::vector<CheckSpec>& registered_checks();

struct CheckResult {
  std::string id;
  Status status = Status::kSkipped;
  nlohmann::json detail = nlohmann::json::object();
  /// Present on failures: the offending permutation, set, or vertex pair.
  nlohmann::json witness;
  /// Why a check was skipped.
  std::string reason;
  double elapsed_ms = 0.0;
};

struct TripleReport {
  Params params;
  std::vector<CheckResult> checks;

  std::size_t count(Status status) const;
  bool any_failed() const { return count(Status::kFail) > 0; }
};

struct VerifyOptions {
  SearchLimits limits;
  std::set<Suite> suites{Suite::kAut,      Suite::kGStructure,   Suite::kIndependence,
                         Suite::kColoring, Suite::kTransitivity, Suite::kDegenerate};
  /// Triples whose Kneser graph has more vertices are skipped.
  std::size_t max_vertices = kDefaultVertexCeiling;
  /// Record wall-clock time per check. Off by default so reports stay
  /// byte-identical across runs.
  bool timing = false;
};

/// Runs every selected check on one triple. Each selected check id appears
/// exactly once in the result, in registration order.
TripleReport verify_triple(const Params& p, const VerifyOptions& options);

/// One JSON record per check followed by a summary record, each a single
/// line without the trailing newline.
std::vector<std::string> to_json_lines(const TripleReport& report, bool timing);

/// Human-readable lines, one per check.
std::vector<std::string> to_text_lines(const TripleReport& report);

/// 1-based rendering of a 0-based ground subset, e.g. {1,4}.
std::string ground_set_string(const std::vector<std::uint32_t>& residues);

}  // namespace skn
