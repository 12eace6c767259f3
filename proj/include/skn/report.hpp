#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "skn/verify.hpp"

namespace skn {

/// Pass/fail matrix of checks against parameter triples, merged from one
/// or more JSON-lines report files.
struct ReportTable {
  struct Row {
    std::uint32_t s = 0, k = 0, n = 0;
    std::map<std::string, Status> cells;

    bool any_failed() const;
  };

  /// Registered checks first in registration order, then unknown ids sorted.
  std::vector<std::string> columns;
  /// Rows with a failure first, then ordered by (s, k, n).
  std::vector<Row> rows;

  bool any_failed() const;
};

struct ReportInput {
  std::string name;
  std::string content;
};

/// Throws ParseError naming the input and line of the first malformed
/// record. Blank lines are ignored. If a cell is reported more than once,
/// fail beats pass beats skipped.
ReportTable aggregate_reports(const std::vector<ReportInput>& inputs);

/// Fixed-width text table; empty string when there are no rows.
std::string render_table(const ReportTable& table);

}  // namespace skn
