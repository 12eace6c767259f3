#include "skn/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "skn/errors.hpp"

namespace skn {

bool ReportTable::Row::any_failed() const {
  return std::any_of(cells.begin(), cells.end(),
                     [](const auto& cell) { return cell.second == Status::kFail; });
}

bool ReportTable::any_failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.any_failed(); });
}

namespace {

int severity(Status status) {
  switch (status) {
    case Status::kFail: return 2;
    case Status::kPass: return 1;
    case Status::kSkipped: return 0;
  }
  return 0;
}

std::uint32_t read_u32(const nlohmann::json& record, const char* key) {
  const auto it = record.find(key);
  if (it == record.end() || !it->is_number_unsigned()) {
    throw std::invalid_argument(std::string("missing or non-integer field '") + key + "'");
  }
  return it->get<std::uint32_t>();
}

}  // namespace

ReportTable aggregate_reports(const std::vector<ReportInput>& inputs) {
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;
  std::map<Key, ReportTable::Row> rows;
  std::set<std::string> seen_ids;

  for (const ReportInput& input : inputs) {
    std::istringstream stream(input.content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        const nlohmann::json record = nlohmann::json::parse(line);
        if (!record.is_object()) throw std::invalid_argument("record is not an object");
        const std::string kind = record.value("record", "");
        const Key key{read_u32(record, "s"), read_u32(record, "k"), read_u32(record, "n")};
        ReportTable::Row& row = rows[key];
        std::tie(row.s, row.k, row.n) = key;
        if (kind == "summary") continue;
        if (kind != "check") throw std::invalid_argument("unknown record type '" + kind + "'");
        const auto check = record.find("check");
        const auto status_field = record.find("status");
        if (check == record.end() || !check->is_string() || status_field == record.end() ||
            !status_field->is_string()) {
          throw std::invalid_argument("check record needs string 'check' and 'status'");
        }
        const auto status = parse_status(status_field->get<std::string>());
        if (!status) throw std::invalid_argument("unknown status");
        const std::string id = check->get<std::string>();
        seen_ids.insert(id);
        const auto [it, inserted] = row.cells.emplace(id, *status);
        if (!inserted && severity(*status) > severity(it->second)) it->second = *status;
      } catch (const std::exception& e) {
        throw ParseError(input.name + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  ReportTable table;
  for (const CheckSpec& spec : registered_checks()) {
    const std::string id(spec.id);
    if (seen_ids.erase(id) > 0) table.columns.push_back(id);
  }
  table.columns.insert(table.columns.end(), seen_ids.begin(), seen_ids.end());

  for (auto& [key, row] : rows) table.rows.push_back(std::move(row));
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const ReportTable::Row& a, const ReportTable::Row& b) {
                     return a.any_failed() && !b.any_failed();
                   });
  return table;
}

std::string render_table(const ReportTable& table) {
  if (table.rows.empty()) return "";
  constexpr int kTripleWidth = 14;
  std::string out;
  // Cells are left-aligned; trailing padding is dropped per line.
  auto emit = [&out](const std::ostringstream& line) {
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out += text + '\n';
  };
  std::ostringstream header;
  header << std::left << std::setw(kTripleWidth) << "triple";
  std::vector<std::size_t> widths;
  for (const std::string& column : table.columns) {
    widths.push_back(std::max<std::size_t>(column.size(), 4));
    header << ' ' << std::setw(static_cast<int>(widths.back())) << column;
  }
  emit(header);
  for (const ReportTable::Row& row : table.rows) {
    std::ostringstream line;
    line << std::left << std::setw(kTripleWidth)
         << ("s=" + std::to_string(row.s) + ",k=" + std::to_string(row.k) +
             ",n=" + std::to_string(row.n));
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const auto it = row.cells.find(table.columns[c]);
      std::string cell = "-";
      if (it != row.cells.end()) {
        cell = it->second == Status::kPass ? "PASS" : it->second == Status::kFail ? "FAIL" : "skip";
      }
      line << ' ' << std::setw(static_cast<int>(widths[c])) << cell;
    }
    emit(line);
  }
  return out;
}

}  // namespace skn
