// Command-line front end: theorem-verification sweeps, graph export and
// report aggregation for stable Kneser graphs.
//
// Exit status: 0 when everything passed, 1 when any check failed, 2 on usage,
// parse, I/O or resource errors.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "skn/generators.hpp"
#include "skn/graph_io.hpp"
#include "skn/report.hpp"
#include "skn/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// "7", "3..5" or "2,4,6" (comma lists may mix both forms).
std::vector<std::uint32_t> parse_values(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream items(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::uint32_t {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument(s);
    return static_cast<std::uint32_t>(v);
  };
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const std::uint32_t lo = number(item.substr(0, dots));
    const std::uint32_t hi = number(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument(item);
    for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(text);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("SKL_NODE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed SKL_NODE_BUDGET='" << env << "'\n";
    }
  }
  return skn::kDefaultNodeBudget;
}

struct VerifyArgs {
  std::string s, k, n, n_offset;
  std::string suite = "all";
  std::size_t max_vertices = skn::kDefaultVertexCeiling;
  std::uint64_t node_budget = 0;
  bool json = false;
  bool timing = false;
  std::string out;
  unsigned jobs = 0;
};

int run_verify(const VerifyArgs& args) {
  std::vector<skn::Params> triples;
  skn::VerifyOptions options;
  try {
    const auto suites = skn::parse_suites(args.suite);
    if (!suites) throw std::invalid_argument("unknown suite in '" + args.suite + "'");
    options.suites = *suites;
    if (args.n.empty() == args.n_offset.empty()) {
      throw std::invalid_argument("give exactly one of --n and --n-offset");
    }
    for (std::uint32_t s : parse_values(args.s)) {
      for (std::uint32_t k : parse_values(args.k)) {
        const auto ns = parse_values(args.n.empty() ? args.n_offset : args.n);
        for (std::uint32_t value : ns) {
          const std::uint64_t n = args.n.empty() ? std::uint64_t{s} * k + value : value;
          if (s < 2 || k < 1 || n < std::uint64_t{s} * k) {
            std::cerr << "note: skipping (n=" << n << ", k=" << k << ", s=" << s
                      << "): needs s >= 2, k >= 1, n >= sk\n";
            continue;
          }
          triples.push_back(skn::Params::make(static_cast<std::uint32_t>(n), k, s));
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: malformed sweep: " << e.what() << '\n';
    return kExitUsage;
  }
  if (triples.empty()) {
    std::cerr << "error: the sweep contains no valid triple\n";
    return kExitUsage;
  }
  std::sort(triples.begin(), triples.end(), [](const skn::Params& a, const skn::Params& b) {
    return std::tuple(a.s(), a.k(), a.n()) < std::tuple(b.s(), b.k(), b.n());
  });
  options.max_vertices = args.max_vertices;
  options.limits.node_budget = args.node_budget != 0 ? args.node_budget : default_node_budget();
  options.limits.vertex_ceiling = args.max_vertices;
  options.timing = args.timing;

  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) {
      std::cerr << "error: cannot write " << args.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = args.out.empty() ? std::cout : file;

  // Workers take triples in order; the writer emits them in the same order.
  std::vector<std::promise<skn::TripleReport>> promises(triples.size());
  std::vector<std::future<skn::TripleReport>> futures;
  for (auto& p : promises) futures.push_back(p.get_future());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(args.jobs != 0 ? args.jobs
                                                     : std::max(1u, std::thread::hardware_concurrency()),
                                      static_cast<unsigned>(triples.size())));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < triples.size(); i = next++) {
        try {
          promises[i].set_value(skn::verify_triple(triples[i], options));
        } catch (...) {
          promises[i].set_exception(std::current_exception());
        }
      }
    });
  }

  bool any_fail = false;
  for (auto& future : futures) {
    const skn::TripleReport report = future.get();
    any_fail = any_fail || report.any_failed();
    const auto lines = args.json ? skn::to_json_lines(report, args.timing)
                                 : skn::to_text_lines(report);
    for (const std::string& line : lines) out << line << '\n';
    out.flush();
  }
  return any_fail ? kExitFail : kExitPass;
}

struct ExportArgs {
  std::string which = "kg";
  std::uint32_t n = 0, k = 0, s = 0;
  std::string format = "graph6";
  std::string out = "-";
};

int run_export(const ExportArgs& args) {
  std::string text;
  try {
    const skn::Params p = skn::Params::make(args.n, args.k, args.s);
    const skn::Graph g = args.which == "kg" ? skn::build_stable_kneser(p)
                                            : skn::build_g_definitional(p);
    text = args.format == "graph6" ? skn::to_graph6(g) : skn::to_dimacs(g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (args.out == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream file(args.out, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    std::cerr << "error: cannot write " << args.out << '\n';
    return kExitUsage;
  }
  return kExitPass;
}

int run_report(const std::vector<std::string>& paths, bool json) {
  std::vector<skn::ReportInput> inputs;
  for (const std::string& path : paths) {
    std::ifstream file(path);
    if (!file) {
      std::cerr << "error: cannot read " << path << '\n';
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    inputs.push_back({path, buffer.str()});
  }
  skn::ReportTable table;
  try {
    table = skn::aggregate_reports(inputs);
  } catch (const skn::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (json) {
    for (const auto& row : table.rows) {
      nlohmann::json record = {{"s", row.s}, {"k", row.k}, {"n", row.n}};
      nlohmann::json cells = nlohmann::json::object();
      for (const auto& column : table.columns) {
        const auto it = row.cells.find(column);
        if (it != row.cells.end()) cells[column] = skn::to_string(it->second);
      }
      record["checks"] = std::move(cells);
      std::cout << record.dump() << '\n';
    }
  } else {
    std::cout << skn::render_table(table);
  }
  return table.any_failed() ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable Kneser graph construction and theorem verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(skn::kToolVersion));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks over a sweep");
  verify_cmd->add_option("--s", verify.s, "stability values, e.g. 3 or 2..4")->required();
  verify_cmd->add_option("--k", verify.k, "subset sizes, e.g. 2..3")->required();
  auto* n_opt = verify_cmd->add_option("--n", verify.n, "ground set sizes");
  auto* offset_opt =
      verify_cmd->add_option("--n-offset", verify.n_offset, "values of n - sk, e.g. 1..4");
  n_opt->excludes(offset_opt);
  verify_cmd->add_option("--suite", verify.suite,
                         "comma list of aut,g-structure,independence,coloring,"
                         "transitivity,degenerate or all");
  verify_cmd->add_option("--max-vertices", verify.max_vertices, "skip larger Kneser graphs")
      ->capture_default_str();
  verify_cmd->add_option("--node-budget", verify.node_budget,
                         "search node budget (default: SKL_NODE_BUDGET or 10000000)");
  verify_cmd->add_flag("--json", verify.json, "emit JSON-lines records");
  verify_cmd->add_flag("--timing", verify.timing, "add elapsed_ms to JSON records");
  verify_cmd->add_option("--out", verify.out, "write records to a file instead of stdout");
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads (default: hardware)");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "write a graph in graph6 or DIMACS format");
  export_cmd->add_option("which", exp.which, "kg (stable Kneser graph) or g (G(n,k,s))")
      ->check(CLI::IsMember({"kg", "g"}));
  export_cmd->add_option("--n", exp.n)->required();
  export_cmd->add_option("--k", exp.k)->required();
  export_cmd->add_option("--s", exp.s)->required();
  export_cmd->add_option("--format", exp.format)->check(CLI::IsMember({"graph6", "dimacs"}))
      ->capture_default_str();
  export_cmd->add_option("--out", exp.out, "output path, - for stdout")->capture_default_str();

  std::vector<std::string> report_files;
  bool report_json = false;
  auto* report_cmd = app.add_subcommand("report", "aggregate JSON-lines reports into a table");
  report_cmd->add_option("files", report_files, "report files");
  report_cmd->add_flag("--json", report_json, "emit one JSON row per triple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*verify_cmd) return run_verify(verify);
  if (*export_cmd) return run_export(exp);
  if (*report_cmd) return run_report(report_files, report_json);
  return kExitUsage;
}
