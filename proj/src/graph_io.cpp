#include "skn/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace skn {

namespace {

constexpr int kOffset = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::string out;
  append_size(out, n);
  int value = 0;
  int filled = 0;
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kOffset));
  out.push_back('\n');
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto next6 = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < kOffset || c > kOffset + 63) {
      throw ParseError("graph6: byte " + std::to_string(pos - 1) + " out of range");
    }
    return static_cast<std::uint64_t>(c - kOffset);
  };

  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = next6();
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | next6();
  } else {
    pos = 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, got " +
                     std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::uint64_t value = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        value = next6();
        left = 6;
      }
      --left;
      if ((value >> left) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [i, j] : g.edges()) out << "e " << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("dimacs line " + std::to_string(line_no) + ": bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph from_dimacs(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    auto fail = [&](const std::string& why) {
      return ParseError("dimacs line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens[0] == "p") {
      if (have_header) throw fail("duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw fail("expected 'p edge V E'");
      }
      n = parse_count(tokens[2], line_no);
      m = parse_count(tokens[3], line_no);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw fail("edge before problem line");
      if (tokens.size() != 3) throw fail("expected 'e i j'");
      const std::uint64_t a = parse_count(tokens[1], line_no);
      const std::uint64_t b = parse_count(tokens[2], line_no);
      if (a < 1 || b < 1 || a > n || b > n) throw fail("vertex out of range");
      if (a == b) throw fail("self-loop");
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw fail("unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("dimacs: missing problem line");
  if (edges.size() != m) {
    throw ParseError("dimacs: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

}  // namespace skn
