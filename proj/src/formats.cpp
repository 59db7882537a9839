#include "matchext/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace matchext {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 1, 1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < 63 || text[i] > 126) {
      throw ParseError("invalid graph6 character", 1, static_cast<int>(i) + 1);
    }
  }
  int n = 0;
  std::size_t at = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    at = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("unsupported graph6 size prefix", 1, 1);
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    at = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph6 order exceeds " + std::to_string(kMaxVertices), 1, 1);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - at != need) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - at) + " characters, expected " +
                         std::to_string(need),
                     1, static_cast<int>(at) + 1);
  }
  std::array<std::uint64_t, kMaxVertices> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = text[at + k / 6] - 63;
      if ((c >> (5 - k % 6)) & 1) {
        rows[i] |= VertexSet::bit(j);
        rows[j] |= VertexSet::bit(i);
      }
    }
  }
  for (; k < need * 6; ++k) {
    const int c = text[at + k / 6] - 63;
    if ((c >> (5 - k % 6)) & 1) throw ParseError("non-zero graph6 padding", 1, static_cast<int>(at + k / 6) + 1);
  }
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string emit_edge_list(const Graph& g) {
  std::string out;
  const int n = g.order();
  if (n > 0 && g.degree(n - 1) == 0) out += "# nu=" + std::to_string(n) + "\n";
  for (Edge e : g.edges()) out += e.to_string() + "\n";
  return out;
}

Edge parse_edge_token(std::string_view token, int line, int column) {
  const std::size_t dash = token.find('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == token.size()) {
    throw ParseError("expected an edge of the form i-j, got '" + std::string(token) + "'", line, column);
  }
  auto number = [&](std::string_view digits, int offset) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("invalid vertex label '" + std::string(digits) + "'", line, column + offset);
    }
    return value;
  };
  const int u = number(token.substr(0, dash), 0);
  const int v = number(token.substr(dash + 1), static_cast<int>(dash) + 1);
  if (u == v) throw ParseError("loop " + std::string(token), line, column);
  return Edge::of(u, v);
}

Graph parse_edge_list(std::string_view text, std::optional<int> order) {
  std::vector<Edge> edges;
  int largest = -1;
  std::optional<int> declared;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.starts_with("nu=")) {
        int value = 0;
        auto digits = body.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw ParseError("invalid order declaration", line_no, 1);
        }
        declared = value;
      }
      continue;
    }
    const int column = static_cast<int>(line.data() - raw.data()) + 1;
    Edge e = parse_edge_token(line, line_no, column);
    largest = std::max(largest, e.v);
    edges.push_back(e);
  }
  const int n = order.value_or(declared.value_or(largest + 1));
  if (n < largest + 1) throw ParseError("edge label exceeds declared order", line_no, 0);
  if (n > kMaxVertices) throw ParseError("order exceeds " + std::to_string(kMaxVertices), line_no, 0);
  try {
    return Graph::from_edges(n, edges);
  } catch (const DomainError& err) {
    throw ParseError(err.what(), line_no, 0);
  }
}

std::string emit_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (Edge e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  return out + "}\n";
}

Graph parse_graph_text(std::string_view text) {
  for (std::string_view raw : split_lines(text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.find('-') != std::string_view::npos) return parse_edge_list(text);
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_text(buffer.str());
}

}  // namespace matchext
