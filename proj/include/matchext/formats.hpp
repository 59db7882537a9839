#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matchext/graph.hpp"

namespace matchext {

/// Malformed text input. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// graph6 (short form for n <= 62, four-byte form for n = 63, 64). A single
/// trailing newline is accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// One `i-j` edge per line, sorted. A `# nu=<n>` line is emitted only when the
/// highest label is isolated, so the order survives a round trip.
std::string emit_edge_list(const Graph& g);
/// Blank lines and `#` comments are ignored except `# nu=<n>`. Without it
/// (or `order`) the order is one more than the largest label.
Graph parse_edge_list(std::string_view text, std::optional<int> order = std::nullopt);

std::string emit_dot(const Graph& g, std::string_view name = "G");

/// Edge list when any line contains '-', otherwise graph6 on the first
/// non-empty line.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Parses an `i-j` token; the whole token must be consumed.
Edge parse_edge_token(std::string_view token, int line, int column);

}  // namespace matchext
