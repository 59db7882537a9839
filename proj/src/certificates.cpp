#include "matchext/certificates.hpp"

#include <algorithm>
#include <cctype>

#include "matchext/canonical.hpp"
#include "matchext/checkers.hpp"
#include "matchext/formats.hpp"

namespace matchext {

ExtendabilityCertificate build_certificate(const Graph& g, int k) {
  // k = order/2 lies outside the extendability range but still has a
  // meaningful certificate: every perfect matching certifies itself.
  if (2 * k <= g.order() - 2) {
    const ExtendabilityVerdict verdict = is_k_extendable(g, k);
    if (!verdict.extendable) {
      const std::string why = verdict.no_k_matching ? "no matching of size " + std::to_string(k)
                                                    : "matching " + verdict.failing->to_string() + " does not extend";
      throw NotExtendableError("graph is not " + std::to_string(k) + "-extendable: " + why, verdict.failing);
    }
  } else if (k < 0 || 2 * k != g.order()) {
    throw DomainError("k must lie in [0, order/2] for an even order, got " + std::to_string(k));
  }
  ExtendabilityCertificate c;
  c.graph_hash = canonical_form(g).code;
  c.k = k;
  for_each_matching(g, k, [&](Matching key) {
    std::optional<Matching> pm = extends_to_perfect(g, key);
    c.entries.push_back({std::move(key), std::move(*pm)});
    return true;
  });
  if (c.entries.empty()) throw NotExtendableError("no matching of size " + std::to_string(k), std::nullopt);
  return c;
}

namespace {

// First problem with one entry, ignoring coverage.
std::string entry_problem(const Graph& g, int k, const CertificateEntry& e) {
  const std::string where = " in entry " + e.key.to_string();
  if (e.key.size() != k) return "key of size " + std::to_string(e.key.size()) + where;
  for (Edge edge : e.key.edges()) {
    if (edge.v >= g.order() || !g.has_edge(edge)) return "invalid edge " + edge.to_string() + where;
  }
  for (Edge edge : e.perfect.edges()) {
    if (edge.v >= g.order() || !g.has_edge(edge)) return "invalid edge " + edge.to_string() + where;
  }
  // Matching guarantees disjoint edges, so covering all vertices is enough.
  const VertexSet missed = g.vertices() - e.perfect.covered();
  if (!missed.empty()) return "uncovered vertex " + std::to_string(missed.first()) + where;
  if (!e.perfect.contains_all(e.key)) return "key not subset of perfect matching" + where;
  return "";
}

}  // namespace

CertificateCheck verify_certificate(const Graph& g, const ExtendabilityCertificate& c) {
  CertificateCheck out;
  if (c.graph_hash != canonical_form(g).code) {
    out.diagnostic = "graph hash mismatch";
    return out;
  }
  if (c.k < 0 || 2 * c.k > g.order()) {
    out.diagnostic = "k out of range";
    return out;
  }
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (i > 0 && !(c.entries[i - 1].key < c.entries[i].key)) {
      out.diagnostic = c.entries[i - 1].key == c.entries[i].key ? "duplicate key " + c.entries[i].key.to_string()
                                                                : "entries not sorted at " + c.entries[i].key.to_string();
      return out;
    }
    std::string problem = entry_problem(g, c.k, c.entries[i]);
    if (!problem.empty()) {
      out.diagnostic = problem;
      return out;
    }
  }
  // Keys against the full list of size-k matchings; both are sorted.
  std::size_t at = 0;
  for_each_matching_edges(g, c.k, [&](const std::vector<Edge>& edges) {
    if (at < c.entries.size() && c.entries[at].key.edges() == edges) {
      ++at;
      return true;
    }
    if (at < c.entries.size() && c.entries[at].key.edges() < edges) {
      out.diagnostic = "unexpected key " + c.entries[at].key.to_string();
    } else {
      out.diagnostic = "missing matching " + Matching(edges).to_string();
    }
    return false;
  });
  if (!out.diagnostic.empty()) return out;
  if (at < c.entries.size()) {
    out.diagnostic = "unexpected key " + c.entries[at].key.to_string();
    return out;
  }
  out.valid = true;
  return out;
}

CertificateCheck verify_partial_certificate(const Graph& g, const ExtendabilityCertificate& c) {
  CertificateCheck out;
  if (c.graph_hash != canonical_form(g).code) {
    out.diagnostic = "graph hash mismatch";
    return out;
  }
  for (const CertificateEntry& e : c.entries) {
    std::string problem = entry_problem(g, c.k, e);
    if (!problem.empty()) {
      out.diagnostic = problem;
      return out;
    }
  }
  out.valid = true;
  return out;
}

std::string format_certificate(const ExtendabilityCertificate& c) {
  std::string out = "certificate v1 " + c.graph_hash + " k=" + std::to_string(c.k) + "\n";
  for (const CertificateEntry& e : c.entries) {
    const std::string key = e.key.to_string();
    out += "key: " + key + (key.empty() ? "" : " ") + "pm: " + e.perfect.to_string() + "\n";
  }
  return out;
}

namespace {

std::vector<std::pair<std::string_view, int>> split_lines_with_numbers(std::string_view text) {
  std::vector<std::pair<std::string_view, int>> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line, number);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

// Comma-separated `u-v` tokens; `base` is the column of list[0].
std::vector<Edge> parse_edge_run(std::string_view list, int line, int base, bool allow_period) {
  std::vector<Edge> edges;
  std::size_t at = 0;
  while (at < list.size()) {
    while (at < list.size() && (list[at] == ' ' || list[at] == '\t')) ++at;
    if (at == list.size()) break;
    std::size_t end = at;
    while (end < list.size() && list[end] != ',' && list[end] != ' ' && list[end] != '\t') ++end;
    std::string_view token = list.substr(at, end - at);
    if (allow_period && !token.empty() && token.back() == '.') token.remove_suffix(1);
    edges.push_back(parse_edge_token(token, line, base + static_cast<int>(at)));
    at = end;
    while (at < list.size() && (list[at] == ' ' || list[at] == '\t')) ++at;
    if (at < list.size()) {
      if (list[at] != ',') throw ParseError("expected ','", line, base + static_cast<int>(at));
      ++at;
    }
  }
  return edges;
}

Matching make_matching(std::vector<Edge> edges, int line, int column) {
  try {
    return Matching(std::move(edges));
  } catch (const DomainError& err) {
    throw ParseError(err.what(), line, column);
  }
}

}  // namespace

ExtendabilityCertificate parse_certificate(std::string_view text) {
  ExtendabilityCertificate c;
  bool have_header = false;
  for (auto [line, number] : split_lines_with_numbers(text)) {
    if (line.empty()) continue;
    if (!have_header) {
      constexpr std::string_view prefix = "certificate v1 ";
      if (!line.starts_with(prefix)) throw ParseError("expected 'certificate v1' header", number, 1);
      std::string_view rest = line.substr(prefix.size());
      const std::size_t space = rest.find(' ');
      if (space == std::string_view::npos || space == 0) throw ParseError("missing graph hash", number, 16);
      c.graph_hash = std::string(rest.substr(0, space));
      std::string_view kpart = rest.substr(space + 1);
      const int kcol = static_cast<int>(prefix.size() + space + 2);
      if (!kpart.starts_with("k=") || kpart.size() == 2) throw ParseError("expected k=<k>", number, kcol);
      int k = 0;
      for (char ch : kpart.substr(2)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("invalid k", number, kcol + 2);
        k = k * 10 + (ch - '0');
      }
      c.k = k;
      have_header = true;
      continue;
    }
    if (!line.starts_with("key:")) throw ParseError("expected 'key:'", number, 1);
    const std::size_t pm_at = line.find("pm:");
    if (pm_at == std::string_view::npos) throw ParseError("expected 'pm:'", number, static_cast<int>(line.size()));
    std::string_view key_text = line.substr(4, pm_at - 4);
    std::string_view pm_text = line.substr(pm_at + 3);
    std::vector<Edge> key = parse_edge_run(key_text, number, 5, false);
    std::vector<Edge> pm = parse_edge_run(pm_text, number, static_cast<int>(pm_at) + 4, false);
    c.entries.push_back({make_matching(std::move(key), number, 5),
                         make_matching(std::move(pm), number, static_cast<int>(pm_at) + 4)});
  }
  if (!have_header) throw ParseError("empty certificate", 1, 1);
  return c;
}

AppendixTable import_appendix_table(std::string_view text) {
  AppendixTable table;
  for (auto [line, number] : split_lines_with_numbers(text)) {
    std::size_t first = 0;
    while (first < line.size() && (line[first] == ' ' || line[first] == '\t')) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const std::size_t bar1 = line.find('|');
    const std::size_t bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) throw ParseError("expected three '|'-separated columns", number, 0);

    std::string_view edge_col = line.substr(0, bar1);
    std::vector<Edge> head = parse_edge_run(edge_col, number, 1, false);
    if (head.size() > 1) throw ParseError("first column holds one edge", number, 1);
    if (head.empty()) {
      if (table.rows.empty()) throw ParseError("continuation row before any edge", number, 1);
    } else {
      table.rows.push_back({head.front(), {}, {}, number});
    }
    AppendixRow& row = table.rows.back();

    std::string_view pairs = line.substr(bar1 + 1, bar2 - bar1 - 1);
    for (Edge e : parse_edge_run(pairs, number, static_cast<int>(bar1) + 2, true)) row.paired.push_back(e);

    std::string_view sets = line.substr(bar2 + 1);
    const int base = static_cast<int>(bar2) + 2;
    std::size_t at = 0;
    while (at < sets.size()) {
      const char ch = sets[at];
      if (ch == ' ' || ch == '\t') {
        ++at;
        continue;
      }
      if (ch != '{') throw ParseError("expected '{'", number, base + static_cast<int>(at));
      const std::size_t close = sets.find('}', at);
      if (close == std::string_view::npos) throw ParseError("unclosed '{'", number, base + static_cast<int>(at));
      std::vector<Edge> edges = parse_edge_run(sets.substr(at + 1, close - at - 1), number,
                                               base + static_cast<int>(at) + 1, false);
      row.perfect_matchings.push_back(make_matching(std::move(edges), number, base + static_cast<int>(at)));
      at = close + 1;
    }
  }
  return table;
}

PartialCertificate appendix_certificate(const Graph& g, const AppendixTable& table) {
  PartialCertificate out;
  out.certificate.graph_hash = canonical_form(g).code;
  out.certificate.k = 2;
  for (const AppendixRow& row : table.rows) {
    for (Edge other : row.paired) {
      std::vector<Edge> pair{row.edge, other};
      std::optional<Matching> key;
      try {
        key = Matching(pair);
      } catch (const DomainError&) {
        throw ParseError("paired edges " + row.edge.to_string() + " and " + other.to_string() + " share a vertex",
                         row.line, 0);
      }
      auto hit = std::find_if(row.perfect_matchings.begin(), row.perfect_matchings.end(),
                              [&](const Matching& m) { return m.contains_all(*key); });
      if (hit == row.perfect_matchings.end()) {
        out.uncovered.push_back(*key);
      } else {
        out.certificate.entries.push_back({*key, *hit});
      }
    }
  }
  std::sort(out.certificate.entries.begin(), out.certificate.entries.end(),
            [](const CertificateEntry& a, const CertificateEntry& b) { return a.key < b.key; });
  return out;
}

}  // namespace matchext
