#include "matchext/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchext/canonical.hpp"
#include "matchext/certificates.hpp"
#include "matchext/checkers.hpp"
#include "matchext/formats.hpp"
#include "matchext/generators.hpp"
#include "matchext/search.hpp"
#include "matchext/structure.hpp"

namespace matchext {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int to_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError(what + " must be an integer: " + text);
  return value;
}

Graph build_family(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t count, const char* usage) {
    if (params.size() != count) throw UsageError(std::string("usage: gen ") + usage);
  };
  auto p = [&](std::size_t i) { return to_int(params[i], "parameter"); };
  if (family == "harary") return need(2, "harary <m> <nu>"), harary(p(0), p(1));
  if (family == "harary-bipartite") return need(2, "harary-bipartite <m> <2s>"), harary_bipartite(p(0), p(1));
  if (family == "wheel") return need(1, "wheel <nu>"), wheel(p(0));
  if (family == "cycle-chords") return need(1, "cycle-chords <nu>"), cycle_plus_two_chords(p(0));
  if (family == "double-complete") return need(1, "double-complete <k>"), double_complete_matching(p(0));
  if (family == "complete") return need(1, "complete <n>"), complete(p(0));
  if (family == "complete-bipartite") return need(2, "complete-bipartite <a> <b>"), complete_bipartite(p(0), p(1));
  if (family == "cycle") return need(1, "cycle <n>"), cycle(p(0));
  if (family == "petersen") return need(0, "petersen"), petersen();
  if (family == "dodecahedron") return need(0, "dodecahedron"), dodecahedron();
  if (family == "witness") {
    need(1, "witness <G1..G6>");
    auto id = witness_graph_from_name(params[0]);
    if (!id) throw UsageError("unknown witness graph " + params[0] + " (expected G1..G6)");
    return witness_graph(*id);
  }
  throw UsageError("unknown family " + family);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json graph_summary(const Graph& g) {
  return {{"order", g.order()}, {"size", g.size()}, {"graph6", emit_graph6(g)}};
}

Json set_json(VertexSet s) { return s.to_vector(); }

Json lemma_json(const LemmaReport& report) {
  Json checks = Json::array();
  for (const LemmaCheck& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"applicable", c.applicable},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  return {{"checks", checks}, {"all_passed", report.all_passed()}};
}

// Published minimum sizes of 2-extendable non-bipartite graphs.
int expected_epsilon(int nu) {
  switch (nu) {
    case 6:
      return 15;
    case 8:
      return 16;
    case 10:
      return 19;
    case 12:
      return 20;
    default:
      return 3 * nu / 2;
  }
}

Json epsilon_table(int workers, bool& all_match) {
  Json rows = Json::array();
  all_match = true;
  for (int nu : {6, 8, 10, 12}) {
    SearchSpec spec;
    spec.nu = nu;
    spec.parameter = 2;
    spec.edge_budget = expected_epsilon(nu);
    spec.workers = workers;
    const SearchReport report = min_size_search(spec);
    const bool match = report.epsilon == expected_epsilon(nu) && report.witnesses_verified;
    all_match = all_match && match;
    rows.push_back({{"nu", nu},
                    {"method", "search"},
                    {"epsilon", report.epsilon ? Json(*report.epsilon) : Json(nullptr)},
                    {"expected", expected_epsilon(nu)},
                    {"witness_classes", report.witnesses.size()},
                    {"witnesses", report.witnesses},
                    {"matches", match}});
  }
  const std::vector<std::pair<std::string, Graph>> witnesses{{"G3", witness_graph(WitnessGraph::G3)},
                                                             {"G4", witness_graph(WitnessGraph::G4)},
                                                             {"G5", witness_graph(WitnessGraph::G5)},
                                                             {"dodecahedron", dodecahedron()},
                                                             {"G6", witness_graph(WitnessGraph::G6)}};
  for (const auto& [name, g] : witnesses) {
    const bool connected = is_connected(g);
    const bool non_bipartite = !is_bipartite(g);
    const bool extendable = is_k_extendable(g, 2).extendable;
    const bool edges_ok = 2 * g.size() == 3 * g.order();
    const bool match = connected && non_bipartite && extendable && edges_ok;
    all_match = all_match && match;
    rows.push_back({{"nu", g.order()},
                    {"method", "witness"},
                    {"graph", name},
                    {"edges", g.size()},
                    {"expected", expected_epsilon(g.order())},
                    {"connected", connected},
                    {"non_bipartite", non_bipartite},
                    {"two_extendable", extendable},
                    {"matches", match}});
  }
  return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching extendability toolkit", "matchext"};
  app.require_subcommand(1);

  std::string format = "g6";
  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Print a graph from a named family");
  gen->add_option("family", family, "harary, harary-bipartite, wheel, cycle-chords, double-complete, witness, "
                                    "dodecahedron, complete, complete-bipartite, cycle, petersen")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--format", format, "g6, edge-list or dot")->check(CLI::IsMember({"g6", "edge-list", "dot"}));

  std::optional<int> k_opt;
  std::optional<int> n_opt;
  std::string graph_path;
  auto* check = app.add_subcommand("check", "Decide k-extendability or n-factor-criticality");
  auto* check_k = check->add_option("--k", k_opt, "Matching size");
  auto* check_n = check->add_option("--n", n_opt, "Number of deleted vertices");
  check_k->excludes(check_n);
  check->add_option("graph", graph_path, "Graph file (graph6 or edge list)")->required();

  auto* lemmas = app.add_subcommand("lemmas", "Run the structural necessary-condition validators");
  auto* lemmas_k = lemmas->add_option("--k", k_opt, "Extendability parameter");
  auto* lemmas_n = lemmas->add_option("--n", n_opt, "Factor-criticality parameter");
  lemmas_k->excludes(lemmas_n);
  lemmas->add_option("graph", graph_path, "Graph file")->required();

  int nu = 0;
  std::optional<int> budget;
  bool fast = false;
  bool first_only = false;
  int workers = 1;
  std::string predicate = "non-bipartite";
  std::string checkpoint;
  std::optional<int> min_degree;
  auto* search = app.add_subcommand("search", "Minimum-size search over isomorphism classes");
  search->add_option("--nu", nu, "Order")->required();
  search->add_option("--k", k_opt, "Extendability parameter");
  search->add_option("--n", n_opt, "Factor-criticality parameter");
  search->add_option("--budget", budget, "Largest edge count to scan");
  search->add_option("--predicate", predicate, "non-bipartite, bipartite or factor-critical")
      ->check(CLI::IsMember({"non-bipartite", "bipartite", "factor-critical"}));
  search->add_option("--min-degree", min_degree, "Minimum degree (at most the implied bound)");
  search->add_flag("--fast", fast, "Only sequences with enough minimum-degree vertices");
  search->add_flag("--first", first_only, "Stop after the first degree sequence with a witness");
  search->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint, "Resumable progress file");

  std::string output_path;
  auto* certify = app.add_subcommand("certify", "Write an extendability certificate");
  certify->add_option("--k", k_opt, "Matching size")->required();
  certify->add_option("graph", graph_path, "Graph file")->required();
  certify->add_option("--output,-o", output_path, "Write to a file instead of stdout");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify-cert", "Check a certificate against a graph");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("certificate", cert_path, "Certificate file")->required();

  std::string table_path;
  auto* appendix = app.add_subcommand("appendix", "Check an appendix-style verification table against a graph");
  appendix->add_option("graph", graph_path, "Graph file")->required();
  appendix->add_option("table", table_path, "Table file")->required();

  auto* table = app.add_subcommand("epsilon-table", "Searched and witnessed minimum sizes for k = 2");
  table->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  int nu_limit = 12;
  auto* probe = app.add_subcommand("probe", "Look for k-extendable non-bipartite graphs with nu(k+1)/2 edges");
  probe->add_option("--k", k_opt, "Extendability parameter")->required();
  probe->add_option("--nu-limit", nu_limit, "Largest order to scan (at most 12)");
  probe->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const Graph g = build_family(family, params);
      if (format == "g6") {
        out << emit_graph6(g) << "\n";
      } else if (format == "edge-list") {
        out << emit_edge_list(g);
      } else {
        out << emit_dot(g);
      }
      return 0;
    }
    if (check->parsed()) {
      if (!k_opt && !n_opt) throw UsageError("check needs --k or --n");
      const Graph g = read_graph_file(graph_path);
      Json j = graph_summary(g);
      bool holds = false;
      if (k_opt) {
        const ExtendabilityVerdict v = is_k_extendable(g, *k_opt);
        holds = v.extendable;
        j["k"] = *k_opt;
        j["k_extendable"] = v.extendable;
        j["no_k_matching"] = v.no_k_matching;
        j["failing_matching"] = v.failing ? Json(v.failing->to_string()) : Json(nullptr);
      } else {
        const CriticalityVerdict v = is_n_factor_critical(g, *n_opt);
        holds = v.critical;
        j["n"] = *n_opt;
        j["n_factor_critical"] = v.critical;
        j["failing_set"] = v.failing ? set_json(*v.failing) : Json(nullptr);
      }
      out << j.dump(2) << "\n";
      return holds ? 0 : 1;
    }
    if (lemmas->parsed()) {
      if (!k_opt && !n_opt) throw UsageError("lemmas needs --k or --n");
      const Graph g = read_graph_file(graph_path);
      const LemmaReport report = k_opt ? validate_structural_lemmas(g, *k_opt) : validate_factor_critical_bounds(g, *n_opt);
      Json j = graph_summary(g);
      j[k_opt ? "k" : "n"] = k_opt ? *k_opt : *n_opt;
      j.update(lemma_json(report));
      out << j.dump(2) << "\n";
      return report.all_passed() ? 0 : 1;
    }
    if (search->parsed()) {
      SearchSpec spec;
      spec.nu = nu;
      if (predicate == "factor-critical") {
        if (!n_opt) throw UsageError("factor-critical search needs --n");
        spec.predicate = PredicateKind::NFactorCritical;
        spec.parameter = *n_opt;
      } else {
        if (!k_opt) throw UsageError("extendability search needs --k");
        spec.predicate =
            predicate == "bipartite" ? PredicateKind::KExtendableBipartite : PredicateKind::KExtendableNonBipartite;
        spec.parameter = *k_opt;
      }
      spec.edge_budget = budget.value_or(nu * (nu - 1) / 2);
      spec.min_degree = min_degree;
      spec.fast = fast;
      spec.stop_at_first_witness = first_only;
      spec.workers = workers;
      spec.checkpoint_path = checkpoint;
      const SearchReport report = min_size_search(spec);
      out << report.to_json().dump(2) << "\n";
      return report.epsilon ? 0 : 1;
    }
    if (certify->parsed()) {
      const Graph g = read_graph_file(graph_path);
      try {
        const std::string text = format_certificate(build_certificate(g, *k_opt));
        if (output_path.empty()) {
          out << text;
        } else {
          std::ofstream file(output_path);
          file << text;
          if (!file) throw UsageError("cannot write " + output_path);
        }
        return 0;
      } catch (const NotExtendableError& e) {
        err << e.what() << "\n";
        return 1;
      }
    }
    if (verify->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const ExtendabilityCertificate c = parse_certificate(read_text(cert_path));
      const CertificateCheck result = verify_certificate(g, c);
      Json j{{"valid", result.valid}, {"entries", c.entries.size()}, {"k", c.k}};
      j["diagnostic"] = result.valid ? Json(nullptr) : Json(result.diagnostic);
      out << j.dump(2) << "\n";
      return result.valid ? 0 : 1;
    }
    if (appendix->parsed()) {
      const Graph g = read_graph_file(graph_path);
      const AppendixTable t = import_appendix_table(read_text(table_path));
      const PartialCertificate partial = appendix_certificate(g, t);
      const CertificateCheck result = verify_partial_certificate(g, partial.certificate);
      long long listed = 0;
      for (const AppendixRow& row : t.rows) listed += static_cast<long long>(row.perfect_matchings.size());
      Json uncovered = Json::array();
      for (const Matching& m : partial.uncovered) uncovered.push_back(m.to_string());
      Json j{{"rows", t.rows.size()},
             {"listed_matchings", listed},
             {"entries", partial.certificate.entries.size()},
             {"uncovered_pairs", uncovered},
             {"partial", t.partial},
             {"valid", result.valid}};
      j["diagnostic"] = result.valid ? Json(nullptr) : Json(result.diagnostic);
      out << j.dump(2) << "\n";
      return result.valid && partial.uncovered.empty() ? 0 : 1;
    }
    if (table->parsed()) {
      bool all_match = true;
      Json rows = epsilon_table(workers, all_match);
      out << Json{{"k", 2}, {"rows", rows}, {"all_match", all_match}}.dump(2) << "\n";
      return all_match ? 0 : 1;
    }
    if (probe->parsed()) {
      const ProbeReport report = conjecture_probe(*k_opt, nu_limit, workers);
      out << report.to_json().dump(2) << "\n";
      return report.consistent ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace matchext
