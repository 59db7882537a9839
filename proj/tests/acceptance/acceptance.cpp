// One line per acceptance criterion; exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matchext/canonical.hpp"
#include "matchext/certificates.hpp"
#include "matchext/checkers.hpp"
#include "matchext/formats.hpp"
#include "matchext/generators.hpp"
#include "matchext/matching.hpp"
#include "matchext/search.hpp"
#include "matchext/structure.hpp"
#include "oracles.hpp"

using namespace matchext;

namespace {

constexpr std::uint64_t kSeed = 20070611;

struct Criterion {
  int number;
  std::string description;
  bool passed = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

// Graphs certified k-extendable by some criterion, for the lemma sweep.
struct Certified {
  std::string name;
  Graph graph;
  int k;
};
std::vector<Certified> certified;

void certify(const std::string& name, const Graph& g, int k) { certified.push_back({name, g, k}); }

SearchSpec extendable_spec(int nu, int k, int budget) {
  SearchSpec spec;
  spec.nu = nu;
  spec.parameter = k;
  spec.edge_budget = budget;
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Graph prism() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

bool contains(const std::vector<std::string>& codes, const Graph& g) {
  const std::string code = canonical_form(g).code;
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

void searched_rows(Criterion& c) {
  const int expected[] = {15, 16, 19, 20};
  const int orders[] = {6, 8, 10, 12};
  for (int i = 0; i < 4; ++i) {
    const auto started = std::chrono::steady_clock::now();
    const SearchReport r = min_size_search(extendable_spec(orders[i], 2, expected[i]));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const std::string tag = "nu=" + std::to_string(orders[i]);
    c.expect(r.epsilon == expected[i], tag + " epsilon");
    c.expect(r.witnesses_verified, tag + " witnesses re-verified");
    for (const std::string& code : r.witnesses) {
      const Graph g = parse_graph6(code);
      c.expect(oracle::k_extendable(g, 2) && !oracle::bipartite(g), tag + " witness " + code + " by brute force");
      certify(tag + " witness " + code, g, 2);
    }
    char line[160];
    std::snprintf(line, sizeof line, "nu=%d epsilon=%s classes at minimum=%zu examined=%lld (%.1fs)", orders[i],
                  r.epsilon ? std::to_string(*r.epsilon).c_str() : "none", r.witnesses.size(), r.graphs_examined,
                  seconds);
    c.note(line);
    if (orders[i] == 6) c.expect(r.witnesses.size() == 1 && contains(r.witnesses, complete(6)), "K_6 unique at nu=6");
    if (orders[i] == 12) {
      c.expect(r.witnesses.size() == 1, "unique class at (12, 20)");
      c.expect(!r.witnesses.empty() && are_isomorphic(parse_graph6(r.witnesses.front()), witness_graph(WitnessGraph::G2)),
               "unique witness isomorphic to G2");
    }
    if (orders[i] == 8) c.expect(contains(r.witnesses, double_complete_matching(2)), "double K_4 among nu=8 witnesses");
  }
}

void witness_rows(Criterion& c) {
  const std::vector<std::pair<std::string, Graph>> rows{{"G3", witness_graph(WitnessGraph::G3)},
                                                        {"G4", witness_graph(WitnessGraph::G4)},
                                                        {"G5", witness_graph(WitnessGraph::G5)},
                                                        {"dodecahedron", dodecahedron()},
                                                        {"G6", witness_graph(WitnessGraph::G6)}};
  const int orders[] = {14, 16, 18, 20, 22};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [name, g] = rows[i];
    c.expect(g.order() == orders[i], name + " order");
    c.expect(2 * g.size() == 3 * g.order(), name + " has 3nu/2 edges");
    c.expect(is_connected(g) && oracle::components(g, g.vertices()) == 1, name + " connected");
    c.expect(!is_bipartite(g) && !oracle::bipartite(g), name + " non-bipartite");
    const bool ext = is_k_extendable(g, 2).extendable;
    c.expect(ext, name + " 2-extendable");
    // Second route: every size-2 matching completes, by exhaustive oracle.
    c.expect(oracle::k_extendable(g, 2), name + " 2-extendable by brute force");
    if (ext) certify(name, g, 2);
  }
}

void one_extendable(Criterion& c) {
  for (int nu : {4, 6, 8, 10}) {
    const Graph g = cycle_plus_two_chords(nu);
    const std::string tag = "nu=" + std::to_string(nu);
    c.expect(g.size() == nu + 2, tag + " has nu+2 edges");
    c.expect(!is_bipartite(g), tag + " non-bipartite");
    c.expect(is_k_extendable(g, 1).extendable && oracle::k_extendable(g, 1), tag + " 1-extendable");
    certify("cycle with two chords " + tag, g, 1);
    const SearchReport r = min_size_search(extendable_spec(nu, 1, nu + 2));
    c.expect(r.epsilon == nu + 2, tag + " search finds nothing below nu+2");
    c.expect(contains(r.witnesses, g), tag + " witness among search results");
    for (const std::string& code : r.witnesses) certify(tag + " 1-extendable witness", parse_graph6(code), 1);
  }
}

void harary_criticality(Criterion& c) {
  struct Case {
    int m, nu, n;
  };
  for (Case t : {Case{4, 9, 3}, Case{4, 11, 3}, Case{4, 10, 2}, Case{5, 10, 4}, Case{5, 9, 3}, Case{2, 7, 1}}) {
    const Graph h = harary(t.m, t.nu);
    const std::string tag = "H_{" + std::to_string(t.m) + "," + std::to_string(t.nu) + "}";
    c.expect(is_n_factor_critical(h, t.n).critical, tag + " " + std::to_string(t.n) + "-factor-critical");
    c.expect(n_factor_critical_tutte(h, t.n), tag + " by odd-component criterion");
  }
  for (int s = 3; s <= 6; ++s) {
    const Graph h = harary(3, 2 * s);
    const std::string tag = "H_{3," + std::to_string(2 * s) + "}";
    if (s % 2 == 0) {
      c.expect(is_n_factor_critical(h, 2).critical && oracle::n_factor_critical(h, 2), tag + " bicritical");
    } else {
      const bool ext = is_k_extendable(h, 2).extendable;
      c.expect(ext && oracle::k_extendable(h, 2), tag + " 2-extendable");
      if (ext) certify(tag, h, 2);
    }
  }
}

void bipartite_harary(Criterion& c) {
  struct Case {
    int m, two_s, k;
  };
  for (Case t : {Case{3, 10, 2}, Case{4, 16, 3}, Case{3, 12, 2}}) {
    const Graph h = harary_bipartite(t.m, t.two_s);
    const std::string tag = "H^B_{" + std::to_string(t.m) + "," + std::to_string(t.two_s) + "}";
    const bool ext = is_k_extendable(h, t.k).extendable;
    c.expect(ext, tag + " " + std::to_string(t.k) + "-extendable");
    c.expect(bipartite_k_extendable(h, t.k).extendable, tag + " by Hall surplus");
    c.expect(h.size() * 2 == t.two_s * (t.k + 1), tag + " has nu(k+1)/2 edges");
    if (ext) certify(tag, h, t.k);
  }
}

void double_complete(Criterion& c, bool nu8_minimal) {
  for (int k : {2, 3}) {
    const Graph g = double_complete_matching(k);
    const std::string tag = "k=" + std::to_string(k);
    const bool ext = is_k_extendable(g, k).extendable;
    c.expect(ext, tag + " k-extendable");
    c.expect(g.size() == 4 * k * k, tag + " has 4k^2 edges");
    c.expect(vertex_connectivity(g) == 2 * k && oracle::vertex_connectivity(g) == 2 * k, tag + " connectivity 2k");
    if (ext) certify("double K_" + std::to_string(2 * k), g, k);
  }
  c.expect(nu8_minimal, "nu=8 search shows 16 edges is minimum");
}

void lemma_sweep(Criterion& c) {
  int applicable = 0;
  for (const Certified& item : certified) {
    const LemmaReport report = validate_structural_lemmas(item.graph, item.k);
    for (const LemmaCheck& check : report.checks) {
      applicable += check.applicable;
      c.expect(!check.applicable || check.passed, item.name + ": " + check.name + " " + check.detail);
    }
  }
  c.note(std::to_string(certified.size()) + " certified graphs, " + std::to_string(applicable) + " applicable checks");
}

void oracle_equivalences(Criterion& c) {
  std::mt19937_64 rng(kSeed);
  int fc = 0;
  while (fc < 500) {
    const int order = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, order, 0.4 + 0.5 * (fc % 3) / 2.0);
    const int n = order % 2 + 2 * static_cast<int>(rng() % ((order - order % 2) / 2));
    if (n > order - 2) continue;
    const bool def = is_n_factor_critical(g, n).critical;
    c.expect(def == n_factor_critical_tutte(g, n), "(a) " + emit_graph6(g) + " n=" + std::to_string(n));
    ++fc;
  }
  int bip = 0;
  while (bip < 200) {
    const int half = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_bipartite(rng, half, half, 0.4 + 0.5 * (bip % 3) / 2.0);
    if (!is_connected(g)) continue;
    const int k = static_cast<int>(rng() % std::min(4, half));
    c.expect(bipartite_k_extendable(g, k).extendable == is_k_extendable(g, k).extendable,
             "(b) " + emit_graph6(g) + " k=" + std::to_string(k));
    ++bip;
  }
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * (i % 9) / 8.0);
    c.expect(maximum_matching(g).size() == oracle::max_matching_size(g, g.vertices()), "(c) " + emit_graph6(g));
  }
  long long sequences = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto expected = oracle::class_counts(n);
    for (int edges = 0; edges <= n * (n - 1) / 2; ++edges) {
      for (const DegreeSequence& s : feasible_degree_sequences(n, edges, 0)) {
        const auto it = expected.find(s);
        const long long want = it == expected.end() ? 0 : it->second;
        c.expect(enumerate_graphs(s, [](const Graph&) {}) == want, "(d) " + s.to_string());
        ++sequences;
      }
    }
  }
  c.note("500 + 200 + 500 random graphs, " + std::to_string(sequences) + " degree sequences");
}

void appendix_tables(Criterion& c, const std::string& data) {
  const std::pair<const char*, WitnessGraph> tables[] = {{"appendix_g1.txt", WitnessGraph::G1},
                                                         {"appendix_g2.txt", WitnessGraph::G2}};
  long long listed = 0;
  for (const auto& [file, id] : tables) {
    const Graph g = witness_graph(id);
    const AppendixTable t = import_appendix_table(read_file(data + "/" + file));
    c.expect(!t.rows.empty(), std::string(file) + " imported");
    for (const AppendixRow& row : t.rows) {
      for (const Matching& m : row.perfect_matchings) {
        ++listed;
        c.expect(m.is_perfect_in(g) && m.contains(row.edge),
                 std::string(file) + " line " + std::to_string(row.line) + " " + m.to_string());
      }
    }
    const PartialCertificate p = appendix_certificate(g, t);
    c.expect(p.uncovered.empty(), std::string(file) + " every listed pair covered");
    const CertificateCheck check = verify_partial_certificate(g, p.certificate);
    c.expect(check.valid, std::string(file) + " partial certificate: " + check.diagnostic);
  }
  long long entries = 0;
  for (int i = 0; i < 6; ++i) {
    const auto id = static_cast<WitnessGraph>(i);
    const Graph g = witness_graph(id);
    const ExtendabilityCertificate cert = parse_certificate(format_certificate(build_certificate(g, 2)));
    entries += static_cast<long long>(cert.entries.size());
    const CertificateCheck check = verify_certificate(g, cert);
    c.expect(check.valid, std::string(witness_graph_name(id)) + " certificate round trip: " + check.diagnostic);
  }
  c.note(std::to_string(listed) + " listed matchings checked, " + std::to_string(entries) + " certificate entries");
}

void bicritical_minimum(Criterion& c) {
  for (int nu : {4, 6, 8}) {
    SearchSpec spec = extendable_spec(nu, 2, nu * (nu - 1) / 2);
    spec.predicate = PredicateKind::NFactorCritical;
    const SearchReport r = min_size_search(spec);
    const std::string tag = "nu=" + std::to_string(nu);
    c.expect(r.epsilon == 3 * nu / 2, tag + " minimum bicritical size 3nu/2");
    c.expect(r.witnesses_verified, tag + " witnesses re-verified");
    for (const std::string& code : r.witnesses) {
      const Graph g = parse_graph6(code);
      c.expect(oracle::n_factor_critical(g, 2), tag + " witness " + code + " by brute force");
    }
    if (nu == 4) c.expect(contains(r.witnesses, complete(4)), "K_4 among witnesses");
    if (nu == 6) c.expect(contains(r.witnesses, prism()), "prism among witnesses");
    const Graph w = wheel(nu);
    c.expect(is_n_factor_critical(w, 2).critical && oracle::n_factor_critical(w, 2), tag + " wheel bicritical");
    c.expect(w.size() == 2 * (nu - 1), tag + " wheel has 2(nu-1) edges");
    c.note(tag + ": minimum " + (r.epsilon ? std::to_string(*r.epsilon) : "none") + " edges, " +
           std::to_string(r.witnesses.size()) + " classes; wheel has " + std::to_string(w.size()) + " edges" +
           (w.size() == 3 * nu / 2 ? "" : " (not 3nu/2; the wheel is bicritical but not of minimum size)"));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data = argc > 1 ? argv[1] : MATCHEXT_TEST_DATA;
  std::vector<Criterion> results;
  auto run = [&](int number, const std::string& description, auto&& body) {
    Criterion c;
    c.number = number;
    c.description = description;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %d %s\n", c.passed ? "PASS" : "FAIL", c.number, c.description.c_str());
    for (const std::string& n : c.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    results.push_back(std::move(c));
  };

  bool nu8_minimal = false;
  run(1, "searched minimum sizes of 2-extendable non-bipartite graphs: 15, 16, 19, 20 at nu = 6, 8, 10, 12", [&](Criterion& c) {
    searched_rows(c);
    nu8_minimal = c.passed;
  });
  run(2, "witnesses G3, G4, G5, dodecahedron, G6 have 3nu/2 edges and are 2-extendable", witness_rows);
  run(3, "cycle with two chords is 1-extendable with nu+2 edges, nothing smaller exists", one_extendable);
  run(4, "Harary graph factor-criticality and H_{3,2s} dichotomy", harary_criticality);
  run(5, "bipartite Harary graphs are k-extendable with nu(k+1)/2 edges", bipartite_harary);
  run(6, "two K_{2k} joined by a matching: k-extendable, 4k^2 edges, connectivity 2k",
      [&](Criterion& c) { double_complete(c, nu8_minimal); });
  run(7, "structural necessary conditions hold on every certified extendable graph", lemma_sweep);
  run(8, "oracle equivalences on random corpora and exhaustive class counts", oracle_equivalences);
  run(9, "appendix tables verify against G1/G2; certificates round trip for G1-G6",
      [&](Criterion& c) { appendix_tables(c, data); });
  run(10, "minimum bicritical graphs have 3nu/2 edges; the wheel is bicritical with 2(nu-1)", bicritical_minimum);

  int failed = 0;
  for (const Criterion& c : results) failed += !c.passed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
