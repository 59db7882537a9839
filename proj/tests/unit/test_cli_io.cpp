#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "matchext/cli.hpp"
#include "matchext/formats.hpp"
#include "matchext/generators.hpp"
#include "oracles.hpp"
#include "seed.hpp"

using namespace matchext;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("matchext_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

int count_lines(const std::string& text, const std::string& needle) {
  int count = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) count += line.find(needle) != std::string::npos;
  return count;
}

}  // namespace

TEST_CASE("graph6 round trips") {
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(star.size() == 4);
  CHECK(emit_graph6(star) == "D?{");
  CHECK(emit_graph6(parse_graph6(emit_graph6(complete(4)))) == emit_graph6(complete(4)));
  const Graph g2 = witness_graph(WitnessGraph::G2);
  CHECK(parse_graph6(emit_graph6(g2)) == g2);
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6("D?{\n") == star);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);
}

TEST_CASE("large graph6 headers") {
  std::mt19937_64 rng(testing_seed::value());
  for (int n : {62, 63, 64}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("edge lists") {
  const Graph c4 = cycle(4);
  CHECK(emit_edge_list(c4) == "0-1\n0-3\n1-2\n2-3\n");
  CHECK(parse_edge_list(emit_edge_list(c4)) == c4);
  const Graph isolated = Graph::from_edges(5, {{0, 1}});
  CHECK(emit_edge_list(isolated).find("# nu=5") != std::string::npos);
  CHECK(parse_edge_list(emit_edge_list(isolated)) == isolated);
  CHECK(parse_edge_list("# a comment\n\n1-2\n", 4).order() == 4);
  try {
    parse_edge_list("0-1\n1-x\n");
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("0-1\n0-1\n"), ParseError);
}

TEST_CASE("dot output") {
  const std::string c4 = emit_dot(cycle(4));
  CHECK(count_lines(c4, "--") == 4);
  CHECK(count_lines(c4, ";") - count_lines(c4, "--") == 4);
  const std::string g1 = emit_dot(witness_graph(WitnessGraph::G1));
  CHECK(count_lines(g1, "--") == 19);
  CHECK(count_lines(g1, ";") - count_lines(g1, "--") == 10);
  const std::string empty = emit_dot(Graph(0));
  CHECK(count_lines(empty, ";") == 0);
  CHECK(empty.find("graph G") != std::string::npos);
}

TEST_CASE("emit and parse are inverse on 200 random graphs") {
  std::mt19937_64 rng(testing_seed::value());
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const Graph g = oracle::random_graph(rng, n, 0.05 + 0.9 * (trial % 7) / 6.0);
    INFO(emit_graph6(g));
    CHECK(parse_graph6(emit_graph6(g)) == g);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK(parse_graph_text(emit_edge_list(g)) == g);
    CHECK(parse_graph_text(emit_graph6(g) + "\n") == g);
  }
}

TEST_CASE("cli gen") {
  const Run r = run({"gen", "harary", "4", "9", "--format", "edge-list"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "-") == 18);
  CHECK(run({"gen", "witness", "G2"}).out == emit_graph6(witness_graph(WitnessGraph::G2)) + "\n");
  CHECK(count_lines(run({"gen", "witness", "G1", "--format", "dot"}).out, "--") == 19);
  CHECK(run({"gen", "nosuch"}).code == 2);
  CHECK(run({"gen", "harary", "4"}).code == 2);
  CHECK(run({"gen", "harary", "9", "4"}).code == 2);
  CHECK(run({"gen", "cycle", "5", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli check and lemmas") {
  const std::string g2 = write_temp("g2.g6", emit_graph6(witness_graph(WitnessGraph::G2)) + "\n");
  const Run yes = run({"check", "--k", "2", g2});
  CHECK(yes.code == 0);
  const auto j = nlohmann::json::parse(yes.out);
  CHECK(j["k_extendable"] == true);
  CHECK(j["size"] == 20);

  const std::string c8 = write_temp("c8.txt", emit_edge_list(cycle(8)));
  const Run no = run({"check", "--k", "2", c8});
  CHECK(no.code == 1);
  CHECK(nlohmann::json::parse(no.out)["failing_matching"].is_string());
  CHECK(run({"check", "--k", "5", c8}).code == 2);
  CHECK(run({"check", c8}).code == 2);
  CHECK(run({"check", "--k", "1", "/nonexistent/graph"}).code == 2);

  const std::string w8 = write_temp("w8.g6", emit_graph6(wheel(8)));
  const Run n = run({"check", "--n", "2", w8});
  CHECK(n.code == 0);
  CHECK(nlohmann::json::parse(n.out)["n_factor_critical"] == true);

  const Run lemmas = run({"lemmas", "--k", "2", g2});
  CHECK(lemmas.code == 0);
  CHECK(nlohmann::json::parse(lemmas.out)["all_passed"] == true);

  const std::string bad = write_temp("bad.txt", "0-1\n1\xE2\x80\x93" "2\n");
  const Run parse = run({"check", "--k", "1", bad});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("cli search") {
  const Run r = run({"search", "--nu", "10", "--k", "2", "--budget", "19"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["epsilon"] == 19);
  CHECK(j["witnesses_verified"] == true);

  const Run none = run({"search", "--nu", "10", "--k", "2", "--budget", "18"});
  CHECK(none.code == 1);
  CHECK(nlohmann::json::parse(none.out)["result"] == "none <= budget");

  const Run fc = run({"search", "--nu", "6", "--n", "2", "--predicate", "factor-critical"});
  CHECK(fc.code == 0);
  CHECK(nlohmann::json::parse(fc.out)["epsilon"] == 9);
  CHECK(run({"search", "--nu", "6", "--predicate", "factor-critical"}).code == 2);
  CHECK(run({"search", "--nu", "14", "--k", "2"}).code == 2);
}

TEST_CASE("cli certificates") {
  const std::string g3 = write_temp("g3.g6", emit_graph6(witness_graph(WitnessGraph::G3)));
  const std::string cert = (std::filesystem::temp_directory_path() / "matchext_cli_g3.cert").string();
  CHECK(run({"certify", "--k", "2", g3, "-o", cert}).code == 0);
  const Run ok = run({"verify-cert", g3, cert});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["valid"] == true);

  std::string text;
  {
    std::ifstream in(cert);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  text.erase(text.find("\nkey:") + 1, text.find('\n', text.find("\nkey:") + 1) - text.find("\nkey:"));
  const std::string broken = write_temp("broken.cert", text);
  const Run bad = run({"verify-cert", g3, broken});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["diagnostic"].get<std::string>().find("missing matching") != std::string::npos);

  const std::string c8 = write_temp("c8.g6", emit_graph6(cycle(8)));
  CHECK(run({"certify", "--k", "2", c8}).code == 1);

  const std::string g1 = write_temp("g1.g6", emit_graph6(witness_graph(WitnessGraph::G1)));
  const Run table = run({"appendix", g1, std::string(MATCHEXT_TEST_DATA) + "/appendix_g1.txt"});
  CHECK(table.code == 0);
  CHECK(nlohmann::json::parse(table.out)["valid"] == true);
}

TEST_CASE("cli probe") {
  const Run r = run({"probe", "--k", "2", "--nu-limit", "10"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["conjectured_bound"] == 12);
  CHECK(j["consistent"] == true);
  CHECK(run({"probe", "--k", "2", "--nu-limit", "14"}).code == 2);
}
