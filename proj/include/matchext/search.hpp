#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "matchext/graph.hpp"

namespace matchext {

/// Non-increasing sequences of length nu summing to 2*edges with entries in
/// [min_degree, max_degree] that satisfy Erdős–Gallai. max_degree < 0 means
/// nu-1. Ordered lexicographically from the largest.
std::vector<DegreeSequence> feasible_degree_sequences(int nu, int edges, int min_degree, int max_degree = -1);

/// Isomorph-free generation of all graphs with a given degree sequence by
/// vertex canonical augmentation from K_1. Each node adds one vertex of
/// minimum degree; a child is kept only when the new vertex lies in the
/// automorphism orbit of its canonical deletion vertex.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(const DegreeSequence& target);

  int order() const { return nu_; }
  /// Tree nodes on exactly `depth_order` vertices (the graphs themselves
  /// when depth_order >= the target order), in generation order.
  std::vector<Graph> frontier(int depth_order) const;
  /// Visits every final graph below `node`. Returns the number visited.
  long long expand(const Graph& node, const std::function<void(const Graph&)>& visit) const;
  /// Default split depth used for parallel work.
  int split_order() const;

 private:
  void walk(const Graph& g, int stop_order, const std::function<void(const Graph&)>& emit) const;
  bool viable(const Graph& g) const;
  bool canonical_child(const Graph& child, std::string* code) const;

  int nu_ = 0;
  int edges_ = 0;
  int min_target_ = 0;
  int max_target_ = 0;
  std::vector<int> target_ascending_;
  bool empty_ = false;
};

/// One representative per isomorphism class, in generation order (which is
/// the same for every worker count).
long long enumerate_graphs(const DegreeSequence& seq, const std::function<void(const Graph&)>& visit,
                           int workers = 1);
std::vector<Graph> enumerate_graphs(const DegreeSequence& seq, int workers = 1);

enum class PredicateKind { KExtendableNonBipartite, KExtendableBipartite, NFactorCritical };

std::string predicate_name(PredicateKind kind);
std::optional<PredicateKind> predicate_from_name(const std::string& name);

struct SearchSpec {
  int nu = 0;
  int edge_budget = 0;
  PredicateKind predicate = PredicateKind::KExtendableNonBipartite;
  int parameter = 0;
  /// Defaults to the bound implied by the predicate.
  std::optional<int> min_degree;
  std::optional<std::vector<DegreeSequence>> degree_sequences;
  /// Restricts to sequences with at least nu*(delta+1) - 2*edges vertices of
  /// minimum degree.
  bool fast = false;
  bool stop_at_first_witness = false;
  int workers = 1;
  /// Resumable progress file; empty disables checkpointing.
  std::string checkpoint_path;
};

/// Minimum degree implied by the predicate: k+1 for extendability (2k when
/// non-bipartite and 4k >= nu), n+1 for n-factor-criticality.
int implied_min_degree(const SearchSpec& spec);

/// Whether a graph satisfies the searched property, from scratch.
bool satisfies_predicate(const Graph& g, PredicateKind kind, int parameter);

struct FilterStat {
  std::string name;
  std::string reason;
  long long rejected = 0;
};

struct SequenceStat {
  DegreeSequence sequence;
  long long classes = 0;
  std::vector<std::string> witnesses;
};

struct LevelStat {
  int edges = 0;
  std::vector<SequenceStat> sequences;
};

struct SearchReport {
  SearchSpec spec;
  int min_degree = 0;
  std::optional<int> epsilon;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  bool witnesses_verified = false;
  long long graphs_examined = 0;
  std::vector<FilterStat> filters;
  std::vector<LevelStat> levels;
  bool resumed = false;
  double wall_time_seconds = 0;

  /// Deterministic fields only unless with_timing is set.
  nlohmann::ordered_json to_json(bool with_timing = true) const;
};

/// Scans edge counts upward from ceil(nu*min_degree/2) and stops at the
/// first count with a witness. Requires nu <= 12 unless explicit degree
/// sequences are given.
SearchReport min_size_search(const SearchSpec& spec);

struct ProbeRow {
  int nu = 0;
  int edges = 0;
  bool searched = false;
  std::string reason;
  std::vector<std::string> witnesses;
};

struct ProbeReport {
  int k = 0;
  int nu_limit = 0;
  int conjectured_bound = 0;  // 8k - 4
  std::vector<ProbeRow> rows;
  bool consistent = true;

  nlohmann::ordered_json to_json() const;
};

/// For even nu from 2k+2 to nu_limit (<= 12): is there a k-extendable
/// non-bipartite graph with exactly nu(k+1)/2 edges?
ProbeReport conjecture_probe(int k, int nu_limit, int workers = 1);

}  // namespace matchext
