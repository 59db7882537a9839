#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

/// Set of pairwise disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Sorts the edges; throws DomainError if two of them share a vertex.
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  VertexSet covered() const { return covered_; }
  bool contains(Edge e) const;
  bool contains_all(const Matching& other) const;
  /// True iff every edge lies in g.
  bool lies_in(const Graph& g) const;
  /// Covers every vertex of g exactly once.
  bool is_perfect_in(const Graph& g) const { return lies_in(g) && covered_ == g.vertices(); }
  /// Comma separated `u-v` list.
  std::string to_string() const;

  auto operator<=>(const Matching& o) const { return edges_ <=> o.edges_; }
  bool operator==(const Matching& o) const { return edges_ == o.edges_; }

 private:
  std::vector<Edge> edges_;
  VertexSet covered_;
};

/// Maximum matching of the subgraph induced by `active`, by Edmonds'
/// blossom-shrinking augmenting path search. Exposed vertices are processed
/// in increasing order and neighbours in increasing order, so the result is
/// deterministic.
Matching maximum_matching(const Graph& g, VertexSet active);
inline Matching maximum_matching(const Graph& g) { return maximum_matching(g, g.vertices()); }

/// Size only; avoids building the edge list.
int maximum_matching_size(const Graph& g, VertexSet active);

bool has_perfect_matching(const Graph& g, VertexSet active);
inline bool has_perfect_matching(const Graph& g) { return has_perfect_matching(g, g.vertices()); }

/// m together with a perfect matching of g - V(m), or nullopt when none
/// exists. Throws DomainError when m is not a matching of g.
std::optional<Matching> extends_to_perfect(const Graph& g, const Matching& m);

/// Calls visit(m) for every matching of size k in lexicographic order of
/// edge lists; stops early when visit returns false. Returns the number of
/// matchings visited.
template <class Visit>
long long for_each_matching(const Graph& g, int k, Visit&& visit);

std::vector<Matching> enumerate_matchings(const Graph& g, int k);

namespace detail {

struct MatchingWalk {
  std::vector<Edge> edges;
  std::vector<Edge> chosen;
  long long visited = 0;
  bool stopped = false;
};

template <class Visit>
void walk_matchings(MatchingWalk& walk, std::size_t from, VertexSet used, int left, Visit& visit) {
  if (walk.stopped) return;
  if (left == 0) {
    ++walk.visited;
    if (!visit(std::as_const(walk.chosen))) walk.stopped = true;
    return;
  }
  for (std::size_t i = from; i + left <= walk.edges.size() && !walk.stopped; ++i) {
    const Edge e = walk.edges[i];
    if (used.contains(e.u) || used.contains(e.v)) continue;
    walk.chosen.push_back(e);
    walk_matchings(walk, i + 1, used | e.ends(), left - 1, visit);
    walk.chosen.pop_back();
  }
}

}  // namespace detail

/// Raw form of for_each_matching: visit receives the sorted edge vector.
template <class Visit>
long long for_each_matching_edges(const Graph& g, int k, Visit&& visit) {
  if (k < 0 || 2 * k > g.order()) throw DomainError("matching size out of range");
  detail::MatchingWalk walk;
  walk.edges = g.edges();
  detail::walk_matchings(walk, 0, VertexSet{}, k, visit);
  return walk.visited;
}

template <class Visit>
long long for_each_matching(const Graph& g, int k, Visit&& visit) {
  return for_each_matching_edges(g, k, [&](const std::vector<Edge>& edges) { return visit(Matching(edges)); });
}

}  // namespace matchext
