#pragma once

#include <optional>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

/// Connected components of the subgraph induced by `active`, ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet active);

/// True iff g has at most one component (vacuous for n <= 1).
bool is_connected(const Graph& g);

struct Bipartition {
  VertexSet left;   // side containing the lowest labelled vertex of each component
  VertexSet right;
};

/// 2-colouring, or nullopt when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Number of odd components of g - s.
int odd_components(const Graph& g, VertexSet s);

/// Maximum number of internally disjoint s-t paths (s, t non-adjacent).
int local_vertex_connectivity(const Graph& g, int s, int t);

/// kappa(g): size of a minimum vertex cut, n-1 for complete graphs, 0 when
/// disconnected. Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// kappa'(g): size of a minimum edge cut. Requires n >= 2.
int edge_connectivity(const Graph& g);

/// alpha(g): exact maximum independent set size by branch and bound.
int independence_number(const Graph& g);

/// True iff no two vertices of s are adjacent.
bool is_independent(const Graph& g, VertexSet s);

/// Length of a shortest cycle, or 0 for forests.
int girth(const Graph& g);

}  // namespace matchext
