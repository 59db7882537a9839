#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matchext/graph.hpp"

namespace matchext {

using Permutation = std::array<std::uint8_t, kMaxVertices>;

/// Result of the canonical labelling search.
///
/// `order[i]` is the vertex placed at canonical position i. The generators
/// are automorphisms discovered during the search; together they generate
/// the full automorphism group (of the coloured graph when colours are
/// given), so `orbit` is exact.
struct CanonicalLabeling {
  int n = 0;
  Permutation order{};
  std::array<std::uint64_t, kMaxVertices> canonical_rows{};
  std::vector<Permutation> generators;
  Permutation orbit{};  // smallest vertex of each vertex's orbit

  bool has_nontrivial_automorphisms() const { return !generators.empty(); }
  bool same_orbit(int a, int b) const { return orbit[a] == orbit[b]; }
  /// Canonical position of vertex v.
  int position_of(int v) const;
  Graph canonical_graph() const;
};

/// `colours` (optional) gives an ordered initial partition: vertices with a
/// smaller colour come first and colours are never mixed.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours = {});

struct CanonicalForm {
  std::string code;             // graph6 of the canonically relabelled graph
  std::vector<int> relabeling;  // relabeling[v] = canonical label of v
};

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Smallest member of each vertex's automorphism orbit.
std::vector<int> automorphism_orbits(const Graph& g);

}  // namespace matchext
