#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "matchext/graph.hpp"

namespace matchext {

/// Harary graph H_{m,nu}: circulant on the window i-r..i+r for m = 2r, plus
/// diameters (nu even) or the three-part diagonal family (nu odd) for
/// m = 2r+1. Requires 2 <= m < nu.
Graph harary(int m, int nu);

/// Balanced bipartite analogue H^B_{m,2s}: even i adjacent to odd j with
/// i-2r+1 <= j <= i+2r-1 (m = 2r) or i-2r+1 <= j <= i+2r+1 (m = 2r+1),
/// labels mod 2s. Requires 2 <= m <= s.
Graph harary_bipartite(int m, int two_s);

/// Hub nu-1 joined to the cycle 0..nu-2. Requires nu >= 4.
Graph wheel(int nu);

/// Cycle 0..nu-1 plus chords (0,2) and (1,3). Requires even nu >= 4.
Graph cycle_plus_two_chords(int nu);

/// Two copies of K_{2k} on 0..2k-1 and 2k..4k-1 joined by (i, i+2k).
Graph double_complete_matching(int k);

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph petersen();
/// Generalised Petersen graph GP(10,2): the 20-vertex dodecahedron.
Graph dodecahedron();

/// The six 2-extendable non-bipartite minimum-size witnesses, on 10, 12, 14,
/// 16, 18 and 22 vertices. Each is two cycles joined by chords, except G1,
/// which is H^B_{3,10} plus four edges.
enum class WitnessGraph { G1, G2, G3, G4, G5, G6 };

Graph witness_graph(WitnessGraph id);
std::optional<WitnessGraph> witness_graph_from_name(std::string_view name);
std::string_view witness_graph_name(WitnessGraph id);

}  // namespace matchext
