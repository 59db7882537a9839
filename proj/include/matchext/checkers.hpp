#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchext/graph.hpp"
#include "matchext/matching.hpp"

namespace matchext {

struct ExtendabilityVerdict {
  bool extendable = false;
  /// Lexicographically first size-k matching with no perfect extension.
  std::optional<Matching> failing;
  /// Set when g has no matching of size k at all.
  bool no_k_matching = false;
};

/// Definition-based check: every size-k matching extends to a perfect
/// matching. Requires g connected, even order and 0 <= k <= (n-2)/2.
ExtendabilityVerdict is_k_extendable(const Graph& g, int k);

struct HallVerdict {
  bool extendable = false;
  bool unbalanced = false;
  /// First X (by increasing subset mask over the side U holding vertex 0)
  /// with |N(X)| < |X| + k.
  std::optional<VertexSet> violating;
};

/// Hall-surplus criterion for connected bipartite graphs with parts of at
/// most 16 vertices.
HallVerdict bipartite_k_extendable(const Graph& g, int k);

struct CriticalityVerdict {
  bool critical = false;
  /// First S in lexicographic combination order with no perfect matching
  /// of g - S.
  std::optional<VertexSet> failing;
};

/// g - S has a perfect matching for every |S| = n. Requires
/// 0 <= n <= order-2 and order = n (mod 2).
CriticalityVerdict is_n_factor_critical(const Graph& g, int n);

/// Odd-component criterion over every S with |S| >= n. False on a parity
/// mismatch; requires order <= 16.
bool n_factor_critical_tutte(const Graph& g, int n);

struct LemmaCheck {
  std::string name;
  std::string statement;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_passed() const;
};

/// Necessary conditions for k-extendability: connectivity at least k+1,
/// independent neighbourhoods at degree k+1, and for non-bipartite graphs
/// the independence bound and, when 4k >= order, connectivity at least 2k.
LemmaReport validate_structural_lemmas(const Graph& g, int k);

/// Necessary conditions for n-factor-criticality: connectivity at least n,
/// edge connectivity at least n+1 and minimum degree at least n+1.
LemmaReport validate_factor_critical_bounds(const Graph& g, int n);

/// Whether k-extendability and 2k-factor-criticality agree. Requires g
/// connected and non-bipartite, 4k >= order + 2, 2k <= order - 2 and
/// order <= 16.
bool check_equivalence_small(const Graph& g, int k);

}  // namespace matchext
