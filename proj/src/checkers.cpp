#include "matchext/checkers.hpp"

#include "matchext/structure.hpp"

namespace matchext {

ExtendabilityVerdict is_k_extendable(const Graph& g, int k) {
  const int n = g.order();
  if (n % 2 != 0) throw DomainError("extendability needs an even order, got " + std::to_string(n));
  if (k < 0 || 2 * k > n - 2) throw DomainError("k must lie in [0, (order-2)/2], got " + std::to_string(k));
  if (!is_connected(g)) throw DomainError("extendability needs a connected graph");

  ExtendabilityVerdict out;
  const VertexSet all = g.vertices();
  const long long seen = for_each_matching_edges(g, k, [&](const std::vector<Edge>& edges) {
    VertexSet used;
    for (Edge e : edges) used |= e.ends();
    if (has_perfect_matching(g, all - used)) return true;
    out.failing = Matching(edges);
    return false;
  });
  out.no_k_matching = seen == 0;
  out.extendable = seen > 0 && !out.failing;
  return out;
}

HallVerdict bipartite_k_extendable(const Graph& g, int k) {
  auto parts = bipartition(g);
  if (!parts) throw DomainError("Hall-surplus check needs a bipartite graph");
  if (!is_connected(g)) throw DomainError("Hall-surplus check needs a connected graph");
  const VertexSet u_side = parts->left.contains(0) ? parts->left : parts->right;
  const VertexSet w_side = g.vertices() - u_side;
  HallVerdict out;
  if (u_side.size() != w_side.size()) {
    out.unbalanced = true;
    return out;
  }
  const int s = u_side.size();
  if (k < 0 || k > s - 1) throw DomainError("k must lie in [0, (order-2)/2], got " + std::to_string(k));
  if (s > 16) throw DomainError("Hall-surplus check is limited to parts of 16 vertices");

  const std::vector<int> u = u_side.to_vector();
  for (std::uint32_t mask = 1; mask < (1U << s); ++mask) {
    const int x_size = std::popcount(mask);
    if (x_size > s - k) continue;
    VertexSet x;
    VertexSet nbrs;
    for (int i = 0; i < s; ++i) {
      if ((mask >> i) & 1U) {
        x = x.with(u[i]);
        nbrs |= g.neighbors(u[i]);
      }
    }
    if (nbrs.size() < x_size + k) {
      out.violating = x;
      return out;
    }
  }
  out.extendable = true;
  return out;
}

namespace {

void require_criticality_range(const Graph& g, int n) {
  if (n < 0 || n > g.order() - 2) {
    throw DomainError("n must lie in [0, order-2], got " + std::to_string(n));
  }
}

}  // namespace

CriticalityVerdict is_n_factor_critical(const Graph& g, int n) {
  require_criticality_range(g, n);
  if ((g.order() - n) % 2 != 0) throw DomainError("factor-criticality needs order = n (mod 2)");
  CriticalityVerdict out;
  const int order = g.order();
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    VertexSet s;
    for (int v : pick) s = s.with(v);
    if (!has_perfect_matching(g, g.vertices() - s)) {
      out.failing = s;
      return out;
    }
    int i = n - 1;
    while (i >= 0 && pick[i] == order - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  out.critical = true;
  return out;
}

bool n_factor_critical_tutte(const Graph& g, int n) {
  require_criticality_range(g, n);
  if (g.order() > 16) throw DomainError("odd-component scan is limited to 16 vertices");
  if ((g.order() - n) % 2 != 0) return false;
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size < n) continue;
    if (odd_components(g, VertexSet(mask)) > size - n) return false;
  }
  return true;
}

bool LemmaReport::all_passed() const {
  for (const LemmaCheck& c : checks) {
    if (c.applicable && !c.passed) return false;
  }
  return true;
}

LemmaReport validate_structural_lemmas(const Graph& g, int k) {
  LemmaReport report;
  const int order = g.order();
  const int kappa = vertex_connectivity(g);
  const bool bipartite = is_bipartite(g);

  LemmaCheck conn{"connectivity", "kappa >= k+1", true, kappa >= k + 1,
                  "kappa=" + std::to_string(kappa) + ", k+1=" + std::to_string(k + 1)};
  report.checks.push_back(conn);

  LemmaCheck nbhd{"independent-neighbourhood", "N(u) independent whenever deg(u) = k+1", true, true, ""};
  int low = 0;
  for (int v = 0; v < order; ++v) {
    if (g.degree(v) != k + 1) continue;
    ++low;
    if (!is_independent(g, g.neighbors(v))) {
      nbhd.passed = false;
      nbhd.detail = "vertex " + std::to_string(v) + " has adjacent neighbours";
      break;
    }
  }
  if (nbhd.passed) nbhd.detail = std::to_string(low) + " vertices of degree k+1";
  report.checks.push_back(nbhd);

  LemmaCheck alpha{"independence-bound", "alpha <= order/2 - k (non-bipartite)", !bipartite, true, "bipartite"};
  if (!bipartite) {
    const int a = independence_number(g);
    alpha.passed = 2 * a <= order - 2 * k;
    alpha.detail = "alpha=" + std::to_string(a) + ", order/2-k=" + std::to_string(order / 2 - k);
  }
  report.checks.push_back(alpha);

  const bool large_k = 4 * k >= order;
  LemmaCheck dense{"large-k-connectivity", "kappa >= 2k when non-bipartite and 4k >= order", !bipartite && large_k,
                   true, ""};
  if (dense.applicable) {
    dense.passed = kappa >= 2 * k;
    dense.detail = "kappa=" + std::to_string(kappa) + ", 2k=" + std::to_string(2 * k);
  } else {
    dense.detail = bipartite ? "bipartite" : "4k < order";
  }
  report.checks.push_back(dense);
  return report;
}

LemmaReport validate_factor_critical_bounds(const Graph& g, int n) {
  LemmaReport report;
  const int kappa = vertex_connectivity(g);
  const int lambda = edge_connectivity(g);
  const int delta = g.min_degree();
  report.checks.push_back({"connectivity", "kappa >= n", true, kappa >= n,
                           "kappa=" + std::to_string(kappa) + ", n=" + std::to_string(n)});
  report.checks.push_back({"edge-connectivity", "lambda >= n+1", true, lambda >= n + 1,
                           "lambda=" + std::to_string(lambda) + ", n+1=" + std::to_string(n + 1)});
  report.checks.push_back({"minimum-degree", "delta >= n+1", true, delta >= n + 1,
                           "delta=" + std::to_string(delta) + ", n+1=" + std::to_string(n + 1)});
  return report;
}

bool check_equivalence_small(const Graph& g, int k) {
  const int order = g.order();
  if (order > 16) throw DomainError("equivalence check is limited to 16 vertices");
  if (!is_connected(g) || is_bipartite(g)) throw DomainError("equivalence check needs a connected non-bipartite graph");
  if (4 * k < order + 2) throw DomainError("equivalence check needs 4k >= order + 2");
  if (2 * k > order - 2) throw DomainError("equivalence check needs 2k <= order - 2");
  return is_k_extendable(g, k).extendable == is_n_factor_critical(g, 2 * k).critical;
}

}  // namespace matchext
