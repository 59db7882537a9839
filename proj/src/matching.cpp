#include "matchext/matching.hpp"

#include <algorithm>
#include <array>

namespace matchext {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (Edge e : edges_) {
    if (e.u >= e.v || e.u < 0 || e.v >= kMaxVertices) throw DomainError("malformed edge " + e.to_string());
    if (!(covered_ & e.ends()).empty()) throw DomainError("edges of a matching share a vertex at " + e.to_string());
    covered_ |= e.ends();
  }
}

bool Matching::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Matching::contains_all(const Matching& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

bool Matching::lies_in(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](Edge e) { return e.v < g.order() && g.adjacent(e.u, e.v); });
}

std::string Matching::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ',';
    out += edges_[i].to_string();
  }
  return out;
}

namespace {

// Edmonds' algorithm with blossoms tracked through a base array.
class Blossom {
 public:
  Blossom(const Graph& g, VertexSet active) : g_(g), active_(active & g.vertices()) {
    mate_.fill(-1);
  }

  int run() {
    int size = 0;
    for (int root : active_) {
      if (mate_[root] != -1) continue;
      int end = find_augmenting_path(root);
      if (end == -1) continue;
      ++size;
      for (int v = end; v != -1;) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return size;
  }

  const std::array<int, kMaxVertices>& mates() const { return mate_; }

 private:
  int lowest_common_base(int a, int b) {
    std::uint64_t seen = 0;
    while (true) {
      a = base_[a];
      seen |= VertexSet::bit(a);
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if ((seen >> b) & 1U) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child, std::uint64_t& in_blossom) {
    while (base_[v] != b) {
      in_blossom |= VertexSet::bit(base_[v]) | VertexSet::bit(base_[mate_[v]]);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    parent_.fill(-1);
    for (int i = 0; i < kMaxVertices; ++i) base_[i] = i;
    std::uint64_t used = VertexSet::bit(root);
    std::array<int, kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int v = queue[head++];
      for (int to : g_.neighbors(v) & active_) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::uint64_t in_blossom = 0;
          mark_path(v, b, to, in_blossom);
          mark_path(to, b, v, in_blossom);
          for (int i : active_) {
            if ((in_blossom >> base_[i]) & 1U) {
              base_[i] = b;
              if (!((used >> i) & 1U)) {
                used |= VertexSet::bit(i);
                queue[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used |= VertexSet::bit(mate_[to]);
          queue[tail++] = mate_[to];
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet active_;
  std::array<int, kMaxVertices> mate_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
};

}  // namespace

Matching maximum_matching(const Graph& g, VertexSet active) {
  Blossom b(g, active);
  b.run();
  std::vector<Edge> edges;
  for (int v : active & g.vertices()) {
    const int w = b.mates()[v];
    if (w > v) edges.push_back({v, w});
  }
  return Matching(std::move(edges));
}

int maximum_matching_size(const Graph& g, VertexSet active) { return Blossom(g, active).run(); }

bool has_perfect_matching(const Graph& g, VertexSet active) {
  active &= g.vertices();
  if (active.size() % 2 != 0) return false;
  return 2 * maximum_matching_size(g, active) == active.size();
}

std::optional<Matching> extends_to_perfect(const Graph& g, const Matching& m) {
  if (!m.lies_in(g)) throw DomainError("matching " + m.to_string() + " uses an edge not in the graph");
  const VertexSet rest = g.vertices() - m.covered();
  if (rest.size() % 2 != 0) return std::nullopt;
  Matching completion = maximum_matching(g, rest);
  if (2 * completion.size() != rest.size()) return std::nullopt;
  std::vector<Edge> all = m.edges();
  all.insert(all.end(), completion.edges().begin(), completion.edges().end());
  return Matching(std::move(all));
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_matching(g, k, [&](Matching m) {
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

}  // namespace matchext
