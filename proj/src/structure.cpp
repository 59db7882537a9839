#include "matchext/structure.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace matchext {

namespace {

// Unit-capacity max-flow with BFS augmentation. Sized for a few hundred nodes.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  // Stops early once `limit` units have been pushed.
  int max_flow(int source, int sink, int limit = INT_MAX) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> frontier;
      frontier.push(source);
      via[source] = -2;
      while (!frontier.empty() && via[sink] == -1) {
        int x = frontier.front();
        frontier.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].capacity > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            frontier.push(arcs_[a].to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source; x = arcs_[via[x] ^ 1].to) {
        --arcs_[via[x]].capacity;
        ++arcs_[via[x] ^ 1].capacity;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int capacity;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int independence_search(const Graph& g, VertexSet pool, int taken, int best) {
  while (true) {
    if (pool.empty()) return std::max(best, taken);
    if (taken + pool.size() <= best) return best;
    // Vertices of degree <= 1 inside the pool can always be taken.
    int low = -1;
    int high = -1;
    int high_degree = -1;
    for (int v : pool) {
      int d = (g.neighbors(v) & pool).size();
      if (d <= 1) {
        low = v;
        break;
      }
      if (d > high_degree) {
        high_degree = d;
        high = v;
      }
    }
    if (low >= 0) {
      pool -= g.neighbors(low).with(low);
      ++taken;
      continue;
    }
    best = independence_search(g, pool - g.neighbors(high).with(high), taken + 1, best);
    pool = pool.without(high);
  }
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet active) {
  std::vector<VertexSet> out;
  VertexSet left = active & g.vertices();
  while (!left.empty()) {
    VertexSet comp{left.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & left) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g, g.vertices()).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  for (VertexSet comp : components(g, g.vertices())) {
    VertexSet side[2] = {VertexSet{comp.first()}, VertexSet{}};
    VertexSet frontier = side[0];
    int colour = 0;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      if (!(next & side[colour]).empty()) return std::nullopt;
      colour ^= 1;
      next -= side[colour];
      side[colour] |= next;
      frontier = next;
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

int odd_components(const Graph& g, VertexSet s) {
  int odd = 0;
  for (VertexSet comp : components(g, g.vertices() - s)) odd += comp.size() % 2;
  return odd;
}

int local_vertex_connectivity(const Graph& g, int s, int t) {
  // Vertex v splits into v_in = 2v and v_out = 2v+1 joined by a unit arc.
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) net.add_arc(2 * v, 2 * v + 1, 1);
    for (int w : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * w, n);
  }
  return net.max_flow(2 * s + 1, 2 * t);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("vertex connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  // Some vertex among the first kappa+1 lies outside a minimum cut.
  int best = g.min_degree();
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) best = std::min(best, local_vertex_connectivity(g, i, j));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("edge connectivity needs at least two vertices");
  int best = g.min_degree();
  for (int t = 1; t < n && best > 0; ++t) {
    FlowNetwork net(n);
    for (Edge e : g.edges()) {
      net.add_arc(e.u, e.v, 1);
      net.add_arc(e.v, e.u, 1);
    }
    best = std::min(best, net.max_flow(0, t, best));
  }
  return best;
}

int independence_number(const Graph& g) { return independence_search(g, g.vertices(), 0, 0); }

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(g.neighbors(v) & s).empty()) return false;
  }
  return true;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          frontier.push(w);
        } else if (parent[v] != w) {
          int cycle = dist[v] + dist[w] + 1;
          if (best == 0 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace matchext
