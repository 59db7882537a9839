#include "matchext/generators.hpp"

#include <array>
#include <vector>

namespace matchext {

namespace {

// Accumulates edges idempotently; the graph is validated when built.
class EdgeSet {
 public:
  explicit EdgeSet(int n) : n_(n) {}
  void join(int a, int b) {
    a = ((a % n_) + n_) % n_;
    b = ((b % n_) + n_) % n_;
    rows_[a] |= VertexSet::bit(b);
    rows_[b] |= VertexSet::bit(a);
  }
  void cycle(std::initializer_list<int> vertices) {
    std::vector<int> vs(vertices);
    for (std::size_t i = 0; i < vs.size(); ++i) join(vs[i], vs[(i + 1) % vs.size()]);
  }
  void cycle_range(int first, int last) {
    for (int v = first; v < last; ++v) join(v, v + 1);
    join(last, first);
  }
  Graph build() const { return Graph::from_rows(n_, std::span<const std::uint64_t>(rows_.data(), n_)); }

 private:
  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

}  // namespace

Graph harary(int m, int nu) {
  require(nu <= kMaxVertices, "order exceeds the vertex limit");
  require(m >= 2 && m < nu, "harary(m, nu) needs 2 <= m < nu");
  const int r = m / 2;
  EdgeSet es(nu);
  for (int i = 0; i < nu; ++i) {
    for (int d = 1; d <= r; ++d) es.join(i, i + d);
  }
  if (m % 2 == 1) {
    if (nu % 2 == 0) {
      for (int i = 0; i <= nu / 2 - 1; ++i) es.join(i, i + nu / 2);
    } else {
      es.join(0, (nu - 1) / 2);
      es.join(0, (nu + 1) / 2);
      for (int i = 1; i < (nu - 1) / 2; ++i) es.join(i, i + (nu + 1) / 2);
    }
  }
  return es.build();
}

Graph harary_bipartite(int m, int two_s) {
  require(two_s <= kMaxVertices, "order exceeds the vertex limit");
  require(two_s % 2 == 0, "harary_bipartite needs an even order");
  const int s = two_s / 2;
  require(m >= 2 && m <= s, "harary_bipartite(m, 2s) needs 2 <= m <= s");
  const int r = m / 2;
  const int hi = m % 2 == 0 ? 2 * r - 1 : 2 * r + 1;
  EdgeSet es(two_s);
  for (int i = 0; i < two_s; i += 2) {
    for (int d = -(2 * r - 1); d <= hi; d += 2) es.join(i, i + d);
  }
  return es.build();
}

Graph wheel(int nu) {
  require(nu >= 4 && nu <= kMaxVertices, "wheel needs 4 <= nu <= 64");
  EdgeSet es(nu);
  es.cycle_range(0, nu - 2);
  for (int v = 0; v < nu - 1; ++v) es.join(v, nu - 1);
  return es.build();
}

Graph cycle_plus_two_chords(int nu) {
  require(nu >= 4 && nu % 2 == 0 && nu <= kMaxVertices, "cycle_plus_two_chords needs even 4 <= nu <= 64");
  EdgeSet es(nu);
  es.cycle_range(0, nu - 1);
  es.join(0, 2);
  es.join(1, 3);
  return es.build();
}

Graph double_complete_matching(int k) {
  require(k >= 1 && 4 * k <= kMaxVertices, "double_complete_matching needs 1 <= k <= 16");
  const int half = 2 * k;
  EdgeSet es(2 * half);
  for (int i = 0; i < half; ++i) {
    for (int j = i + 1; j < half; ++j) {
      es.join(i, j);
      es.join(half + i, half + j);
    }
    es.join(i, half + i);
  }
  return es.build();
}

Graph complete(int n) {
  require(n >= 0 && n <= kMaxVertices, "order out of range");
  EdgeSet es(std::max(n, 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.join(i, j);
  }
  return n == 0 ? Graph(0) : es.build();
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= kMaxVertices, "complete_bipartite needs positive sides");
  EdgeSet es(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) es.join(i, a + j);
  }
  return es.build();
}

Graph cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "cycle needs 3 <= n <= 64");
  EdgeSet es(n);
  es.cycle_range(0, n - 1);
  return es.build();
}

Graph petersen() {
  EdgeSet es(10);
  es.cycle_range(0, 4);
  for (int i = 0; i < 5; ++i) {
    es.join(i, i + 5);
    es.join(i + 5, (i + 2) % 5 + 5);
  }
  return es.build();
}

Graph dodecahedron() {
  EdgeSet es(20);
  es.cycle_range(0, 9);
  for (int i = 0; i < 10; ++i) {
    es.join(i, 10 + i);
    es.join(10 + i, 10 + (i + 2) % 10);
  }
  return es.build();
}

Graph witness_graph(WitnessGraph id) {
  switch (id) {
    case WitnessGraph::G1: {
      Graph base = harary_bipartite(3, 10);
      const std::array<Edge, 4> extra{{{0, 8}, {2, 4}, {1, 9}, {3, 5}}};
      return base.with_edges(extra);
    }
    case WitnessGraph::G2: {
      EdgeSet es(12);
      es.cycle_range(0, 7);
      es.cycle_range(8, 11);
      for (auto [a, b] : {std::pair{0, 8}, {2, 9}, {4, 10}, {6, 11}, {1, 11}, {3, 8}, {5, 9}, {7, 10}}) es.join(a, b);
      return es.build();
    }
    case WitnessGraph::G3: {
      EdgeSet es(14);
      es.cycle_range(0, 7);
      es.cycle_range(8, 13);
      for (auto [a, b] : {std::pair{0, 4}, {1, 12}, {2, 8}, {3, 10}, {5, 11}, {6, 13}, {7, 9}}) es.join(a, b);
      return es.build();
    }
    case WitnessGraph::G4: {
      EdgeSet es(16);
      es.cycle_range(0, 3);
      es.cycle_range(4, 15);
      for (auto [a, b] : {std::pair{0, 4}, {1, 7}, {2, 10}, {3, 13}, {5, 9}, {8, 12}, {11, 15}, {6, 14}}) {
        es.join(a, b);
      }
      return es.build();
    }
    case WitnessGraph::G5: {
      EdgeSet es(18);
      es.cycle_range(0, 5);
      es.cycle({6, 13, 7, 14, 8, 15, 9, 16, 10, 17, 11, 12});
      for (auto [a, b] :
           {std::pair{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {12, 15}, {13, 16}, {14, 17}}) {
        es.join(a, b);
      }
      return es.build();
    }
    case WitnessGraph::G6: {
      EdgeSet es(22);
      es.cycle_range(0, 7);
      es.cycle_range(8, 21);
      for (auto [a, b] : {std::pair{0, 8}, {1, 10}, {2, 12}, {3, 14}, {4, 15}, {5, 17}, {6, 19}, {7, 21}, {9, 16},
                          {11, 18}, {13, 20}}) {
        es.join(a, b);
      }
      return es.build();
    }
  }
  throw DomainError("unknown witness graph");
}

std::optional<WitnessGraph> witness_graph_from_name(std::string_view name) {
  static constexpr std::array<std::string_view, 6> names{"G1", "G2", "G3", "G4", "G5", "G6"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (name == names[i] || (name.size() == 2 && name[0] == 'g' && name[1] == names[i][1])) {
      return static_cast<WitnessGraph>(i);
    }
  }
  return std::nullopt;
}

std::string_view witness_graph_name(WitnessGraph id) {
  static constexpr std::array<std::string_view, 6> names{"G1", "G2", "G3", "G4", "G5", "G6"};
  return names[static_cast<int>(id)];
}

}  // namespace matchext
