#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchext {

inline constexpr int kMaxVertices = 64;

/// Raised when an operation is called outside the range where it is defined
/// (odd order for extendability, k out of range, disconnected input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of {0..63} stored as a single machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= bit(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge, always normalised so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static constexpr Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr auto operator<=>(const Edge&) const = default;
  constexpr VertexSet ends() const { return VertexSet(VertexSet::bit(u) | VertexSet::bit(v)); }
  std::string to_string() const;  // "u-v"
};

/// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
/// word per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws DomainError on loops, out-of-range labels or repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric, loop-free and confined to 0..n-1.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int min_degree() const;
  int max_degree() const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Copy of this graph with one extra vertex (label n) joined to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  /// Copy with extra edges; the edges must be new.
  Graph with_edges(std::span<const Edge> extra) const;
  /// Copy without the listed edges; each must be present.
  Graph without_edges(std::span<const Edge> gone) const;
  /// perm[v] is the new label of v; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Non-increasing list of vertex degrees.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Sorts into non-increasing order; throws DomainError on negative entries.
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int length() const { return static_cast<int>(degrees_.size()); }
  int sum() const;
  int max() const { return degrees_.empty() ? 0 : degrees_.front(); }
  int min() const { return degrees_.empty() ? 0 : degrees_.back(); }
  int count(int d) const;
  /// Even sum and the Erdős–Gallai inequalities.
  bool is_graphical() const;
  std::string to_string() const;  // "(4,4,3,3)"

  auto operator<=>(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
};

DegreeSequence degree_sequence(const Graph& g);

}  // namespace matchext
