#include "matchext/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace matchext {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  return out + "}";
}

std::string Edge::to_string() const { return std::to_string(u) + "-" + std::to_string(v); }

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("graph order must be in 0.." + std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw DomainError("edge " + e.to_string() + " has a label outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) throw DomainError("repeated edge " + Edge::of(e.u, e.v).to_string());
    g.rows_[e.u] |= VertexSet::bit(e.v);
    g.rows_[e.v] |= VertexSet::bit(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) < n) throw DomainError("too few adjacency rows");
  const std::uint64_t all = VertexSet::range(n).bits();
  int degree_total = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw DomainError("adjacency row " + std::to_string(v) + " leaves the vertex range");
    if ((rows[v] >> v) & 1U) throw DomainError("loop at vertex " + std::to_string(v));
    g.rows_[v] = rows[v];
    degree_total += std::popcount(rows[v]);
  }
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(rows[v])) {
      if (!((rows[w] >> v) & 1U)) throw DomainError("adjacency is not symmetric");
    }
  }
  g.m_ = degree_total / 2;
  return g;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(rows_[u] & ~VertexSet::range(u + 1).bits())) out.push_back({u, v});
  }
  return out;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ >= kMaxVertices) throw DomainError("graph is already at the vertex limit");
  if (!nbrs.is_subset_of(vertices())) throw DomainError("new vertex joined outside the vertex range");
  Graph g = *this;
  const int v = n_;
  ++g.n_;
  g.rows_[v] = nbrs.bits();
  for (int w : nbrs) g.rows_[w] |= VertexSet::bit(v);
  g.m_ += nbrs.size();
  return g;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  Graph g = *this;
  for (Edge e : extra) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v) {
      throw DomainError("invalid edge " + e.to_string());
    }
    if (g.adjacent(e.u, e.v)) throw DomainError("edge " + e.to_string() + " already present");
    g.rows_[e.u] |= VertexSet::bit(e.v);
    g.rows_[e.v] |= VertexSet::bit(e.u);
    ++g.m_;
  }
  return g;
}

Graph Graph::without_edges(std::span<const Edge> gone) const {
  Graph g = *this;
  for (Edge e : gone) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || !g.adjacent(e.u, e.v)) {
      throw DomainError("edge " + e.to_string() + " is not present");
    }
    g.rows_[e.u] &= ~VertexSet::bit(e.v);
    g.rows_[e.v] &= ~VertexSet::bit(e.u);
    --g.m_;
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation has the wrong length");
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1U)) throw DomainError("not a permutation");
    seen |= VertexSet::bit(p);
  }
  Graph g(n_);
  g.m_ = m_;
  for (int v = 0; v < n_; ++v) {
    std::uint64_t row = 0;
    for (int w : VertexSet(rows_[v])) row |= VertexSet::bit(perm[w]);
    g.rows_[perm[v]] = row;
  }
  return g;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_) {
    if (d < 0) throw DomainError("negative degree");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

int DegreeSequence::sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

int DegreeSequence::count(int d) const {
  return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), d));
}

bool DegreeSequence::is_graphical() const {
  const int n = length();
  if (sum() % 2 != 0) return false;
  if (n > 0 && degrees_.front() > n - 1) return false;
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += degrees_[k - 1];
    long long rest = 0;
    for (int i = k; i < n; ++i) rest += std::min(degrees_[i], k);
    if (prefix > static_cast<long long>(k) * (k - 1) + rest) return false;
  }
  return true;
}

std::string DegreeSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out + ")";
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return DegreeSequence(std::move(d));
}

}  // namespace matchext
