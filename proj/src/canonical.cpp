#include "matchext/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "matchext/formats.hpp"

namespace matchext {

namespace {

using Rows = std::array<std::uint64_t, kMaxVertices>;

constexpr std::uint64_t mix(std::uint64_t h, std::uint64_t value) {
  std::uint64_t z = h ^ (value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Ordered partition of the vertex set. Cells are contiguous runs of `lab`;
// a cell is identified by its first position.
struct Partition {
  int n = 0;
  int cells = 0;
  Permutation lab{};       // position -> vertex
  Permutation cell_of{};   // vertex -> start of its cell
  Permutation cell_end{};  // cell start -> one past its last position

  bool discrete() const { return cells == n; }

  std::uint64_t cell_bits(int start) const {
    std::uint64_t bits = 0;
    for (int i = start; i < cell_end[start]; ++i) bits |= VertexSet::bit(lab[i]);
    return bits;
  }
};

// Splits cells by neighbour counts into queued splitter cells until the
// partition is equitable. Returns a label-invariant hash of the process.
std::uint64_t refine(const Graph& g, Partition& p, std::uint64_t queued, std::uint64_t h) {
  const int n = p.n;
  std::array<int, kMaxVertices> count{};
  std::array<int, kMaxVertices + 1> bucket{};
  Permutation scratch{};
  while (queued != 0 && !p.discrete()) {
    const int splitter = std::countr_zero(queued);
    queued &= queued - 1;
    const std::uint64_t w = p.cell_bits(splitter);
    h = mix(h, static_cast<std::uint64_t>(splitter));
    for (int x = 0; x < n;) {
      const int end = p.cell_end[x];
      if (end - x == 1) {
        x = end;
        continue;
      }
      int lo = kMaxVertices;
      int hi = 0;
      for (int i = x; i < end; ++i) {
        count[i] = std::popcount(g.row(p.lab[i]) & w);
        lo = std::min(lo, count[i]);
        hi = std::max(hi, count[i]);
      }
      if (lo == hi) {
        x = end;
        continue;
      }
      // Counting sort of the cell by neighbour count.
      for (int c = lo; c <= hi + 1; ++c) bucket[c] = 0;
      for (int i = x; i < end; ++i) ++bucket[count[i] + 1];
      for (int c = lo + 1; c <= hi + 1; ++c) bucket[c] += bucket[c - 1];
      for (int i = x; i < end; ++i) scratch[x + bucket[count[i]]++] = p.lab[i];
      std::copy(scratch.begin() + x, scratch.begin() + end, p.lab.begin() + x);

      const bool was_queued = (queued >> x) & 1U;
      int largest_start = -1;
      int largest_size = 0;
      int fragments = 0;
      for (int f = x; f < end;) {
        const int c = std::popcount(g.row(p.lab[f]) & w);
        int g_end = f + 1;
        while (g_end < end && std::popcount(g.row(p.lab[g_end]) & w) == c) ++g_end;
        p.cell_end[f] = static_cast<std::uint8_t>(g_end);
        for (int i = f; i < g_end; ++i) p.cell_of[p.lab[i]] = static_cast<std::uint8_t>(f);
        h = mix(h, (static_cast<std::uint64_t>(f) << 16) ^ (static_cast<std::uint64_t>(c) << 8) ^ (g_end - f));
        if (g_end - f > largest_size) {
          largest_size = g_end - f;
          largest_start = f;
        }
        queued |= VertexSet::bit(f);
        ++fragments;
        f = g_end;
      }
      if (!was_queued) queued &= ~VertexSet::bit(largest_start);
      p.cells += fragments - 1;
      x = end;
    }
  }
  return mix(h, static_cast<std::uint64_t>(p.cells));
}

std::uint64_t individualize(const Graph& g, Partition& p, int v) {
  const int s = p.cell_of[v];
  const int end = p.cell_end[s];
  int at = s;
  while (p.lab[at] != v) ++at;
  std::swap(p.lab[at], p.lab[s]);
  p.cell_end[s] = static_cast<std::uint8_t>(s + 1);
  p.cell_end[s + 1] = static_cast<std::uint8_t>(end);
  for (int i = s + 1; i < end; ++i) p.cell_of[p.lab[i]] = static_cast<std::uint8_t>(s + 1);
  ++p.cells;
  return refine(g, p, VertexSet::bit(s), mix(0x51ed27, static_cast<std::uint64_t>(s)));
}

class UnionFind {
 public:
  explicit UnionFind(int n) { std::iota(parent_.begin(), parent_.begin() + n, 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smallest label stays the root
  }

 private:
  std::array<int, kMaxVertices> parent_{};
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(std::span<const int> colours) {
    Partition root;
    root.n = n_;
    std::vector<int> verts(n_);
    std::iota(verts.begin(), verts.end(), 0);
    if (!colours.empty()) {
      if (static_cast<int>(colours.size()) != n_) throw DomainError("colour list has the wrong length");
      std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return colours[a] < colours[b]; });
    }
    std::uint64_t queued = 0;
    std::uint64_t h = 0x2545f491;
    for (int i = 0; i < n_;) {
      int j = i + 1;
      while (j < n_ && !colours.empty() && colours[verts[j]] == colours[verts[i]]) ++j;
      if (colours.empty()) j = n_;
      for (int t = i; t < j; ++t) {
        root.lab[t] = static_cast<std::uint8_t>(verts[t]);
        root.cell_of[verts[t]] = static_cast<std::uint8_t>(i);
      }
      root.cell_end[i] = static_cast<std::uint8_t>(j);
      queued |= VertexSet::bit(i);
      h = mix(h, static_cast<std::uint64_t>(j - i));
      ++root.cells;
      i = j;
    }

    CanonicalLabeling out;
    out.n = n_;
    if (n_ == 0) return out;
    path_.push_back(refine(g_, root, queued, h));
    search(root, 1, true);

    out.order = best_lab_;
    out.canonical_rows = best_rows_;
    out.generators = std::move(generators_);
    UnionFind uf(n_);
    for (const Permutation& gen : out.generators) {
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    }
    for (int v = 0; v < n_; ++v) out.orbit[v] = static_cast<std::uint8_t>(uf.find(v));
    return out;
  }

 private:
  // Lexicographic comparison of the current path trace with `other`.
  int compare_path(const std::vector<std::uint64_t>& other) const {
    const std::size_t len = std::min(path_.size(), other.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (path_[i] != other[i]) return path_[i] < other[i] ? -1 : 1;
    }
    return 0;
  }

  Rows leaf_rows(const Partition& p) const {
    Permutation pos{};
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = static_cast<std::uint8_t>(i);
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int w : g_.neighbors(p.lab[i])) r |= VertexSet::bit(pos[w]);
      rows[i] = r;
    }
    return rows;
  }

  int compare_rows(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void add_automorphism(const Permutation& from, const Permutation& to) {
    Permutation gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(gamma);
  }

  void leaf(const Partition& p, bool eq_first) {
    Rows rows = leaf_rows(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_rows_ = best_rows_ = rows;
      first_trace_ = best_trace_ = path_;
      return;
    }
    if (eq_first && compare_rows(rows, first_rows_) == 0) {
      add_automorphism(first_lab_, p.lab);
      return;
    }
    int cmp = compare_path(best_trace_);
    if (cmp == 0) cmp = compare_rows(rows, best_rows_);
    if (cmp < 0) {
      best_lab_ = p.lab;
      best_rows_ = rows;
      best_trace_ = path_;
    } else if (cmp == 0) {
      add_automorphism(best_lab_, p.lab);
    }
  }

  void search(const Partition& p, std::size_t depth, bool eq_first) {
    if (p.discrete()) {
      leaf(p, eq_first);
      return;
    }
    int target = 0;
    while (p.cell_end[target] - target == 1) target = p.cell_end[target];
    std::uint64_t cell = p.cell_bits(target);

    std::uint64_t tried_orbits = 0;  // orbit roots of explored children
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    UnionFind orbits(n_);
    for (int w : VertexSet(cell)) {
      if (gens_seen != generators_.size()) {
        // Orbits of the subgroup fixing the current prefix pointwise.
        orbits = UnionFind(n_);
        for (const Permutation& gen : generators_) {
          bool fixes = true;
          for (int v : prefix_) fixes = fixes && gen[v] == v;
          if (!fixes) continue;
          for (int v = 0; v < n_; ++v) orbits.unite(v, gen[v]);
        }
        gens_seen = generators_.size();
        std::uint64_t remapped = 0;
        for (int t : VertexSet(tried_orbits)) remapped |= VertexSet::bit(orbits.find(t));
        tried_orbits = remapped;
      }
      const int root = orbits.find(w);
      if ((tried_orbits >> root) & 1U) continue;
      tried_orbits |= VertexSet::bit(root);

      Partition child = p;
      const std::uint64_t h = individualize(g_, child, w);
      path_.resize(depth);
      path_.push_back(h);
      const bool child_eq_first =
          !have_first_ || (eq_first && depth < first_trace_.size() && first_trace_[depth] == h);
      if (have_first_ && !child_eq_first && compare_path(best_trace_) > 0) continue;
      prefix_.push_back(w);
      search(child, depth + 1, child_eq_first);
      prefix_.pop_back();
    }
    path_.resize(depth);
  }

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  std::vector<std::uint64_t> path_;
  std::vector<std::uint64_t> first_trace_;
  std::vector<std::uint64_t> best_trace_;
  Permutation first_lab_{};
  Permutation best_lab_{};
  Rows first_rows_{};
  Rows best_rows_{};
  std::vector<Permutation> generators_;
  std::vector<int> prefix_;
};

}  // namespace

int CanonicalLabeling::position_of(int v) const {
  for (int i = 0; i < n; ++i) {
    if (order[i] == v) return i;
  }
  return -1;
}

Graph CanonicalLabeling::canonical_graph() const {
  return Graph::from_rows(n, std::span<const std::uint64_t>(canonical_rows.data(), n));
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  return Searcher(g).run(colours);
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalLabeling lab = canonical_labeling(g);
  CanonicalForm out;
  out.code = emit_graph6(lab.canonical_graph());
  out.relabeling.resize(g.order());
  for (int i = 0; i < g.order(); ++i) out.relabeling[lab.order[i]] = i;
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::vector<int> automorphism_orbits(const Graph& g) {
  CanonicalLabeling lab = canonical_labeling(g);
  return {lab.orbit.begin(), lab.orbit.begin() + g.order()};
}

}  // namespace matchext
