#include "matchext/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "matchext/canonical.hpp"
#include "matchext/checkers.hpp"
#include "matchext/formats.hpp"
#include "matchext/structure.hpp"

namespace matchext {

namespace {

void sequences_from(int nu, int left_sum, int cap, int min_degree, std::vector<int>& prefix,
                    std::vector<DegreeSequence>& out) {
  const int slots = nu - static_cast<int>(prefix.size());
  if (slots == 0) {
    if (left_sum == 0) {
      DegreeSequence seq(prefix);
      if (seq.is_graphical()) out.push_back(std::move(seq));
    }
    return;
  }
  for (int d = std::min(cap, left_sum - (slots - 1) * min_degree); d >= min_degree; --d) {
    if (d * slots < left_sum) break;
    prefix.push_back(d);
    sequences_from(nu, left_sum - d, d, min_degree, prefix, out);
    prefix.pop_back();
  }
}

// Runs fn(i) for i in [0, count) on up to `workers` threads; rethrows the
// first exception.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const int threads = static_cast<int>(std::min<std::size_t>(std::max(workers, 1), count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
          return;
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::pair<int, int> deletion_key(const Graph& g, int v) {
  int nbr_degrees = 0;
  int triangles = 0;
  for (int w : g.neighbors(v)) {
    nbr_degrees += g.degree(w);
    triangles += std::popcount(g.row(v) & g.row(w));
  }
  return {nbr_degrees, triangles / 2};
}

}  // namespace

std::vector<DegreeSequence> feasible_degree_sequences(int nu, int edges, int min_degree, int max_degree) {
  std::vector<DegreeSequence> out;
  if (nu <= 0 || edges < 0) return out;
  if (max_degree < 0) max_degree = nu - 1;
  max_degree = std::min(max_degree, nu - 1);
  min_degree = std::max(min_degree, 0);
  if (min_degree > max_degree) return out;
  std::vector<int> prefix;
  sequences_from(nu, 2 * edges, max_degree, min_degree, prefix, out);
  return out;
}

GraphEnumerator::GraphEnumerator(const DegreeSequence& target) : nu_(target.length()) {
  if (nu_ == 0 || nu_ > kMaxVertices || !target.is_graphical() || target.max() > nu_ - 1) {
    empty_ = true;
    return;
  }
  edges_ = target.sum() / 2;
  min_target_ = target.min();
  max_target_ = target.max();
  target_ascending_.assign(target.degrees().rbegin(), target.degrees().rend());
}

int GraphEnumerator::split_order() const { return nu_ <= 6 ? nu_ : std::max(5, nu_ / 2); }

bool GraphEnumerator::viable(const Graph& g) const {
  const int n = g.order();
  const int r = nu_ - n;
  const int low = g.min_degree();
  if (g.max_degree() > max_target_ || low < min_target_ - r) return false;

  int most = g.size();
  for (int i = 1; i <= r; ++i) most += std::min({low + i, max_target_, n + i - 1});
  if (most < edges_) return false;
  int least = g.size();
  for (int j = 0; j < r; ++j) least += std::max(0, min_target_ - j);
  if (least > edges_) return false;

  // Each current degree d needs its own target entry in [d, d + r].
  std::array<int, kMaxVertices> degrees{};
  for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.begin() + n);
  std::size_t at = 0;
  for (int v = 0; v < n; ++v) {
    while (at < target_ascending_.size() && target_ascending_[at] < degrees[v]) ++at;
    if (at == target_ascending_.size() || target_ascending_[at] > degrees[v] + r) return false;
    ++at;
  }
  return true;
}

// The canonical deletion vertex is, among minimum-degree vertices with the
// largest deletion_key, the one with the largest canonical position.
bool GraphEnumerator::canonical_child(const Graph& child, std::string* code) const {
  const int fresh = child.order() - 1;
  const int low = child.min_degree();
  VertexSet candidates;
  for (int v = 0; v <= fresh; ++v) {
    if (child.degree(v) == low) candidates = candidates.with(v);
  }
  VertexSet tied = candidates;
  if (candidates.size() > 1) {
    std::pair<int, int> best{-1, -1};
    for (int v : candidates) best = std::max(best, deletion_key(child, v));
    if (deletion_key(child, fresh) < best) return false;
    tied = VertexSet();
    for (int v : candidates) {
      if (deletion_key(child, v) == best) tied = tied.with(v);
    }
  }
  if (tied.size() == 1 && code == nullptr) return true;
  const CanonicalLabeling lab = canonical_labeling(child);
  if (tied.size() > 1) {
    int chosen = -1;
    int chosen_pos = -1;
    for (int v : tied) {
      const int pos = lab.position_of(v);
      if (pos > chosen_pos) {
        chosen_pos = pos;
        chosen = v;
      }
    }
    if (!lab.same_orbit(chosen, fresh)) return false;
  }
  if (code != nullptr) *code = emit_graph6(lab.canonical_graph());
  return true;
}

void GraphEnumerator::walk(const Graph& g, int stop_order, const std::function<void(const Graph&)>& emit) const {
  const int n = g.order();
  if (n >= stop_order || n >= nu_) {
    emit(g);
    return;
  }
  const int r_child = nu_ - n - 1;
  const bool dedupe = canonical_labeling(g).has_nontrivial_automorphisms();
  std::unordered_set<std::string> seen;

  VertexSet allowed;
  VertexSet forced;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d < max_target_) allowed = allowed.with(v);
    if (d + r_child < min_target_) forced = forced.with(v);
  }
  if (!forced.is_subset_of(allowed)) return;

  int lo = std::max({forced.size(), min_target_ - r_child, 0});
  int hi = std::min({max_target_, n, g.min_degree() + 1});
  if (r_child == 0) lo = std::max(lo, min_target_), hi = std::min(hi, min_target_);

  for (int size = lo; size <= hi; ++size) {
    // The new vertex has minimum degree: degree size-1 vertices must join it.
    VertexSet required = forced;
    bool possible = true;
    for (int v = 0; v < n && possible; ++v) {
      const int d = g.degree(v);
      if (d < size - 1) possible = false;
      if (d == size - 1) required = required.with(v);
    }
    if (!possible || !required.is_subset_of(allowed) || required.size() > size) continue;
    const std::vector<int> free = (allowed - required).to_vector();
    const int need = size - required.size();
    const int width = static_cast<int>(free.size());
    if (need > width) continue;

    std::uint64_t combo = need == 0 ? 0 : (std::uint64_t{1} << need) - 1;
    const std::uint64_t limit = std::uint64_t{1} << width;
    while (combo < limit) {
      VertexSet s = required;
      for (std::uint64_t bits = combo; bits != 0; bits &= bits - 1) s = s.with(free[std::countr_zero(bits)]);
      const Graph child = g.with_vertex(s);
      if (viable(child)) {
        std::string code;
        if (canonical_child(child, dedupe ? &code : nullptr) && (!dedupe || seen.insert(code).second)) {
          walk(child, stop_order, emit);
        }
      }
      if (combo == 0) break;
      // Next subset of the same size (Gosper).
      const std::uint64_t low_bit = combo & (~combo + 1);
      const std::uint64_t ripple = combo + low_bit;
      combo = (((ripple ^ combo) >> 2) / low_bit) | ripple;
    }
  }
}

std::vector<Graph> GraphEnumerator::frontier(int depth_order) const {
  std::vector<Graph> out;
  if (empty_) return out;
  const Graph root(1);
  if (!viable(root)) return out;
  walk(root, depth_order, [&](const Graph& g) { out.push_back(g); });
  return out;
}

long long GraphEnumerator::expand(const Graph& node, const std::function<void(const Graph&)>& visit) const {
  long long count = 0;
  if (empty_) return 0;
  walk(node, nu_, [&](const Graph& g) {
    ++count;
    visit(g);
  });
  return count;
}

long long enumerate_graphs(const DegreeSequence& seq, const std::function<void(const Graph&)>& visit, int workers) {
  const GraphEnumerator gen(seq);
  const std::vector<Graph> nodes = gen.frontier(gen.split_order());
  std::vector<std::vector<Graph>> found(nodes.size());
  parallel_for(nodes.size(), workers, [&](std::size_t i) {
    gen.expand(nodes[i], [&](const Graph& g) { found[i].push_back(g); });
  });
  long long count = 0;
  for (const auto& batch : found) {
    for (const Graph& g : batch) {
      ++count;
      visit(g);
    }
  }
  return count;
}

std::vector<Graph> enumerate_graphs(const DegreeSequence& seq, int workers) {
  std::vector<Graph> out;
  enumerate_graphs(seq, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

std::string predicate_name(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::KExtendableNonBipartite:
      return "k-extendable-non-bipartite";
    case PredicateKind::KExtendableBipartite:
      return "k-extendable-bipartite";
    case PredicateKind::NFactorCritical:
      return "n-factor-critical";
  }
  return "unknown";
}

std::optional<PredicateKind> predicate_from_name(const std::string& name) {
  for (PredicateKind kind : {PredicateKind::KExtendableNonBipartite, PredicateKind::KExtendableBipartite,
                             PredicateKind::NFactorCritical}) {
    if (predicate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

int implied_min_degree(const SearchSpec& spec) {
  const int p = spec.parameter;
  switch (spec.predicate) {
    case PredicateKind::KExtendableNonBipartite:
      return 4 * p >= spec.nu ? std::max(p + 1, 2 * p) : p + 1;
    case PredicateKind::KExtendableBipartite:
      return p + 1;
    case PredicateKind::NFactorCritical:
      return p + 1;
  }
  return 0;
}

bool satisfies_predicate(const Graph& g, PredicateKind kind, int parameter) {
  switch (kind) {
    case PredicateKind::KExtendableNonBipartite:
      return is_connected(g) && !is_bipartite(g) && is_k_extendable(g, parameter).extendable;
    case PredicateKind::KExtendableBipartite:
      return is_connected(g) && is_bipartite(g) && is_k_extendable(g, parameter).extendable;
    case PredicateKind::NFactorCritical:
      return is_n_factor_critical(g, parameter).critical;
  }
  return false;
}

namespace {

// Per-graph values shared between filters.
struct Facts {
  const Graph& g;
  std::optional<int> kappa;
  int connectivity() {
    if (!kappa) kappa = vertex_connectivity(g);
    return *kappa;
  }
};

struct Filter {
  std::string name;
  std::string reason;
  std::function<bool(Facts&)> keeps;
};

std::vector<Filter> filter_chain(PredicateKind kind, int p, int nu) {
  std::vector<Filter> chain;
  auto connected = Filter{"connected", "extendable graphs are connected by definition",
                          [](Facts& f) { return is_connected(f.g); }};
  auto neighbourhoods = Filter{"independent-neighbourhood",
                               "a vertex of degree k+1 in a k-extendable graph has an independent neighbourhood",
                               [p](Facts& f) {
                                 for (int v = 0; v < f.g.order(); ++v) {
                                   if (f.g.degree(v) == p + 1 && !is_independent(f.g, f.g.neighbors(v))) return false;
                                 }
                                 return true;
                               }};
  auto connectivity = Filter{"connectivity", "k-extendable graphs are (k+1)-connected",
                             [p](Facts& f) { return f.connectivity() >= p + 1; }};
  switch (kind) {
    case PredicateKind::KExtendableNonBipartite:
      chain.push_back(connected);
      chain.push_back({"non-bipartite", "the searched class is non-bipartite", [](Facts& f) {
                         return !is_bipartite(f.g);
                       }});
      chain.push_back(neighbourhoods);
      chain.push_back(connectivity);
      chain.push_back({"independence-bound", "k-extendable non-bipartite graphs have alpha <= nu/2 - k",
                       [p](Facts& f) { return 2 * independence_number(f.g) <= f.g.order() - 2 * p; }});
      if (4 * p >= nu) {
        chain.push_back({"large-k-connectivity", "k-extendable non-bipartite graphs with k >= nu/4 have kappa >= 2k",
                         [p](Facts& f) { return f.connectivity() >= 2 * p; }});
      }
      chain.push_back({"extendability", "every matching of size k extends to a perfect matching", [p](Facts& f) {
                         return is_k_extendable(f.g, p).extendable;
                       }});
      break;
    case PredicateKind::KExtendableBipartite:
      chain.push_back(connected);
      chain.push_back({"balanced-bipartite", "the searched class is bipartite with parts of equal size",
                       [](Facts& f) {
                         auto parts = bipartition(f.g);
                         return parts && parts->left.size() == parts->right.size();
                       }});
      chain.push_back(neighbourhoods);
      chain.push_back(connectivity);
      chain.push_back({"extendability", "every matching of size k extends to a perfect matching", [p](Facts& f) {
                         return is_k_extendable(f.g, p).extendable;
                       }});
      break;
    case PredicateKind::NFactorCritical:
      if (p >= 1) {
        chain.push_back({"connectivity", "n-factor-critical graphs are n-connected",
                         [p](Facts& f) { return f.connectivity() >= p; }});
        chain.push_back({"edge-connectivity", "n-factor-critical graphs are (n+1)-edge-connected",
                         [p](Facts& f) { return edge_connectivity(f.g) >= p + 1; }});
      }
      chain.push_back({"factor-criticality", "deleting any n vertices leaves a graph with a perfect matching",
                       [p](Facts& f) { return is_n_factor_critical(f.g, p).critical; }});
      break;
  }
  return chain;
}

struct PartitionTally {
  long long classes = 0;
  std::vector<std::string> witnesses;
  std::vector<long long> rejected;

  void absorb(const PartitionTally& o) {
    classes += o.classes;
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    if (rejected.size() < o.rejected.size()) rejected.resize(o.rejected.size(), 0);
    for (std::size_t i = 0; i < o.rejected.size(); ++i) rejected[i] += o.rejected[i];
  }
};

nlohmann::ordered_json tally_json(int edges, const DegreeSequence& seq, const PartitionTally& t) {
  return {{"edges", edges},
          {"sequence", seq.to_string()},
          {"classes", t.classes},
          {"witnesses", t.witnesses},
          {"rejected", t.rejected}};
}

PartitionTally tally_from_json(const nlohmann::ordered_json& j) {
  PartitionTally t;
  t.classes = j.at("classes").get<long long>();
  t.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  t.rejected = j.at("rejected").get<std::vector<long long>>();
  return t;
}

std::string partition_key(int edges, const DegreeSequence& seq) {
  return std::to_string(edges) + "|" + seq.to_string();
}

nlohmann::ordered_json spec_json(const SearchSpec& spec, int min_degree) {
  nlohmann::ordered_json j{{"nu", spec.nu},
                           {"edge_budget", spec.edge_budget},
                           {"predicate", predicate_name(spec.predicate)},
                           {"parameter", spec.parameter},
                           {"min_degree", min_degree},
                           {"fast", spec.fast},
                           {"stop_at_first_witness", spec.stop_at_first_witness}};
  if (spec.degree_sequences) {
    std::vector<std::string> seqs;
    for (const auto& s : *spec.degree_sequences) seqs.push_back(s.to_string());
    j["degree_sequences"] = seqs;
  } else {
    j["degree_sequences"] = nullptr;
  }
  return j;
}

class Checkpoint {
 public:
  Checkpoint(std::string path, nlohmann::ordered_json spec) : path_(std::move(path)), spec_(std::move(spec)) {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::exception& err) {
      throw DomainError("unreadable checkpoint " + path_ + ": " + err.what());
    }
    if (j.value("format", "") != "matchext-search-checkpoint" || spec_ != j.at("spec")) {
      throw DomainError("checkpoint " + path_ + " belongs to a different search");
    }
    resumed_ = true;
    for (const auto& entry : j.at("completed")) {
      completed_.emplace(std::to_string(entry.at("edges").get<int>()) + "|" + entry.at("sequence").get<std::string>(),
                         tally_from_json(entry));
      completed_order_.push_back(entry);
    }
    if (!j.at("current").is_null()) current_ = j.at("current");
  }

  bool enabled() const { return !path_.empty(); }
  bool resumed() const { return resumed_; }

  const PartitionTally* completed(const std::string& key) const {
    auto it = completed_.find(key);
    return it == completed_.end() ? nullptr : &it->second;
  }

  // Progress and remaining frontier of a partially finished partition.
  std::optional<std::pair<PartitionTally, std::vector<std::string>>> current(int edges, const DegreeSequence& seq) {
    if (current_.is_null() || current_.at("edges").get<int>() != edges ||
        current_.at("sequence").get<std::string>() != seq.to_string()) {
      return std::nullopt;
    }
    return std::make_pair(tally_from_json(current_), current_.at("remaining").get<std::vector<std::string>>());
  }

  void finish_partition(int edges, const DegreeSequence& seq, const PartitionTally& t) {
    auto j = tally_json(edges, seq, t);
    completed_.emplace(partition_key(edges, seq), t);
    completed_order_.push_back(j);
    current_ = nullptr;
    write();
  }

  void progress(int edges, const DegreeSequence& seq, const PartitionTally& t, std::vector<std::string> remaining) {
    auto j = tally_json(edges, seq, t);
    j["remaining"] = std::move(remaining);
    current_ = j;
    const auto now = std::chrono::steady_clock::now();
    if (now - last_write_ < std::chrono::seconds(1)) return;
    write();
  }

  void write() {
    if (path_.empty()) return;
    nlohmann::ordered_json j{{"format", "matchext-search-checkpoint"},
                             {"version", 1},
                             {"spec", spec_},
                             {"completed", completed_order_},
                             {"current", current_}};
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump(1) << "\n";
      if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path_);
    last_write_ = std::chrono::steady_clock::now();
  }

 private:
  std::string path_;
  nlohmann::ordered_json spec_;
  bool resumed_ = false;
  std::map<std::string, PartitionTally> completed_;
  std::vector<nlohmann::ordered_json> completed_order_;
  nlohmann::ordered_json current_ = nullptr;
  std::chrono::steady_clock::time_point last_write_{};
};

void validate_spec(const SearchSpec& spec, int min_degree, int implied) {
  if (spec.nu < 2 || spec.nu > kMaxVertices) throw DomainError("search order must lie in [2, 64]");
  if (spec.nu > 12 && !spec.degree_sequences) {
    throw DomainError("full searches are limited to 12 vertices; pass explicit degree sequences beyond that");
  }
  const int p = spec.parameter;
  if (spec.predicate == PredicateKind::NFactorCritical) {
    if (p < 0 || p > spec.nu - 2 || (spec.nu - p) % 2 != 0) {
      throw DomainError("n-factor-criticality needs 0 <= n <= nu-2 and nu = n (mod 2)");
    }
  } else if (spec.nu % 2 != 0 || p < 0 || 2 * p > spec.nu - 2) {
    throw DomainError("k-extendability needs even nu and 0 <= k <= (nu-2)/2");
  }
  if (min_degree < 0) throw DomainError("minimum degree must be non-negative");
  if (min_degree > implied) {
    throw DomainError("minimum degree " + std::to_string(min_degree) + " exceeds the bound " +
                      std::to_string(implied) + " implied by the predicate");
  }
  if (2 * spec.edge_budget < spec.nu * min_degree) {
    throw DomainError("edge budget is below nu * min_degree / 2");
  }
  if (spec.workers < 1) throw DomainError("workers must be positive");
}

}  // namespace

SearchReport min_size_search(const SearchSpec& spec) {
  const auto started = std::chrono::steady_clock::now();
  const int implied = implied_min_degree(spec);
  const int min_degree = spec.min_degree.value_or(implied);
  validate_spec(spec, min_degree, implied);

  SearchReport report;
  report.spec = spec;
  report.min_degree = min_degree;
  const std::vector<Filter> chain = filter_chain(spec.predicate, spec.parameter, spec.nu);
  for (const Filter& f : chain) report.filters.push_back({f.name, f.reason, 0});

  Checkpoint checkpoint(spec.checkpoint_path, spec_json(spec, min_degree));
  report.resumed = checkpoint.resumed();

  const auto run_node = [&](const GraphEnumerator& gen, const Graph& node) {
    PartitionTally t;
    t.rejected.assign(chain.size(), 0);
    gen.expand(node, [&](const Graph& g) {
      ++t.classes;
      Facts facts{g, std::nullopt};
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!chain[i].keeps(facts)) {
          ++t.rejected[i];
          return;
        }
      }
      t.witnesses.push_back(canonical_form(g).code);
    });
    return t;
  };

  const auto run_partition = [&](int edges, const DegreeSequence& seq) {
    if (const PartitionTally* done = checkpoint.completed(partition_key(edges, seq))) return *done;
    const GraphEnumerator gen(seq);
    PartitionTally total;
    total.rejected.assign(chain.size(), 0);
    std::vector<Graph> nodes;
    if (auto partial = checkpoint.current(edges, seq)) {
      total.absorb(partial->first);
      for (const std::string& code : partial->second) nodes.push_back(parse_graph6(code));
    } else {
      nodes = gen.frontier(gen.split_order());
    }
    std::vector<PartitionTally> parts(nodes.size());
    std::vector<char> finished(nodes.size(), 0);
    std::mutex progress_mutex;
    parallel_for(nodes.size(), spec.workers, [&](std::size_t i) {
      PartitionTally t = run_node(gen, nodes[i]);
      std::lock_guard lock(progress_mutex);
      parts[i] = std::move(t);
      finished[i] = 1;
      if (!checkpoint.enabled()) return;
      PartitionTally so_far = total;
      std::vector<std::string> remaining;
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (finished[j]) {
          so_far.absorb(parts[j]);
        } else {
          remaining.push_back(emit_graph6(nodes[j]));
        }
      }
      checkpoint.progress(edges, seq, so_far, std::move(remaining));
    });
    for (const PartitionTally& t : parts) total.absorb(t);
    std::sort(total.witnesses.begin(), total.witnesses.end());
    checkpoint.finish_partition(edges, seq, total);
    return total;
  };

  const int first_edges = (spec.nu * min_degree + 1) / 2;
  for (int edges = first_edges; edges <= spec.edge_budget; ++edges) {
    std::vector<DegreeSequence> seqs;
    if (spec.degree_sequences) {
      for (const DegreeSequence& s : *spec.degree_sequences) {
        if (s.length() == spec.nu && s.sum() == 2 * edges && s.min() >= min_degree) seqs.push_back(s);
      }
    } else {
      seqs = feasible_degree_sequences(spec.nu, edges, min_degree);
    }
    if (spec.fast) {
      const int at_least = spec.nu * (min_degree + 1) - 2 * edges;
      std::erase_if(seqs, [&](const DegreeSequence& s) { return s.count(min_degree) < at_least; });
    }
    LevelStat level{edges, {}};
    std::vector<std::string> found;
    for (const DegreeSequence& seq : seqs) {
      PartitionTally t = run_partition(edges, seq);
      report.graphs_examined += t.classes;
      for (std::size_t i = 0; i < chain.size() && i < t.rejected.size(); ++i) report.filters[i].rejected += t.rejected[i];
      level.sequences.push_back({seq, t.classes, t.witnesses});
      found.insert(found.end(), t.witnesses.begin(), t.witnesses.end());
      if (spec.stop_at_first_witness && !found.empty()) break;
    }
    report.levels.push_back(std::move(level));
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      if (std::adjacent_find(found.begin(), found.end()) != found.end()) {
        throw std::logic_error("isomorphic witnesses reported twice");
      }
      report.epsilon = edges;
      report.witnesses = std::move(found);
      break;
    }
  }
  checkpoint.write();

  report.witnesses_verified = true;
  for (const std::string& code : report.witnesses) {
    const Graph g = parse_graph6(code);
    const bool ok = g.order() == spec.nu && g.size() == *report.epsilon && g.min_degree() >= min_degree &&
                    canonical_form(g).code == code && satisfies_predicate(g, spec.predicate, spec.parameter);
    report.witnesses_verified = report.witnesses_verified && ok;
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

nlohmann::ordered_json SearchReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["nu"] = spec.nu;
  j["predicate"] = predicate_name(spec.predicate);
  j["parameter"] = spec.parameter;
  j["edge_budget"] = spec.edge_budget;
  j["min_degree"] = min_degree;
  j["fast"] = spec.fast;
  if (epsilon) {
    j["result"] = "found";
    j["epsilon"] = *epsilon;
  } else {
    j["result"] = "none <= budget";
    j["epsilon"] = nullptr;
  }
  j["witnesses"] = witnesses;
  j["witnesses_verified"] = witnesses_verified;
  j["graphs_examined"] = graphs_examined;
  long long pruned = 0;
  auto filters_json = nlohmann::ordered_json::array();
  for (const FilterStat& f : filters) {
    filters_json.push_back({{"name", f.name}, {"reason", f.reason}, {"rejected", f.rejected}});
    pruned += f.rejected;
  }
  j["pruned"] = pruned;
  j["filters"] = filters_json;
  auto levels_json = nlohmann::ordered_json::array();
  for (const LevelStat& level : levels) {
    long long classes = 0;
    auto seqs = nlohmann::ordered_json::array();
    for (const SequenceStat& s : level.sequences) {
      classes += s.classes;
      seqs.push_back({{"sequence", s.sequence.to_string()}, {"classes", s.classes}, {"witnesses", s.witnesses.size()}});
    }
    levels_json.push_back({{"edges", level.edges}, {"classes", classes}, {"sequences", seqs}});
  }
  j["levels"] = levels_json;
  if (with_timing) {
    j["workers"] = spec.workers;
    j["resumed"] = resumed;
    j["wall_time_seconds"] = wall_time_seconds;
  }
  return j;
}

ProbeReport conjecture_probe(int k, int nu_limit, int workers) {
  if (k < 1) throw DomainError("conjecture probe needs k >= 1");
  if (nu_limit > 12) throw DomainError("conjecture probe is limited to 12 vertices");
  ProbeReport report;
  report.k = k;
  report.nu_limit = nu_limit;
  report.conjectured_bound = 8 * k - 4;
  for (int nu = 2 * k + 2; nu <= nu_limit; nu += 2) {
    ProbeRow row;
    row.nu = nu;
    row.edges = nu * (k + 1) / 2;
    SearchSpec spec;
    spec.nu = nu;
    spec.edge_budget = row.edges;
    spec.parameter = k;
    spec.workers = workers;
    const int implied = implied_min_degree(spec);
    if (implied > k + 1) {
      row.reason = "excluded: 4k >= nu forces connectivity 2k > k+1";
    } else {
      spec.degree_sequences = std::vector<DegreeSequence>{DegreeSequence(std::vector<int>(nu, k + 1))};
      SearchReport found = min_size_search(spec);
      row.searched = true;
      row.witnesses = found.witnesses;
      row.reason = found.epsilon ? "witness found" : "exhaustive: none";
    }
    if (!row.witnesses.empty() && nu < report.conjectured_bound) report.consistent = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::ordered_json ProbeReport::to_json() const {
  nlohmann::ordered_json j{{"k", k}, {"nu_limit", nu_limit}, {"conjectured_bound", conjectured_bound}};
  auto rows_json = nlohmann::ordered_json::array();
  for (const ProbeRow& r : rows) {
    rows_json.push_back({{"nu", r.nu},
                         {"edges", r.edges},
                         {"searched", r.searched},
                         {"exists", !r.witnesses.empty()},
                         {"reason", r.reason},
                         {"witnesses", r.witnesses}});
  }
  j["rows"] = rows_json;
  j["consistent"] = consistent;
  return j;
}

}  // namespace matchext
