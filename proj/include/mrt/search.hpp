#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "canonical.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace mrt {

inline constexpr const char* engine_version = "mrt-search 1.0";

/// Size and effort limits for the exact searches.
struct SearchConfig {
  int max_coloring_vertices = 10;  // exists_good_coloring, ramsey_exact
  int max_rt_vertices = 8;         // rt_exact
  std::uint64_t max_nodes = 0;     // per search; 0 means unlimited
  int threads = 1;
  int split_depth = -1;  // edges colored before branches become tasks; -1 picks the star of vertex 0
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_mono = 0;        // branch closed a monochromatic pattern
  std::uint64_t pruned_constraint = 0;  // branch broke the coloring constraint
  std::uint64_t pruned_iso = 0;         // branch equivalent to one already explored
  std::uint64_t tasks = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    pruned_mono += o.pruned_mono;
    pruned_constraint += o.pruned_constraint;
    pruned_iso += o.pruned_iso;
    tasks += o.tasks;
    return *this;
  }
};

struct ColoringSearchResult {
  std::optional<EdgeColoring> coloring;
  SearchStats stats;
};

namespace detail {

inline constexpr int max_search_edges = 64;  // color sets per vertex live in one word

inline bool rows_have_clique(const std::uint64_t* rows, std::uint64_t cand, int need) {
  if (need <= 0) return true;
  if (std::popcount(cand) < need) return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (rows_have_clique(rows, cand & rows[v], need - 1)) return true;
    if (std::popcount(cand) < need) return false;
  }
  return false;
}

/// Depth-first edge colorer over a fixed host graph.
///
/// Edges are colored in lexicographic order; each edge tries every color
/// already in use and then at most one fresh color, which enumerates each
/// coloring exactly once up to renaming of colors.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, const Graph& h, const ColoringConstraint& k)
      : g_(g), h_(h), n_(g.order()), edges_(g.edges()), m_(static_cast<int>(edges_.size())) {
    if (h.edge_count() == 0) throw invalid_argument("pattern graph must have at least one edge");
    if (m_ > max_search_edges) throw budget_exceeded("coloring search limited to 64 edges");
    pattern_clique_ = is_complete(h) ? h.order() : 0;
    max_colors_ = m_;
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, ExactlyKColors>) max_colors_ = std::min(m_, c.k);
          else if constexpr (std::is_same_v<T, KLocal>) local_k_ = c.k;
          else {
            mean_num_ = c.rho.numerator();
            mean_den_ = c.rho.denominator();
          }
        },
        k.kind());
    for (int v = 0; v < n_; ++v)
      if (g.degree(v) > 0) ++touched_floor_;
  }

  struct State {
    std::vector<int> color;          // per edge, -1 while uncolored
    std::vector<std::uint64_t> rows;  // rows[c * n + v]: neighbours of v in color c
    std::vector<std::uint64_t> vcolors;
    int depth = 0;
    int q = 0;
    std::int64_t sum_lb = 0;  // Σ_v max(c(v), [deg v > 0]): a lower bound on the final Σ c(v)
  };

  State initial() const {
    State s;
    s.color.assign(static_cast<std::size_t>(m_), -1);
    s.rows.assign(static_cast<std::size_t>(std::max(1, m_)) * n_, 0);
    s.vcolors.assign(static_cast<std::size_t>(n_), 0);
    s.sum_lb = touched_floor_;
    return s;
  }

  int edge_count() const { return m_; }
  const Graph& host() const { return g_; }

  enum class Outcome { ok, mono, constraint };

  struct Undo {
    std::uint64_t vu, vv;
    std::int64_t sum;
    int q;
  };

  Outcome assign(State& s, int c, Undo& undo) const {
    auto [u, v] = edges_[static_cast<std::size_t>(s.depth)];
    undo = {s.vcolors[u], s.vcolors[v], s.sum_lb, s.q};
    const std::uint64_t bit = std::uint64_t{1} << c;
    s.sum_lb += ((s.vcolors[u] & bit) == 0 && s.vcolors[u] != 0) + ((s.vcolors[v] & bit) == 0 && s.vcolors[v] != 0);
    s.vcolors[u] |= bit;
    s.vcolors[v] |= bit;
    std::uint64_t* rows = &s.rows[static_cast<std::size_t>(c) * n_];
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
    s.color[static_cast<std::size_t>(s.depth)] = c;
    s.q = std::max(s.q, c + 1);
    ++s.depth;

    if (closes_pattern(rows, u, v)) return Outcome::mono;
    if (std::popcount(s.vcolors[u]) > local_k_ || std::popcount(s.vcolors[v]) > local_k_) return Outcome::constraint;
    if (mean_den_ > 0 && s.sum_lb * mean_den_ > mean_num_ * n_) return Outcome::constraint;
    return Outcome::ok;
  }

  void unassign(State& s, const Undo& undo) const {
    --s.depth;
    auto [u, v] = edges_[static_cast<std::size_t>(s.depth)];
    int c = s.color[static_cast<std::size_t>(s.depth)];
    std::uint64_t* rows = &s.rows[static_cast<std::size_t>(c) * n_];
    rows[u] &= ~(std::uint64_t{1} << v);
    rows[v] &= ~(std::uint64_t{1} << u);
    s.color[static_cast<std::size_t>(s.depth)] = -1;
    s.vcolors[u] = undo.vu;
    s.vcolors[v] = undo.vv;
    s.sum_lb = undo.sum;
    s.q = undo.q;
  }

  int branch_count(const State& s) const { return std::min(s.q + 1, max_colors_); }

  EdgeColoring to_coloring(const State& s) const { return EdgeColoring(g_, s.color); }

  /// State as a labeled pair matrix: 0 non-edge, 1 uncolored edge, 2 + color otherwise.
  LabeledPairs state_labels(const State& s) const {
    LabeledPairs m{n_, 2, std::vector<int>(static_cast<std::size_t>(n_) * n_, 0)};
    for (int i = 0; i < m_; ++i) {
      auto [u, v] = edges_[static_cast<std::size_t>(i)];
      int l = s.color[static_cast<std::size_t>(i)] < 0 ? 1 : 2 + s.color[static_cast<std::size_t>(i)];
      m.label[static_cast<std::size_t>(u) * n_ + v] = l;
      m.label[static_cast<std::size_t>(v) * n_ + u] = l;
    }
    return m;
  }

  /// Plain depth-first completion of `s`. Stops early when `abandon()` turns true.
  template <typename Abandon>
  bool complete(State& s, SearchStats& stats, std::uint64_t max_nodes, Abandon&& abandon) const {
    ++stats.nodes;
    if (max_nodes && stats.nodes > max_nodes) return false;
    if ((stats.nodes & 0xfff) == 0 && abandon()) return false;
    if (s.depth == m_) return true;
    for (int c = 0, end = branch_count(s); c < end; ++c) {
      Undo undo;
      auto outcome = assign(s, c, undo);
      if (outcome == Outcome::mono) ++stats.pruned_mono;
      else if (outcome == Outcome::constraint) ++stats.pruned_constraint;
      else if (complete(s, stats, max_nodes, abandon)) return true;
      unassign(s, undo);
      if (max_nodes && stats.nodes > max_nodes) return false;
    }
    return false;
  }

 private:
  bool closes_pattern(const std::uint64_t* rows, int u, int v) const {
    if (pattern_clique_ > 0) return rows_have_clique(rows, rows[u] & rows[v], pattern_clique_ - 2);
    return has_subgraph_through_edge(Graph::from_rows(n_, rows), h_, u, v);
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<Edge> edges_;
  int m_;
  int pattern_clique_ = 0;
  int max_colors_ = 0;
  int local_k_ = INT_MAX;
  std::int64_t mean_num_ = 0;
  std::int64_t mean_den_ = 0;
  std::int64_t touched_floor_ = 0;
};

}  // namespace detail

/// Searches for a coloring of g obeying k with no monochromatic copy of h.
///
/// The first `split_depth` edges are explored sequentially with isomorph
/// rejection (states equivalent under an automorphism of g and a renaming of
/// colors are explored once). The surviving states become independent tasks
/// that may run on several threads; the reported coloring and statistics are
/// those of the lowest-index successful task, which makes them independent of
/// the thread count.
inline ColoringSearchResult search_good_coloring(const Graph& g, const Graph& h, const ColoringConstraint& k,
                                                 const SearchConfig& cfg = {}) {
  if (g.order() > cfg.max_coloring_vertices)
    throw budget_exceeded("coloring search limited to " + std::to_string(cfg.max_coloring_vertices) +
                          " vertices, got " + std::to_string(g.order()));
  detail::ColoringSearch engine(g, h, k);
  using State = detail::ColoringSearch::State;
  ColoringSearchResult result;

  int split = cfg.split_depth;
  if (split < 0) split = g.order() > 0 ? g.degree(0) : 0;
  split = std::min(split, engine.edge_count());

  // Phase 1: shallow exploration with isomorph rejection.
  std::vector<State> frontier;
  std::set<std::string> seen;
  const bool dedupe = g.order() <= canonical_code_budget;
  auto expand = [&](auto&& self, State& s) -> void {
    ++result.stats.nodes;
    if (dedupe) {
      if (!seen.insert(canonical_form(engine.state_labels(s))).second) {
        ++result.stats.pruned_iso;
        return;
      }
    }
    if (s.depth == split) {
      frontier.push_back(s);
      return;
    }
    for (int c = 0, end = engine.branch_count(s); c < end; ++c) {
      detail::ColoringSearch::Undo undo;
      auto outcome = engine.assign(s, c, undo);
      if (outcome == detail::ColoringSearch::Outcome::mono) ++result.stats.pruned_mono;
      else if (outcome == detail::ColoringSearch::Outcome::constraint) ++result.stats.pruned_constraint;
      else self(self, s);
      engine.unassign(s, undo);
    }
  };
  State root = engine.initial();
  expand(expand, root);
  if (cfg.max_nodes && result.stats.nodes > cfg.max_nodes) throw budget_exceeded("search node budget exhausted");

  // Phase 2: independent completion tasks.
  const std::size_t task_count = frontier.size();
  std::vector<SearchStats> task_stats(task_count);
  std::vector<char> task_found(task_count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{task_count};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < task_count;) {
      if (first_hit.load() < i) continue;
      auto abandon = [&] { return first_hit.load() < i; };
      task_stats[i].tasks = 1;
      if (engine.complete(frontier[i], task_stats[i], cfg.max_nodes, abandon)) {
        task_found[i] = 1;
        for (auto cur = first_hit.load(); i < cur && !first_hit.compare_exchange_weak(cur, i);) {
        }
      }
    }
  };
  int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(task_count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t hit = first_hit.load();
  for (std::size_t i = 0; i < task_count && i <= hit; ++i) result.stats += task_stats[i];
  if (cfg.max_nodes && std::any_of(task_stats.begin(), task_stats.begin() + static_cast<std::ptrdiff_t>(std::min(hit + 1, task_count)),
                                   [&](auto& st) { return st.nodes > cfg.max_nodes; }))
    throw budget_exceeded("search node budget exhausted");
  if (cfg.max_nodes && result.stats.nodes > cfg.max_nodes) throw budget_exceeded("search node budget exhausted");
  if (hit < task_count) result.coloring = engine.to_coloring(frontier[hit]);
  return result;
}

inline std::optional<EdgeColoring> exists_good_coloring(const Graph& g, const Graph& h, const ColoringConstraint& k,
                                                        const SearchConfig& cfg = {}) {
  return search_good_coloring(g, h, k, cfg).coloring;
}

enum class CertificateKind { LowerBoundWitness, ExhaustiveUpperBound, RamseyValue, OracleValue };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::LowerBoundWitness: return "LowerBoundWitness";
    case CertificateKind::ExhaustiveUpperBound: return "ExhaustiveUpperBound";
    case CertificateKind::RamseyValue: return "RamseyValue";
    case CertificateKind::OracleValue: return "OracleValue";
  }
  return "?";
}

/// Record of how a value was obtained.
struct Attestation {
  int n = 0;
  std::string pattern;
  std::string constraint;
  std::string space;  // what was searched exhaustively
  SearchStats stats;
  std::uint64_t graphs_examined = 0;
  std::uint64_t graphs_refuted = 0;
  std::string engine = engine_version;
};

struct Certificate {
  CertificateKind kind = CertificateKind::LowerBoundWitness;
  std::int64_t value = 0;
  bool conclusive = true;  // false when a Ramsey search ran out of n_max before deciding
  std::optional<ColoredGraph> witness;
  Attestation attestation;
};

/// Short textual description of a pattern graph, e.g. "K3" or "C5" or an edge list.
inline std::string describe_pattern(const Graph& h) {
  if (is_complete(h)) return "K" + std::to_string(h.order());
  if (h.order() >= 3 && h.edge_count() == static_cast<std::size_t>(h.order()) && h.min_degree() == 2 &&
      find_subgraph(h, Graph::cycle(h.order())))
    return "C" + std::to_string(h.order());
  std::string s = "n" + std::to_string(h.order()) + ":";
  bool first = true;
  for (auto [u, v] : h.edges()) {
    s += (first ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s;
}

/// Non-isomorphic graphs on n vertices with exactly `missing` non-edges,
/// ordered by canonical code.
class GraphLevels {
 public:
  explicit GraphLevels(int n) : n_(n) { levels_.push_back({{canonical_code(Graph(n)), Graph(n)}}); }

  /// Complements of the returned graphs are the graphs with `missing` non-edges.
  const std::map<std::string, Graph>& complements(int missing) {
    while (static_cast<int>(levels_.size()) <= missing) {
      std::map<std::string, Graph> next;
      for (const auto& [code, base] : levels_.back())
        for (int u = 0; u < n_; ++u)
          for (int v = u + 1; v < n_; ++v) {
            if (base.has_edge(u, v)) continue;
            Graph g = base;
            g.add_edge(u, v);
            next.try_emplace(canonical_code(g), g);
          }
      levels_.push_back(std::move(next));
    }
    return levels_[static_cast<std::size_t>(missing)];
  }

 private:
  int n_;
  std::vector<std::map<std::string, Graph>> levels_;
};

/// Exact RT(n, h, k): the largest edge count of an n-vertex graph admitting a
/// k-coloring with no monochromatic h.
///
/// Graphs are scanned up to isomorphism from K_n downward. At the first edge
/// count where some graph admits a good coloring, every graph of that count is
/// solved and the witness with the smallest canonical code is kept.
inline Certificate rt_exact(int n, const Graph& h, const ColoringConstraint& k, const SearchConfig& cfg = {}) {
  if (n < 0) throw invalid_argument("rt_exact: negative n");
  if (n > cfg.max_rt_vertices)
    throw budget_exceeded("rt_exact limited to " + std::to_string(cfg.max_rt_vertices) + " vertices, got " +
                          std::to_string(n));
  Certificate cert;
  cert.kind = CertificateKind::LowerBoundWitness;
  auto& att = cert.attestation;
  att.n = n;
  att.pattern = describe_pattern(h);
  att.constraint = k.to_string();

  GraphLevels levels(n);
  const int total = n * (n - 1) / 2;
  for (int missing = 0; missing <= total; ++missing) {
    std::optional<std::pair<std::string, EdgeColoring>> best;
    std::uint64_t refuted_here = 0;
    for (const auto& [code, comp] : levels.complements(missing)) {
      Graph host = comp.complement();
      auto run = search_good_coloring(host, h, k, cfg);
      att.stats += run.stats;
      ++att.graphs_examined;
      if (!run.coloring) {
        ++refuted_here;
        continue;
      }
      auto witness_code = canonical_code(*run.coloring);
      if (!best || witness_code < best->first) best.emplace(std::move(witness_code), std::move(*run.coloring));
    }
    if (best) {
      cert.value = total - missing;
      cert.witness = std::move(best->second);
      att.space = "all graphs on " + std::to_string(n) + " vertices with more than " + std::to_string(cert.value) +
                  " edges (" + std::to_string(att.graphs_refuted) +
                  " up to isomorphism), every coloring under " + att.constraint;
      return cert;
    }
    att.graphs_refuted += refuted_here;
  }
  throw invalid_argument("rt_exact: no admissible graph found (the empty graph always qualifies)");
}

/// Least n <= n_max for which every k-coloring of K_n has a monochromatic h.
inline Certificate ramsey_exact(const Graph& h, const ColoringConstraint& k, int n_max, const SearchConfig& cfg = {}) {
  if (n_max > cfg.max_coloring_vertices)
    throw budget_exceeded("ramsey_exact limited to n_max <= " + std::to_string(cfg.max_coloring_vertices));
  Certificate cert;
  cert.kind = CertificateKind::RamseyValue;
  auto& att = cert.attestation;
  att.pattern = describe_pattern(h);
  att.constraint = k.to_string();
  for (int n = 1; n <= n_max; ++n) {
    auto run = search_good_coloring(Graph::complete(n), h, k, cfg);
    att.stats += run.stats;
    ++att.graphs_examined;
    if (!run.coloring) {
      cert.value = n;
      att.n = n;
      att.graphs_refuted = 1;
      att.space = "every coloring of K" + std::to_string(n) + " under " + att.constraint;
      return cert;
    }
    cert.witness = std::move(run.coloring);
  }
  cert.conclusive = false;
  cert.value = 0;
  att.n = n_max;
  att.space = "undecided: K" + std::to_string(n_max) + " still admits a good coloring";
  return cert;
}

/// Minimum Σ c(v) over colorings of K_m without a monochromatic triangle.
inline Certificate min_color_sum(int m) {
  if (m < 3 || m > 5) throw invalid_argument("min_color_sum: m must be 3, 4 or 5");
  Graph km = Graph::complete(m);
  Graph k3 = Graph::complete(3);
  detail::ColoringSearch engine(km, k3, ColoringConstraint::local(m));
  Certificate cert;
  cert.kind = CertificateKind::OracleValue;
  cert.attestation.n = m;
  cert.attestation.pattern = "K3";
  cert.attestation.constraint = "none";
  cert.attestation.space = "every color-normalized coloring of K" + std::to_string(m);

  auto state = engine.initial();
  std::int64_t best = -1;
  auto walk = [&](auto&& self) -> void {
    ++cert.attestation.stats.nodes;
    if (state.depth == engine.edge_count()) {
      std::int64_t sum = 0;
      for (auto mask : state.vcolors) sum += std::popcount(mask);
      if (best < 0 || sum < best) {
        best = sum;
        cert.witness = engine.to_coloring(state);
      }
      return;
    }
    for (int c = 0, end = engine.branch_count(state); c < end; ++c) {
      detail::ColoringSearch::Undo undo;
      if (engine.assign(state, c, undo) == detail::ColoringSearch::Outcome::mono) ++cert.attestation.stats.pruned_mono;
      else self(self);
      engine.unassign(state, undo);
    }
  };
  walk(walk);
  cert.value = best;
  return cert;
}

/// Re-checks a certificate without trusting the search that produced it.
inline bool verify_certificate(const Certificate& c, const Graph& h, const ColoringConstraint& k) {
  const auto& att = c.attestation;
  if (att.engine.empty()) return false;
  switch (c.kind) {
    case CertificateKind::LowerBoundWitness: {
      if (!c.witness) return false;
      const auto& w = *c.witness;
      return w.order() == att.n && static_cast<std::int64_t>(w.edge_count()) == c.value && satisfies(w, k) &&
             !find_monochromatic(w, h);
    }
    case CertificateKind::ExhaustiveUpperBound:
      return att.stats.nodes > 0 && !att.space.empty();
    case CertificateKind::RamseyValue: {
      if (!c.conclusive) return c.value == 0 && att.stats.nodes > 0;
      if (c.value < 1 || att.n != c.value || att.stats.nodes == 0 || att.space.empty()) return false;
      if (c.value == 1) return !c.witness;
      if (!c.witness) return false;
      const auto& w = *c.witness;
      return w.order() == c.value - 1 && is_complete(w.host()) && satisfies(w, k) && !find_monochromatic(w, h);
    }
    case CertificateKind::OracleValue: {
      if (!c.witness) return false;
      const auto& w = *c.witness;
      return is_complete(w.host()) && w.order() == att.n && total_color_incidence(w) == c.value &&
             !find_monochromatic(w, Graph::complete(3));
    }
  }
  return false;
}

}  // namespace mrt
