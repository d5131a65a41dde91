#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace mrt {

inline constexpr int regular_pair_budget = 12;

namespace detail {

inline void check_pair_sets(const Graph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw invalid_argument("vertex sets must be non-empty");
  if (a.intersects(b)) throw invalid_argument("vertex sets must be disjoint");
  if (!(a | b).subset_of(g.vertices())) throw invalid_argument("vertex set outside graph");
}

inline std::int64_t cross_edges(const Graph& g, VertexSet a, VertexSet b) {
  std::int64_t e = 0;
  a.for_each([&](int v) { e += (g.neighbors(v) & b).size(); });
  return e;
}

}  // namespace detail

/// e(A, B) / (|A| |B|) for disjoint non-empty A, B.
inline Rational density(const Graph& g, VertexSet a, VertexSet b) {
  detail::check_pair_sets(g, a, b);
  return Rational(detail::cross_edges(g, a, b), static_cast<std::int64_t>(a.size()) * b.size());
}

/// Sub-pair (X, Y) with |X| > γ|A|, |Y| > γ|B| and |d(X,Y) - d(A,B)| >= γ, if any.
///
/// Every qualifying X is enumerated. For a fixed X, e(X, Y) over |Y| = t is
/// extremal at the t vertices of B with the most (or fewest) neighbours in X,
/// so checking those two choices of Y per size covers all Y exactly.
inline std::optional<std::pair<VertexSet, VertexSet>> irregular_witness(const Graph& g, VertexSet a, VertexSet b,
                                                                         const Rational& gamma) {
  detail::check_pair_sets(g, a, b);
  if (a.size() > regular_pair_budget || b.size() > regular_pair_budget)
    throw budget_exceeded("is_regular_pair: classes limited to " + std::to_string(regular_pair_budget) +
                          " vertices");
  if (gamma <= Rational(0)) throw invalid_argument("gamma must be positive");
  const Rational d_ab = density(g, a, b);
  const auto av = a.to_vector();
  const auto bv = b.to_vector();
  const auto big_enough = [&](std::int64_t part, std::int64_t whole) { return Rational(part) > gamma * whole; };

  std::vector<std::pair<int, int>> counts(bv.size());  // (neighbours in X, vertex)
  for (std::uint32_t mask = 1; mask < (1U << av.size()); ++mask) {
    int xs = std::popcount(mask);
    if (!big_enough(xs, a.size())) continue;
    VertexSet x;
    for (std::size_t i = 0; i < av.size(); ++i)
      if ((mask >> i) & 1U) x.insert(av[i]);
    for (std::size_t j = 0; j < bv.size(); ++j) counts[j] = {(g.neighbors(bv[j]) & x).size(), bv[j]};
    std::sort(counts.begin(), counts.end(), [](auto& l, auto& r) { return l.first > r.first || (l.first == r.first && l.second < r.second); });
    for (int t = 1; t <= static_cast<int>(bv.size()); ++t) {
      if (!big_enough(t, b.size())) continue;
      for (bool top : {true, false}) {
        VertexSet y;
        std::int64_t e = 0;
        for (int k = 0; k < t; ++k) {
          auto& [c, v] = top ? counts[static_cast<std::size_t>(k)] : counts[bv.size() - 1 - static_cast<std::size_t>(k)];
          e += c;
          y.insert(v);
        }
        Rational diff = Rational(e, static_cast<std::int64_t>(xs) * t) - d_ab;
        if (diff < Rational(0)) diff = -diff;
        if (diff >= gamma) return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

/// Exact γ-regularity of the pair (A, B).
inline bool is_regular_pair(const Graph& g, VertexSet a, VertexSet b, const Rational& gamma) {
  return !irregular_witness(g, a, b, gamma).has_value();
}

/// Vertex partition into disjoint non-empty classes.
struct Partition {
  std::vector<VertexSet> classes;

  /// Throws unless the classes are non-empty, disjoint and cover 0..n-1.
  void validate(int n) const {
    VertexSet seen;
    for (auto c : classes) {
      if (c.empty()) throw invalid_argument("partition has an empty class");
      if (c.intersects(seen)) throw invalid_argument("partition classes overlap");
      seen |= c;
    }
    if (seen != VertexSet::range(n)) throw invalid_argument("partition does not cover the vertex set");
  }
};

inline bool is_equitable(const Partition& p) {
  if (p.classes.empty()) return true;
  auto [lo, hi] = std::minmax_element(p.classes.begin(), p.classes.end(),
                                      [](VertexSet x, VertexSet y) { return x.size() < y.size(); });
  return hi->size() - lo->size() <= 1;
}

struct ClusterPair {
  int i = 0;
  int j = 0;
  Rational density;
  bool regular = false;
  bool edge = false;
  std::optional<int> color;  // majority color, set only on colored cluster edges
};

/// Graph on the partition classes; ij is an edge when (V_i, V_j) is γ-regular with density >= η.
struct ClusterGraph {
  int m = 0;
  std::vector<ClusterPair> pairs;  // every i < j, lexicographic

  const ClusterPair& pair(int i, int j) const {
    if (i > j) std::swap(i, j);
    // Index of (i, j) in the lexicographic listing of pairs of {0..m-1}.
    auto idx = static_cast<std::size_t>(i * m - i * (i + 1) / 2 + (j - i - 1));
    return pairs.at(idx);
  }

  Graph graph() const {
    Graph g(m);
    for (const auto& p : pairs)
      if (p.edge) g.add_edge(p.i, p.j);
    return g;
  }

  bool colored() const {
    return std::any_of(pairs.begin(), pairs.end(), [](auto& p) { return p.color.has_value(); });
  }

  /// Cluster edges with their majority colors (renormalized).
  EdgeColoring coloring() const {
    std::vector<std::tuple<int, int, int>> triples;
    for (const auto& p : pairs)
      if (p.edge) triples.emplace_back(p.i, p.j, p.color.value_or(0));
    return EdgeColoring::from_triples(m, triples);
  }

  /// Average number of colors per cluster vertex under the majority coloring.
  Rational rho_star() const {
    if (m == 0) return Rational(0);
    return Rational(total_color_incidence(coloring()), m);
  }
};

inline ClusterGraph cluster_graph(const Graph& g, const Partition& p, const Rational& gamma, const Rational& eta) {
  p.validate(g.order());
  ClusterGraph cg;
  cg.m = static_cast<int>(p.classes.size());
  for (int i = 0; i < cg.m; ++i)
    for (int j = i + 1; j < cg.m; ++j) {
      ClusterPair pair;
      pair.i = i;
      pair.j = j;
      pair.density = density(g, p.classes[i], p.classes[j]);
      pair.regular = is_regular_pair(g, p.classes[i], p.classes[j], gamma);
      pair.edge = pair.regular && pair.density >= eta;
      cg.pairs.push_back(pair);
    }
  return cg;
}

/// Cluster graph of the underlying graph, each cluster edge colored by the
/// most frequent color among its cross edges (smallest id on ties).
inline ClusterGraph majority_color_clusters(const ColoredGraph& colored, const Partition& p, const Rational& gamma,
                                            const Rational& eta) {
  auto cg = cluster_graph(colored.host(), p, gamma, eta);
  for (auto& pair : cg.pairs) {
    if (!pair.edge) continue;
    std::vector<int> freq(static_cast<std::size_t>(colored.color_count()), 0);
    p.classes[pair.i].for_each([&](int u) {
      (colored.host().neighbors(u) & p.classes[pair.j]).for_each([&](int v) { ++freq[colored.color(u, v)]; });
    });
    auto top = std::max_element(freq.begin(), freq.end());
    if (top != freq.end() && *top > 0) pair.color = static_cast<int>(top - freq.begin());
  }
  return cg;
}

}  // namespace mrt
