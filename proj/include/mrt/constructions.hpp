#pragma once

#include <numeric>
#include <tuple>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace mrt {

/// K_5 with color 0 on the cycle 0-1-2-3-4-0 and color 1 on the complementary pentagram.
/// Both classes are 5-cycles, so there is no monochromatic triangle.
inline ColoredGraph k5_no_mono_triangle() {
  std::vector<std::tuple<int, int, int>> triples;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      bool on_cycle = (v - u == 1) || (u == 0 && v == 4);
      triples.emplace_back(u, v, on_cycle ? 0 : 1);
    }
  return ColoredGraph::from_triples(5, triples);
}

/// Replaces vertex v by an independent set of sizes[v] clones. Clones are
/// numbered contiguously (all clones of vertex 0 first), and two clones are
/// joined exactly when their originals are, in the original edge's color.
inline ColoredGraph blow_up(const ColoredGraph& base, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.order())
    throw invalid_argument("blow_up: expected " + std::to_string(base.order()) + " sizes, got " +
                           std::to_string(sizes.size()));
  std::vector<int> first(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 0) throw invalid_argument("blow_up: negative class size");
    first[v + 1] = first[v] + sizes[v];
    if (first[v + 1] > max_vertices)
      throw invalid_argument("blow_up: total size exceeds " + std::to_string(max_vertices) + " vertices");
  }
  std::vector<std::tuple<int, int, int>> triples;
  for (std::size_t i = 0; i < base.edges().size(); ++i) {
    auto [u, v] = base.edges()[i];
    for (int x = first[u]; x < first[u + 1]; ++x)
      for (int y = first[v]; y < first[v + 1]; ++y) triples.emplace_back(x, y, base.colors()[i]);
  }
  return ColoredGraph::from_triples(first.back(), triples);
}

/// Clone sets of a blow-up with the given sizes, as vertex-id ranges.
inline std::vector<VertexSet> blow_up_classes(const std::vector<int>& sizes) {
  std::vector<VertexSet> classes;
  int next = 0;
  for (int s : sizes) {
    VertexSet c;
    for (int i = 0; i < s; ++i) c.insert(next++);
    classes.push_back(c);
  }
  return classes;
}

/// T(n, 5) colored without a monochromatic triangle: a blow-up of the K_5
/// coloring, relabeled so that vertex i lies in part i mod 5 (the host graph
/// is then exactly turan_graph(n, 5)).
inline ColoredGraph turan5_witness(int n) {
  if (n < 5 || n > max_vertices)
    throw invalid_argument("turan5_witness: n must lie in [5, 64], got " + std::to_string(n));
  std::vector<int> sizes(5);
  for (int p = 0; p < 5; ++p) sizes[p] = n / 5 + (p < n % 5 ? 1 : 0);
  auto blown = blow_up(k5_no_mono_triangle(), sizes);
  // Clone j of part p sits at offset(p) + j in the blow-up; send it to 5j + p.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0, offset = 0; p < 5; offset += sizes[p], ++p)
    for (int j = 0; j < sizes[p]; ++j) perm[offset + j] = 5 * j + p;
  return blown.relabeled(perm);
}

struct SparsifyResult {
  ColoredGraph graph;
  std::vector<int> cleared;  // vertices whose incident edges were deleted, in order
  std::size_t edges_removed = 0;
};

/// Greedily clears all edges at a non-isolated vertex of largest color
/// degree (lowest id on ties) until the coloring is rho-mean.
inline SparsifyResult sparsify_to_mean(const ColoredGraph& cg, const Rational& rho) {
  if (rho < Rational(1)) throw invalid_argument("sparsify_to_mean: rho must be at least 1");
  SparsifyResult result{cg, {}, 0};
  while (!mean_holds(total_color_incidence(result.graph), result.graph.order(), rho)) {
    int pick = -1, best = 0;
    for (int v = 0; v < result.graph.order(); ++v) {
      int c = color_degree(result.graph, v);
      if (c > best) best = c, pick = v;
    }
    std::vector<std::tuple<int, int, int>> keep;
    const auto& g = result.graph;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      auto [u, v] = g.edges()[i];
      if (u != pick && v != pick) keep.emplace_back(u, v, g.colors()[i]);
    }
    result.edges_removed += g.edges().size() - keep.size();
    result.cleared.push_back(pick);
    result.graph = ColoredGraph::from_triples(g.order(), keep);
  }
  return result;
}

}  // namespace mrt
