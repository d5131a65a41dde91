#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace mrt {

/// Partition of the vertex set into blocks that each induce a clique.
struct CliqueFactor {
  std::vector<std::vector<int>> blocks;
};

/// Blocks are disjoint, cover every vertex of g, and are cliques of g.
inline bool is_clique_factor(const Graph& g, const CliqueFactor& f) {
  VertexSet covered;
  for (const auto& block : f.blocks) {
    if (block.empty()) return false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      int v = block[i];
      if (v < 0 || v >= g.order() || covered.contains(v)) return false;
      covered.insert(v);
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.has_edge(v, block[j])) return false;
    }
  }
  return covered == g.vertices();
}

namespace detail {

// Covers `left` with cliques; the lowest uncovered vertex always opens the next block.
inline bool factor_search(const Graph& g, VertexSet left, std::map<int, int>& remaining,
                          std::vector<std::vector<int>>& blocks) {
  if (left.empty()) return true;
  int anchor = left.first();
  VertexSet pool = (left & g.neighbors(anchor));
  for (auto& [size, count] : remaining) {
    if (count == 0) continue;
    --count;
    std::vector<int> block{anchor};
    auto pick = [&](auto&& self, VertexSet cand, int need) -> bool {
      if (need == 0) {
        blocks.push_back(block);
        VertexSet rest = left;
        for (int v : block) rest.erase(v);
        if (factor_search(g, rest, remaining, blocks)) return true;
        blocks.pop_back();
        return false;
      }
      while (cand.size() >= need) {
        int v = cand.first();
        cand.erase(v);
        block.push_back(v);
        if (self(self, cand & g.neighbors(v), need - 1)) return true;
        block.pop_back();
      }
      return false;
    };
    if (pick(pick, pool, size - 1)) return true;
    ++count;
  }
  return false;
}

}  // namespace detail

/// Partition of V(g) into cliques whose sizes form exactly the multiset `sizes`.
inline std::optional<CliqueFactor> clique_factor(const Graph& g, const std::vector<int>& sizes) {
  int total = 0;
  std::map<int, int> remaining;
  for (int s : sizes) {
    if (s < 1) throw invalid_argument("clique_factor: block sizes must be positive");
    total += s;
    ++remaining[s];
  }
  if (total != g.order())
    throw invalid_argument("clique_factor: sizes sum to " + std::to_string(total) + " but graph has " +
                           std::to_string(g.order()) + " vertices");
  CliqueFactor f;
  if (detail::factor_search(g, g.vertices(), remaining, f.blocks)) return f;
  return std::nullopt;
}

/// Block-size multisets tried for an n-vertex neighborhood, in order:
/// all triangles; triangles plus one K_4; triangles plus two K_4; triangles plus one K_5.
inline std::vector<std::vector<int>> theorem3_size_plans(int n) {
  std::vector<std::vector<int>> plans;
  auto with = [&](std::vector<int> big) {
    int rest = n;
    for (int b : big) rest -= b;
    if (rest < 0 || rest % 3 != 0) return;
    std::vector<int> plan(static_cast<std::size_t>(rest / 3), 3);
    plan.insert(plan.end(), big.begin(), big.end());
    plans.push_back(std::move(plan));
  };
  switch (n % 3) {
    case 0: with({}); break;
    case 1: with({4}); break;
    default:
      with({4, 4});
      with({5});
      break;
  }
  return plans;
}

/// First clique factor among the size plans for g's order.
inline std::optional<CliqueFactor> theorem3_factor(const Graph& g) {
  if (g.order() < 3) throw invalid_argument("theorem3_factor: needs at least 3 vertices");
  for (const auto& plan : theorem3_size_plans(g.order()))
    if (auto f = clique_factor(g, plan)) return f;
  return std::nullopt;
}

}  // namespace mrt
