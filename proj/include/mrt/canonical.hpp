#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace mrt {

inline constexpr int canonical_code_budget = 16;

/// Symmetric matrix of pair labels on n vertices.
///
/// Label 0 means "no edge". Labels in [1, fixed_labels) are pinned and never
/// permuted; labels >= fixed_labels are interchangeable colors, so two
/// matrices are equivalent when a vertex permutation together with a
/// bijection on the interchangeable labels maps one onto the other.
struct LabeledPairs {
  int n = 0;
  int fixed_labels = 1;
  std::vector<int> label;  // n * n, row major

  int at(int u, int v) const { return label[static_cast<std::size_t>(u) * n + v]; }
};

namespace detail {

using Cells = std::vector<std::vector<int>>;

// Color-relabeling-invariant description of how v attaches to `cell`.
inline void signature(const LabeledPairs& m, int v, const std::vector<int>& cell, std::vector<int>& out) {
  std::vector<int> fixed(static_cast<std::size_t>(m.fixed_labels), 0);
  std::vector<std::pair<int, int>> free;  // (label, count)
  for (int w : cell) {
    if (w == v) continue;
    int l = m.at(v, w);
    if (l == 0) continue;
    if (l < m.fixed_labels) {
      ++fixed[static_cast<std::size_t>(l)];
    } else {
      auto it = std::find_if(free.begin(), free.end(), [&](auto& p) { return p.first == l; });
      if (it == free.end()) free.emplace_back(l, 1);
      else ++it->second;
    }
  }
  std::vector<int> sizes;
  for (auto& p : free) sizes.push_back(p.second);
  std::sort(sizes.rbegin(), sizes.rend());
  out.insert(out.end(), fixed.begin() + 1, fixed.end());
  out.push_back(static_cast<int>(sizes.size()));
  out.insert(out.end(), sizes.begin(), sizes.end());
}

// Splits cells by signature until the ordered partition is equitable.
inline void refine(const LabeledPairs& m, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (int v : cell) {
        std::vector<int> sig;
        for (const auto& other : cells) {
          signature(m, v, other, sig);
          sig.push_back(-1);
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::stable_sort(keyed.begin(), keyed.end(), [](auto& a, auto& b) { return a.first < b.first; });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<int> part;
          for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
    }
    changed = next.size() != cells.size();
    cells = std::move(next);
  }
}

// Transposing u and w (all else fixed) preserves every label.
inline bool are_twins(const LabeledPairs& m, int u, int w) {
  for (int x = 0; x < m.n; ++x)
    if (x != u && x != w && m.at(u, x) != m.at(w, x)) return false;
  return true;
}

inline std::string leaf_code(const LabeledPairs& m, const Cells& cells) {
  std::vector<int> order;
  for (const auto& c : cells) order.push_back(c.front());
  std::string code;
  code.reserve(static_cast<std::size_t>(m.n) * m.n + 1);
  code.push_back(static_cast<char>(m.n));
  std::vector<int> rename;  // interchangeable labels in first-use order
  for (int i = 0; i < m.n; ++i) {
    for (int j = i + 1; j < m.n; ++j) {
      int l = m.at(order[i], order[j]);
      if (l >= m.fixed_labels) {
        auto it = std::find(rename.begin(), rename.end(), l);
        int idx = static_cast<int>(it - rename.begin());
        if (it == rename.end()) rename.push_back(l);
        l = m.fixed_labels + idx;
      }
      code.push_back(static_cast<char>(l & 0xff));
      code.push_back(static_cast<char>((l >> 8) & 0xff));
    }
  }
  return code;
}

inline void search_leaves(const LabeledPairs& m, Cells cells, std::string& best, bool& have_best) {
  refine(m, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    auto code = leaf_code(m, cells);
    if (!have_best || code < best) {
      best = std::move(code);
      have_best = true;
    }
    return;
  }
  std::size_t at = static_cast<std::size_t>(target - cells.begin());
  std::vector<int> tried;
  for (int v : cells[at]) {
    if (std::any_of(tried.begin(), tried.end(), [&](int t) { return are_twins(m, t, v); })) continue;
    tried.push_back(v);
    Cells next;
    next.reserve(cells.size() + 1);
    next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    next.push_back({v});
    std::vector<int> rest;
    for (int w : cells[at])
      if (w != v) rest.push_back(w);
    next.push_back(std::move(rest));
    next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
    search_leaves(m, std::move(next), best, have_best);
  }
}

}  // namespace detail

/// Canonical byte string of a labeled pair matrix: equal exactly for equivalent inputs.
inline std::string canonical_form(const LabeledPairs& m) {
  if (m.n == 0) return std::string(1, '\0');
  detail::Cells cells(1);
  for (int v = 0; v < m.n; ++v) cells[0].push_back(v);
  std::string best;
  bool have_best = false;
  detail::search_leaves(m, std::move(cells), best, have_best);
  return best;
}

/// Canonical code of a colored graph, invariant under vertex and color relabeling.
inline std::string canonical_code(const EdgeColoring& c) {
  if (c.order() > canonical_code_budget)
    throw budget_exceeded("canonical_code: limited to " + std::to_string(canonical_code_budget) + " vertices");
  LabeledPairs m{c.order(), 1, std::vector<int>(static_cast<std::size_t>(c.order()) * c.order(), 0)};
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    auto [u, v] = c.edges()[i];
    m.label[static_cast<std::size_t>(u) * m.n + v] = c.colors()[i] + 1;
    m.label[static_cast<std::size_t>(v) * m.n + u] = c.colors()[i] + 1;
  }
  return canonical_form(m);
}

/// Canonical code of an uncolored graph, invariant under vertex relabeling.
inline std::string canonical_code(const Graph& g) {
  if (g.order() > canonical_code_budget)
    throw budget_exceeded("canonical_code: limited to " + std::to_string(canonical_code_budget) + " vertices");
  LabeledPairs m{g.order(), 2, std::vector<int>(static_cast<std::size_t>(g.order()) * g.order(), 0)};
  for (auto [u, v] : g.edges()) {
    m.label[static_cast<std::size_t>(u) * m.n + v] = 1;
    m.label[static_cast<std::size_t>(v) * m.n + u] = 1;
  }
  return canonical_form(m);
}

}  // namespace mrt
