#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mrt {

inline constexpr int max_vertices = 64;

/// Subset of {0, ..., 63} packed into one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on at most 64 vertices with bit-set adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) g.adj_[u] = (VertexSet::range(n) - VertexSet::single(u)).bits();
    return g;
  }

  static Graph cycle(int n) {
    Graph g(n);
    if (n >= 3)
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Graph whose vertex v has neighbourhood bits rows[v]; rows must be symmetric.
  static Graph from_rows(int n, const std::uint64_t* rows) {
    Graph g(n);
    std::uint64_t mask = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) g.adj_[v] = rows[v] & mask & ~(std::uint64_t{1} << v);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
  }

  bool has_edge(int u, int v) const {
    return u != v && in_range(u) && in_range(v) && ((adj_[u] >> v) & 1U);
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return VertexSet(adj_[v]);
  }

  int degree(int v) const { return neighbors(v).size(); }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(adj_[v]));
    return twice / 2;
  }

  /// Edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      for (auto b = adj_[u] >> u >> 1; b; b &= b - 1) out.push_back({u, u + 1 + std::countr_zero(b)});
    return out;
  }

  Graph complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = (vertices() - VertexSet(adj_[v]) - VertexSet::single(v)).bits();
    return g;
  }

  /// Subgraph induced on `s`, relabelled to 0..|s|-1 in increasing vertex order.
  Graph induced(VertexSet s) const {
    auto vs = s.to_vector();
    Graph g(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (has_edge(vs[i], vs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  /// Image under the vertex map v -> perm[v].
  Graph relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm.at(u), perm.at(v));
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  bool in_range(int v) const { return v >= 0 && v < n_; }
  void check_vertex(int v) const {
    if (!in_range(v))
      throw vertex_out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::array<std::uint64_t, max_vertices> adj_{};
};

/// Number of edges of the balanced complete k-partite graph on n vertices.
inline std::uint64_t turan_edge_count(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw invalid_argument("turan_edge_count: k must be at least 1");
  auto choose2 = [](std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; };
  std::uint64_t q = n / k, r = n % k;
  return choose2(n) - r * choose2(q + 1) - (k - r) * choose2(q);
}

/// T(n, k) with vertex i in part i mod k.
inline Graph turan_graph(int n, int k) {
  if (k <= 0) throw invalid_argument("turan_graph: k must be at least 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % k != v % k) g.add_edge(u, v);
  return g;
}

namespace detail {

inline bool clique_search(const Graph& g, VertexSet candidates, int need, std::vector<int>& chosen) {
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  for (auto rest = candidates; !rest.empty();) {
    int v = rest.first();
    rest.erase(v);
    chosen.push_back(v);
    if (clique_search(g, rest & g.neighbors(v), need - 1, chosen)) return true;
    chosen.pop_back();
    if (rest.size() < need) return false;
  }
  return false;
}

}  // namespace detail

/// Lexicographically least s-clique, or nullopt when g is K_s-free.
inline std::optional<std::vector<int>> find_clique(const Graph& g, int s) {
  if (s < 0) throw invalid_argument("find_clique: negative clique size");
  std::vector<int> chosen;
  if (detail::clique_search(g, g.vertices(), s, chosen)) return chosen;
  return std::nullopt;
}

/// True when `within` contains a clique on `need` vertices.
inline bool has_clique_within(const Graph& g, VertexSet within, int need) {
  std::vector<int> scratch;
  return detail::clique_search(g, within, need, scratch);
}

namespace detail {

// Extends a partial embedding phi of h (vertices order[pos..] still unmapped) into g.
inline bool extend_embedding(const Graph& g, const Graph& h, const std::vector<int>& order, std::size_t pos,
                             std::vector<int>& phi, VertexSet used) {
  if (pos == order.size()) return true;
  int x = order[pos];
  VertexSet cand = g.vertices() - used;
  h.neighbors(x).for_each([&](int y) {
    if (phi[y] >= 0) cand &= g.neighbors(phi[y]);
  });
  int need_degree = h.degree(x);
  for (auto rest = cand; !rest.empty();) {
    int v = rest.first();
    rest.erase(v);
    if (g.degree(v) < need_degree) continue;
    phi[x] = v;
    used.insert(v);
    if (extend_embedding(g, h, order, pos + 1, phi, used)) return true;
    used.erase(v);
  }
  phi[x] = -1;
  return false;
}

}  // namespace detail

/// First subgraph (not necessarily induced) embedding of h into g in backtracking order.
/// Entry i of the result is the image of pattern vertex i.
inline std::optional<std::vector<int>> find_subgraph(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  std::vector<int> phi(static_cast<std::size_t>(h.order()), -1);
  std::vector<int> order(phi.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (detail::extend_embedding(g, h, order, 0, phi, VertexSet{})) return phi;
  return std::nullopt;
}

/// Whether g contains a copy of h in which some edge of h lands on {u, v}.
inline bool has_subgraph_through_edge(const Graph& g, const Graph& h, int u, int v) {
  if (h.order() > g.order() || !g.has_edge(u, v)) return false;
  std::vector<int> phi(static_cast<std::size_t>(h.order()), -1);
  for (auto [a, b] : h.edges()) {
    for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
      std::fill(phi.begin(), phi.end(), -1);
      phi[a] = x;
      phi[b] = y;
      std::vector<int> order;
      for (int i = 0; i < h.order(); ++i)
        if (i != a && i != b) order.push_back(i);
      if (detail::extend_embedding(g, h, order, 0, phi, VertexSet::of({x, y}))) return true;
    }
  }
  return false;
}

inline bool is_complete(const Graph& g) {
  return g.edge_count() == static_cast<std::size_t>(g.order()) * (g.order() - (g.order() > 0)) / 2;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  auto grow = [&](auto&& self, VertexSet cand, int size) -> void {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + cand.size() <= best) return;
      int v = cand.first();
      cand.erase(v);
      self(self, cand & g.neighbors(v), size + 1);
    }
  };
  grow(grow, g.vertices(), 0);
  return best;
}

inline constexpr int chromatic_number_budget = 16;

inline int chromatic_number(const Graph& g) {
  int n = g.order();
  if (n > chromatic_number_budget)
    throw budget_exceeded("chromatic_number: exact algorithm limited to " +
                          std::to_string(chromatic_number_budget) + " vertices");
  if (n == 0) return 0;
  // Vertices by descending degree so that conflicts surface early.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto colorable = [&](auto&& self, std::size_t pos, int used, int k) -> bool {
    if (pos == order.size()) return true;
    int v = order[pos];
    std::uint64_t forbidden = 0;
    g.neighbors(v).for_each([&](int w) {
      if (color[w] >= 0) forbidden |= std::uint64_t{1} << color[w];
    });
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      if ((forbidden >> c) & 1U) continue;
      color[v] = c;
      if (self(self, pos + 1, std::max(used, c + 1), k)) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int k = std::max(1, clique_number(g));; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (colorable(colorable, 0, 0, k)) return k;
  }
}

}  // namespace mrt
