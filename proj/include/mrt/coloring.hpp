#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace mrt {

/// Total map from the edges of a host graph to color ids 0..q-1.
///
/// Colors are kept normalized: walking the host's edges in lexicographic
/// order, color ids appear for the first time in increasing order.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// `colors[i]` is the color of `host.edges()[i]`; any non-negative ids are accepted.
  EdgeColoring(Graph host, std::vector<int> colors) : host_(std::move(host)), edges_(host_.edges()) {
    if (colors.size() != edges_.size())
      throw invalid_argument("coloring has " + std::to_string(colors.size()) + " colors for " +
                             std::to_string(edges_.size()) + " edges");
    colors_ = normalize(colors);
    index_colors();
  }

  static EdgeColoring monochromatic(Graph host) {
    auto m = host.edge_count();
    return EdgeColoring(std::move(host), std::vector<int>(m, 0));
  }

  /// Builds host and coloring from (u, v, color) triples; duplicate edges are rejected.
  static EdgeColoring from_triples(int n, const std::vector<std::tuple<int, int, int>>& triples) {
    Graph g(n);
    for (auto [u, v, c] : triples) {
      if (g.has_edge(u, v))
        throw invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      if (c < 0) throw invalid_argument("negative color id");
      g.add_edge(u, v);
    }
    std::vector<int> lookup(static_cast<std::size_t>(n) * n, -1);
    for (auto [u, v, c] : triples) {
      lookup[static_cast<std::size_t>(u) * n + v] = c;
      lookup[static_cast<std::size_t>(v) * n + u] = c;
    }
    std::vector<int> colors;
    for (auto [u, v] : g.edges()) colors.push_back(lookup[static_cast<std::size_t>(u) * n + v]);
    return EdgeColoring(std::move(g), std::move(colors));
  }

  const Graph& host() const { return host_; }
  int order() const { return host_.order(); }
  int color_count() const { return q_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& colors() const { return colors_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Color of edge uv, or -1 when uv is not an edge.
  int color(int u, int v) const {
    if (!host_.has_edge(u, v)) return -1;
    return matrix_[static_cast<std::size_t>(u) * order() + v];
  }

  /// Spanning subgraph formed by the edges of color c.
  Graph color_class(int c) const {
    Graph g(order());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (colors_[i] == c) g.add_edge(edges_[i].u, edges_[i].v);
    return g;
  }

  EdgeColoring relabeled(const std::vector<int>& perm) const {
    std::vector<std::tuple<int, int, int>> triples;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      triples.emplace_back(perm.at(edges_[i].u), perm.at(edges_[i].v), colors_[i]);
    return from_triples(order(), triples);
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.host_ == b.host_ && a.colors_ == b.colors_;
  }

 private:
  static std::vector<int> normalize(const std::vector<int>& raw) {
    std::vector<int> out(raw.size());
    std::vector<std::pair<int, int>> seen;  // (raw id, normalized id)
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == raw[i]; });
      if (it == seen.end()) {
        seen.emplace_back(raw[i], static_cast<int>(seen.size()));
        out[i] = static_cast<int>(seen.size()) - 1;
      } else {
        out[i] = it->second;
      }
    }
    return out;
  }

  void index_colors() {
    int n = order();
    matrix_.assign(static_cast<std::size_t>(n) * n, -1);
    q_ = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      matrix_[static_cast<std::size_t>(edges_[i].u) * n + edges_[i].v] = colors_[i];
      matrix_[static_cast<std::size_t>(edges_[i].v) * n + edges_[i].u] = colors_[i];
      q_ = std::max(q_, colors_[i] + 1);
    }
  }

  Graph host_;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  std::vector<int> matrix_;
  int q_ = 0;
};

/// A graph together with a coloring of its edges; the coloring carries its host.
using ColoredGraph = EdgeColoring;

/// Number of distinct colors on the edges at v.
inline int color_degree(const EdgeColoring& c, int v) {
  if (v < 0 || v >= c.order())
    throw vertex_out_of_range("vertex " + std::to_string(v) + " outside coloring host");
  std::vector<int> seen;
  c.host().neighbors(v).for_each([&](int w) {
    int col = c.color(v, w);
    if (std::find(seen.begin(), seen.end(), col) == seen.end()) seen.push_back(col);
  });
  return static_cast<int>(seen.size());
}

inline std::int64_t total_color_incidence(const EdgeColoring& c) {
  std::int64_t sum = 0;
  for (int v = 0; v < c.order(); ++v) sum += color_degree(c, v);
  return sum;
}

inline int max_color_degree(const EdgeColoring& c) {
  int best = 0;
  for (int v = 0; v < c.order(); ++v) best = std::max(best, color_degree(c, v));
  return best;
}

struct ExactlyKColors {
  int k = 1;
  friend bool operator==(const ExactlyKColors&, const ExactlyKColors&) = default;
};
struct KLocal {
  int k = 1;
  friend bool operator==(const KLocal&, const KLocal&) = default;
};
struct RhoMean {
  Rational rho{1};
  friend bool operator==(const RhoMean&, const RhoMean&) = default;
};

/// Which colorings are admissible: at most k colors, k-local, or rho-mean.
class ColoringConstraint {
 public:
  using Kind = std::variant<ExactlyKColors, KLocal, RhoMean>;

  static ColoringConstraint colors(int k) { return ColoringConstraint(ExactlyKColors{check_k(k)}); }
  static ColoringConstraint local(int k) { return ColoringConstraint(KLocal{check_k(k)}); }
  static ColoringConstraint mean(Rational rho) {
    if (rho < Rational(1)) throw invalid_argument("mean constraint needs rho >= 1, got " + mrt::to_string(rho));
    return ColoringConstraint(RhoMean{rho});
  }

  const Kind& kind() const { return kind_; }

  /// Textual form used on the command line: colors:K, local:K, mean:P or mean:P/Q.
  std::string to_string() const {
    return std::visit(
        [](const auto& c) -> std::string {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, ExactlyKColors>) return "colors:" + std::to_string(c.k);
          else if constexpr (std::is_same_v<T, KLocal>) return "local:" + std::to_string(c.k);
          else return "mean:" + mrt::to_string(c.rho);
        },
        kind_);
  }

  static ColoringConstraint parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw invalid_argument("constraint must look like kind:value");
    auto kind = text.substr(0, colon);
    auto value = text.substr(colon + 1);
    if (kind == "colors") return colors(static_cast<int>(detail::parse_int(value)));
    if (kind == "local") return local(static_cast<int>(detail::parse_int(value)));
    if (kind == "mean") return mean(parse_rational(value));
    throw invalid_argument("unknown constraint kind '" + std::string(kind) + "'");
  }

  friend bool operator==(const ColoringConstraint&, const ColoringConstraint&) = default;

 private:
  explicit ColoringConstraint(Kind k) : kind_(k) {}
  static int check_k(int k) {
    if (k < 1) throw invalid_argument("constraint needs k >= 1, got " + std::to_string(k));
    return k;
  }

  Kind kind_;
};

/// Exact test of Σ c(v) <= rho * n; isolated vertices count in n.
inline bool mean_holds(std::int64_t color_incidence, int n, const Rational& rho) {
  return color_incidence * rho.denominator() <= rho.numerator() * n;
}

inline bool satisfies(const EdgeColoring& c, const ColoringConstraint& k) {
  return std::visit(
      [&](const auto& con) -> bool {
        using T = std::decay_t<decltype(con)>;
        if constexpr (std::is_same_v<T, ExactlyKColors>) return c.color_count() <= con.k;
        else if constexpr (std::is_same_v<T, KLocal>) return max_color_degree(c) <= con.k;
        else return mean_holds(total_color_incidence(c), c.order(), con.rho);
      },
      k.kind());
}

struct MonochromaticCopy {
  int color = 0;
  std::vector<int> embedding;
};

/// Lowest color whose class contains a copy of h, with the first embedding found.
inline std::optional<MonochromaticCopy> find_monochromatic(const EdgeColoring& c, const Graph& h) {
  for (int col = 0; col < c.color_count(); ++col) {
    if (auto emb = find_subgraph(c.color_class(col), h)) return MonochromaticCopy{col, std::move(*emb)};
  }
  return std::nullopt;
}

}  // namespace mrt
