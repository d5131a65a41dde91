#include <gtest/gtest.h>

#include <mrt/constructions.hpp>
#include <mrt/search.hpp>

#include "oracles.hpp"

using namespace mrt;

namespace {

const Graph K3 = Graph::complete(3);
const auto two = ColoringConstraint::colors(2);
const auto loc2 = ColoringConstraint::local(2);
const auto mean2 = ColoringConstraint::mean(2);

// Every graph on n vertices, by edge mask over lexicographic pairs.
template <typename F>
void for_each_graph(int n, F&& f) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(pairs[i].u, pairs[i].v);
    f(g);
  }
}

}  // namespace

TEST(GoodColoring, Examples) {
  auto k5 = exists_good_coloring(Graph::complete(5), K3, two);
  ASSERT_TRUE(k5);
  EXPECT_TRUE(satisfies(*k5, two));
  EXPECT_FALSE(find_monochromatic(*k5, K3));
  EXPECT_FALSE(exists_good_coloring(Graph::complete(6), K3, two));
  EXPECT_FALSE(exists_good_coloring(Graph::complete(6), K3, mean2));
  EXPECT_TRUE(exists_good_coloring(turan_graph(8, 5), K3, mean2));
  // A single color cannot avoid a triangle in a triangle.
  EXPECT_FALSE(exists_good_coloring(K3, K3, ColoringConstraint::colors(1)));
  EXPECT_TRUE(exists_good_coloring(Graph(4), K3, ColoringConstraint::mean(1)));
}

TEST(GoodColoring, Errors) {
  EXPECT_THROW(exists_good_coloring(Graph::complete(11), K3, two), mrt::budget_exceeded);
  EXPECT_THROW(exists_good_coloring(Graph::complete(4), Graph(3), two), mrt::invalid_argument);
  SearchConfig tiny;
  tiny.max_nodes = 10;
  EXPECT_THROW(search_good_coloring(Graph::complete(6), K3, mean2, tiny), mrt::budget_exceeded);
}

TEST(GoodColoring, AgreesWithBruteForceOnAllSmallGraphs) {
  const std::vector<ColoringConstraint> constraints{two, loc2, mean2, ColoringConstraint::mean(Rational(3, 2)),
                                                    ColoringConstraint::local(1), ColoringConstraint::colors(3)};
  const std::vector<Graph> patterns{K3, Graph::path(3)};
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      if (g.edge_count() > 8) return;  // keep the unpruned oracle quick
      for (const auto& h : patterns)
        for (const auto& k : constraints) {
          auto found = exists_good_coloring(g, h, k);
          ASSERT_EQ(found.has_value(), oracle::good_coloring_exists(g, h, k)) << k.to_string();
          if (found) {
            ASSERT_EQ(found->host(), g);
            ASSERT_TRUE(satisfies(*found, k));
            ASSERT_FALSE(oracle::has_mono(*found, h));
          }
        }
    });
}

TEST(GoodColoring, NonCliquePatterns) {
  // Two colors of K_4 avoiding a monochromatic P_3 means each class is a matching: impossible, degree 3.
  EXPECT_FALSE(exists_good_coloring(Graph::complete(4), Graph::path(3), two));
  EXPECT_TRUE(exists_good_coloring(Graph::complete(4), Graph::path(3), ColoringConstraint::colors(3)));
  EXPECT_TRUE(exists_good_coloring(Graph::complete(5), Graph::cycle(4), two));
}

TEST(GoodColoring, SameAnswerAcrossThreadCounts) {
  for (int n = 5; n <= 7; ++n)
    for (const auto& k : {two, loc2, mean2}) {
      SearchConfig one, four;
      four.threads = 4;
      auto a = search_good_coloring(turan_graph(static_cast<std::uint64_t>(n), 5), K3, k, one);
      auto b = search_good_coloring(turan_graph(static_cast<std::uint64_t>(n), 5), K3, k, four);
      ASSERT_EQ(a.coloring, b.coloring);
      ASSERT_EQ(a.stats.nodes, b.stats.nodes);
      ASSERT_EQ(a.stats.tasks, b.stats.tasks);
    }
}

TEST(GoodColoring, SplitDepthDoesNotChangeTheAnswer) {
  for (int split : {0, 1, 3, 6, 100}) {
    SearchConfig cfg;
    cfg.split_depth = split;
    EXPECT_FALSE(search_good_coloring(Graph::complete(6), K3, mean2, cfg).coloring) << split;
    EXPECT_TRUE(search_good_coloring(Graph::complete(5), K3, mean2, cfg).coloring) << split;
  }
}

TEST(RtExact, SmallValuesMatchBruteForce) {
  EXPECT_EQ(rt_exact(4, K3, ColoringConstraint::mean(1)).value, oracle::rt_bruteforce(4, K3, ColoringConstraint::mean(1)));
  EXPECT_EQ(rt_exact(4, K3, ColoringConstraint::mean(1)).value, 4);
  for (int n = 1; n <= 5; ++n)
    for (const auto& k : {two, loc2, mean2, ColoringConstraint::local(1)})
      ASSERT_EQ(rt_exact(n, K3, k).value, oracle::rt_bruteforce(n, K3, k)) << n << ' ' << k.to_string();
}

TEST(RtExact, EdgeCases) {
  EXPECT_EQ(rt_exact(0, K3, two).value, 0);
  EXPECT_EQ(rt_exact(1, K3, two).value, 0);
  EXPECT_EQ(rt_exact(2, K3, two).value, 1);
  EXPECT_THROW(rt_exact(9, K3, two), mrt::budget_exceeded);
  EXPECT_THROW(rt_exact(-1, K3, two), mrt::invalid_argument);
}

TEST(RtExact, TuranValuesAndChain) {
  for (int n = 1; n <= 6; ++n) {
    auto t = static_cast<std::int64_t>(turan_edge_count(static_cast<std::uint64_t>(n), 5));
    auto a = rt_exact(n, K3, two).value, b = rt_exact(n, K3, loc2).value, c = rt_exact(n, K3, mean2).value;
    EXPECT_LE(a, b);
    EXPECT_LE(b, c);
    EXPECT_EQ(a, t);
    EXPECT_EQ(b, t);
    EXPECT_EQ(c, t) << n;
  }
}

TEST(RtExact, MonotoneInN) {
  std::int64_t previous = 0;
  for (int n = 1; n <= 6; ++n) {
    auto v = rt_exact(n, K3, mean2).value;
    EXPECT_GE(v, previous);
    previous = v;
  }
}

TEST(RtExact, BlowUpLowerBound) {
  // Blowing up an optimal 3-vertex witness by 2 gives a 6-vertex mean coloring with 4x the edges.
  auto w3 = rt_exact(3, K3, mean2);
  auto doubled = blow_up(*w3.witness, {2, 2, 2});
  EXPECT_TRUE(satisfies(doubled, mean2));
  EXPECT_FALSE(find_monochromatic(doubled, K3));
  EXPECT_GE(rt_exact(6, K3, mean2).value, 4 * w3.value);
}

TEST(RtExact, CertificateVerifies) {
  auto c = rt_exact(6, K3, mean2);
  EXPECT_EQ(c.kind, CertificateKind::LowerBoundWitness);
  EXPECT_EQ(c.value, 14);
  EXPECT_TRUE(verify_certificate(c, K3, mean2));
  EXPECT_EQ(c.attestation.graphs_refuted, 1U);  // K_6 alone has more than 14 edges up to isomorphism
  EXPECT_EQ(c.attestation.pattern, "K3");
  EXPECT_EQ(c.attestation.constraint, "mean:2");

  auto inflated = c;
  inflated.value = 15;
  EXPECT_FALSE(verify_certificate(inflated, K3, mean2));

  auto recolored = c;
  recolored.witness = EdgeColoring::monochromatic(c.witness->host());
  EXPECT_FALSE(verify_certificate(recolored, K3, mean2));

  auto missing = c;
  missing.witness.reset();
  EXPECT_FALSE(verify_certificate(missing, K3, mean2));
}

TEST(RtExact, DeterministicAcrossThreads) {
  SearchConfig four;
  four.threads = 4;
  auto a = rt_exact(6, K3, mean2), b = rt_exact(6, K3, mean2, four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.attestation.stats.nodes, b.attestation.stats.nodes);
}

TEST(RamseyExact, Values) {
  auto r2 = ramsey_exact(K3, two, 8);
  EXPECT_EQ(r2.value, 6);
  EXPECT_TRUE(r2.conclusive);
  ASSERT_TRUE(r2.witness);
  EXPECT_EQ(r2.witness->order(), 5);
  EXPECT_TRUE(verify_certificate(r2, K3, two));

  EXPECT_EQ(ramsey_exact(K3, loc2, 8).value, 6);
  EXPECT_EQ(ramsey_exact(Graph::complete(2), two, 8).value, 2);
  EXPECT_EQ(ramsey_exact(Graph::path(3), two, 8).value, 3);
  EXPECT_EQ(ramsey_exact(Graph::cycle(4), two, 8).value, 6);
}

TEST(RamseyExact, Undecided) {
  auto r = ramsey_exact(K3, two, 5);
  EXPECT_FALSE(r.conclusive);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(verify_certificate(r, K3, two));
  EXPECT_THROW(ramsey_exact(K3, two, 11), mrt::budget_exceeded);
}

TEST(MinColorSum, Values) {
  EXPECT_EQ(min_color_sum(3).value, 5);
  EXPECT_EQ(min_color_sum(4).value, 8);
  EXPECT_EQ(min_color_sum(5).value, 10);
  EXPECT_TRUE(verify_certificate(min_color_sum(4), K3, ColoringConstraint::local(4)));
  EXPECT_THROW(min_color_sum(2), mrt::invalid_argument);
  EXPECT_THROW(min_color_sum(6), mrt::invalid_argument);
}

TEST(MinColorSum, AgreesWithEnumeration) {
  for (int m = 3; m <= 4; ++m) {
    std::int64_t best = -1;
    int edges = m * (m - 1) / 2;
    oracle::for_each_partition(edges, [&](const std::vector<int>& colors) {
      EdgeColoring c(Graph::complete(m), colors);
      if (oracle::has_mono(c, K3)) return;
      auto s = total_color_incidence(c);
      if (best < 0 || s < best) best = s;
    });
    EXPECT_EQ(min_color_sum(m).value, best) << m;
  }
}

TEST(DescribePattern, Names) {
  EXPECT_EQ(describe_pattern(K3), "K3");
  EXPECT_EQ(describe_pattern(Graph::cycle(5)), "C5");
  EXPECT_EQ(describe_pattern(Graph::path(3)), "n3:0-1,1-2");
}

TEST(GraphLevels, CountsNonIsomorphicGraphs) {
  // Graphs on 5 vertices by edge count: 1 1 2 4 6 6 6 4 2 1 1 (34 total).
  GraphLevels levels(5);
  std::vector<std::size_t> expected{1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1};
  for (int missing = 0; missing <= 10; ++missing) EXPECT_EQ(levels.complements(missing).size(), expected[missing]);
}
