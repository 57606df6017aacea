#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <geodometer/gallery.hpp>
#include <geodometer/geodesy.hpp>
#include <geodometer/graph_spec.hpp>

#include "oracles.hpp"

using namespace geodometer;

namespace {

  GeodPath path_of(AnyGraph const& g, std::vector<std::string> const& names, std::int64_t base = 0) {
    GeodPath p{base, {}};
    for (auto const& n : names) {
      p.vertices.push_back(g.parse(n));
    }
    return p;
  }

  // Labels straight from the recursion, on an explicit adjacency list.
  std::vector<int> oracle_labels(oracle::Adjacency const& adj, std::uint32_t root) {
    auto const       dist = oracle::bfs(adj, root);
    std::vector<int> order(adj.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] > dist[b]; });
    std::vector<int> label(adj.size(), 0);
    for (auto v : order) {
      for (auto w : adj[v]) {
        if (dist[w] == dist[v] + 1) {
          label[v] = std::max(label[v], label[w] + 1);
        }
      }
    }
    return label;
  }

  // A random walk in a basis graph that steps away from its start every time.
  template <typename Rng>
  GeodPath random_basis_geodesic(CayleyGraph const& g, std::size_t length, Rng& rng) {
    GeodPath p{0, {g.origin()}};
    while (p.length() < length) {
      auto const here = oracle::basis_distance(g, g.element(p.vertices.back()));
      std::vector<VertexId> away;
      for (auto const& w : g.neighbors(p.vertices.back())) {
        if (oracle::basis_distance(g, g.element(w)) == here + 1) {
          away.push_back(w);
        }
      }
      p.vertices.push_back(away[std::uniform_int_distribution<std::size_t>(0, away.size() - 1)(rng)]);
    }
    return p;
  }

}  // namespace

TEST(Labels, FanThree) {
  AnyGraph const g = fan_graph(3);
  auto const     L = label_all(g, g.origin());
  EXPECT_EQ(L.root(), ExtOrdinal::natural(3));
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto const v = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
      EXPECT_EQ(L.at(g.parse(v)), ExtOrdinal::natural(static_cast<std::uint64_t>(n - k))) << v;
    }
  }
}

TEST(Labels, FanRadius) {
  for (std::int64_t N = 1; N <= 12; ++N) {
    auto const g = fan_graph(N);
    EXPECT_EQ(generalized_radius(g, g.origin()), ExtOrdinal::natural(static_cast<std::uint64_t>(N)));
    if (N >= 2) {
      auto const tip = g.parse("(1," + std::to_string(N) + ")");
      EXPECT_EQ(erasure_rank(g, tip, 2 * static_cast<unsigned>(N)).radius,
                ExtOrdinal::natural(static_cast<std::uint64_t>(N)));
    }
  }
}

TEST(Labels, RejectsClippedBalls) {
  auto const g = basis_graph_z(3);
  EXPECT_THROW(label_all(ball(g, g.origin(), 3)), ClippedBall);
  EXPECT_THROW(label_all(g, g.origin(), 5000), BudgetExceeded);
}

TEST(Erasure, Examples) {
  auto const path = path_graph(5);
  auto const mid  = erasure_rank(path, path.parse("2"), 10);
  EXPECT_EQ(mid.radius, ExtOrdinal::natural(2));
  EXPECT_EQ(mid.nodes.size(), 5U);
  auto const cube = hypercube_graph(3);
  EXPECT_EQ(erasure_rank(cube, cube.origin(), 5).radius, ExtOrdinal::natural(1));
  auto const b4 = basis_graph(4);
  auto const r  = erasure_rank(b4, b4.origin(), 10);
  EXPECT_EQ(r.radius, ExtOrdinal::natural(4));
  EXPECT_THROW(erasure_rank(b4, b4.origin(), 3), HorizonTooSmall);
  EXPECT_THROW(erasure_rank(b4, b4.origin(), 10, 20), BudgetExceeded);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(generalized_diameter(fan_graph(3)), ExtOrdinal::natural(5));
  EXPECT_EQ(generalized_diameter(fan_graph(1)), ExtOrdinal::natural(1));
  EXPECT_EQ(generalized_diameter(cycle_graph(9)), ExtOrdinal::natural(4));
  EXPECT_EQ(generalized_diameter(complete_graph(1)), ExtOrdinal::natural(0));
}

TEST(GeodesyProperty, RadiusErasureAndEccentricityAgree) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto const n     = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
    auto const edges = oracle::random_connected(n, 0.25, rng);
    auto const adj   = oracle::adjacency(n, edges);
    AdjacencyGraph const g(n, edges);
    auto const root  = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(n - 1))(rng);
    auto const o     = AdjacencyGraph::id(root);
    auto const ecc   = static_cast<std::uint64_t>(oracle::eccentricity(adj, root));
    ASSERT_EQ(generalized_radius(g, o), ExtOrdinal::natural(ecc));
    auto const expected = oracle_labels(adj, root);
    auto const L        = label_all(g, o);
    for (std::uint32_t v = 0; v < n; ++v) {
      ASSERT_EQ(L.at(AdjacencyGraph::id(v)),
                ExtOrdinal::natural(static_cast<std::uint64_t>(expected[v])));
    }
    auto const er = erasure_rank(g, o, static_cast<unsigned>(n));
    ASSERT_EQ(er.radius, ExtOrdinal::natural(ecc));
    // A geodesic is erased in the round given by the label of its endpoint.
    for (auto const& node : er.nodes) {
      auto const v = AdjacencyGraph::index(er.graph.ids[node.vertex]);
      ASSERT_EQ(static_cast<int>(node.rank), expected[v]);
    }
    int diameter = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      diameter = std::max(diameter, oracle::eccentricity(adj, v));
    }
    ASSERT_EQ(generalized_diameter(g), ExtOrdinal::natural(static_cast<std::uint64_t>(diameter)));
  }
}

TEST(GeodesyProperty, ErasureListsEveryGeodesic) {
  // Count geodesics from the root by dynamic programming over BFS layers.
  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    auto const n     = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
    auto const edges = oracle::random_connected(n, 0.3, rng);
    auto const adj   = oracle::adjacency(n, edges);
    auto const dist  = oracle::bfs(adj, 0);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return dist[a] < dist[b]; });
    std::vector<std::size_t> ways(n, 0);
    ways[0] = 1;
    std::size_t total = 0;
    for (auto v : order) {
      for (auto w : adj[v]) {
        if (dist[w] + 1 == dist[v]) {
          ways[v] += ways[w];
        }
      }
      total += ways[v];
    }
    AdjacencyGraph const g(n, edges);
    auto const er = erasure_rank(g, g.origin(), static_cast<unsigned>(n));
    ASSERT_EQ(er.nodes.size(), total);
    for (std::size_t k = 0; k < er.nodes.size(); k += 3) {
      ASSERT_TRUE(is_geodesic(g, er.path(k)));
    }
  }
}

TEST(Zigzag, Examples) {
  AnyGraph const g = basis_graph(5);
  EXPECT_TRUE(is_zigzag_free(g, path_of(g, {"0", "(0,0,0,1)", "(0,0,0,2)"})));
  EXPECT_FALSE(is_zigzag_free(g, path_of(g, {"0", "(0,0,1,0)", "(0,0,2,0)"})));
  EXPECT_FALSE(is_zigzag_free(g, path_of(g, {"0", "(1,0,0,0)", "(1,1,0,0)"})));
  EXPECT_FALSE(is_zigzag_free(g, path_of(g, {"0", "(1,0,0,0)", "0"})));
  EXPECT_TRUE(is_zigzag_free(g, path_of(g, {"0", "(1,0,0,0)"})));
  EXPECT_THROW(is_zigzag_free(g, path_of(g, {"0", "(1,1,0,0)"})), InvalidArgument);
  EXPECT_EQ(common_neighbor_count(g, g.origin(), g.parse("(0,1,1,0)")), 2U);
}

TEST(Zigzag, LongestGeodesic) {
  auto const b5 = basis_graph(5);
  EXPECT_EQ(max_zigzag_geodesic(b5, b5.origin(), 8), 2U);
  auto const z5 = basis_graph_z(5);
  EXPECT_EQ(max_zigzag_geodesic(z5, z5.origin(), 6), 6U);
  auto const c6 = cycle_graph(6);
  EXPECT_EQ(max_zigzag_geodesic(c6, c6.origin(), 10), 3U);
  auto const cube = hypercube_graph(4);
  EXPECT_GE(max_zigzag_geodesic(cube, cube.origin(), 10), 1U);
}

TEST(GeodesyProperty, ZigzagFreeWalksInBasisGraphs) {
  // Two different coordinates, a backtrack, or two steps in Z/4 each give a
  // second midpoint.
  std::mt19937_64 rng(31);
  auto const      g = basis_graph(6);
  for (int i = 0; i < 300; ++i) {
    auto const len = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    GeodPath   p{0, {g.origin()}};
    std::vector<std::int64_t> coordinate, sign;
    auto const bias = std::uniform_int_distribution<std::int64_t>(2, 6)(rng);
    for (std::size_t k = 0; k < len; ++k) {
      auto const n = std::bernoulli_distribution(0.8)(rng)
                         ? bias
                         : std::uniform_int_distribution<std::int64_t>(2, 6)(rng);
      auto const s = std::bernoulli_distribution(0.85)(rng) ? 1 : -1;
      coordinate.push_back(n);
      sign.push_back(n == 2 ? 1 : s);
      auto step = g.spec().unit(n);
      if (sign.back() < 0) {
        step = g.spec().negate(step);
      }
      p.vertices.push_back(g.add(p.vertices.back(), g.vertex(step)));
    }
    bool expected = true;
    for (std::size_t k = 0; k + 1 < len; ++k) {
      expected = expected && coordinate[k] == coordinate[k + 1] && sign[k] == sign[k + 1]
                 && coordinate[k] != 2 && coordinate[k] != 4;
    }
    ASSERT_EQ(is_zigzag_free(g, p), expected);
  }
}

TEST(Fold, Example) {
  auto const g     = basis_graph(5);
  auto const gamma = path_of(g, {"0", "(0,1,0,0)", "(0,1,0,1)", "(0,2,0,1)", "(0,2,0,2)"});
  auto const kappa = fold_geodesic(g, gamma);
  EXPECT_EQ(kappa.base, -2);
  std::vector<std::string> names;
  for (auto const& v : kappa.vertices) {
    names.push_back(g.format(v));
  }
  EXPECT_EQ(names, (std::vector<std::string>{"(0,0,0,3)", "(0,0,0,4)", "(0,0,0,0)", "(0,1,0,0)",
                                             "(0,2,0,0)"}));
  EXPECT_THROW(fold_geodesic(g, path_of(g, {"0", "(0,1,0,0)"})), InvalidArgument);
}

TEST(GeodesyProperty, FoldingKeepsGeodesicsAndEndpointDifference) {
  std::mt19937_64 rng(37);
  for (auto const* spec : {"basis:M=6", "basisZ:M=4", "hn:N=1,M=6"}) {
    auto const  any = parse_graph_spec(spec);
    auto const& g   = *any.target<CayleyGraph>();
    for (int i = 0; i < 40; ++i) {
      auto const len   = 2 * std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      auto const gamma = random_basis_geodesic(g, len, rng);
      ASSERT_TRUE(is_geodesic(g, gamma)) << spec;
      auto const kappa = fold_geodesic(g, gamma);
      auto const n     = static_cast<std::int64_t>(len / 2);
      ASSERT_EQ(kappa.first_index(), -n);
      ASSERT_EQ(kappa.at(0), gamma.vertices.front());
      ASSERT_EQ(g.subtract(kappa.at(n), kappa.at(-n)),
                g.subtract(gamma.vertices.back(), gamma.vertices.front()));
      ASSERT_TRUE(is_geodesic(g, kappa)) << spec;
    }
  }
}

TEST(Pset, Examples) {
  auto const g  = basis_graph(6);
  auto const up = path_of(g, {"0", "(1,0,0,0,0)", "(1,1,0,0,0)", "(1,1,1,0,0)", "(1,1,1,1,0)"});
  EXPECT_EQ(edge_labels(g, up), (std::vector<std::int64_t>{2, 3, 4, 5}));
  EXPECT_TRUE(pset_member(g, up));
  EXPECT_EQ(pset_progression(g, up), (Progression{1, 2}));
  auto shifted = up;
  shifted.base = 1;
  EXPECT_EQ(pset_progression(g, shifted), (Progression{1, 1}));
  auto down = up;
  std::reverse(down.vertices.begin(), down.vertices.end());
  EXPECT_TRUE(pset_member(g, down));
  EXPECT_EQ(pset_progression(g, down), (Progression{-1, 5}));

  auto const back = path_of(g, {"0", "(1,0,0,0,0)", "(1,1,0,0,0)", "(0,1,0,0,0)"});
  EXPECT_FALSE(pset_member(g, back));
  EXPECT_FALSE(pset_progression(g, back).has_value());
  auto const jump = path_of(g, {"0", "(1,0,0,0,0)", "(1,0,1,0,0)", "(1,0,1,1,0)"});
  EXPECT_FALSE(pset_member(g, jump));
  EXPECT_TRUE(pset_member(g, path_of(g, {"0", "(0,0,0,1,0)"})));
  EXPECT_THROW(pset_progression(g, path_of(g, {"0", "(0,0,0,1,0)", "(0,0,0,1,1)"})),
               InvalidArgument);
}

TEST(GeodesyProperty, PsetMembersAreProgressions) {
  std::mt19937_64 rng(41);
  auto const      g = basis_graph(8);
  for (int i = 0; i < 400; ++i) {
    auto const len = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
    GeodPath   p{std::uniform_int_distribution<std::int64_t>(-3, 3)(rng), {g.origin()}};
    std::vector<std::int64_t> labels;
    auto label = std::uniform_int_distribution<std::int64_t>(2, 8)(rng);
    for (std::size_t k = 0; k < len; ++k) {
      labels.push_back(label);
      p.vertices.push_back(g.add(p.vertices.back(), g.vertex(g.spec().unit(label))));
      label += std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
      label = std::clamp<std::int64_t>(label, 2, 8);
    }
    bool monotone = true;
    for (std::size_t k = 0; k + 1 < len; ++k) {
      monotone = monotone && labels[k + 1] - labels[k] == labels[1] - labels[0]
                 && labels[k + 1] != labels[k];
    }
    ASSERT_EQ(pset_member(g, p), monotone);
    ASSERT_EQ(pset_progression(g, p).has_value(), monotone);
    auto reversed = p;
    std::reverse(reversed.vertices.begin(), reversed.vertices.end());
    ASSERT_EQ(pset_member(g, reversed), pset_member(g, p));
    if (monotone) {
      auto const pr = *pset_progression(g, p);
      ASSERT_EQ(pr.a * p.base + pr.b, labels.front());
    }
  }
}
