#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <geodometer/gallery.hpp>
#include <geodometer/geodesy.hpp>
#include <geodometer/graph_spec.hpp>
#include <geodometer/isometry.hpp>

#include "oracles.hpp"

using namespace geodometer;

namespace {

  std::set<std::string> neighbor_names(AnyGraph const& g, std::string const& v) {
    std::set<std::string> out;
    for (auto const& w : g.neighbors(g.parse(v))) {
      out.insert(g.format(w));
    }
    return out;
  }

}  // namespace

TEST(Hypercube, SmallCases) {
  auto const two = materialize(hypercube_graph(2), hypercube_graph(2).origin());
  EXPECT_EQ(two.size(), 2U);
  EXPECT_EQ(two.edges().size(), 1U);
  auto const three = hypercube_graph(3);
  EXPECT_EQ(three.neighbors(three.origin()).size(), 5U);
  EXPECT_EQ(generalized_diameter(hypercube_graph(4)), ExtOrdinal::natural(2));
}

TEST(Hypercube, DistanceHasClosedForm) {
  for (std::int64_t N = 2; N <= 6; ++N) {
    auto const g = hypercube_graph(N);
    auto const b = materialize(g, g.origin());
    for (std::size_t i = 0; i < b.size(); ++i) {
      ASSERT_EQ(static_cast<std::int64_t>(b.dist[i]),
                oracle::hypercube_distance(g, g.element(b.ids[i])));
    }
  }
}

TEST(Basis, Neighbours) {
  AnyGraph const g = basis_graph(3);
  EXPECT_EQ(neighbor_names(g, "0"), (std::set<std::string>{"(1,0)", "(0,1)", "(0,2)"}));
  AnyGraph const z = basis_graph_z(2);
  EXPECT_EQ(neighbor_names(z, "0"), (std::set<std::string>{"(1,0)", "(0,1)", "(0,-1)"}));
}

TEST(Basis, TwoDistinctUnitsAreAtDistanceTwo) {
  for (std::int64_t M = 3; M <= 6; ++M) {
    auto const g = basis_graph(M);
    for (std::int64_t n = 2; n <= M; ++n) {
      for (std::int64_t m = n + 1; m <= M; ++m) {
        auto const x = g.spec().add(g.spec().unit(n), g.spec().unit(m));
        ASSERT_EQ(distance(g, g.origin(), g.vertex(x), 5), 2U);
      }
    }
  }
}

TEST(Basis, DistanceHasClosedForm) {
  for (auto const& g : {basis_graph(6), quotient_hn_graph(1, 5)}) {
    auto const b = ball(g, g.origin(), 4);
    for (std::size_t i = 0; i < b.size(); ++i) {
      ASSERT_EQ(static_cast<std::int64_t>(b.dist[i]), oracle::basis_distance(g, g.element(b.ids[i])));
    }
  }
}

TEST(Factorial, Generators) {
  auto const two = factorial_graph(2);
  std::set<std::int64_t> s;
  for (auto const& x : two.generators()) {
    s.insert(x[0]);
  }
  EXPECT_EQ(s, (std::set<std::int64_t>{-3, -2, -1, 1, 2, 3}));
  auto const three = factorial_graph(3);
  EXPECT_TRUE(three.adjacent(three.origin(), three.parse("9")));
  EXPECT_EQ(distance(three, three.origin(), three.parse("12"), 5), 2U);
  for (std::int64_t N = 1; N <= 5; ++N) {
    auto sums = oracle::factorial_sums(N);
    sums.erase(0);
    std::set<std::int64_t> gens;
    auto const g = factorial_graph(N);
    for (auto const& x : g.generators()) {
      gens.insert(x[0]);
    }
    ASSERT_EQ(gens, sums);
  }
}

TEST(Fan, Shapes) {
  auto const one = materialize(fan_graph(1), fan_graph(1).origin());
  EXPECT_EQ(one.size(), 2U);
  EXPECT_EQ(one.edges().size(), 1U);
  auto const three = fan_graph(3);
  EXPECT_EQ(materialize(three, three.origin()).size(), 7U);
  EXPECT_EQ(three.neighbors(three.origin()).size(), 3U);
  AnyGraph const ray = fan_graph(3, true);
  EXPECT_EQ(materialize(ray, ray.origin()).size(), 11U);
  EXPECT_EQ(ray.format(ray.parse("(4,w)")), "(4,w)");
  EXPECT_EQ(neighbor_names(ray, "(4,w)"), (std::set<std::string>{"(3,w)"}));
  EXPECT_THROW(three.parse("(4,3)"), ParseError);
}

TEST(QuotientHn, Orders) {
  auto const line = quotient_hn_graph(0, 2);
  EXPECT_EQ(line.spec().coords[0].order, 0);
  EXPECT_EQ(line.format(line.origin()), "0");
  std::set<std::string> nb;
  for (auto const& w : line.neighbors(line.origin())) {
    nb.insert(line.format(w));
  }
  EXPECT_EQ(nb, (std::set<std::string>{"1", "-1"}));
  auto const g = quotient_hn_graph(1, 5);
  std::vector<std::int64_t> orders;
  for (auto const& c : g.spec().coords) {
    orders.push_back(c.order);
  }
  EXPECT_EQ(orders, (std::vector<std::int64_t>{2, 3, 0, 4}));
  EXPECT_EQ(ball(g, g.origin(), 1).size(), ball(basis_graph(5), basis_graph(5).origin(), 1).size());
  EXPECT_THROW(quotient_hn_graph(2, 5), InvalidArgument);
}

TEST(WordGraph, Rules) {
  auto const h = word_graph_h(4, 3);
  EXPECT_EQ(h.edge_rule(h.parse("[0]"), h.parse("[0;0]")), 1);
  EXPECT_EQ(h.edge_rule(h.parse("[0]"), h.parse("[(1,0,0)]")), 2);
  // The Z coordinate of G' sits at index 4 when N = 1, M = 4.
  EXPECT_EQ(h.edge_rule(h.parse("[0;0]"), h.parse("[0;(0,0,1)]")), 2);
  EXPECT_EQ(h.edge_rule(h.parse("[0;0]"), h.parse("[0;(0,0,-1)]")), 2);
  EXPECT_EQ(h.edge_rule(h.parse("[0;(0,0,5)]"), h.parse("[0;(0,0,5);0]")), 1);
  EXPECT_EQ(h.edge_rule(h.parse("[0]"), h.parse("[(1,0,0);0]")), 0);
  // [0;0] cannot take a child: its zero letter would sit in the middle.
  EXPECT_THROW(h.parse("[0;0;0]"), ParseError);
  EXPECT_THROW(h.parse("[0;0;0;0]"), ParseError);
  EXPECT_EQ(h.neighbors(h.parse("[0]")).size(), 6U);
  EXPECT_EQ(h.neighbors(h.parse("[0;0]")).size(), 6U);
  EXPECT_THROW(word_graph_h(3, 3), InvalidArgument);
  auto const rule2 = h.rule2_view();
  EXPECT_EQ(rule2.edge_rule(h.parse("[0]"), h.parse("[0;0]")), 0);
  EXPECT_EQ(rule2.neighbors(h.parse("[0]")).size(), 5U);
}

TEST(GalleryProperty, TranslationsAreRootedIsomorphisms) {
  std::mt19937_64 rng(17);
  for (auto const* spec : {"hypercube:N=4", "hypercube:N=5", "basis:M=5", "basisZ:M=4",
                           "factorial:N=3", "hn:N=1,M=5", "eta:eta=w+1,cutoff=3"}) {
    auto const  any = parse_graph_spec(spec);
    auto const& g   = *any.target<CayleyGraph>();
    auto const  around = ball(g, g.origin(), 3);
    for (int i = 0; i < 20; ++i) {
      auto pick = [&] {
        return around.ids[std::uniform_int_distribution<std::size_t>(0, around.size() - 1)(rng)];
      };
      auto const u = pick();
      auto const v = pick();
      auto const a = ball(g, u, 2);
      auto const b = ball(g, v, 2);
      auto const shift = g.subtract(v, u);
      std::vector<std::uint32_t> map;
      for (auto const& x : a.ids) {
        map.push_back(*b.index_of(g.add(x, shift)));
      }
      ASSERT_TRUE(is_rooted_iso(a, b, map)) << spec;
      ASSERT_TRUE(rooted_iso(a, b).has_value()) << spec;
    }
  }
}

TEST(EdgeLabels, Examples) {
  auto const g = basis_graph(6);
  auto const e3 = g.parse("(0,1,0,0,0)");
  auto const e3e5 = g.parse("(0,1,0,1,0)");
  EXPECT_EQ(edge_label_direct(g, g.origin(), g.parse("(0,0,1,0,0)")), 4);
  EXPECT_EQ(edge_label_direct(g, g.origin(), g.parse("(1,0,0,0,0)")), 2);
  EXPECT_EQ(edge_label_direct(g, e3, e3e5), 5);
  EXPECT_EQ(edge_label_intrinsic(g, e3, e3e5, 5), 5);
  EXPECT_EQ(edge_label_intrinsic(g, g.origin(), g.parse("(1,0,0,0,0)"), 5), 2);
  EXPECT_EQ(edge_label_intrinsic(g, g.origin(), g.parse("(0,1,0,0,0)"), 5), 3);
  EXPECT_EQ(edge_label_intrinsic(g, g.origin(), g.parse("(0,0,0,0,1)"), 5), 6);
  EXPECT_THROW(edge_label_intrinsic(g, g.origin(), g.parse("(0,0,0,0,1)"), 4), HorizonTooSmall);
  EXPECT_THROW(edge_label_direct(g, g.origin(), g.parse("(1,1,0,0,0)")), InvalidArgument);
}

TEST(EdgeLabels, LabelFourIsNotIntrinsic) {
  // Going around the 4-cycle is not zigzag-free: 0 and 2e_4 have two
  // common neighbours.
  auto const g = basis_graph(6);
  GeodPath   around{0, {g.origin(), g.parse("(0,0,3,0,0)"), g.parse("(0,0,2,0,0)"),
                        g.parse("(0,0,1,0,0)")}};
  EXPECT_FALSE(is_zigzag_free(g, around));
  EXPECT_EQ(edge_label_intrinsic(g, g.origin(), g.parse("(0,0,1,0,0)"), 5), 2);

  // Z/2 x Z/4 is the 3-cube; swapping the Z/2 factor with one bit of the
  // Gray-coded Z/4 factor is an automorphism exchanging labels 2 and 4.
  auto const h = basis_graph(4);
  auto gray    = [](std::int64_t b) { return std::pair<int, int>{b >= 2, (b == 1 || b == 2)}; };
  auto ungray  = [](int x1, int x2) -> std::int64_t { return x1 ? (x2 ? 2 : 3) : (x2 ? 1 : 0); };
  auto phi     = [&](VertexId const& v) {
    auto x           = h.element(v);
    auto [x1, x2]    = gray(x[2]);
    auto const a     = static_cast<int>(x[0]);
    x[0]             = x1;
    x[2]             = ungray(a, x2);
    return h.vertex(x);
  };
  auto const all = materialize(h, h.origin());
  std::set<VertexId> image;
  for (auto const& v : all.ids) {
    image.insert(phi(v));
    for (auto const& w : h.neighbors(v)) {
      ASSERT_TRUE(h.adjacent(phi(v), phi(w)));
    }
  }
  EXPECT_EQ(image.size(), all.size());
  auto const e2 = h.parse("(1,0,0)");
  EXPECT_EQ(edge_label_direct(h, h.origin(), e2), 2);
  EXPECT_EQ(edge_label_direct(h, phi(h.origin()), phi(e2)), 4);
}

TEST(EdgeLabels, IntrinsicMatchesDirectAwayFromLabelFour) {
  for (std::int64_t M = 2; M <= 6; ++M) {
    auto const g = basis_graph(M);
    auto const b = ball(g, g.origin(), 3);
    for (auto [i, j] : b.edges()) {
      auto const direct    = edge_label_direct(g, b.ids[i], b.ids[j]);
      auto const intrinsic = edge_label_intrinsic(g, b.ids[i], b.ids[j], 5);
      ASSERT_EQ(intrinsic, direct == 4 ? 2 : direct) << "M=" << M;
    }
  }
}

TEST(GraphSpec, ParsesAndRejects) {
  EXPECT_EQ(parse_graph_spec("hn:N=1,M=6").describe(), "hn:N=1,M=6");
  EXPECT_EQ(parse_graph_spec("wordH:M=4,depth=3").describe(), "wordH:M=4,depth=3");
  EXPECT_EQ(parse_graph_spec("eta:eta=w,cutoff=3").describe(), "eta:eta=w,cutoff=3");
  EXPECT_THROW(parse_graph_spec("moebius:N=3"), ParseError);
  EXPECT_THROW(parse_graph_spec("basis:M=x"), ParseError);
  EXPECT_THROW(parse_graph_spec("basis:K=3"), ParseError);
  EXPECT_THROW(parse_graph_spec("basis"), ParseError);
  EXPECT_THROW(parse_graph_spec("basis:M=1"), InvalidArgument);
}
