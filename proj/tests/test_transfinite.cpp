#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <geodometer/geodesy.hpp>
#include <geodometer/transfinite.hpp>

#include "oracles.hpp"

using namespace geodometer;

namespace {

  ExtOrdinal ord(char const* text) {
    return parse_ordinal(text);
  }

  EtaElement elem(char const* eta, char const* text) {
    return parse_eta_element(ord(eta), text);
  }

}  // namespace

TEST(Eta, DistanceAndLabelOfPairs) {
  auto const e = elem("3", "((({},1),0),1)");
  EXPECT_EQ(dist_eta(ord("3"), e), 2U);
  EXPECT_EQ(label_eta(ord("3"), e), ord("1"));
  EXPECT_EQ(label_eta(ord("2"), elem("2", "(({},1),1)")), ord("0"));
  EXPECT_EQ(label_eta(ord("2"), elem("2", "(({},0),1)")), ord("1"));
  EXPECT_EQ(label_eta(ord("2"), elem("2", "(({},0),0)")), ord("2"));
  EXPECT_EQ(dist_eta(ord("2"), elem("2", "(({},1),1)")), 2U);
}

TEST(Eta, LimitElements) {
  EXPECT_EQ(label_eta(ord("w"), elem("w", "{}")), ord("w"));
  auto const e = elem("w", "{2:(({},0),1), 3:((({},1),1),1)}");
  EXPECT_EQ(dist_eta(ord("w"), e), 3U);
  EXPECT_EQ(label_eta(ord("w"), e), ord("0"));
  auto const f = elem("w", "{2:(({},0),1), 3:((({},1),0),0)}");
  EXPECT_EQ(dist_eta(ord("w"), f), 1U);
  EXPECT_EQ(label_eta(ord("w"), f), ord("2"));
  // One step above the identity of G_w inside G_{w*2}.
  auto const g = elem("w*2", "{w+1:({},1)}");
  EXPECT_EQ(dist_eta(ord("w*2"), g), 1U);
  EXPECT_EQ(label_eta(ord("w*2"), g), ord("w"));
}

TEST(Eta, Radius) {
  EXPECT_EQ(radius_eta(ord("0")), ord("0"));
  EXPECT_EQ(radius_eta(ord("5")), ord("5"));
  EXPECT_EQ(radius_eta(ord("w")), ord("w"));
  EXPECT_EQ(radius_eta(ord("w+1")), ord("w+1"));
  EXPECT_EQ(radius_eta(ord("w*2+3")), ord("w*2+3"));
  EXPECT_EQ(radius_eta(ord("w^2")), ord("w^2"));
  EXPECT_THROW(radius_eta(ExtOrdinal::inf()), InvalidArgument);
}

TEST(Eta, RejectsMalformedElements) {
  EXPECT_THROW(elem("w", "{w:({},1)}"), InvalidArgument);
  EXPECT_THROW(elem("w", "{2:(({},0),0)}"), InvalidArgument);
  EXPECT_THROW(elem("w", "(({},0),1)"), InvalidArgument);
  EXPECT_THROW(elem("2", "{}"), InvalidArgument);
  EXPECT_THROW(elem("w", "{1:({},1), 1:({},1)}"), ParseError);
  EXPECT_THROW(elem("2", "(({},1)"), ParseError);
  EXPECT_THROW(elem("2", "(({},2),1)"), ParseError);
  EXPECT_THROW(elem("w", "{x:({},1)}"), ParseError);
}

TEST(Eta, TruncationSizes) {
  struct Case {
    char const*   eta;
    std::uint64_t cutoff;
    std::size_t   size;
  };
  for (auto const& c : {Case{"w", 3, 8}, Case{"w", 4, 64}, Case{"w*2", 2, 16}, Case{"w^2", 2, 16},
                        Case{"4", 0, 16}, Case{"w+1", 3, 16}, Case{"0", 0, 1}}) {
    auto const t = instantiate_eta(ord(c.eta), c.cutoff);
    EXPECT_EQ(materialize(t.graph(), t.graph().origin()).size(), c.size) << c.eta;
    EXPECT_EQ(std::size_t{1} << t.width(ord(c.eta)), c.size) << c.eta;
  }
  EXPECT_THROW(instantiate_eta(ord("w")), InvalidArgument);
  EXPECT_THROW(instantiate_eta(ord("w^3"), 5, 1000), BudgetExceeded);
  EXPECT_THROW(instantiate_eta(ord("w"), 3).encode(elem("w", "{3:((({},1),0),0)}")),
               InvalidArgument);
}

TEST(EtaProperty, TruncationsMatchTheRecursions) {
  // BFS distances and labels in the materialised truncation against the
  // closed recursions for every element.
  struct Case {
    char const*   eta;
    std::uint64_t cutoff;
  };
  for (auto const& c : {Case{"w", 3}, Case{"w", 4}, Case{"w*2", 2}, Case{"w^2", 2}, Case{"w+1", 3},
                        Case{"w+2", 3}, Case{"5", 0}, Case{"w*2+1", 2}}) {
    auto const eta = ord(c.eta);
    auto const t   = instantiate_eta(eta, c.cutoff);
    auto const L   = label_all(t.graph(), t.graph().origin());
    auto const adj = [&] {
      oracle::Edges edges;
      for (auto [i, j] : L.ball.edges()) {
        edges.emplace_back(i, j);
      }
      return oracle::adjacency(L.ball.size(), edges);
    }();
    auto const dist = oracle::bfs(adj, 0);
    for (std::size_t i = 0; i < L.ball.size(); ++i) {
      auto const e = t.decode(L.ball.ids[i]);
      ASSERT_NO_THROW(validate_eta(eta, e));
      ASSERT_EQ(t.encode(e), L.ball.ids[i]);
      ASSERT_EQ(dist_eta(eta, e), static_cast<std::uint64_t>(dist[i])) << c.eta << " " << e.to_string();
      ASSERT_EQ(label_eta(eta, e, c.cutoff), L.labels[i]) << c.eta << " " << e.to_string();
    }
    ASSERT_EQ(label_eta(eta, eta_identity(eta), c.cutoff),
              ExtOrdinal::natural(static_cast<std::uint64_t>(oracle::eccentricity(adj, 0))));
  }
}

TEST(EtaProperty, LabelsGrowWithTheCutoff) {
  std::mt19937_64 rng(43);
  for (auto const* text : {"w", "w+2", "w*2", "w*2+1", "w^2", "w^2+w"}) {
    auto const eta = ord(text);
    for (int i = 0; i < 100; ++i) {
      auto const e = random_eta_element(eta, 3, rng);
      ASSERT_NO_THROW(validate_eta(eta, e));
      auto const exact = label_eta(eta, e);
      auto const three = label_eta(eta, e, 3);
      auto const four  = label_eta(eta, e, 4);
      ASSERT_LE(three, four) << e.to_string();
      ASSERT_LE(four, exact) << e.to_string();
      ASSERT_LE(exact, radius_eta(eta));
    }
  }
}

TEST(EtaProperty, TextRoundTrip) {
  std::mt19937_64 rng(47);
  for (auto const* text : {"0", "3", "w", "w+1", "w*2+2", "w^2+1"}) {
    auto const eta = ord(text);
    for (int i = 0; i < 50; ++i) {
      auto const e       = random_eta_element(eta, 3, rng);
      auto const printed = e.to_string();
      auto const back    = parse_eta_element(eta, printed);
      ASSERT_EQ(back, e) << printed;
      ASSERT_EQ(back.to_string(), printed);
      ASSERT_EQ(dist_eta(eta, back), dist_eta(eta, e));
    }
  }
}
