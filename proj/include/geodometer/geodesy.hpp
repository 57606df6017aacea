#pragma once

// Generalised radius and diameter, the erasure process on the poset of
// geodesics from a root, zigzag-free paths, folding of geodesics in abelian
// Cayley graphs, and edge-label progressions.
//
// Labels: with v -> w meaning {v,w} is an edge and d(o,w) = d(o,v) + 1, the
// label map is the unique L with L_v = sup+{L_w : v -> w}. On a finite graph
// every label is a natural number and L_o is the eccentricity of o.
//
// Erasure: the geodesic paths starting at o, ordered by "gamma <= kappa iff
// gamma extends kappa", lose their minimal elements in rounds 0, 1, 2, ...;
// the rank of a path is the round in which it disappears. The rank of the
// length-0 path is the generalised radius.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gallery.hpp"
#include "graph.hpp"
#include "ordinal.hpp"

namespace geodometer {

  ////////////////////////////////////////////////////////////////////////
  // Labels
  ////////////////////////////////////////////////////////////////////////

  struct LabelMap {
    RootedBall              ball;
    std::vector<ExtOrdinal> labels;  // parallel to ball.ids

    [[nodiscard]] ExtOrdinal const& at(VertexId const& v) const {
      auto i = ball.index_of(v);
      if (!i) {
        throw InvalidArgument("label requested for a vertex outside the ball");
      }
      return labels[*i];
    }

    [[nodiscard]] ExtOrdinal const& root() const {
      return labels.at(0);
    }
  };

  namespace detail {
    // Labels on an explicit graph from BFS distances. Vertices must be listed
    // in non-decreasing distance.
    inline std::vector<unsigned> labels_by_distance(
        std::vector<std::vector<std::uint32_t>> const& adjacency,
        std::vector<unsigned> const&                   dist) {
      std::vector<unsigned> label(adjacency.size(), 0);
      for (auto i = adjacency.size(); i-- > 0;) {
        for (auto j : adjacency[i]) {
          if (dist[j] == dist[i] + 1) {
            label[i] = std::max(label[i], label[j] + 1);
          }
        }
      }
      return label;
    }

    inline std::vector<unsigned> bfs_distances(
        std::vector<std::vector<std::uint32_t>> const& adjacency, std::uint32_t source) {
      constexpr auto        unseen = std::numeric_limits<unsigned>::max();
      std::vector<unsigned> dist(adjacency.size(), unseen);
      std::deque<std::uint32_t> queue{source};
      dist[source] = 0;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adjacency[v]) {
          if (dist[w] == unseen) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      return dist;
    }
  }  // namespace detail

  // Labels on a ball. Arrows leaving the boundary sphere are unknown, so the
  // ball must be the whole component.
  inline LabelMap label_all(RootedBall ball) {
    if (!ball.closed) {
      throw ClippedBall("label_all: the ball of radius " + std::to_string(ball.radius)
                        + " does not contain the whole graph");
    }
    auto const raw = detail::labels_by_distance(ball.adjacency, ball.dist);
    LabelMap   map;
    map.ball = std::move(ball);
    map.labels.reserve(raw.size());
    for (auto x : raw) {
      map.labels.push_back(ExtOrdinal::natural(x));
    }
    return map;
  }

  template <ImplicitGraph G>
  LabelMap label_all(G const& g, VertexId const& o, std::size_t budget = kDefaultBudget) {
    return label_all(materialize(g, o, budget));
  }

  inline ExtOrdinal generalized_radius(RootedBall const& ball) {
    return label_all(ball).root();
  }

  template <ImplicitGraph G>
  ExtOrdinal generalized_radius(G const& g, VertexId const& o,
                                std::size_t budget = kDefaultBudget) {
    return label_all(g, o, budget).root();
  }

  // Maximum of the generalised radius over all roots.
  template <ImplicitGraph G>
  ExtOrdinal generalized_diameter(G const& g, std::size_t budget = kDefaultBudget) {
    auto const b    = materialize(g, g.origin(), budget);
    unsigned   best = 0;
    for (std::uint32_t root = 0; root < b.size(); ++root) {
      auto const dist = detail::bfs_distances(b.adjacency, root);
      std::vector<std::uint32_t> order(b.size());
      for (std::uint32_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](auto x, auto y) { return dist[x] < dist[y]; });
      std::vector<std::uint32_t> position(b.size());
      for (std::uint32_t i = 0; i < order.size(); ++i) {
        position[order[i]] = i;
      }
      std::vector<std::vector<std::uint32_t>> adjacency(b.size());
      std::vector<unsigned>                   sorted_dist(b.size());
      for (std::uint32_t i = 0; i < order.size(); ++i) {
        sorted_dist[i] = dist[order[i]];
        for (auto j : b.adjacency[order[i]]) {
          adjacency[i].push_back(position[j]);
        }
      }
      best = std::max(best, detail::labels_by_distance(adjacency, sorted_dist).front());
    }
    return ExtOrdinal::natural(best);
  }

  ////////////////////////////////////////////////////////////////////////
  // Erasure
  ////////////////////////////////////////////////////////////////////////

  struct ErasureNode {
    std::int64_t  parent = -1;  // -1 for the length-0 path
    std::uint32_t vertex = 0;   // index into the ball
    std::uint32_t length = 0;
    std::uint32_t rank   = 0;
  };

  struct ErasureResult {
    RootedBall               graph;
    std::vector<ErasureNode> nodes;  // nodes[0] is the length-0 path
    ExtOrdinal               radius;

    [[nodiscard]] GeodPath path(std::size_t node) const {
      GeodPath p;
      for (auto i = static_cast<std::int64_t>(node); i >= 0; i = nodes[i].parent) {
        p.vertices.push_back(graph.ids[nodes[i].vertex]);
      }
      std::reverse(p.vertices.begin(), p.vertices.end());
      return p;
    }
  };

  // Builds every geodesic path from o (checking all pairwise distances) and
  // erases minimal elements round by round. Throws HorizonTooSmall if some
  // geodesic is longer than maxlen and BudgetExceeded past path_budget paths.
  template <ImplicitGraph G>
  ErasureResult erasure_rank(G const& g, VertexId const& o, unsigned maxlen,
                             std::size_t path_budget = 5 * kDefaultBudget,
                             std::size_t vertex_budget = kDefaultBudget) {
    ErasureResult result;
    result.graph  = materialize(g, o, vertex_budget);
    auto const& b = result.graph;

    std::vector<std::vector<unsigned>> rows(b.size());
    auto dist = [&](std::uint32_t u, std::uint32_t v) {
      if (rows[u].empty()) {
        rows[u] = detail::bfs_distances(b.adjacency, u);
      }
      return rows[u][v];
    };

    auto& nodes = result.nodes;
    nodes.push_back({-1, 0, 0, 0});
    std::vector<std::uint32_t> path;
    std::vector<std::uint32_t> unranked_children;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      path.clear();
      for (auto j = static_cast<std::int64_t>(i); j >= 0; j = nodes[j].parent) {
        path.push_back(nodes[j].vertex);
      }
      std::reverse(path.begin(), path.end());
      auto const len = static_cast<unsigned>(path.size() - 1);
      for (auto x : b.adjacency[path.back()]) {
        bool geodesic = true;
        for (std::size_t k = 0; k < path.size() && geodesic; ++k) {
          geodesic = dist(path[k], x) == len + 1 - k;
        }
        if (!geodesic) {
          continue;
        }
        if (len + 1 > maxlen) {
          throw HorizonTooSmall("erasure_rank: a geodesic from the root is longer than maxlen "
                                + std::to_string(maxlen));
        }
        nodes.push_back({static_cast<std::int64_t>(i), x, len + 1, 0});
        if (nodes.size() > path_budget) {
          throw BudgetExceeded("erasure_rank: more than " + std::to_string(path_budget)
                               + " geodesics");
        }
      }
    }

    // Round r removes the paths all of whose one-step extensions are gone.
    unranked_children.assign(nodes.size(), 0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      ++unranked_children[nodes[i].parent];
    }
    std::vector<std::size_t> remaining(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      remaining[i] = i;
    }
    for (std::uint32_t round = 0; !remaining.empty(); ++round) {
      std::vector<std::size_t> minimal;
      std::vector<std::size_t> rest;
      for (auto i : remaining) {
        (unranked_children[i] == 0 ? minimal : rest).push_back(i);
      }
      for (auto i : minimal) {
        nodes[i].rank = round;
        if (nodes[i].parent >= 0) {
          --unranked_children[nodes[i].parent];
        }
      }
      remaining = std::move(rest);
    }
    result.radius = ExtOrdinal::natural(nodes[0].rank);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Zigzag-free paths
  ////////////////////////////////////////////////////////////////////////

  template <ImplicitGraph G>
  std::size_t common_neighbor_count(G const& g, VertexId const& a, VertexId const& b) {
    auto const x = g.neighbors(a);
    auto const y = g.neighbors(b);
    std::size_t n = 0;
    for (auto i = x.begin(), j = y.begin(); i != x.end() && j != y.end();) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++n;
        ++i;
        ++j;
      }
    }
    return n;
  }

  // Every pair p(k), p(k+2) is joined by exactly one path of length 2.
  template <ImplicitGraph G>
  bool is_zigzag_free(G const& g, GeodPath const& p) {
    if (!is_path(g, p)) {
      throw InvalidArgument("is_zigzag_free: not a path in " + g.describe());
    }
    for (std::size_t k = 0; k + 2 < p.vertices.size(); ++k) {
      if (p.vertices[k] == p.vertices[k + 2]
          || common_neighbor_count(g, p.vertices[k], p.vertices[k + 2]) != 1) {
        return false;
      }
    }
    return true;
  }

  // Length of the longest zigzag-free geodesic through o, searching paths of
  // length at most horizon. A result equal to horizon means "at least".
  template <ImplicitGraph G>
  unsigned max_zigzag_geodesic(G const& g, VertexId const& o, unsigned horizon,
                               std::size_t budget = kDefaultBudget) {
    DistanceOracle<G>    dist(g, budget);
    std::deque<VertexId> path{o};
    unsigned             best = 0;

    // Appending x to a geodesic keeps it geodesic iff x is at distance
    // length + 1 from the far end.
    auto extends = [&](VertexId const& x, VertexId const& far, VertexId const& two_back) {
      auto const len = static_cast<unsigned>(path.size() - 1);
      auto const d   = dist(far, x, len + 1);
      if (!d || *d != len + 1) {
        return false;
      }
      return len == 0 || common_neighbor_count(g, two_back, x) == 1;
    };

    std::function<bool()> backward = [&]() -> bool {
      best = std::max(best, static_cast<unsigned>(path.size() - 1));
      if (best >= horizon) {
        return true;
      }
      auto const front = path.front();
      for (auto const& x : g.neighbors(front)) {
        if (extends(x, path.back(), path.size() > 1 ? path[1] : front)) {
          path.push_front(x);
          bool const done = backward();
          path.pop_front();
          if (done) {
            return true;
          }
        }
      }
      return false;
    };

    std::function<bool()> forward = [&]() -> bool {
      if (backward()) {
        return true;
      }
      auto const back = path.back();
      for (auto const& x : g.neighbors(back)) {
        if (extends(x, path.front(), path.size() > 1 ? path[path.size() - 2] : back)) {
          path.push_back(x);
          bool const done = forward();
          path.pop_back();
          if (done) {
            return true;
          }
        }
      }
      return false;
    };

    forward();
    return std::min(best, horizon);
  }

  // Label of a basis-graph edge recovered from the graph alone: one more than
  // the least L >= 2 such that a zigzag-free path of length L joins the
  // endpoints, and 2 when there is none. This agrees with edge_label_direct
  // except on label-4 edges, which an automorphism exchanges with label-2
  // edges and which therefore also get 2.
  inline std::int64_t edge_label_intrinsic(CayleyGraph const& g, VertexId const& u,
                                           VertexId const& v, unsigned horizon) {
    if (!g.adjacent(u, v)) {
      throw InvalidArgument("edge_label_intrinsic: not an edge");
    }
    std::int64_t largest = 0;
    for (auto const& c : g.spec().coords) {
      largest = std::max(largest, c.order);
    }
    if (static_cast<std::int64_t>(horizon) + 1 < largest) {
      throw HorizonTooSmall("edge_label_intrinsic: horizon must be at least "
                            + std::to_string(largest - 1));
    }
    std::vector<VertexId> walk{u};
    std::function<bool(unsigned)> reach = [&](unsigned steps_left) -> bool {
      if (steps_left == 0) {
        return walk.back() == v;
      }
      for (auto const& x : g.neighbors(walk.back())) {
        if (walk.size() >= 2
            && (x == walk[walk.size() - 2]
                || common_neighbor_count(g, walk[walk.size() - 2], x) != 1)) {
          continue;
        }
        walk.push_back(x);
        bool const found = reach(steps_left - 1);
        walk.pop_back();
        if (found) {
          return true;
        }
      }
      return false;
    };
    for (unsigned L = 2; L <= horizon; ++L) {
      if (reach(L)) {
        return L + 1;
      }
    }
    return 2;
  }

  ////////////////////////////////////////////////////////////////////////
  // Folding
  ////////////////////////////////////////////////////////////////////////

  // For gamma on [0, 2n] with steps s_k = gamma(k+1) - gamma(k), the path
  // kappa on [-n, n] with kappa(0) = gamma(0), forward steps s_0, s_2, ...
  // and backward steps s_1, s_3, ... Then kappa(n) - kappa(-n) equals
  // gamma(2n) - gamma(0).
  template <AbelianCayleyGraph G>
  GeodPath fold_geodesic(G const& g, GeodPath const& gamma) {
    if (!g.has_group_ops()) {
      throw InvalidArgument("fold_geodesic needs a Cayley graph of an abelian group");
    }
    if (gamma.vertices.empty() || gamma.length() % 2 != 0) {
      throw InvalidArgument("fold_geodesic needs a path of even length");
    }
    auto const n = gamma.length() / 2;
    std::vector<VertexId> forward{gamma.vertices.front()};
    std::vector<VertexId> backward{gamma.vertices.front()};
    for (std::size_t k = 0; k < n; ++k) {
      auto even = g.subtract(gamma.vertices[2 * k + 1], gamma.vertices[2 * k]);
      auto odd  = g.subtract(gamma.vertices[2 * k + 2], gamma.vertices[2 * k + 1]);
      forward.push_back(g.add(forward.back(), even));
      backward.push_back(g.subtract(backward.back(), odd));
    }
    GeodPath kappa;
    kappa.base = -static_cast<std::int64_t>(n);
    kappa.vertices.assign(backward.rbegin(), backward.rend() - 1);
    kappa.vertices.insert(kappa.vertices.end(), forward.begin(), forward.end());
    return kappa;
  }

  ////////////////////////////////////////////////////////////////////////
  // Label progressions
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::int64_t> edge_labels(CayleyGraph const& g, GeodPath const& p) {
    std::vector<std::int64_t> labels;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      labels.push_back(edge_label_direct(g, p.vertices[i], p.vertices[i + 1]));
    }
    return labels;
  }

  // Every window of three consecutive edge labels a, b, c satisfies
  // |a - b| = |b - c| = 1 and a != c. Paths with fewer than three edges
  // qualify vacuously.
  inline bool pset_member(CayleyGraph const& g, GeodPath const& p) {
    auto const labels = edge_labels(g, p);
    for (std::size_t k = 0; k + 2 < labels.size(); ++k) {
      auto const a = labels[k];
      auto const b = labels[k + 1];
      auto const c = labels[k + 2];
      if ((a - b != 1 && b - a != 1) || (b - c != 1 && c - b != 1) || a == c) {
        return false;
      }
    }
    return true;
  }

  struct Progression {
    int          a = 1;  // +1 or -1
    std::int64_t b = 0;

    friend bool operator==(Progression const&, Progression const&) = default;
  };

  // (a, b) with the label of the edge {p(k), p(k+1)} equal to a*k + b for
  // every k in the domain, if there is one.
  inline std::optional<Progression> pset_progression(CayleyGraph const& g, GeodPath const& p) {
    if (p.length() < 3) {
      throw InvalidArgument("pset_progression needs a path with at least 3 edges");
    }
    auto const labels = edge_labels(g, p);
    for (int a : {1, -1}) {
      auto const b = labels[0] - a * p.base;
      bool       ok = true;
      for (std::size_t i = 0; i < labels.size() && ok; ++i) {
        ok = labels[i] == a * (p.base + static_cast<std::int64_t>(i)) + b;
      }
      if (ok) {
        return Progression{a, b};
      }
    }
    return std::nullopt;
  }

}  // namespace geodometer
