#pragma once

// Rooted isomorphism of balls, canonical forms, weak transitivity and weak
// isomorphism at bounded radius.
//
// Canonical forms use colour refinement (initial colour = distance to the
// root, refined by the multiset of neighbour colours until stable), then
// individualise the vertices of the first non-singleton cell one at a time
// and keep the lexicographically least certificate over all leaves. Twins
// (N(u) \ {v} == N(v) \ {u}) in a cell give isomorphic subtrees, so only one
// of them is tried. The search is exact; a node budget turns runaway
// searches into BudgetExceeded.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gallery.hpp"
#include "geodesy.hpp"
#include "graph.hpp"

namespace geodometer {

  inline constexpr std::size_t kDefaultSearchBudget = 200'000;

  struct CanonicalLabeling {
    std::vector<std::uint32_t> certificate;
    std::vector<std::uint32_t> order;  // order[k]: vertex at canonical position k
  };

  namespace detail {
    class Canonizer {
     public:
      Canonizer(RootedBall const& b, std::size_t budget) : b_(b), budget_(budget) {}

      CanonicalLabeling run() {
        std::vector<std::uint32_t> colors(b_.dist.begin(), b_.dist.end());
        search(std::move(colors));
        return std::move(best_);
      }

     private:
      // Replaces colours by the ranks of (colour, sorted neighbour colours)
      // until the number of cells stops growing.
      void refine(std::vector<std::uint32_t>& colors) const {
        auto const n     = colors.size();
        std::size_t cells = 0;
        std::vector<std::uint32_t> order(n);
        std::vector<std::vector<std::uint32_t>> signature(n);
        for (bool first = true;; first = false) {
          for (std::uint32_t v = 0; v < n; ++v) {
            auto& s = signature[v];
            s.assign(1, colors[v]);
            if (!first) {
              for (auto w : b_.adjacency[v]) {
                s.push_back(colors[w]);
              }
              std::sort(s.begin() + 1, s.end());
            }
          }
          std::iota(order.begin(), order.end(), 0U);
          std::sort(order.begin(), order.end(),
                    [&](auto x, auto y) { return signature[x] < signature[y]; });
          std::uint32_t rank = 0;
          for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && signature[order[i]] != signature[order[i - 1]]) {
              ++rank;
            }
            colors[order[i]] = rank;
          }
          auto const now = n == 0 ? 0 : static_cast<std::size_t>(rank) + 1;
          if (!first && now == cells) {
            return;
          }
          cells = now;
        }
      }

      bool twins(std::uint32_t u, std::uint32_t v) const {
        auto strip = [](std::vector<std::uint32_t> nb, std::uint32_t x) {
          std::erase(nb, x);
          return nb;
        };
        return strip(b_.adjacency[u], v) == strip(b_.adjacency[v], u);
      }

      void search(std::vector<std::uint32_t> colors) {
        if (++nodes_ > budget_) {
          throw BudgetExceeded("canonical form search exceeded " + std::to_string(budget_)
                               + " nodes");
        }
        refine(colors);
        auto const n = colors.size();
        std::vector<std::size_t> cell_size(n, 0);
        for (auto c : colors) {
          ++cell_size[c];
        }
        auto const target = std::find_if(cell_size.begin(), cell_size.end(),
                                         [](std::size_t s) { return s > 1; });
        if (target == cell_size.end()) {
          leaf(colors);
          return;
        }
        auto const cell = static_cast<std::uint32_t>(target - cell_size.begin());
        std::vector<std::uint32_t> tried;
        for (std::uint32_t v = 0; v < n; ++v) {
          if (colors[v] != cell) {
            continue;
          }
          if (std::any_of(tried.begin(), tried.end(), [&](auto u) { return twins(u, v); })) {
            continue;
          }
          tried.push_back(v);
          auto next = colors;
          for (std::uint32_t x = 0; x < n; ++x) {
            next[x] = 2 * colors[x] + (colors[x] == cell && x != v ? 1 : 0);
          }
          search(std::move(next));
        }
      }

      void leaf(std::vector<std::uint32_t> const& colors) {
        auto const n = colors.size();
        CanonicalLabeling candidate;
        candidate.order.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) {
          candidate.order[colors[v]] = v;
        }
        auto& cert = candidate.certificate;
        cert.push_back(static_cast<std::uint32_t>(n));
        for (auto v : candidate.order) {
          cert.push_back(b_.dist[v]);
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (std::uint32_t v = 0; v < n; ++v) {
          for (auto w : b_.adjacency[v]) {
            if (colors[v] < colors[w]) {
              edges.emplace_back(colors[v], colors[w]);
            }
          }
        }
        std::sort(edges.begin(), edges.end());
        for (auto [x, y] : edges) {
          cert.push_back(x);
          cert.push_back(y);
        }
        if (best_.order.empty() || cert < best_.certificate) {
          best_ = std::move(candidate);
        }
      }

      RootedBall const& b_;
      std::size_t       budget_;
      std::size_t       nodes_ = 0;
      CanonicalLabeling best_;
    };
  }  // namespace detail

  inline CanonicalLabeling canonical_labeling(RootedBall const& b,
                                              std::size_t budget = kDefaultSearchBudget) {
    if (b.size() == 0) {
      return {{0}, {}};
    }
    return detail::Canonizer(b, budget).run();
  }

  // Equal strings iff the balls are isomorphic as rooted graphs.
  inline std::string canonical_form(RootedBall const& b,
                                    std::size_t budget = kDefaultSearchBudget) {
    auto const  cert = canonical_labeling(b, budget).certificate;
    std::string out  = "n=" + std::to_string(cert[0]) + ";d=";
    auto const  n    = cert[0];
    for (std::uint32_t i = 0; i < n; ++i) {
      out += (i > 0 ? "," : "") + std::to_string(cert[1 + i]);
    }
    out += ";e=";
    for (std::size_t i = 1 + n; i + 1 < cert.size(); i += 2) {
      out += (i > 1 + n ? "," : "") + std::to_string(cert[i]) + "-" + std::to_string(cert[i + 1]);
    }
    return out;
  }

  // True if map is a bijection a -> b fixing the root and preserving
  // adjacency and distance annotations.
  inline bool is_rooted_iso(RootedBall const& a, RootedBall const& b,
                            std::vector<std::uint32_t> const& map) {
    if (a.size() != b.size() || map.size() != a.size() || (a.size() > 0 && map[0] != 0)) {
      return false;
    }
    std::vector<bool> hit(b.size(), false);
    for (auto x : map) {
      if (x >= b.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (std::uint32_t v = 0; v < a.size(); ++v) {
      if (a.dist[v] != b.dist[map[v]] || a.adjacency[v].size() != b.adjacency[map[v]].size()) {
        return false;
      }
      for (auto w : a.adjacency[v]) {
        if (!b.has_edge(map[v], map[w])) {
          return false;
        }
      }
    }
    return true;
  }

  // A rooted isomorphism a -> b (as a vertex index map), if one exists.
  inline std::optional<std::vector<std::uint32_t>> rooted_iso(
      RootedBall const& a, RootedBall const& b, std::size_t budget = kDefaultSearchBudget) {
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) {
      return std::nullopt;
    }
    auto const la = canonical_labeling(a, budget);
    auto const lb = canonical_labeling(b, budget);
    if (la.certificate != lb.certificate) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> map(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      map[la.order[k]] = lb.order[k];
    }
    if (!is_rooted_iso(a, b, map)) {
      throw Error("rooted_iso: canonical labelings produced an invalid witness");
    }
    return map;
  }

  ////////////////////////////////////////////////////////////////////////
  // Weak transitivity and weak isomorphism
  ////////////////////////////////////////////////////////////////////////

  struct WeakTransitivity {
    bool                                         ok = true;
    std::optional<std::pair<VertexId, VertexId>> witness;  // non-isomorphic balls
  };

  template <ImplicitGraph G>
  WeakTransitivity weak_transitive_check(G const& g, std::vector<VertexId> const& region,
                                         unsigned r, std::size_t budget = kDefaultBudget) {
    WeakTransitivity result;
    std::optional<std::string> first;
    for (auto const& v : region) {
      auto form = canonical_form(ball(g, v, r, budget));
      if (!first) {
        first = std::move(form);
      } else if (form != *first) {
        result.ok      = false;
        result.witness = std::make_pair(region.front(), v);
        return result;
      }
    }
    return result;
  }

  // A truncation of some graph, matched to the radius at which it will be
  // compared; nullopt when no truncation is available at that radius.
  using GraphFamily = std::function<std::optional<AnyGraph>(unsigned radius)>;

  inline GraphFamily constant_family(AnyGraph g) {
    return [g = std::move(g)](unsigned) -> std::optional<AnyGraph> { return g; };
  }

  struct WeakIsoReport {
    unsigned          K = 0;  // largest n <= r with isomorphic balls at every m <= n
    double            distance = 1.0;  // 2^-K
    std::vector<bool> iso_at;          // indexed by radius 0..r
    bool              downward_closed = true;
    std::optional<std::vector<std::uint32_t>> witness;  // at radius K
  };

  inline WeakIsoReport weak_iso_upto(GraphFamily const& a, GraphFamily const& b, unsigned r,
                                     std::size_t budget = kDefaultBudget) {
    WeakIsoReport report;
    bool          prefix = true;
    for (unsigned n = 0; n <= r; ++n) {
      auto ga = a(n);
      auto gb = b(n);
      std::optional<std::vector<std::uint32_t>> iso;
      if (ga && gb) {
        iso = rooted_iso(ball(*ga, ga->origin(), n, budget), ball(*gb, gb->origin(), n, budget));
      }
      if (iso && !prefix) {
        report.downward_closed = false;
      }
      prefix = prefix && iso.has_value();
      if (prefix) {
        report.K       = n;
        report.witness = iso;
      }
      report.iso_at.push_back(iso.has_value());
    }
    report.distance = std::ldexp(1.0, -static_cast<int>(report.K));
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word graph components
  ////////////////////////////////////////////////////////////////////////

  // g with the single edge {a, b} removed.
  template <ImplicitGraph G>
  class WithoutEdge {
   public:
    WithoutEdge(G const& g, VertexId a, VertexId b) : g_(&g), a_(std::move(a)), b_(std::move(b)) {}

    VertexId origin() const {
      return g_->origin();
    }
    std::vector<VertexId> neighbors(VertexId const& v) const {
      auto out = g_->neighbors(v);
      if (v == a_) {
        std::erase(out, b_);
      } else if (v == b_) {
        std::erase(out, a_);
      }
      return out;
    }
    std::string format(VertexId const& v) const {
      return g_->format(v);
    }
    VertexId parse(std::string_view text) const {
      return g_->parse(text);
    }
    std::string describe() const {
      return g_->describe() + " minus an edge";
    }

   private:
    G const* g_;
    VertexId a_;
    VertexId b_;
  };

  struct HComponent {
    std::string word;
    bool        first_letter_only = false;  // a one-letter word: its component is a copy of G
    std::size_t ball_size         = 0;      // rule-2 component ball of radius horizon
    unsigned    max_zigzag        = 0;      // capped at horizon
    bool        bounded           = false;  // max_zigzag < horizon
  };

  // Looks at the rule-2 component of w: a copy of G for one-letter words, of
  // G' otherwise. G has no long zigzag-free geodesics while G' (through its
  // Z coordinate) does.
  inline HComponent h_component_analysis(WordGraph const& h, VertexId const& w, unsigned horizon,
                                         std::size_t budget = kDefaultBudget) {
    auto const view = h.rule2_view();
    HComponent c;
    c.word              = h.format(w);
    c.first_letter_only = h.decode(w).size() == 1;
    c.ball_size         = ball(view, w, horizon, budget).size();
    c.max_zigzag        = max_zigzag_geodesic(view, w, horizon, budget);
    c.bounded           = c.max_zigzag < horizon;
    return c;
  }

  // Bounded version of "removing a rule-1 edge disconnects its endpoints": no
  // path of length <= 2 * horizon joins them once the edge is gone. Throws if
  // {u, v} is not a rule-1 edge.
  inline bool rule1_cut_edge_check(WordGraph const& h, VertexId const& u, VertexId const& v,
                                   unsigned horizon, std::size_t budget = kDefaultBudget) {
    if (h.edge_rule(u, v) != 1) {
      throw InvalidArgument("rule1_cut_edge_check: not a rule-1 edge");
    }
    // A path of length <= 2 * horizon has a vertex within horizon of both ends.
    WithoutEdge<WordGraph>                 cut(h, u, v);
    detail::Bfs<WithoutEdge<WordGraph>> from_u(cut, u, budget);
    detail::Bfs<WithoutEdge<WordGraph>> from_v(cut, v, budget);
    from_u.grow_to(horizon);
    from_v.grow_to(horizon);
    auto const& small = std::min(from_u.distances().size(), from_v.distances().size())
                                == from_u.distances().size()
                            ? from_u
                            : from_v;
    auto const& large = &small == &from_u ? from_v : from_u;
    for (auto const& [x, d] : small.distances()) {
      if (large.find(x)) {
        return false;
      }
    }
    return true;
  }

}  // namespace geodometer
