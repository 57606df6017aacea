#pragma once

// Self-checking bundles behind `geodometer reproduce <id>`. Each bundle runs
// its computations on fixed truncations and records one assertion per
// claim, with ordinals written in notation text.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gallery.hpp"
#include "geodesy.hpp"
#include "graph.hpp"
#include "graph_spec.hpp"
#include "isometry.hpp"
#include "ordinal.hpp"
#include "serialize.hpp"
#include "transfinite.hpp"

namespace geodometer {

  inline std::vector<std::string> const& reproduce_ids() {
    static std::vector<std::string> const ids{"fan",        "hypercube", "factorial",
                                              "theorem",    "yesabelian", "cexlemma",
                                              "nonhausdorff", "wordH"};
    return ids;
  }

  // The witness path k -> sum_{2<=n<=k+1} e_n on [0, length] in basis_graph(length+1).
  inline GeodPath witness_ray_prefix(CayleyGraph const& g, std::size_t length) {
    GeodPath     p;
    GroupElement x = g.spec().zero();
    p.vertices.push_back(g.vertex(x));
    for (std::size_t k = 1; k <= length; ++k) {
      auto pos = g.spec().position(static_cast<std::int64_t>(k) + 1);
      if (!pos) {
        throw InvalidArgument("witness_ray_prefix: truncation too small");
      }
      x[*pos] = 1;
      p.vertices.push_back(g.vertex(x));
    }
    return p;
  }

  // A random geodesic of the requested length from a random nearby start,
  // grown one step at a time; nullopt if no attempt reaches the length.
  template <ImplicitGraph G, typename Rng>
  std::optional<GeodPath> random_geodesic(G const& g, DistanceOracle<G>& dist, std::size_t length,
                                          Rng& rng, int attempts = 50) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
      GeodPath p{0, {g.origin()}};
      std::uniform_int_distribution<int> hops(0, 4);
      for (int i = hops(rng); i > 0; --i) {
        auto nb = g.neighbors(p.vertices[0]);
        p.vertices[0] = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
      }
      while (p.length() < length) {
        std::vector<VertexId> options;
        for (auto const& x : g.neighbors(p.vertices.back())) {
          auto const need = static_cast<unsigned>(p.length() + 1);
          auto const d    = dist(p.vertices.front(), x, need);
          if (d && *d == need) {
            options.push_back(x);
          }
        }
        if (options.empty()) {
          break;
        }
        p.vertices.push_back(
            options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
      }
      if (p.length() == length) {
        return p;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    inline void reproduce_fan(RunReport& report) {
      Json radii = Json::object();
      for (std::int64_t N = 1; N <= 10; ++N) {
        auto const g      = fan_graph(N);
        auto const radius = generalized_radius(g, g.origin());
        auto const erased = erasure_rank(g, g.origin(), static_cast<unsigned>(N)).radius;
        radii[std::to_string(N)] = radius.to_string();
        report.check("fan_" + std::to_string(N) + " radius = N",
                     radius == ExtOrdinal::natural(static_cast<std::uint64_t>(N)));
        report.check("fan_" + std::to_string(N) + " radius = erasure rank", radius == erased);
      }
      report.graph            = "fan:N=1..10";
      report.results["radius"] = radii;
    }

    inline void reproduce_hypercube(RunReport& report) {
      std::uint64_t walks = 0;
      std::uint64_t bad   = 0;
      for (std::int64_t N = 2; N <= 5; ++N) {
        auto const g = hypercube_graph(N);
        DistanceOracle<CayleyGraph> dist(g);
        for (unsigned L = 1; L <= 4; ++L) {
          std::vector<VertexId> walk{g.origin()};
          std::function<void()> extend = [&] {
            if (walk.size() == L + 1) {
              ++walks;
              auto d = dist(walk.front(), walk.back(), L);
              if (!d || *d > L - 1) {
                ++bad;
              }
              return;
            }
            for (auto const& x : g.neighbors(walk.back())) {
              if (walk.size() == 1) {
                auto const e = g.element(x);
                bool       low = true;
                for (std::size_t i = 0; i < e.size(); ++i) {
                  low = low && (e[i] == 0 || g.spec().coords[i].index < static_cast<std::int64_t>(L));
                }
                if (!low) {
                  continue;
                }
              }
              walk.push_back(x);
              extend();
              walk.pop_back();
            }
          };
          extend();
        }
      }
      report.graph                    = "hypercube:N=2..5";
      report.results["walks_checked"] = walks;
      report.results["violations"]    = bad;
      report.check("d(k(0),k(L)) <= L-1 for every walk with k(1) supported below L", bad == 0);
    }

    inline void reproduce_factorial(RunReport& report) {
      auto const            g = factorial_graph(4);
      auto const            q = factorial_quotient_graph(4);
      std::set<std::int64_t> projected;
      for (auto const& s : g.generators()) {
        projected.insert(((s[0] % 24) + 24) % 24);
      }
      std::set<std::int64_t> quotient;
      for (auto const& s : q.generators()) {
        quotient.insert(s[0]);
      }
      auto const diameter = generalized_diameter(q);
      auto const bound    = 4.0 / (2.0 * std::exp(1.0));
      report.graph                    = "factorial:N=4";
      report.results["pi_S"] = std::vector<std::int64_t>(projected.begin(), projected.end());
      report.results["quotient_diameter"] = diameter.to_string();
      report.results["lower_bound"]   = bound;
      // 24 = 4! projects to the identity, which is not an edge.
      projected.erase(0);
      report.check("pi(S) minus 0 = generators of the quotient", projected == quotient);
      report.check("quotient diameter >= N/(2e)",
                   static_cast<double>(*diameter.as_natural()) >= bound);
      report.check("quotient diameter = 2", diameter == ExtOrdinal::natural(2));
    }

    inline void reproduce_theorem(RunReport& report) {
      Json radii = Json::object();
      for (auto const* text : {"0", "1", "2", "3", "5", "w", "w+1", "w+5", "w*2", "w*2+5", "w^2",
                               "w^2+w*3+1"}) {
        auto const eta = parse_ordinal(text);
        auto const r   = radius_eta(eta);
        radii[eta.to_string()] = r.to_string();
        report.check("radius of G_" + eta.to_string() + " is " + eta.to_string(), r == eta);
      }
      // Exact recursions against BFS and labels on small truncations.
      for (auto const* text : {"1", "2", "3", "4", "w", "w+1", "w*2", "w^2"}) {
        auto const eta    = parse_ordinal(text);
        auto const cutoff = eta.is_natural() ? 0 : (eta == ExtOrdinal::omega() ? 4 : 2);
        auto const t      = instantiate_eta(eta, cutoff);
        auto const labels = label_all(t.graph(), t.graph().origin());
        bool       ok     = true;
        for (std::size_t i = 0; i < labels.ball.size(); ++i) {
          auto const e = t.decode(labels.ball.ids[i]);
          ok = ok && dist_eta(eta, e) == labels.ball.dist[i]
               && label_eta(eta, e, cutoff ? std::optional<std::uint64_t>(cutoff) : std::nullopt)
                      == labels.labels[i];
        }
        report.check("recursions match BFS on " + t.graph().describe() + " ("
                         + std::to_string(labels.ball.size()) + " elements)",
                     ok);
      }
      report.graph             = "eta";
      report.results["radius"] = radii;
    }

    inline void reproduce_yesabelian(RunReport& report, std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      std::vector<CayleyGraph> graphs{hypercube_graph(5), basis_graph(6),  basis_graph_z(4),
                                      factorial_graph(3), quotient_hn_graph(1, 5)};
      std::size_t folded = 0;
      std::size_t good   = 0;
      for (int i = 0; i < 200; ++i) {
        auto const& g = graphs[static_cast<std::size_t>(i) % graphs.size()];
        DistanceOracle<CayleyGraph> dist(g);
        std::optional<GeodPath>     gamma;
        for (auto len = 2 * std::uniform_int_distribution<std::size_t>(0, 6)(rng); !gamma; len -= 2) {
          gamma = random_geodesic(g, dist, len, rng);
        }
        auto const kappa = fold_geodesic(g, *gamma);
        auto const n     = static_cast<std::int64_t>(gamma->length() / 2);
        bool const identity =
            g.subtract(kappa.at(n), kappa.at(-n)) == g.subtract(gamma->vertices.back(), gamma->vertices.front());
        ++folded;
        if (identity && is_geodesic(g, kappa, dist)) {
          ++good;
        }
      }
      report.graph               = "hypercube:N=5 basis:M=6 basisZ:M=4 factorial:N=3 hn:N=1,M=5";
      report.params["seed"]      = seed;
      report.results["folded"]   = folded;
      report.results["geodesic"] = good;
      report.check("every folded geodesic is geodesic and spans gamma(2n) - gamma(0)",
                   good == folded);
    }

    inline void reproduce_cexlemma(RunReport& report) {
      auto const big = basis_graph(13);
      bool       witness = true;
      for (std::size_t len = 0; len <= 12; ++len) {
        auto const p = witness_ray_prefix(big, len);
        witness = witness && pset_member(big, p)
                  && (len < 3 || pset_progression(big, p) == Progression{1, 2});
      }
      report.check("witness prefixes of length <= 12 are members with labels k+2", witness);

      auto const  g = basis_graph(5);
      std::size_t members = 0;
      std::size_t arithmetic = 0;
      std::size_t invariant = 0;
      GeodPath    p{0, {g.origin()}};
      std::function<void()> grow = [&] {
        if (p.length() >= 3) {
          ++members;
          if (pset_progression(g, p)) {
            ++arithmetic;
          }
          GeodPath reversed{-static_cast<std::int64_t>(p.length()) + 7,
                            {p.vertices.rbegin(), p.vertices.rend()}};
          if (pset_member(g, reversed)) {
            ++invariant;
          }
        }
        if (p.length() == 6) {
          return;
        }
        for (auto const& x : g.neighbors(p.vertices.back())) {
          p.vertices.push_back(x);
          if (pset_member(g, p)) {
            grow();
          }
          p.vertices.pop_back();
        }
      };
      grow();
      report.graph                   = "basis:M=5";
      report.results["members"]      = members;
      report.results["arithmetic"]   = arithmetic;
      report.check("members of length >= 3 have a +-1 label progression", members == arithmetic);
      report.check("membership is invariant under k -> -k + k0", members == invariant);
    }

    inline void reproduce_nonhausdorff(RunReport& report) {
      Json k = Json::object();
      Json zz = Json::object();
      for (std::int64_t M : {4, 5, 6}) {
        auto const M_str = std::to_string(M);
        auto const w     = weak_iso_upto(constant_family(basis_graph(M)),
                                         parse_family("hn:M=" + M_str), 1);
        k[M_str]         = w.K;
        report.check("balls of radius 1 agree for M = " + M_str, w.K >= 1);
        auto const g  = basis_graph(M);
        auto const gz = basis_graph_z(M);
        auto const h  = static_cast<unsigned>(M);
        auto const a  = max_zigzag_geodesic(g, g.origin(), h);
        auto const b  = max_zigzag_geodesic(gz, gz.origin(), h);
        zz[M_str]     = {{"basis", a}, {"basisZ", b}};
        report.check("zigzag discriminator fires for M = " + M_str,
                     a <= static_cast<unsigned>(M / 2) && b >= h);
      }
      report.graph              = "basis:M=4..6 vs hn:M=4..6";
      report.results["K"]       = k;
      report.results["zigzag"]  = zz;
    }

    inline void reproduce_word_h(RunReport& report) {
      auto const h = word_graph_h(4, 3);
      auto const a = h.parse("[0]");
      auto const b = h.parse("[0;0]");
      auto const wt = weak_transitive_check(h, {a, b}, 1);
      report.check("balls of radius 1 at [0] and [0;0] agree", wt.ok);
      unsigned const horizon = 5;
      auto const     ca      = h_component_analysis(h, a, horizon);
      auto const     cb      = h_component_analysis(h, b, horizon);
      report.results["zigzag"] = {{"[0]", ca.max_zigzag}, {"[0;0]", cb.max_zigzag}};
      report.check("rule-2 components are told apart at horizon 5", ca.bounded && !cb.bounded);
      report.check("rule-1 edge {[0],[0;0]} is a cut edge within radius 10",
                   rule1_cut_edge_check(h, a, b, horizon));
      report.graph = h.describe();
    }
  }  // namespace detail

  inline RunReport reproduce(std::string const& id, std::uint64_t seed = 1) {
    RunReport report;
    report.command    = "reproduce " + id;
    auto const start  = std::chrono::steady_clock::now();
    if (id == "fan") {
      detail::reproduce_fan(report);
    } else if (id == "hypercube") {
      detail::reproduce_hypercube(report);
    } else if (id == "factorial") {
      detail::reproduce_factorial(report);
    } else if (id == "theorem") {
      detail::reproduce_theorem(report);
    } else if (id == "yesabelian") {
      detail::reproduce_yesabelian(report, seed);
    } else if (id == "cexlemma") {
      detail::reproduce_cexlemma(report);
    } else if (id == "nonhausdorff") {
      detail::reproduce_nonhausdorff(report);
    } else if (id == "wordH") {
      detail::reproduce_word_h(report);
    } else {
      throw InvalidArgument("unknown reproduce id '" + id + "'");
    }
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

}  // namespace geodometer
