#pragma once

// The groups G_eta and generating sets S_eta, for eta < omega^omega:
//
//   G_0 = {0},                S_0 = {0}
//   G_{xi+1} = G_xi + Z/2,    S_{xi+1} = (S_xi x {0}) u {(0,1)}
//   G_lambda = sum_{xi<lambda} G_xi  (lambda a limit),
//             S_lambda = {g : g_xi in S_xi for every xi}
//
// Every S_xi contains 0, so in the limit case each coordinate may idle.
//
// Elements are term trees, written
//
//   {}                      the element of G_0, or the identity of a limit
//   (e,b)                   e in G_xi and b in {0,1}, for G_{xi+1}
//   {xi:e, xi':e', ...}     finitely supported map, for a limit
//
// where xi uses ordinal notation and support entries are never identities,
// e.g. {2:(({},0),1), w:{1:({},1)}} in G_{w*2}.
//
// Exact recursions:
//   d(g,b) = d(g) + b                  l(g,b) = l(g) + [b == 0]
//   d(g)   = max_xi d(g_xi)            l(g)   = max{l(g_xi) : d(g_xi) = d(g)}
// with l(0) = lambda at a limit. Finite truncations keep, below each limit,
// only the xi whose CNF coefficients are all below a fixed cutoff.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "gallery.hpp"
#include "graph.hpp"
#include "ordinal.hpp"

namespace geodometer {

  class EtaElement {
    struct Pair {
      std::shared_ptr<EtaElement const> base;
      bool                              bit = false;
    };
    using Map = std::vector<std::pair<ExtOrdinal, EtaElement>>;

   public:
    // {} : the element of G_0 or the identity of a limit group.
    EtaElement() = default;

    static EtaElement pair(EtaElement base, bool bit) {
      EtaElement e;
      e.value_ = Pair{std::make_shared<EtaElement const>(std::move(base)), bit};
      return e;
    }

    // Entries need not be sorted; identity entries must already be omitted.
    static EtaElement map(Map entries) {
      std::sort(entries.begin(), entries.end(),
                [](auto const& x, auto const& y) { return x.first < y.first; });
      for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].first == entries[i].first) {
          throw InvalidArgument("repeated coordinate " + entries[i].first.to_string());
        }
      }
      EtaElement e;
      e.value_ = std::move(entries);
      return e;
    }

    [[nodiscard]] bool is_pair() const noexcept {
      return std::holds_alternative<Pair>(value_);
    }
    [[nodiscard]] EtaElement const& base() const {
      return *std::get<Pair>(value_).base;
    }
    [[nodiscard]] bool bit() const {
      return std::get<Pair>(value_).bit;
    }
    [[nodiscard]] Map const& entries() const {
      return std::get<Map>(value_);
    }

    [[nodiscard]] std::string to_string() const {
      if (is_pair()) {
        return "(" + base().to_string() + "," + (bit() ? "1" : "0") + ")";
      }
      std::string out = "{";
      for (auto const& [xi, e] : entries()) {
        if (out.size() > 1) {
          out += ", ";
        }
        out += xi.to_string() + ":" + e.to_string();
      }
      return out + "}";
    }

    friend bool operator==(EtaElement const& a, EtaElement const& b) {
      if (a.is_pair() != b.is_pair()) {
        return false;
      }
      if (a.is_pair()) {
        return a.bit() == b.bit() && a.base() == b.base();
      }
      return a.entries() == b.entries();
    }

   private:
    std::variant<Map, Pair> value_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  inline void require_eta(ExtOrdinal const& eta) {
    if (eta.is_inf()) {
      throw InvalidArgument("eta must be an ordinal, not INF");
    }
  }

  inline EtaElement eta_identity(ExtOrdinal const& eta) {
    require_eta(eta);
    if (eta.is_successor()) {
      return EtaElement::pair(eta_identity(eta.predecessor()), false);
    }
    return {};
  }

  inline bool is_identity(ExtOrdinal const& eta, EtaElement const& e) {
    if (eta.is_successor()) {
      return !e.bit() && is_identity(eta.predecessor(), e.base());
    }
    return e.entries().empty();
  }

  // Throws InvalidArgument unless e is an element of G_eta.
  inline void validate_eta(ExtOrdinal const& eta, EtaElement const& e) {
    require_eta(eta);
    if (eta.is_successor()) {
      if (!e.is_pair()) {
        throw InvalidArgument("expected (e,b) for G_" + eta.to_string());
      }
      validate_eta(eta.predecessor(), e.base());
      return;
    }
    if (e.is_pair()) {
      throw InvalidArgument("expected a map for G_" + eta.to_string());
    }
    if (eta.is_zero() && !e.entries().empty()) {
      throw InvalidArgument("G_0 has a single element {}");
    }
    for (auto const& [xi, x] : e.entries()) {
      if (xi.is_inf() || xi >= eta) {
        throw InvalidArgument("coordinate " + xi.to_string() + " is not below " + eta.to_string());
      }
      validate_eta(xi, x);
      if (is_identity(xi, x)) {
        throw InvalidArgument("identity entry at coordinate " + xi.to_string());
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Distance and labels
  ////////////////////////////////////////////////////////////////////////

  inline std::uint64_t dist_eta(ExtOrdinal const& eta, EtaElement const& e) {
    if (eta.is_successor()) {
      return dist_eta(eta.predecessor(), e.base()) + (e.bit() ? 1 : 0);
    }
    std::uint64_t d = 0;
    for (auto const& [xi, x] : e.entries()) {
      d = std::max(d, dist_eta(xi, x));
    }
    return d;
  }

  // The xi < lambda kept by a truncation with the given cutoff: those whose
  // CNF coefficients are all below cutoff. Ascending.
  inline std::vector<ExtOrdinal> retained_below(ExtOrdinal const& lambda, std::uint64_t cutoff) {
    require_eta(lambda);
    if (cutoff == 0) {
      throw InvalidArgument("cutoff must be at least 1");
    }
    std::vector<ExtOrdinal> out{ExtOrdinal::zero()};
    if (lambda.is_zero()) {
      return {};
    }
    for (std::uint32_t e = 0; e <= lambda.leading_exponent(); ++e) {
      std::vector<ExtOrdinal> next;
      for (std::uint64_t c = 0; c < cutoff; ++c) {
        for (auto const& low : out) {
          next.push_back(ExtOrdinal::omega_power(e, c) + low);
        }
      }
      out = std::move(next);
    }
    std::erase_if(out, [&](ExtOrdinal const& xi) { return xi >= lambda; });
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace detail {
    inline ExtOrdinal truncated_identity_label(ExtOrdinal const& xi, std::uint64_t cutoff,
                                               std::map<ExtOrdinal, ExtOrdinal>& memo) {
      if (xi.is_successor()) {
        return truncated_identity_label(xi.predecessor(), cutoff, memo).successor();
      }
      if (auto it = memo.find(xi); it != memo.end()) {
        return it->second;
      }
      ExtOrdinal best;
      if (!xi.is_zero()) {
        for (auto const& zeta : retained_below(xi, cutoff)) {
          best = std::max(best, truncated_identity_label(zeta, cutoff, memo));
        }
      }
      memo.emplace(xi, best);
      return best;
    }
  }  // namespace detail

  // Exact label of e in G_eta. With a cutoff, the label of e in the finite
  // truncation instead (they differ only at identities of limit groups).
  inline ExtOrdinal label_eta(ExtOrdinal const& eta, EtaElement const& e,
                              std::optional<std::uint64_t> cutoff = std::nullopt) {
    if (eta.is_successor()) {
      auto l = label_eta(eta.predecessor(), e.base(), cutoff);
      return e.bit() ? l : l.successor();
    }
    if (eta.is_zero()) {
      return ExtOrdinal::zero();
    }
    if (e.entries().empty()) {
      if (!cutoff) {
        return eta;
      }
      std::map<ExtOrdinal, ExtOrdinal> memo;
      return detail::truncated_identity_label(eta, *cutoff, memo);
    }
    auto const d = dist_eta(eta, e);
    ExtOrdinal best;
    for (auto const& [xi, x] : e.entries()) {
      if (dist_eta(xi, x) == d) {
        best = std::max(best, label_eta(xi, x, cutoff));
      }
    }
    return best;
  }

  // Generalised radius of Cay(G_eta, S_eta) at the identity.
  inline ExtOrdinal radius_eta(ExtOrdinal const& eta) {
    return label_eta(eta, eta_identity(eta));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class EtaParser {
     public:
      explicit EtaParser(std::string_view text) : text_(text) {}

      EtaElement parse() {
        auto e = element();
        skip();
        if (pos_ != text_.size()) {
          throw ParseError("trailing characters in element", pos_);
        }
        return e;
      }

     private:
      EtaElement element() {
        skip();
        if (accept('(')) {
          auto base = element();
          expect(',');
          skip();
          if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) {
            throw ParseError("expected bit 0 or 1", pos_);
          }
          bool const bit = text_[pos_++] == '1';
          expect(')');
          return EtaElement::pair(std::move(base), bit);
        }
        expect('{');
        std::vector<std::pair<ExtOrdinal, EtaElement>> entries;
        skip();
        if (accept('}')) {
          return {};
        }
        for (;;) {
          auto const colon = text_.find(':', pos_);
          if (colon == std::string_view::npos) {
            throw ParseError("expected ':'", pos_);
          }
          ExtOrdinal xi;
          try {
            xi = parse_ordinal(text_.substr(pos_, colon - pos_));
          } catch (ParseError const& err) {
            throw ParseError("bad coordinate", pos_ + err.position());
          }
          pos_ = colon + 1;
          entries.emplace_back(std::move(xi), element());
          skip();
          if (accept('}')) {
            break;
          }
          expect(',');
        }
        try {
          return EtaElement::map(std::move(entries));
        } catch (InvalidArgument const& err) {
          throw ParseError(err.what(), pos_);
        }
      }

      void skip() {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
          ++pos_;
        }
      }

      bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace detail

  // Parses and validates an element of G_eta.
  inline EtaElement parse_eta_element(ExtOrdinal const& eta, std::string_view text) {
    auto e = detail::EtaParser(text).parse();
    validate_eta(eta, e);
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite truncations
  ////////////////////////////////////////////////////////////////////////

  // Cay of the truncated G_eta as a graph on bit vectors (every coordinate is
  // Z/2), with conversions to and from term trees.
  class EtaTruncation {
   public:
    EtaTruncation(ExtOrdinal eta, std::uint64_t cutoff, std::size_t budget = kDefaultBudget)
        : eta_(std::move(eta)), cutoff_(cutoff), graph_(build(eta_, cutoff_, budget)) {}

    [[nodiscard]] CayleyGraph const& graph() const noexcept {
      return graph_;
    }
    [[nodiscard]] ExtOrdinal const& eta() const noexcept {
      return eta_;
    }
    [[nodiscard]] std::uint64_t cutoff() const noexcept {
      return cutoff_;
    }

    [[nodiscard]] VertexId encode(EtaElement const& e) const {
      GroupElement bits;
      flatten(eta_, e, bits);
      return graph_.vertex(std::move(bits));
    }

    [[nodiscard]] EtaElement decode(VertexId const& v) const {
      auto const  bits = graph_.element(v);
      std::size_t pos  = 0;
      return unflatten(eta_, bits, pos);
    }

    // Every element of the truncation.
    [[nodiscard]] std::vector<EtaElement> elements() const {
      auto const            b = materialize(graph_, graph_.origin());
      std::vector<EtaElement> out;
      for (auto const& id : b.ids) {
        out.push_back(decode(id));
      }
      return out;
    }

    // Number of Z/2 coordinates spent on G_xi.
    [[nodiscard]] std::size_t width(ExtOrdinal const& xi) const {
      return count(xi, std::max<std::uint64_t>(cutoff_, 1));
    }

   private:
    using Bits = std::vector<GroupElement>;

    static std::size_t count(ExtOrdinal const& xi, std::uint64_t cutoff,
                             std::map<ExtOrdinal, std::size_t>& memo) {
      if (xi.is_successor()) {
        return count(xi.predecessor(), cutoff, memo) + 1;
      }
      if (auto it = memo.find(xi); it != memo.end()) {
        return it->second;
      }
      std::size_t w = 0;
      if (!xi.is_zero()) {
        for (auto const& zeta : retained_below(xi, cutoff)) {
          w += count(zeta, cutoff, memo);
          if (w >= 64) {
            break;
          }
        }
      }
      memo.emplace(xi, w);
      return w;
    }

    // Saturates at 64, past any truncation that fits in memory.
    static std::size_t count(ExtOrdinal const& xi, std::uint64_t cutoff) {
      std::map<ExtOrdinal, std::size_t> memo;
      return count(xi, cutoff, memo);
    }

    static Bits generators(ExtOrdinal const& xi, std::uint64_t cutoff, std::size_t budget) {
      if (xi.is_successor()) {
        auto const inner = generators(xi.predecessor(), cutoff, budget);
        Bits       out;
        for (auto s : inner) {
          s.push_back(0);
          out.push_back(std::move(s));
        }
        GroupElement last(count(xi.predecessor(), cutoff), 0);
        last.push_back(1);
        out.push_back(std::move(last));
        return out;
      }
      Bits out{GroupElement{}};
      if (xi.is_zero()) {
        return out;
      }
      for (auto const& zeta : retained_below(xi, cutoff)) {
        auto const factor = generators(zeta, cutoff, budget);
        Bits       next;
        for (auto const& head : out) {
          for (auto const& tail : factor) {
            auto s = head;
            s.insert(s.end(), tail.begin(), tail.end());
            next.push_back(std::move(s));
            if (next.size() > budget) {
              throw BudgetExceeded("instantiate_eta: too many generators");
            }
          }
        }
        out = std::move(next);
      }
      return out;
    }

    static CayleyGraph build(ExtOrdinal const& eta, std::uint64_t cutoff, std::size_t budget) {
      require_eta(eta);
      if (!eta.is_natural() && cutoff == 0) {
        throw InvalidArgument("instantiate_eta needs a cutoff for infinite eta");
      }
      auto const width = count(eta, std::max<std::uint64_t>(cutoff, 1));
      if (width >= 63 || (std::size_t{1} << width) > budget) {
        throw BudgetExceeded("instantiate_eta: truncation of G_" + eta.to_string()
                             + " has 2^" + std::to_string(width) + " elements");
      }
      AbelianSpec spec;
      for (std::size_t i = 0; i < width; ++i) {
        spec.coords.push_back({static_cast<std::int64_t>(i), 2});
      }
      return CayleyGraph("eta:eta=" + eta.to_string() + ",cutoff=" + std::to_string(cutoff),
                         spec, generators(eta, std::max<std::uint64_t>(cutoff, 1), budget));
    }

    void flatten(ExtOrdinal const& xi, EtaElement const& e, GroupElement& out) const {
      if (xi.is_successor()) {
        flatten(xi.predecessor(), e.base(), out);
        out.push_back(e.bit() ? 1 : 0);
        return;
      }
      if (xi.is_zero()) {
        return;
      }
      auto const retained = retained_below(xi, cutoff_);
      for (auto const& [zeta, x] : e.entries()) {
        if (!std::binary_search(retained.begin(), retained.end(), zeta)) {
          throw InvalidArgument("coordinate " + zeta.to_string() + " is cut from the truncation");
        }
      }
      auto it = e.entries().begin();
      for (auto const& zeta : retained) {
        if (it != e.entries().end() && it->first == zeta) {
          flatten(zeta, it->second, out);
          ++it;
        } else {
          flatten(zeta, eta_identity(zeta), out);
        }
      }
    }

    EtaElement unflatten(ExtOrdinal const& xi, GroupElement const& bits, std::size_t& pos) const {
      if (xi.is_successor()) {
        auto       base = unflatten(xi.predecessor(), bits, pos);
        bool const bit  = bits.at(pos++) != 0;
        return EtaElement::pair(std::move(base), bit);
      }
      if (xi.is_zero()) {
        return {};
      }
      std::vector<std::pair<ExtOrdinal, EtaElement>> entries;
      for (auto const& zeta : retained_below(xi, cutoff_)) {
        auto x = unflatten(zeta, bits, pos);
        if (!is_identity(zeta, x)) {
          entries.emplace_back(zeta, std::move(x));
        }
      }
      return EtaElement::map(std::move(entries));
    }

    ExtOrdinal    eta_;
    std::uint64_t cutoff_;
    CayleyGraph   graph_;
  };

  // Cutoff is ignored for finite eta.
  inline EtaTruncation instantiate_eta(ExtOrdinal const& eta, std::uint64_t cutoff = 0,
                                       std::size_t budget = kDefaultBudget) {
    return EtaTruncation(eta, cutoff, budget);
  }

  // A random element of G_eta. Support coordinates below a limit are drawn
  // from the retained ordinals of the given cutoff.
  template <typename Rng>
  EtaElement random_eta_element(ExtOrdinal const& eta, std::uint64_t cutoff, Rng& rng) {
    require_eta(eta);
    if (eta.is_successor()) {
      auto base = random_eta_element(eta.predecessor(), cutoff, rng);
      return EtaElement::pair(std::move(base), std::bernoulli_distribution(0.5)(rng));
    }
    if (eta.is_zero()) {
      return {};
    }
    std::vector<std::pair<ExtOrdinal, EtaElement>> entries;
    for (auto const& xi : retained_below(eta, cutoff)) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        auto x = random_eta_element(xi, cutoff, rng);
        if (!is_identity(xi, x)) {
          entries.emplace_back(xi, std::move(x));
        }
      }
    }
    return EtaElement::map(std::move(entries));
  }

}  // namespace geodometer
