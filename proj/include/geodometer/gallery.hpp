#pragma once

// Finite truncations of the graph families studied here.
//
// Abelian groups are finite direct sums of cyclic groups. A coordinate has an
// index (the n of Z/nZ in the sums over n >= 2) and an order, 0 meaning Z.
// Elements are dense vectors reduced to [0, order) on finite coordinates.
//
//   hypercube_graph(N)   sum_{2<=n<=N} Z/n, generators with entries in {-1,0,1}
//   basis_graph(M)       sum_{2<=n<=M} Z/n, generators e_n
//   basis_graph_z(M)     basis_graph(M) plus a Z coordinate (index M+1)
//   factorial_graph(N)   Z with generators sum_{n<=N} eps_n n!, eps in {-1,0,1}
//   quotient_hn_graph    Z/k_{N,n} on coordinates 2..M, basis generators, where
//                        k_{N,n} = n for n < 2N+2, 0 for n = 2N+2, n-1 above
//   fan_graph(N)         hub 0 with spokes of lengths 1..N
//   WordGraph            words over G and G' letters (see below)
//
// Generators are closed under inverse, reduced and deduplicated; the identity
// is dropped since adjacency needs two distinct vertices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace geodometer {

  using GroupElement = std::vector<std::int64_t>;

  struct Coordinate {
    std::int64_t index = 0;
    std::int64_t order = 0;  // 0 encodes Z

    friend bool operator==(Coordinate const&, Coordinate const&) = default;
  };

  struct AbelianSpec {
    std::vector<Coordinate> coords;

    [[nodiscard]] std::size_t size() const noexcept {
      return coords.size();
    }

    [[nodiscard]] bool is_finite() const noexcept {
      return std::none_of(coords.begin(), coords.end(),
                          [](Coordinate const& c) { return c.order == 0; });
    }

    // Group order, or nullopt for infinite groups.
    [[nodiscard]] std::optional<std::uint64_t> order() const noexcept {
      std::uint64_t n = 1;
      for (auto const& c : coords) {
        if (c.order == 0) {
          return std::nullopt;
        }
        n *= static_cast<std::uint64_t>(c.order);
      }
      return n;
    }

    void reduce(GroupElement& g) const {
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (auto n = coords[i].order; n != 0) {
          g[i] %= n;
          if (g[i] < 0) {
            g[i] += n;
          }
        }
      }
    }

    [[nodiscard]] GroupElement add(GroupElement a, GroupElement const& b) const {
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
      }
      reduce(a);
      return a;
    }

    [[nodiscard]] GroupElement negate(GroupElement a) const {
      for (auto& x : a) {
        x = -x;
      }
      reduce(a);
      return a;
    }

    [[nodiscard]] GroupElement zero() const {
      return GroupElement(coords.size(), 0);
    }

    // Position of the coordinate with the given index.
    [[nodiscard]] std::optional<std::size_t> position(std::int64_t index) const {
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].index == index) {
          return i;
        }
      }
      return std::nullopt;
    }

    // e_index
    [[nodiscard]] GroupElement unit(std::int64_t index) const {
      auto pos = position(index);
      if (!pos) {
        throw InvalidArgument("no coordinate with index " + std::to_string(index));
      }
      auto g  = zero();
      g[*pos] = 1;
      reduce(g);
      return g;
    }
  };

  namespace detail {
    inline std::string format_element(GroupElement const& g) {
      if (g.size() == 1) {
        return std::to_string(g[0]);
      }
      std::string out = "(";
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(g[i]);
      }
      return out + ')';
    }

    // Reads "0", a bare integer (one coordinate) or "(a,b,...)" starting at pos.
    inline GroupElement parse_element(std::string_view text, std::size_t& pos,
                                      std::size_t dimension) {
      auto skip = [&] {
        while (pos < text.size() && text[pos] == ' ') {
          ++pos;
        }
      };
      auto integer = [&]() -> std::int64_t {
        skip();
        auto const start    = pos;
        bool       negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          negative = text[pos] == '-';
          ++pos;
        }
        std::int64_t value  = 0;
        auto const   digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
          value = value * 10 + (text[pos] - '0');
          ++pos;
        }
        if (pos == digits) {
          throw ParseError("expected an integer", start);
        }
        return negative ? -value : value;
      };
      skip();
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        GroupElement g;
        for (;;) {
          g.push_back(integer());
          skip();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
          }
          throw ParseError("expected ',' or ')'", pos);
        }
        if (g.size() != dimension) {
          throw ParseError("expected " + std::to_string(dimension) + " coordinates", pos);
        }
        return g;
      }
      auto const start = pos;
      auto       value = integer();
      if (dimension == 1) {
        return {value};
      }
      if (value != 0) {
        throw ParseError("only 0 may be written without coordinates", start);
      }
      return GroupElement(dimension, 0);
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // CayleyGraph
  ////////////////////////////////////////////////////////////////////////

  class CayleyGraph {
   public:
    CayleyGraph(std::string name, AbelianSpec spec, std::vector<GroupElement> const& generators)
        : name_(std::move(name)), spec_(std::move(spec)) {
      std::set<GroupElement> closed;
      for (auto g : generators) {
        if (g.size() != spec_.size()) {
          throw InvalidArgument("generator of the wrong dimension in " + name_);
        }
        spec_.reduce(g);
        if (g == spec_.zero()) {
          continue;
        }
        closed.insert(spec_.negate(g));
        closed.insert(std::move(g));
      }
      generators_.assign(closed.begin(), closed.end());
      for (auto const& g : generators_) {
        generator_ids_.push_back(encoding::encode(g));
      }
      std::sort(generator_ids_.begin(), generator_ids_.end());
    }

    [[nodiscard]] VertexId origin() const {
      return zero();
    }

    [[nodiscard]] std::vector<VertexId> neighbors(VertexId const& v) const {
      auto const g = element(v);
      std::vector<VertexId> out;
      out.reserve(generators_.size());
      for (auto const& s : generators_) {
        out.push_back(vertex(spec_.add(g, s)));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] bool adjacent(VertexId const& u, VertexId const& v) const {
      return std::binary_search(generator_ids_.begin(), generator_ids_.end(), subtract(v, u));
    }

    [[nodiscard]] std::string format(VertexId const& v) const {
      return detail::format_element(element(v));
    }

    [[nodiscard]] VertexId parse(std::string_view text) const {
      std::size_t pos = 0;
      auto        g   = detail::parse_element(text, pos, spec_.size());
      while (pos < text.size() && text[pos] == ' ') {
        ++pos;
      }
      if (pos != text.size()) {
        throw ParseError("trailing characters after vertex", pos);
      }
      return vertex(std::move(g));
    }

    [[nodiscard]] std::string describe() const {
      return name_;
    }

    [[nodiscard]] bool has_group_ops() const noexcept {
      return true;
    }
    [[nodiscard]] VertexId zero() const {
      return vertex(spec_.zero());
    }
    [[nodiscard]] VertexId add(VertexId const& a, VertexId const& b) const {
      return vertex(spec_.add(element(a), element(b)));
    }
    [[nodiscard]] VertexId subtract(VertexId const& a, VertexId const& b) const {
      return vertex(spec_.add(element(a), spec_.negate(element(b))));
    }

    [[nodiscard]] AbelianSpec const& spec() const noexcept {
      return spec_;
    }
    // S u S^-1 without the identity, sorted.
    [[nodiscard]] std::vector<GroupElement> const& generators() const noexcept {
      return generators_;
    }

    [[nodiscard]] GroupElement element(VertexId const& v) const {
      auto g = encoding::decode(v);
      if (g.size() != spec_.size()) {
        throw InvalidArgument("vertex does not belong to " + name_);
      }
      return g;
    }

    [[nodiscard]] VertexId vertex(GroupElement g) const {
      spec_.reduce(g);
      return encoding::encode(g);
    }

   private:
    std::string               name_;
    AbelianSpec               spec_;
    std::vector<GroupElement> generators_;
    std::vector<VertexId>     generator_ids_;
  };

  namespace detail {
    inline std::vector<GroupElement> basis_generators(std::size_t dimension) {
      std::vector<GroupElement> gens;
      for (std::size_t i = 0; i < dimension; ++i) {
        GroupElement g(dimension, 0);
        g[i] = 1;
        gens.push_back(std::move(g));
      }
      return gens;
    }

    inline AbelianSpec cyclic_range(std::int64_t from, std::int64_t to) {
      AbelianSpec spec;
      for (auto n = from; n <= to; ++n) {
        spec.coords.push_back({n, n});
      }
      return spec;
    }
  }  // namespace detail

  inline CayleyGraph hypercube_graph(std::int64_t N) {
    if (N < 2) {
      throw InvalidArgument("hypercube_graph needs N >= 2");
    }
    auto const                spec = detail::cyclic_range(2, N);
    std::vector<GroupElement> gens{GroupElement{}};
    for (std::size_t i = 0; i < spec.size(); ++i) {
      std::vector<GroupElement> next;
      for (auto const& g : gens) {
        for (std::int64_t e : {-1, 0, 1}) {
          auto h = g;
          h.push_back(e);
          next.push_back(std::move(h));
        }
      }
      gens = std::move(next);
    }
    return CayleyGraph("hypercube:N=" + std::to_string(N), spec, gens);
  }

  inline CayleyGraph basis_graph(std::int64_t M) {
    if (M < 2) {
      throw InvalidArgument("basis_graph needs M >= 2");
    }
    auto spec = detail::cyclic_range(2, M);
    return CayleyGraph("basis:M=" + std::to_string(M), spec,
                       detail::basis_generators(spec.size()));
  }

  inline CayleyGraph basis_graph_z(std::int64_t M) {
    if (M < 2) {
      throw InvalidArgument("basis_graph_z needs M >= 2");
    }
    auto spec = detail::cyclic_range(2, M);
    spec.coords.push_back({M + 1, 0});
    return CayleyGraph("basisZ:M=" + std::to_string(M), spec,
                       detail::basis_generators(spec.size()));
  }

  // k_{N,n}
  inline std::int64_t hn_order(std::int64_t N, std::int64_t n) {
    if (n < 2 * N + 2) {
      return n;
    }
    return n == 2 * N + 2 ? 0 : n - 1;
  }

  inline CayleyGraph quotient_hn_graph(std::int64_t N, std::int64_t M) {
    if (N < 0 || M < 2 * N + 2 || M < 2) {
      throw InvalidArgument("quotient_hn_graph needs M >= 2N+2");
    }
    AbelianSpec spec;
    for (std::int64_t n = 2; n <= M; ++n) {
      spec.coords.push_back({n, hn_order(N, n)});
    }
    return CayleyGraph("hn:N=" + std::to_string(N) + ",M=" + std::to_string(M), spec,
                       detail::basis_generators(spec.size()));
  }

  namespace detail {
    inline std::vector<GroupElement> factorial_generators(std::int64_t N) {
      std::vector<std::int64_t> sums{0};
      std::int64_t              f = 1;
      for (std::int64_t n = 1; n <= N; ++n) {
        f *= n;
        std::vector<std::int64_t> next;
        for (auto s : sums) {
          for (std::int64_t e : {-1, 0, 1}) {
            next.push_back(s + e * f);
          }
        }
        sums = std::move(next);
      }
      std::vector<GroupElement> gens;
      for (auto s : sums) {
        gens.push_back({s});
      }
      return gens;
    }

    inline std::int64_t factorial(std::int64_t N) {
      std::int64_t f = 1;
      for (std::int64_t n = 2; n <= N; ++n) {
        f *= n;
      }
      return f;
    }
  }  // namespace detail

  inline CayleyGraph factorial_graph(std::int64_t N) {
    if (N < 1 || N > 18) {
      throw InvalidArgument("factorial_graph needs 1 <= N <= 18");
    }
    return CayleyGraph("factorial:N=" + std::to_string(N), AbelianSpec{{{1, 0}}},
                       detail::factorial_generators(N));
  }

  // The image of factorial_graph(N) in the cycle Z/N!.
  inline CayleyGraph factorial_quotient_graph(std::int64_t N) {
    if (N < 2 || N > 10) {
      throw InvalidArgument("factorial_quotient_graph needs 2 <= N <= 10");
    }
    return CayleyGraph("factorialQ:N=" + std::to_string(N),
                       AbelianSpec{{{1, detail::factorial(N)}}},
                       detail::factorial_generators(N));
  }

  ////////////////////////////////////////////////////////////////////////
  // Edge labels
  ////////////////////////////////////////////////////////////////////////

  // Index of the unique coordinate where u and v differ. Only meaningful for
  // graphs whose generators are +-e_n.
  inline std::int64_t edge_label_direct(CayleyGraph const& g, VertexId const& u,
                                        VertexId const& v) {
    auto const a = g.element(u);
    auto const b = g.element(v);
    std::optional<std::int64_t> label;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        if (label) {
          throw InvalidArgument("edge_label_direct: endpoints differ in two coordinates");
        }
        label = g.spec().coords[i].index;
      }
    }
    if (!label || !g.adjacent(u, v)) {
      throw InvalidArgument("edge_label_direct: not an edge");
    }
    return *label;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fans
  ////////////////////////////////////////////////////////////////////////

  // Hub 0 joined to spokes (1,n) - (2,n) - ... - (n,n) for n = 1..N. With a
  // ray, one more spoke of length N+1 stands in for an infinite one; its
  // vertices print as (k,w).
  class FanGraph {
   public:
    FanGraph(std::int64_t N, bool with_ray) : N_(N), ray_(with_ray) {
      if (N < 1) {
        throw InvalidArgument("fan_graph needs N >= 1");
      }
    }

    [[nodiscard]] VertexId origin() const {
      return id(0, 0);
    }

    [[nodiscard]] std::vector<VertexId> neighbors(VertexId const& v) const {
      auto const [k, n] = decode(v);
      std::vector<VertexId> out;
      if (k == 0) {
        for (std::int64_t m = 1; m <= spokes(); ++m) {
          out.push_back(id(1, m));
        }
        return out;
      }
      out.push_back(k == 1 ? id(0, 0) : id(k - 1, n));
      if (k < n) {
        out.push_back(id(k + 1, n));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] std::string format(VertexId const& v) const {
      auto const [k, n] = decode(v);
      if (k == 0) {
        return "0";
      }
      return "(" + std::to_string(k) + "," + (ray_ && n == N_ + 1 ? "w" : std::to_string(n))
             + ")";
    }

    [[nodiscard]] VertexId parse(std::string_view text) const {
      if (text == "0") {
        return origin();
      }
      if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
        throw ParseError("expected 0 or (k,n)", 0);
      }
      auto const comma = text.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("expected ','", text.size());
      }
      auto number = [&](std::string_view s, std::size_t offset) -> std::int64_t {
        if (ray_ && s == "w") {
          return N_ + 1;
        }
        std::int64_t value = 0;
        if (s.empty()) {
          throw ParseError("expected a number", offset);
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] < '0' || s[i] > '9') {
            throw ParseError("expected a number", offset + i);
          }
          value = value * 10 + (s[i] - '0');
        }
        return value;
      };
      auto const k = number(text.substr(1, comma - 1), 1);
      auto const n = number(text.substr(comma + 1, text.size() - comma - 2), comma + 1);
      if (k < 1 || k > n || n > spokes()) {
        throw ParseError("no such vertex in " + describe(), 0);
      }
      return id(k, n);
    }

    [[nodiscard]] std::string describe() const {
      return std::string(ray_ ? "fanray" : "fan") + ":N=" + std::to_string(N_);
    }

   private:
    [[nodiscard]] std::int64_t spokes() const noexcept {
      return ray_ ? N_ + 1 : N_;
    }

    static VertexId id(std::int64_t k, std::int64_t n) {
      std::int64_t const values[] = {k, n};
      return encoding::encode(values);
    }

    static std::pair<std::int64_t, std::int64_t> decode(VertexId const& v) {
      auto const& b = v.bytes();
      return {encoding::get_i64(b, 0), encoding::get_i64(b, 8)};
    }

    std::int64_t N_;
    bool         ray_;
  };

  inline FanGraph fan_graph(std::int64_t N, bool with_ray = false) {
    return FanGraph(N, with_ray);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word graph
  ////////////////////////////////////////////////////////////////////////

  // Vertices are words [g; h_1; ...; h_k] with g in G and h_i in G', of
  // length at most depth, where no letter other than the first and the last
  // is zero. Two words are adjacent if
  //   rule 1: one is the other followed by the zero of G', or
  //   rule 2: they differ only in the last letter, by a generator of G (for
  //           one-letter words) or of G'.
  // G is the basis-generated group on coordinates 2..M. G' is G + Z realised
  // on the same coordinates with orders k_{N,n}, so that the radius-N balls
  // of G and G' agree.
  class WordGraph {
   public:
    WordGraph(std::int64_t M, std::int64_t depth, std::int64_t N = 1, bool rule2_only = false)
        : M_(M), depth_(depth), N_(N), rule2_only_(rule2_only),
          g_(basis_graph(M)), gprime_(quotient_hn_graph(N, M)) {
      if (depth < 1) {
        throw InvalidArgument("word_graph_h needs depth >= 1");
      }
    }

    using Word = std::vector<GroupElement>;

    // The same vertex set with only rule-2 edges.
    [[nodiscard]] WordGraph rule2_view() const {
      return WordGraph(M_, depth_, N_, true);
    }

    [[nodiscard]] VertexId origin() const {
      return encode({g_.spec().zero()});
    }

    [[nodiscard]] std::vector<VertexId> neighbors(VertexId const& v) const {
      auto const w = decode(v);
      std::vector<VertexId> out;
      auto const& group = w.size() == 1 ? g_ : gprime_;
      for (auto const& s : group.generators()) {
        auto x   = w;
        x.back() = group.spec().add(x.back(), s);
        out.push_back(encode(x));
      }
      if (!rule2_only_) {
        if (auto child = rule1_child(w)) {
          out.push_back(encode(*child));
        }
        if (w.size() >= 2 && is_zero(w.back())) {
          out.push_back(encode(Word(w.begin(), w.end() - 1)));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // 0: not adjacent, 1 or 2: the rule that joins u and v.
    [[nodiscard]] int edge_rule(VertexId const& u, VertexId const& v) const {
      auto a = decode(u);
      auto b = decode(v);
      if (a.size() > b.size()) {
        std::swap(a, b);
      }
      if (b.size() == a.size() + 1) {
        auto child = rule1_child(a);
        return !rule2_only_ && child && *child == b ? 1 : 0;
      }
      if (a.size() != b.size() || a == b
          || !std::equal(a.begin(), a.end() - 1, b.begin())) {
        return 0;
      }
      auto const& group = a.size() == 1 ? g_ : gprime_;
      auto const  diff  = group.spec().add(b.back(), group.spec().negate(a.back()));
      auto const& gens  = group.generators();
      return std::binary_search(gens.begin(), gens.end(), diff) ? 2 : 0;
    }

    [[nodiscard]] bool adjacent(VertexId const& u, VertexId const& v) const {
      return edge_rule(u, v) != 0;
    }

    [[nodiscard]] std::string format(VertexId const& v) const {
      auto const  w   = decode(v);
      std::string out = "[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += ';';
        }
        out += is_zero(w[i]) ? "0" : detail::format_element(w[i]);
      }
      return out + ']';
    }

    [[nodiscard]] VertexId parse(std::string_view text) const {
      if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ParseError("expected [letter;...]", 0);
      }
      Word        w;
      std::size_t pos = 1;
      for (;;) {
        auto const& group = w.empty() ? g_ : gprime_;
        auto        g     = detail::parse_element(text, pos, group.spec().size());
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (auto n = group.spec().coords[i].order; n != 0 && (g[i] < 0 || g[i] >= n)) {
            throw ParseError("letter entry out of range", pos);
          }
        }
        w.push_back(std::move(g));
        if (pos < text.size() && text[pos] == ';') {
          ++pos;
          continue;
        }
        if (pos + 1 == text.size() && text[pos] == ']') {
          break;
        }
        throw ParseError("expected ';' or ']'", pos);
      }
      if (static_cast<std::int64_t>(w.size()) > depth_) {
        throw ParseError("word longer than depth " + std::to_string(depth_), 0);
      }
      for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        if (is_zero(w[i])) {
          throw ParseError("only the first and last letters may be zero", 0);
        }
      }
      return encode(w);
    }

    [[nodiscard]] std::string describe() const {
      std::string out = "wordH:M=" + std::to_string(M_) + ",depth=" + std::to_string(depth_);
      if (N_ != 1) {
        out += ",N=" + std::to_string(N_);
      }
      return rule2_only_ ? out + "/rule2" : out;
    }

    [[nodiscard]] std::int64_t M() const noexcept {
      return M_;
    }
    [[nodiscard]] std::int64_t depth() const noexcept {
      return depth_;
    }
    [[nodiscard]] CayleyGraph const& letters_g() const noexcept {
      return g_;
    }
    [[nodiscard]] CayleyGraph const& letters_gprime() const noexcept {
      return gprime_;
    }

    [[nodiscard]] Word decode(VertexId const& v) const {
      auto const flat = encoding::decode(v);
      auto const dim  = g_.spec().size();
      Word       w;
      for (std::size_t i = 0; i < flat.size(); i += dim) {
        w.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i),
                       flat.begin() + static_cast<std::ptrdiff_t>(i + dim));
      }
      return w;
    }

    [[nodiscard]] static VertexId encode(Word const& w) {
      GroupElement flat;
      for (auto const& letter : w) {
        flat.insert(flat.end(), letter.begin(), letter.end());
      }
      return encoding::encode(flat);
    }

   private:
    static bool is_zero(GroupElement const& g) {
      return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; });
    }

    [[nodiscard]] std::optional<Word> rule1_child(Word const& w) const {
      if (static_cast<std::int64_t>(w.size()) >= depth_
          || (w.size() >= 2 && is_zero(w.back()))) {
        return std::nullopt;
      }
      auto child = w;
      child.push_back(gprime_.spec().zero());
      return child;
    }

    std::int64_t M_;
    std::int64_t depth_;
    std::int64_t N_;
    bool         rule2_only_;
    CayleyGraph  g_;
    CayleyGraph  gprime_;
  };

  inline WordGraph word_graph_h(std::int64_t M, std::int64_t depth, std::int64_t N = 1) {
    return WordGraph(M, depth, N);
  }

}  // namespace geodometer
