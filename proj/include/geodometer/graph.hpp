#pragma once

// Implicit graphs and the basic metric machinery on them: BFS, balls, paths,
// geodesic checks.
//
// Every graph handled here is simple and undirected. Graphs are *implicit*: a
// type models ImplicitGraph when it can name an origin, enumerate the (finite)
// neighbour list of any vertex, and convert vertices to and from text.
// Vertices are identified by an opaque byte string (VertexId) whose meaning
// is private to each graph family. Neighbour lists are sorted by VertexId
// bytes and duplicate free, so every traversal below is deterministic.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace geodometer {

  inline constexpr std::size_t kDefaultBudget = 1'000'000;
  inline constexpr unsigned    kUnbounded     = std::numeric_limits<unsigned>::max();

  ////////////////////////////////////////////////////////////////////////
  // VertexId
  ////////////////////////////////////////////////////////////////////////

  class VertexId {
   public:
    VertexId() = default;
    explicit VertexId(std::string bytes) : bytes_(std::move(bytes)) {}

    [[nodiscard]] std::string const& bytes() const noexcept {
      return bytes_;
    }

    friend bool operator==(VertexId const&, VertexId const&)  = default;
    friend auto operator<=>(VertexId const&, VertexId const&) = default;

   private:
    std::string bytes_;
  };

  namespace encoding {
    // Fixed-width big-endian with the sign bit flipped: byte order agrees with
    // numeric order.
    inline void put_i64(std::string& out, std::int64_t value) {
      auto bits = std::bit_cast<std::uint64_t>(value) ^ (std::uint64_t{1} << 63);
      for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<char>((bits >> shift) & 0xFF));
      }
    }

    inline std::int64_t get_i64(std::string_view in, std::size_t offset) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        bits = (bits << 8) | static_cast<unsigned char>(in[offset + i]);
      }
      return std::bit_cast<std::int64_t>(bits ^ (std::uint64_t{1} << 63));
    }

    inline VertexId encode(std::span<std::int64_t const> values) {
      std::string out;
      out.reserve(8 * values.size());
      for (auto v : values) {
        put_i64(out, v);
      }
      return VertexId(std::move(out));
    }

    inline std::vector<std::int64_t> decode(VertexId const& v) {
      auto const& b = v.bytes();
      std::vector<std::int64_t> out(b.size() / 8);
      for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = get_i64(b, 8 * i);
      }
      return out;
    }
  }  // namespace encoding

}  // namespace geodometer

template <>
struct std::hash<geodometer::VertexId> {
  std::size_t operator()(geodometer::VertexId const& v) const noexcept {
    return std::hash<std::string>{}(v.bytes());
  }
};

namespace geodometer {

  ////////////////////////////////////////////////////////////////////////
  // Concepts
  ////////////////////////////////////////////////////////////////////////

  template <typename G>
  concept ImplicitGraph = requires(G const& g, VertexId const& v, std::string_view text) {
    { g.origin() } -> std::convertible_to<VertexId>;
    { g.neighbors(v) } -> std::convertible_to<std::vector<VertexId>>;
    { g.format(v) } -> std::convertible_to<std::string>;
    { g.parse(text) } -> std::convertible_to<VertexId>;
    { g.describe() } -> std::convertible_to<std::string>;
  };

  // Cayley graphs of abelian groups: vertices are group elements, and
  // v - u is again a vertex. has_group_ops() may be false at run time for
  // type-erased graphs.
  template <typename G>
  concept AbelianCayleyGraph = ImplicitGraph<G> && requires(G const& g, VertexId const& v) {
    { g.has_group_ops() } -> std::convertible_to<bool>;
    { g.zero() } -> std::convertible_to<VertexId>;
    { g.add(v, v) } -> std::convertible_to<VertexId>;
    { g.subtract(v, v) } -> std::convertible_to<VertexId>;
  };

  template <typename G>
  concept HasAdjacencyTest = requires(G const& g, VertexId const& v) {
    { g.adjacent(v, v) } -> std::convertible_to<bool>;
  };

  template <ImplicitGraph G>
  bool adjacent(G const& g, VertexId const& u, VertexId const& v) {
    if constexpr (HasAdjacencyTest<G>) {
      return g.adjacent(u, v);
    } else {
      auto const nb = g.neighbors(u);
      return std::binary_search(nb.begin(), nb.end(), v);
    }
  }

  template <ImplicitGraph G>
  bool uses_group_ops(G const& g) {
    if constexpr (AbelianCayleyGraph<G>) {
      return g.has_group_ops();
    } else {
      return false;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // AnyGraph: type erasure over ImplicitGraph
  ////////////////////////////////////////////////////////////////////////

  class AnyGraph {
    struct Concept {
      virtual ~Concept()                                                          = default;
      virtual VertexId              origin() const                                = 0;
      virtual std::vector<VertexId> neighbors(VertexId const&) const              = 0;
      virtual bool                  adjacent(VertexId const&, VertexId const&) const = 0;
      virtual std::string           format(VertexId const&) const                 = 0;
      virtual VertexId              parse(std::string_view) const                 = 0;
      virtual std::string           describe() const                              = 0;
      virtual bool                  has_group_ops() const                         = 0;
      virtual VertexId              zero() const                                  = 0;
      virtual VertexId add(VertexId const&, VertexId const&) const                = 0;
      virtual VertexId subtract(VertexId const&, VertexId const&) const           = 0;
    };

    template <ImplicitGraph G>
    struct Model final : Concept {
      explicit Model(G graph) : g(std::move(graph)) {}

      VertexId origin() const override {
        return g.origin();
      }
      std::vector<VertexId> neighbors(VertexId const& v) const override {
        return g.neighbors(v);
      }
      bool adjacent(VertexId const& u, VertexId const& v) const override {
        return geodometer::adjacent(g, u, v);
      }
      std::string format(VertexId const& v) const override {
        return g.format(v);
      }
      VertexId parse(std::string_view text) const override {
        return g.parse(text);
      }
      std::string describe() const override {
        return g.describe();
      }
      bool has_group_ops() const override {
        return uses_group_ops(g);
      }
      VertexId zero() const override {
        if constexpr (AbelianCayleyGraph<G>) {
          return g.zero();
        } else {
          throw InvalidArgument(g.describe() + " is not a Cayley graph of an abelian group");
        }
      }
      VertexId add(VertexId const& a, VertexId const& b) const override {
        if constexpr (AbelianCayleyGraph<G>) {
          return g.add(a, b);
        } else {
          throw InvalidArgument(g.describe() + " is not a Cayley graph of an abelian group");
        }
      }
      VertexId subtract(VertexId const& a, VertexId const& b) const override {
        if constexpr (AbelianCayleyGraph<G>) {
          return g.subtract(a, b);
        } else {
          throw InvalidArgument(g.describe() + " is not a Cayley graph of an abelian group");
        }
      }

      G g;
    };

   public:
    template <ImplicitGraph G>
      requires(!std::same_as<std::remove_cvref_t<G>, AnyGraph>)
    AnyGraph(G graph)  // NOLINT(google-explicit-constructor)
        : self_(std::make_shared<Model<G> const>(std::move(graph))) {}

    VertexId origin() const {
      return self_->origin();
    }
    std::vector<VertexId> neighbors(VertexId const& v) const {
      return self_->neighbors(v);
    }
    bool adjacent(VertexId const& u, VertexId const& v) const {
      return self_->adjacent(u, v);
    }
    std::string format(VertexId const& v) const {
      return self_->format(v);
    }
    VertexId parse(std::string_view text) const {
      return self_->parse(text);
    }
    std::string describe() const {
      return self_->describe();
    }
    bool has_group_ops() const {
      return self_->has_group_ops();
    }
    VertexId zero() const {
      return self_->zero();
    }
    VertexId add(VertexId const& a, VertexId const& b) const {
      return self_->add(a, b);
    }
    VertexId subtract(VertexId const& a, VertexId const& b) const {
      return self_->subtract(a, b);
    }

    // The wrapped graph, if it has type G.
    template <ImplicitGraph G>
    G const* target() const {
      auto const* model = dynamic_cast<Model<G> const*>(self_.get());
      return model == nullptr ? nullptr : &model->g;
    }

   private:
    std::shared_ptr<Concept const> self_;
  };

  ////////////////////////////////////////////////////////////////////////
  // AdjacencyGraph: small explicit graphs, vertices named 0 .. n-1
  ////////////////////////////////////////////////////////////////////////

  class AdjacencyGraph {
   public:
    AdjacencyGraph(std::size_t n,
                   std::vector<std::pair<std::uint32_t, std::uint32_t>> const& edges,
                   std::string name = "explicit")
        : adjacency_(n), name_(std::move(name)) {
      if (n == 0) {
        throw InvalidArgument("a graph needs at least one vertex");
      }
      for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v) {
          throw InvalidArgument("bad edge in " + name_);
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
      }
      for (auto& nb : adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return adjacency_.size();
    }

    [[nodiscard]] VertexId origin() const {
      return id(0);
    }

    [[nodiscard]] std::vector<VertexId> neighbors(VertexId const& v) const {
      std::vector<VertexId> out;
      for (auto w : adjacency_.at(index(v))) {
        out.push_back(id(w));
      }
      return out;
    }

    [[nodiscard]] bool adjacent(VertexId const& u, VertexId const& v) const {
      auto const& nb = adjacency_.at(index(u));
      return std::binary_search(nb.begin(), nb.end(), index(v));
    }

    [[nodiscard]] std::string format(VertexId const& v) const {
      return std::to_string(index(v));
    }

    [[nodiscard]] VertexId parse(std::string_view text) const {
      std::uint32_t value = 0;
      if (text.empty()) {
        throw ParseError("empty vertex", 0);
      }
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
          throw ParseError("expected a vertex number", i);
        }
        value = value * 10 + static_cast<std::uint32_t>(text[i] - '0');
        if (value >= size()) {
          throw ParseError("vertex out of range", i);
        }
      }
      return id(value);
    }

    [[nodiscard]] std::string describe() const {
      return name_;
    }

    [[nodiscard]] static VertexId id(std::uint32_t i) {
      std::string bytes(4, '\0');
      for (int k = 0; k < 4; ++k) {
        bytes[3 - k] = static_cast<char>((i >> (8 * k)) & 0xFF);
      }
      return VertexId(std::move(bytes));
    }

    [[nodiscard]] static std::uint32_t index(VertexId const& v) {
      std::uint32_t i = 0;
      for (unsigned char c : v.bytes()) {
        i = (i << 8) | c;
      }
      return i;
    }

   private:
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::string                             name_;
  };

  inline AdjacencyGraph path_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      edges.emplace_back(i, i + 1);
    }
    return AdjacencyGraph(n, edges, "path:n=" + std::to_string(n));
  }

  inline AdjacencyGraph cycle_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
      edges.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
    }
    return AdjacencyGraph(n, edges, "cycle:n=" + std::to_string(n));
  }

  inline AdjacencyGraph complete_graph(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        edges.emplace_back(i, j);
      }
    }
    return AdjacencyGraph(n, edges, "complete:n=" + std::to_string(n));
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  // A finite path on the integer interval [base, base + length].
  struct GeodPath {
    std::int64_t          base = 0;
    std::vector<VertexId> vertices;

    [[nodiscard]] std::size_t length() const noexcept {
      return vertices.empty() ? 0 : vertices.size() - 1;
    }
    [[nodiscard]] std::int64_t first_index() const noexcept {
      return base;
    }
    [[nodiscard]] std::int64_t last_index() const noexcept {
      return base + static_cast<std::int64_t>(length());
    }
    // The vertex at domain index k.
    [[nodiscard]] VertexId const& at(std::int64_t k) const {
      return vertices.at(static_cast<std::size_t>(k - base));
    }

    friend bool operator==(GeodPath const&, GeodPath const&) = default;
  };

  template <ImplicitGraph G>
  bool is_path(G const& g, GeodPath const& p) {
    if (p.vertices.empty()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      if (p.vertices[i] == p.vertices[i + 1]
          || !adjacent(g, p.vertices[i], p.vertices[i + 1])) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // BFS
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Layered BFS that can be resumed to a larger radius.
    template <ImplicitGraph G>
    class Bfs {
     public:
      Bfs(G const& g, VertexId source, std::size_t budget)
          : g_(&g), budget_(budget), frontier_{source} {
        dist_.emplace(std::move(source), 0);
      }

      // Explores every vertex at distance <= radius.
      void grow_to(unsigned radius) {
        while (explored_ < radius && !frontier_.empty()) {
          std::vector<VertexId> next;
          for (auto const& v : frontier_) {
            for (auto& w : g_->neighbors(v)) {
              if (dist_.try_emplace(w, explored_ + 1).second) {
                next.push_back(std::move(w));
                if (dist_.size() > budget_) {
                  throw BudgetExceeded("BFS in " + g_->describe() + " exceeded "
                                       + std::to_string(budget_) + " vertices");
                }
              }
            }
          }
          frontier_ = std::move(next);
          ++explored_;
        }
      }

      [[nodiscard]] std::optional<unsigned> find(VertexId const& v) const {
        auto it = dist_.find(v);
        if (it == dist_.end()) {
          return std::nullopt;
        }
        return it->second;
      }

      // True once the whole connected component has been explored.
      [[nodiscard]] bool exhausted() const noexcept {
        return frontier_.empty();
      }
      [[nodiscard]] unsigned explored() const noexcept {
        return explored_;
      }
      [[nodiscard]] std::unordered_map<VertexId, unsigned> const& distances() const noexcept {
        return dist_;
      }

     private:
      G const*                               g_;
      std::size_t                            budget_;
      std::unordered_map<VertexId, unsigned> dist_;
      std::vector<VertexId>                  frontier_;
      unsigned                               explored_ = 0;
    };
  }  // namespace detail

  // Graph distance with memoised BFS. For Cayley graphs of abelian groups a
  // single BFS from the identity serves every query, since d(u, v) = d(0, v - u).
  template <ImplicitGraph G>
  class DistanceOracle {
   public:
    explicit DistanceOracle(G const& g, std::size_t budget = kDefaultBudget)
        : g_(&g), budget_(budget), group_(uses_group_ops(g)) {}

    // d(u, v) if it is at most cap, otherwise nullopt.
    std::optional<unsigned> operator()(VertexId const& u, VertexId const& v, unsigned cap) {
      VertexId source = u;
      VertexId target = v;
      if constexpr (AbelianCayleyGraph<G>) {
        if (group_) {
          source = g_->zero();
          target = g_->subtract(v, u);
        }
      }
      auto it = cache_.find(source);
      if (it == cache_.end()) {
        it = cache_.emplace(source, detail::Bfs<G>(*g_, source, budget_)).first;
      }
      auto& bfs = it->second;
      if (auto d = bfs.find(target)) {
        return *d <= cap ? d : std::nullopt;
      }
      if (bfs.exhausted() || bfs.explored() >= cap) {
        return std::nullopt;
      }
      bfs.grow_to(cap);
      auto d = bfs.find(target);
      return d && *d <= cap ? d : std::nullopt;
    }

   private:
    G const*                                     g_;
    std::size_t                                  budget_;
    bool                                         group_;
    std::unordered_map<VertexId, detail::Bfs<G>> cache_;
  };

  // Exact distance from u to v if it is at most cap; nullopt ("beyond cap")
  // otherwise.
  template <ImplicitGraph G>
  std::optional<unsigned> distance(G const& g, VertexId const& u, VertexId const& v,
                                   unsigned cap, std::size_t budget = kDefaultBudget) {
    detail::Bfs<G> bfs(g, u, budget);
    for (unsigned r = 0;; ++r) {
      if (auto d = bfs.find(v)) {
        return d;
      }
      if (r >= cap || bfs.exhausted()) {
        return std::nullopt;
      }
      bfs.grow_to(r + 1);
    }
  }

  // Maximum distance from o, or nullopt if some vertex lies beyond cap.
  template <ImplicitGraph G>
  std::optional<unsigned> eccentricity(G const& g, VertexId const& o, unsigned cap,
                                       std::size_t budget = kDefaultBudget) {
    detail::Bfs<G> bfs(g, o, budget);
    bfs.grow_to(cap == kUnbounded ? cap : cap + 1);
    if (!bfs.exhausted()) {
      if (cap == kUnbounded) {
        throw BudgetExceeded("eccentricity: unbounded search did not terminate");
      }
      // Something sits at distance cap + 1 or further.
      if (bfs.explored() > cap) {
        return std::nullopt;
      }
    }
    unsigned ecc = 0;
    for (auto const& [v, d] : bfs.distances()) {
      ecc = std::max(ecc, d);
    }
    if (ecc > cap) {
      return std::nullopt;
    }
    return ecc;
  }

  // d(p(m), p(n)) == |m - n| for all m, n. Each pair is checked with cap equal
  // to the path length.
  template <ImplicitGraph G>
  bool is_geodesic(G const& g, GeodPath const& p, DistanceOracle<G>& dist) {
    if (!is_path(g, p)) {
      throw InvalidArgument("is_geodesic: not a path in " + g.describe());
    }
    auto const len = static_cast<unsigned>(p.length());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
        auto d = dist(p.vertices[i], p.vertices[j], len);
        if (!d || *d != j - i) {
          return false;
        }
      }
    }
    return true;
  }

  template <ImplicitGraph G>
  bool is_geodesic(G const& g, GeodPath const& p) {
    DistanceOracle<G> dist(g);
    return is_geodesic(g, p, dist);
  }

  ////////////////////////////////////////////////////////////////////////
  // RootedBall
  ////////////////////////////////////////////////////////////////////////

  // An explicit finite rooted graph: the ball of some radius around a root,
  // with the induced edges. Vertex 0 is the root; vertices are sorted by
  // (dist, name).
  struct RootedBall {
    std::string                             graph;  // describe() of the parent graph
    unsigned                                radius = 0;
    std::vector<VertexId>                   ids;
    std::vector<std::string>                names;
    std::vector<unsigned>                   dist;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted indices
    // No vertex at distance == radius has a neighbour outside the ball, so the
    // ball is the whole connected component.
    bool closed = false;

    [[nodiscard]] std::size_t size() const noexcept {
      return ids.size();
    }

    [[nodiscard]] std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
      for (std::uint32_t i = 0; i < adjacency.size(); ++i) {
        for (auto j : adjacency[i]) {
          if (i < j) {
            out.emplace_back(i, j);
          }
        }
      }
      return out;
    }

    [[nodiscard]] std::optional<std::uint32_t> index_of(VertexId const& v) const {
      auto it = std::find(ids.begin(), ids.end(), v);
      if (it == ids.end()) {
        return std::nullopt;
      }
      return static_cast<std::uint32_t>(it - ids.begin());
    }

    [[nodiscard]] bool has_edge(std::uint32_t i, std::uint32_t j) const {
      auto const& nb = adjacency.at(i);
      return std::binary_search(nb.begin(), nb.end(), j);
    }
  };

  // The ball of radius r around o with its induced edges. Use r = kUnbounded
  // to materialise a finite graph entirely.
  template <ImplicitGraph G>
  RootedBall ball(G const& g, VertexId const& o, unsigned r,
                  std::size_t budget = kDefaultBudget) {
    detail::Bfs<G> bfs(g, o, budget);
    bfs.grow_to(r);
    if (r == kUnbounded && !bfs.exhausted()) {
      throw BudgetExceeded("ball: " + g.describe() + " is not finite within budget");
    }
    struct Entry {
      unsigned    dist;
      std::string name;
      VertexId    id;
    };
    std::vector<Entry> entries;
    entries.reserve(bfs.distances().size());
    for (auto const& [v, d] : bfs.distances()) {
      entries.push_back({d, g.format(v), v});
    }
    std::sort(entries.begin(), entries.end(), [](Entry const& a, Entry const& b) {
      return std::tie(a.dist, a.name, a.id) < std::tie(b.dist, b.name, b.id);
    });
    RootedBall b;
    b.graph = g.describe();
    std::unordered_map<VertexId, std::uint32_t> index;
    for (auto& e : entries) {
      index.emplace(e.id, static_cast<std::uint32_t>(b.ids.size()));
      b.radius = std::max(b.radius, e.dist);
      b.dist.push_back(e.dist);
      b.names.push_back(std::move(e.name));
      b.ids.push_back(std::move(e.id));
    }
    if (r != kUnbounded) {
      b.radius = r;
    }
    b.closed = true;
    b.adjacency.resize(b.ids.size());
    for (std::uint32_t i = 0; i < b.ids.size(); ++i) {
      for (auto const& w : g.neighbors(b.ids[i])) {
        auto it = index.find(w);
        if (it == index.end()) {
          b.closed = false;
        } else {
          b.adjacency[i].push_back(it->second);
        }
      }
      std::sort(b.adjacency[i].begin(), b.adjacency[i].end());
    }
    return b;
  }

  // Materialises a finite connected graph around o (the ball of unbounded
  // radius; radius is then the eccentricity of o).
  template <ImplicitGraph G>
  RootedBall materialize(G const& g, VertexId const& o, std::size_t budget = kDefaultBudget) {
    return ball(g, o, kUnbounded, budget);
  }

  // v -> w: {v, w} is an edge and dist(w) = dist(v) + 1. Arrows leaving the
  // boundary sphere are unknown, so v must lie strictly inside unless the
  // ball is closed.
  inline bool arrow(RootedBall const& b, std::uint32_t v, std::uint32_t w) {
    if (!b.closed && b.dist.at(v) >= b.radius) {
      throw ClippedBall("arrow: source lies on the boundary of a ball of radius "
                        + std::to_string(b.radius));
    }
    return b.dist.at(w) == b.dist.at(v) + 1 && b.has_edge(v, w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Geodesic enumeration
  ////////////////////////////////////////////////////////////////////////

  struct GeodesicList {
    std::vector<GeodPath> paths;
    bool                  complete = true;  // false if more than `limit` exist
  };

  // All geodesic paths from u to v (base offset 0), in lexicographic order of
  // their vertex encodings, up to limit of them.
  template <ImplicitGraph G>
  GeodesicList geodesics_between(G const& g, VertexId const& u, VertexId const& v,
                                 std::size_t limit, std::size_t budget = kDefaultBudget) {
    auto const d = distance(g, u, v, kUnbounded - 1, budget);
    if (!d) {
      throw InvalidArgument("geodesics_between: vertices are not connected");
    }
    detail::Bfs<G> to_v(g, v, budget);
    to_v.grow_to(*d);

    GeodesicList result;
    GeodPath     current{0, {u}};
    std::function<bool()> extend = [&]() -> bool {
      auto const i = current.vertices.size() - 1;
      if (i == *d) {
        if (result.paths.size() == limit) {
          result.complete = false;
          return false;
        }
        result.paths.push_back(current);
        return true;
      }
      for (auto const& w : g.neighbors(current.vertices.back())) {
        auto dw = to_v.find(w);
        if (dw && *dw == *d - i - 1) {
          current.vertices.push_back(w);
          bool const go_on = extend();
          current.vertices.pop_back();
          if (!go_on) {
            return false;
          }
        }
      }
      return true;
    };
    extend();
    return result;
  }

}  // namespace geodometer
