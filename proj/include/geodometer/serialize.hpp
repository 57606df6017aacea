#pragma once

// JSON and DOT output for balls, and the JSON run report printed by the CLI.
// Output is a pure function of the input: vertices are in ball order
// (distance, then name) and edges are sorted index pairs.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "ordinal.hpp"

namespace geodometer {

  using Json = nlohmann::ordered_json;

  inline Json ball_to_json(RootedBall const& b) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < b.size(); ++i) {
      vertices.push_back({{"id", b.names[i]}, {"dist", b.dist[i]}});
    }
    Json edges = Json::array();
    for (auto [i, j] : b.edges()) {
      edges.push_back({i, j});
    }
    return {{"graph", b.graph},
            {"radius", b.radius},
            {"root", 0},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
  }

  namespace detail {
    inline std::string dot_quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace detail

  inline std::string ball_to_dot(RootedBall const& b) {
    std::string out = "graph " + detail::dot_quote(b.graph) + " {\n";
    out += "  // radius " + std::to_string(b.radius) + ", root v0\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
      out += "  v" + std::to_string(i) + " [label=" + detail::dot_quote(b.names[i])
             + ", dist=" + std::to_string(b.dist[i]) + (i == 0 ? ", shape=doublecircle" : "")
             + "];\n";
    }
    for (auto [i, j] : b.edges()) {
      out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
    }
    return out + "}\n";
  }

  struct Assertion {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  struct RunReport {
    std::string            command;
    std::string            graph;
    Json                   params  = Json::object();
    Json                   results = Json::object();
    std::vector<Assertion> assertions;
    double                 wall_time_s = 0.0;

    void check(std::string name, bool pass, std::string detail = {}) {
      assertions.push_back({std::move(name), pass, std::move(detail)});
    }

    [[nodiscard]] bool pass() const {
      for (auto const& a : assertions) {
        if (!a.pass) {
          return false;
        }
      }
      return true;
    }

    // Set include_time to false for byte-comparable output.
    [[nodiscard]] Json to_json(bool include_time = true) const {
      Json checks = Json::array();
      for (auto const& a : assertions) {
        Json item = {{"name", a.name}, {"pass", a.pass}};
        if (!a.detail.empty()) {
          item["detail"] = a.detail;
        }
        checks.push_back(std::move(item));
      }
      Json out = {{"command", command}, {"graph", graph},        {"params", params},
                  {"results", results}, {"assertions", checks}, {"pass", pass()}};
      if (include_time) {
        out["wall_time_s"] = wall_time_s;
      }
      return out;
    }
  };

  inline Json to_json(ExtOrdinal const& a) {
    return a.to_string();
  }

}  // namespace geodometer
