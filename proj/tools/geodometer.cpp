// geodometer: command-line front end.
//
// Every subcommand prints a JSON run report (or a short text rendering with
// --format text) and exits with 0 when all assertions hold, 1 when one fails,
// 2 on usage errors and 3 when a budget or search horizon is exhausted.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <geodometer/geodometer.hpp>

namespace {

  using namespace geodometer;

  enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

  struct Options {
    std::size_t   budget = kDefaultBudget;
    std::uint64_t seed   = 1;
    std::string   format = "json";
    bool          no_time = false;
  };

  VertexId root_of(AnyGraph const& g, std::string const& root) {
    return root.empty() ? g.origin() : g.parse(root);
  }

  void print(RunReport const& report, Options const& opt) {
    if (opt.format == "text") {
      std::cout << report.command << "  [" << report.graph << "]\n";
      for (auto const& [key, value] : report.results.items()) {
        std::cout << "  " << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      for (auto const& a : report.assertions) {
        std::cout << (a.pass ? "  PASS " : "  FAIL ") << a.name;
        if (!a.detail.empty()) {
          std::cout << " (" << a.detail << ')';
        }
        std::cout << '\n';
      }
      return;
    }
    std::cout << report.to_json(!opt.no_time).dump(2) << '\n';
  }

  GeodPath read_path_file(AnyGraph const& g, std::string const& file) {
    std::ifstream in(file);
    if (!in) {
      throw InvalidArgument("cannot open " + file);
    }
    GeodPath    p;
    std::string line;
    bool        header = true;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#') {
        continue;
      }
      if (header) {
        std::istringstream head(line);
        std::string        key;
        if (!(head >> key >> p.base) || key != "base") {
          throw ParseError("path file must start with 'base <offset>'", 0);
        }
        header = false;
        continue;
      }
      p.vertices.push_back(g.parse(line));
    }
    if (p.vertices.empty()) {
      throw InvalidArgument(file + " contains no vertices");
    }
    return p;
  }

  CayleyGraph const& as_cayley(AnyGraph const& g) {
    auto const* c = g.target<CayleyGraph>();
    if (c == nullptr) {
      throw InvalidArgument(g.describe() + " is not a Cayley graph of an abelian group");
    }
    return *c;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodometer: geodesics, generalised radii and weak isomorphism on graph truncations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--budget", opt.budget, "vertex budget for ball and BFS computations")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--no-time", opt.no_time, "omit wall_time_s from JSON reports");

  std::string graph_text;
  std::string root;
  unsigned    maxlen  = 0;
  unsigned    horizon = 0;
  unsigned    radius  = 0;
  std::string path_file;
  std::string eta_text;
  std::string element_text;
  std::uint64_t cutoff = 0;
  std::string fam_a;
  std::string fam_b;
  std::vector<std::string> region;
  std::string word;
  std::string export_format = "json";
  std::string output;
  std::string prop_id;

  auto* radius_cmd = app.add_subcommand("radius", "generalised radius via labels");
  radius_cmd->add_option("graph", graph_text, "construction string")->required();
  radius_cmd->add_option("--root", root, "root vertex (default: origin)");

  auto* erasure_cmd = app.add_subcommand("erasure", "generalised radius via the erasure process");
  erasure_cmd->add_option("graph", graph_text)->required();
  erasure_cmd->add_option("--root", root);
  erasure_cmd->add_option("--maxlen", maxlen, "longest geodesic to enumerate")->required();

  auto* zigzag_cmd = app.add_subcommand("zigzag", "longest zigzag-free geodesic through the root");
  zigzag_cmd->add_option("graph", graph_text)->required();
  zigzag_cmd->add_option("--root", root);
  zigzag_cmd->add_option("--horizon", horizon)->required();

  auto* pset_cmd = app.add_subcommand("pset", "edge-label progression check of a path");
  pset_cmd->add_option("graph", graph_text)->required();
  pset_cmd->add_option("--check", path_file, "path file: 'base <k>' then one vertex per line")
      ->required();

  auto* eta_radius_cmd = app.add_subcommand("eta-radius", "radius of Cay(G_eta, S_eta)");
  eta_radius_cmd->add_option("eta", eta_text, "ordinal notation")->required();

  auto* eta_label_cmd = app.add_subcommand("eta-label", "distance and label of an element of G_eta");
  eta_label_cmd->add_option("eta", eta_text)->required();
  eta_label_cmd->add_option("--element", element_text, "term tree")->required();
  eta_label_cmd->add_option("--cutoff", cutoff, "label in the truncation with this cutoff");

  auto* weakiso_cmd = app.add_subcommand("weakiso", "largest radius with isomorphic balls");
  weakiso_cmd->add_option("famA", fam_a)->required();
  weakiso_cmd->add_option("famB", fam_b)->required();
  weakiso_cmd->add_option("--radius", radius)->required();

  auto* weaktrans_cmd = app.add_subcommand("weaktrans", "compare rooted balls over a region");
  weaktrans_cmd->add_option("graph", graph_text)->required();
  weaktrans_cmd->add_option("--region", region, "vertex (repeatable)")->required();
  weaktrans_cmd->add_option("--radius", radius)->required();

  auto* hcomp_cmd = app.add_subcommand("hcomp", "rule-2 component of a word");
  hcomp_cmd->add_option("word", word)->required();
  hcomp_cmd->add_option("--graph", graph_text)->default_val("wordH:M=4,depth=3");
  hcomp_cmd->add_option("--horizon", horizon)->required();

  auto* export_cmd = app.add_subcommand("export", "write a ball as JSON or DOT");
  export_cmd->add_option("graph", graph_text)->required();
  export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--radius", radius)->required();
  export_cmd->add_option("--root", root);
  export_cmd->add_option("--output,-o", output, "file (default: stdout)");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "run a bundled check");
  reproduce_cmd->add_option("id", prop_id)
      ->required()
      ->check(CLI::IsMember(reproduce_ids()));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  auto const start = std::chrono::steady_clock::now();
  RunReport  report;
  report.command = app.get_subcommands().front()->get_name();
  try {
    if (radius_cmd->parsed()) {
      auto const g = parse_graph_spec(graph_text, opt.budget);
      auto const o = root_of(g, root);
      auto const r = generalized_radius(g, o, opt.budget);
      auto const e = eccentricity(g, o, kUnbounded, opt.budget);
      report.graph = g.describe();
      report.params["root"] = g.format(o);
      report.results["radius"] = r.to_string();
      report.results["eccentricity"] = *e;
      report.check("radius = eccentricity", r == ExtOrdinal::natural(*e));
    } else if (erasure_cmd->parsed()) {
      auto const g = parse_graph_spec(graph_text, opt.budget);
      auto const o = root_of(g, root);
      auto const e = erasure_rank(g, o, maxlen, 5 * opt.budget, opt.budget);
      auto const r = generalized_radius(g, o, opt.budget);
      report.graph = g.describe();
      report.params["root"] = g.format(o);
      report.params["maxlen"] = maxlen;
      report.results["radius"] = e.radius.to_string();
      report.results["geodesics"] = e.nodes.size();
      report.check("erasure rank = label radius", e.radius == r);
    } else if (zigzag_cmd->parsed()) {
      auto const g = parse_graph_spec(graph_text, opt.budget);
      auto const o = root_of(g, root);
      report.graph = g.describe();
      report.params["root"] = g.format(o);
      report.params["horizon"] = horizon;
      auto const z = max_zigzag_geodesic(g, o, horizon, opt.budget);
      report.results["max_zigzag"] = z;
      report.results["reached_horizon"] = z >= horizon;
    } else if (pset_cmd->parsed()) {
      auto const  g = parse_graph_spec(graph_text, opt.budget);
      auto const& c = as_cayley(g);
      auto const  p = read_path_file(g, path_file);
      report.graph = g.describe();
      report.params["base"] = p.base;
      report.params["length"] = p.length();
      auto const labels = edge_labels(c, p);
      report.results["labels"] = labels;
      auto const member = pset_member(c, p);
      report.results["member"] = member;
      if (p.length() >= 3) {
        if (auto prog = pset_progression(c, p)) {
          report.results["progression"] = {{"a", prog->a}, {"b", prog->b}};
        } else {
          report.results["progression"] = nullptr;
        }
      }
      report.check("path is a member", member);
    } else if (eta_radius_cmd->parsed()) {
      auto const eta = parse_ordinal(eta_text);
      auto const r   = radius_eta(eta);
      report.graph = "eta:eta=" + eta.to_string();
      report.results["radius"] = r.to_string();
      report.check("radius = eta", r == eta);
    } else if (eta_label_cmd->parsed()) {
      auto const eta = parse_ordinal(eta_text);
      auto const e   = parse_eta_element(eta, element_text);
      report.graph = "eta:eta=" + eta.to_string();
      report.params["element"] = e.to_string();
      std::optional<std::uint64_t> c;
      if (cutoff > 0) {
        c = cutoff;
        report.params["cutoff"] = cutoff;
      }
      report.results["dist"] = dist_eta(eta, e);
      report.results["label"] = label_eta(eta, e, c).to_string();
    } else if (weakiso_cmd->parsed()) {
      auto const w = weak_iso_upto(parse_family(fam_a, opt.budget), parse_family(fam_b, opt.budget),
                                   radius, opt.budget);
      report.graph = fam_a + " vs " + fam_b;
      report.params["radius"] = radius;
      report.results["K"] = w.K;
      report.results["distance"] = w.distance;
      report.results["iso_at"] = w.iso_at;
      if (w.witness) {
        report.results["witness"] = *w.witness;
      }
      report.check("isomorphic radii are downward closed", w.downward_closed);
    } else if (weaktrans_cmd->parsed()) {
      auto const g = parse_graph_spec(graph_text, opt.budget);
      std::vector<VertexId> vs;
      for (auto const& v : region) {
        vs.push_back(g.parse(v));
      }
      auto const w = weak_transitive_check(g, vs, radius, opt.budget);
      report.graph = g.describe();
      report.params["region"] = region;
      report.params["radius"] = radius;
      if (w.witness) {
        report.results["witness"] = {g.format(w.witness->first), g.format(w.witness->second)};
      }
      report.check("rooted balls agree over the region", w.ok);
    } else if (hcomp_cmd->parsed()) {
      auto const  g = parse_graph_spec(graph_text, opt.budget);
      auto const* h = g.target<WordGraph>();
      if (h == nullptr) {
        throw InvalidArgument("hcomp needs a wordH graph");
      }
      auto const w = h->parse(word);
      auto const c = h_component_analysis(*h, w, horizon, opt.budget);
      report.graph = g.describe();
      report.params["word"] = c.word;
      report.params["horizon"] = horizon;
      report.results["component"] = c.first_letter_only ? "G" : "G'";
      report.results["ball_size"] = c.ball_size;
      report.results["max_zigzag"] = c.max_zigzag;
      report.results["bounded"] = c.bounded;
      auto const words = h->decode(w);
      if (words.size() >= 2) {
        auto parent_word = words;
        parent_word.pop_back();
        bool const last_zero = std::all_of(words.back().begin(), words.back().end(),
                                           [](std::int64_t x) { return x == 0; });
        if (last_zero) {
          auto const parent = WordGraph::encode(parent_word);
          report.check("rule-1 edge to " + h->format(parent) + " is a cut edge within radius "
                           + std::to_string(2 * horizon),
                       rule1_cut_edge_check(*h, parent, w, horizon, opt.budget));
        }
      }
    } else if (export_cmd->parsed()) {
      auto const g = parse_graph_spec(graph_text, opt.budget);
      auto const b = ball(g, root_of(g, root), radius, opt.budget);
      auto const text = export_format == "dot" ? ball_to_dot(b) : ball_to_json(b).dump(2) + "\n";
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        out << text;
        if (!out) {
          throw Error("cannot write " + output);
        }
      }
      return kPass;
    } else if (reproduce_cmd->parsed()) {
      report = reproduce(prop_id, opt.seed);
    }
  } catch (BudgetExceeded const& e) {
    std::cerr << "geodometer: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (HorizonTooSmall const& e) {
    std::cerr << "geodometer: horizon too small: " << e.what() << '\n';
    return kBudget;
  } catch (ParseError const& e) {
    std::cerr << "geodometer: " << e.what() << '\n';
    return kUsage;
  } catch (InvalidArgument const& e) {
    std::cerr << "geodometer: " << e.what() << '\n';
    return kUsage;
  } catch (Error const& e) {
    std::cerr << "geodometer: " << e.what() << '\n';
    return kFail;
  }
  if (report.wall_time_s == 0.0) {
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  print(report, opt);
  return report.pass() ? kPass : kFail;
}
