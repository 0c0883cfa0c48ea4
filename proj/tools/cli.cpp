#include "cli.hpp"

#include <ctime>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qhalf/errors.hpp"
#include "qhalf/json_io.hpp"

namespace qhalf::cli {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    std::size_t first = token.find_first_not_of(" \t");
    std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw std::invalid_argument("empty item in list \"" + text + "\"");
    }
    out.push_back(token.substr(first, last - first + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<Rational> parse_support(const std::string& csv) {
  std::vector<Rational> out;
  for (const std::string& token : split_csv(csv)) out.push_back(Rational::parse(token));
  return out;
}

std::vector<Rational> support_grid(const Rational& a, const Rational& b, int n) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  if (n == 1) return {a};
  if (!(a < b)) throw std::invalid_argument("grid needs a < b");
  std::vector<Rational> out;
  Rational step = (b - a) / Rational(n - 1);
  for (int k = 0; k < n; ++k) out.push_back(a + Rational(k) * step);
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (const std::string& token : split_csv(csv)) {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad integer \"" + token + "\"");
    out.push_back(value);
  }
  return out;
}

Json support_to_json(const std::vector<Rational>& support) {
  Json j = Json::array();
  for (const Rational& q : support) j.push_back(q.str());
  return j;
}

Json vertex_to_json(const Vertex& v) {
  return Json::array({v.value.str(), v.side == Side::plus ? "+" : "-"});
}

/// Light group-axiom audit: identity present and first, inverses present,
/// elements closed under composition with the generators.
bool axioms_hold(const PermGroup& g) {
  if (g.elements.empty() || !is_identity_perm(g.elements.front())) return false;
  std::set<Perm> members(g.elements.begin(), g.elements.end());
  for (const Perm& e : g.elements) {
    if (!members.count(invert_perm(e))) return false;
    for (const Perm& gen : g.generators) {
      if (!members.count(compose_perms(gen, e))) return false;
    }
  }
  return true;
}

std::string utc_stamp() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

struct Report {
  Json body;
  bool pass = false;
};

Report make_report(const std::string& command, Json inputs, Json results, bool pass) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["pass"] = pass;
  return {std::move(j), pass};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry toolkit for the two-sided order graph on the rationals", "qhalf"};
  app.require_subcommand(1);
  bool stamp = false;
  app.add_flag("--stamp", stamp, "Append a wall-clock stamp after the deterministic body");

  auto* halfgraph_cmd = app.add_subcommand("halfgraph", "Truncation generators");
  halfgraph_cmd->fallthrough();
  halfgraph_cmd->require_subcommand(1);
  auto* gen_cmd = halfgraph_cmd->add_subcommand("gen", "Generate a truncation on a support");
  gen_cmd->fallthrough();
  std::string gen_support;
  std::vector<std::string> gen_grid;
  std::string gen_output;
  gen_cmd->add_option("--support", gen_support, "Comma-separated p/q support values");
  gen_cmd->add_option("--support-grid", gen_grid, "Evenly spaced support: a b n")->expected(3);
  gen_cmd->add_option("-o,--output", gen_output, "Also write the graph JSON to this file");

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group commands");
  aut_cmd->fallthrough();
  aut_cmd->require_subcommand(1);
  auto* enumerate_cmd = aut_cmd->add_subcommand("enumerate", "Enumerate the full group");
  enumerate_cmd->fallthrough();
  std::string enum_graph;
  std::uint64_t enum_cap = 1000000;
  int enum_stabilizer = -1;
  bool enum_have_stabilizer = false;
  enumerate_cmd->add_option("graph", enum_graph, "Graph JSON file")->required();
  enumerate_cmd->add_option("--order-cap", enum_cap, "Abort beyond this group order")
      ->capture_default_str();
  enumerate_cmd
      ->add_option("--stabilizer", enum_stabilizer, "Also report orbits of this vertex's stabilizer")
      ->check(CLI::NonNegativeNumber);
  enumerate_cmd->callback([&] { enum_have_stabilizer = enumerate_cmd->count("--stabilizer") > 0; });

  auto* motion_cmd = app.add_subcommand("motion", "Least moved count of a non-identity automorphism");
  motion_cmd->fallthrough();
  std::string motion_graph;
  std::uint64_t motion_cap = 1000000;
  motion_cmd->add_option("graph", motion_graph, "Graph JSON file")->required();
  motion_cmd->add_option("--order-cap", motion_cap, "Abort beyond this group order")
      ->capture_default_str();

  auto* distnum_cmd = app.add_subcommand("distnum", "Least distinguishing colour count");
  distnum_cmd->fallthrough();
  std::string distnum_graph;
  int distnum_max = 8;
  std::uint64_t distnum_cap = 1000000;
  std::uint64_t distnum_search_cap = 10000000;
  distnum_cmd->add_option("graph", distnum_graph, "Graph JSON file")->required();
  distnum_cmd->add_option("--max-colours", distnum_max, "Largest colour count to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  distnum_cmd->add_option("--order-cap", distnum_cap, "Abort beyond this group order")
      ->capture_default_str();
  distnum_cmd->add_option("--search-cap", distnum_search_cap, "Abort beyond this many candidates")
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify-colouring", "Check a vertex colouring for distinguishing");
  verify_cmd->fallthrough();
  std::string verify_graph;
  std::string verify_colours;
  std::uint64_t verify_cap = 1000000;
  verify_cmd->add_option("graph", verify_graph, "Graph JSON file")->required();
  verify_cmd->add_option("--colours", verify_colours, "Comma-separated colour ids per vertex")
      ->required();
  verify_cmd->add_option("--order-cap", verify_cap, "Abort beyond this group order")
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Structural checks");
  check_cmd->fallthrough();
  check_cmd->require_subcommand(1);
  auto* lemmas_cmd = check_cmd->add_subcommand("lemmas", "Run all truncation structure checks");
  lemmas_cmd->fallthrough();
  std::string lemmas_support;
  std::uint64_t lemmas_cap = 1000000;
  lemmas_cmd->add_option("--support", lemmas_support, "Comma-separated p/q support values")
      ->required();
  lemmas_cmd->add_option("--order-cap", lemmas_cap, "Abort beyond this group order")
      ->capture_default_str();

  auto* arc_cmd = app.add_subcommand("arc-witness", "Closed-form automorphism onto a target arc");
  arc_cmd->fallthrough();
  std::string arc_to;
  arc_cmd->add_option("--to", arc_to, "Target arc: q,r,plus-to-minus | q,r,minus-to-plus")
      ->required();

  auto* refute_cmd = app.add_subcommand("refute", "Synthesize a nontrivial colour-preserving automorphism");
  refute_cmd->fallthrough();
  std::string refute_spec;
  std::string refute_cplus;
  std::string refute_cminus;
  std::uint64_t refute_budget = 10000;
  std::uint64_t refute_samples = 1000;
  refute_cmd->add_option("--spec", refute_spec, "Order-level mode: one colouring JSON file");
  refute_cmd->add_option("--cplus", refute_cplus, "Graph mode: plus-side colouring JSON file");
  refute_cmd->add_option("--cminus", refute_cminus, "Graph mode: minus-side colouring JSON file");
  refute_cmd->add_option("--budget", refute_budget, "Witness search budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  refute_cmd->add_option("--samples", refute_samples, "Audit sample count")
      ->capture_default_str()
      ->check(CLI::Range(static_cast<std::uint64_t>(2), static_cast<std::uint64_t>(100000000)));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string failed_command;
  try {
    Report report;

    if (*gen_cmd) {
      if (gen_support.empty() == gen_grid.empty()) {
        throw std::invalid_argument("gen: need exactly one of --support and --support-grid");
      }
      std::vector<Rational> support;
      Json inputs;
      if (!gen_support.empty()) {
        support = parse_support(gen_support);
        inputs["support"] = support_to_json(support);
      } else {
        Rational a = Rational::parse(gen_grid[0]);
        Rational b = Rational::parse(gen_grid[1]);
        int n = std::stoi(gen_grid[2]);
        support = support_grid(a, b, n);
        inputs["grid"] = Json::array({a.str(), b.str(), n});
      }
      inputs["output"] = gen_output.empty() ? Json(nullptr) : Json(gen_output);
      FiniteGraph graph = truncation(support);
      Json graph_json = graph_to_json(graph);
      if (!gen_output.empty()) {
        std::ofstream file(gen_output);
        if (!file) throw std::invalid_argument("cannot write " + gen_output);
        file << graph_json.dump(2) << "\n";
      }
      Json results;
      results["n"] = static_cast<int>(support.size());
      results["edge_count"] = static_cast<int>(graph.edges().size());
      results["graph"] = std::move(graph_json);
      report = make_report("halfgraph gen", std::move(inputs), std::move(results), true);
    } else if (*enumerate_cmd) {
      failed_command = "aut enumerate";
      Json inputs;
      inputs["graph"] = enum_graph;
      inputs["order_cap"] = enum_cap;
      inputs["stabilizer"] = enum_have_stabilizer ? Json(enum_stabilizer) : Json(nullptr);
      FiniteGraph graph = graph_from_json(read_json_file(enum_graph));
      PermGroup group = automorphisms(graph, enum_cap);
      bool axioms = axioms_hold(group);
      Json results;
      results["group"] = group_to_json(group);
      results["orbits"] = orbits(group);
      if (enum_have_stabilizer) {
        Json stabilizer;
        stabilizer["vertex"] = enum_stabilizer;
        stabilizer["orbits"] = stabilizer_orbits(group, enum_stabilizer);
        results["stabilizer"] = std::move(stabilizer);
      }
      results["axioms_hold"] = axioms;
      report = make_report("aut enumerate", std::move(inputs), std::move(results), axioms);
    } else if (*motion_cmd) {
      failed_command = "motion";
      Json inputs;
      inputs["graph"] = motion_graph;
      inputs["order_cap"] = motion_cap;
      FiniteGraph graph = graph_from_json(read_json_file(motion_graph));
      PermGroup group = automorphisms(graph, motion_cap);
      std::optional<std::uint64_t> value = motion(group);
      Json results;
      results["group_order"] = group.order();
      results["motion"] = value ? Json(*value) : Json(nullptr);
      report = make_report("motion", std::move(inputs), std::move(results), true);
    } else if (*distnum_cmd) {
      failed_command = "distnum";
      Json inputs;
      inputs["graph"] = distnum_graph;
      inputs["max_colours"] = distnum_max;
      inputs["order_cap"] = distnum_cap;
      inputs["search_cap"] = distnum_search_cap;
      FiniteGraph graph = graph_from_json(read_json_file(distnum_graph));
      PermGroup group = automorphisms(graph, distnum_cap);
      std::optional<int> number =
          distinguishing_number(graph, distnum_max, distnum_cap, distnum_search_cap);
      Json results;
      results["group_order"] = group.order();
      results["distinguishing_number"] = number ? Json(*number) : Json(nullptr);
      if (number) {
        auto witness = distinguishing_colouring(graph, *number, distnum_cap, distnum_search_cap);
        results["witness_colouring"] = witness ? Json(*witness) : Json(nullptr);
      } else {
        results["witness_colouring"] = nullptr;
      }
      report = make_report("distnum", std::move(inputs), std::move(results),
                           number.has_value());
    } else if (*verify_cmd) {
      failed_command = "verify-colouring";
      std::vector<int> colours = parse_int_list(verify_colours);
      Json inputs;
      inputs["graph"] = verify_graph;
      inputs["colours"] = colours;
      inputs["order_cap"] = verify_cap;
      FiniteGraph graph = graph_from_json(read_json_file(verify_graph));
      PermGroup group = automorphisms(graph, verify_cap);
      bool distinguishing = is_distinguishing(group, colours);
      std::uint64_t preserving = 0;
      for (const Perm& e : group.elements) {
        if (is_identity_perm(e)) continue;
        bool keeps = true;
        for (std::size_t v = 0; v < e.size(); ++v) {
          if (colours[static_cast<std::size_t>(e[v])] != colours[v]) {
            keeps = false;
            break;
          }
        }
        if (keeps) ++preserving;
      }
      Json results;
      results["group_order"] = group.order();
      results["distinguishing"] = distinguishing;
      results["preserving_nonidentity"] = preserving;
      report = make_report("verify-colouring", std::move(inputs), std::move(results),
                           distinguishing);
    } else if (*lemmas_cmd) {
      failed_command = "check lemmas";
      std::vector<Rational> support = parse_support(lemmas_support);
      Json inputs;
      inputs["support"] = support_to_json(support);
      inputs["order_cap"] = lemmas_cap;
      StructureReport structure = check_structure(support, lemmas_cap);
      report = make_report("check lemmas", std::move(inputs), structure_to_json(structure),
                           structure.all());
    } else if (*arc_cmd) {
      failed_command = "arc-witness";
      std::vector<std::string> parts = split_csv(arc_to);
      if (parts.size() != 3) {
        throw std::invalid_argument("arc-witness: --to needs q,r,kind");
      }
      Rational q = Rational::parse(parts[0]);
      Rational r = Rational::parse(parts[1]);
      ArcKind kind;
      if (parts[2] == "plus-to-minus") {
        kind = ArcKind::plus_to_minus;
      } else if (parts[2] == "minus-to-plus") {
        kind = ArcKind::minus_to_plus;
      } else {
        throw std::invalid_argument("arc-witness: kind must be plus-to-minus or minus-to-plus");
      }
      GraphAut witness = arc_witness(q, r, kind);
      Vertex base0{Rational(0), Side::plus};
      Vertex base1{Rational(1), Side::minus};
      Vertex image0 = witness.apply(base0);
      Vertex image1 = witness.apply(base1);
      Vertex target0{q, kind == ArcKind::plus_to_minus ? Side::plus : Side::minus};
      Vertex target1{r, kind == ArcKind::plus_to_minus ? Side::minus : Side::plus};
      bool matches = image0 == target0 && image1 == target1;
      const Vertex& plus_end = image0.side == Side::plus ? image0 : image1;
      const Vertex& minus_end = image0.side == Side::plus ? image1 : image0;
      bool edge = plus_end.side == Side::plus && minus_end.side == Side::minus &&
                  plus_end.value < minus_end.value;
      Json inputs;
      inputs["to"] = arc_to;
      Json results;
      results["flavour"] = witness.flavour() == Flavour::up ? "up" : "down";
      results["order_map"] = order_map_to_json(witness.order_map());
      results["base"] = Json::array({vertex_to_json(base0), vertex_to_json(base1)});
      results["target"] = Json::array({vertex_to_json(target0), vertex_to_json(target1)});
      results["image"] = Json::array({vertex_to_json(image0), vertex_to_json(image1)});
      results["matches_target"] = matches;
      results["image_is_edge"] = edge;
      report = make_report("arc-witness", std::move(inputs), std::move(results), matches && edge);
    } else if (*refute_cmd) {
      failed_command = "refute";
      bool order_mode = !refute_spec.empty();
      bool graph_mode = !refute_cplus.empty() || !refute_cminus.empty();
      if (order_mode == graph_mode) {
        throw std::invalid_argument("refute: need --spec or both --cplus and --cminus");
      }
      Json inputs;
      inputs["spec"] = order_mode ? Json(refute_spec) : Json(nullptr);
      inputs["cplus"] = graph_mode ? Json(refute_cplus) : Json(nullptr);
      inputs["cminus"] = graph_mode ? Json(refute_cminus) : Json(nullptr);
      inputs["budget"] = refute_budget;
      inputs["samples"] = refute_samples;
      if (order_mode) {
        ColouringSpec spec = spec_from_json(read_json_file(refute_spec));
        LazyAut aut = refute_order_colouring(spec, static_cast<std::size_t>(refute_budget));
        AutReport audit = aut.verify(static_cast<std::size_t>(refute_samples));
        Json results;
        results["spec"] = spec_to_json(spec);
        results["transcript"] = transcript_to_json(aut, audit);
        report = make_report("refute", std::move(inputs), std::move(results), audit.passes());
      } else {
        if (refute_cplus.empty() || refute_cminus.empty()) {
          throw std::invalid_argument("refute: graph mode needs both --cplus and --cminus");
        }
        ColouringSpec cplus = spec_from_json(read_json_file(refute_cplus));
        ColouringSpec cminus = spec_from_json(read_json_file(refute_cminus));
        GraphRefutation refutation =
            refute_graph_colouring(cplus, cminus, static_cast<std::size_t>(refute_budget),
                                   static_cast<std::size_t>(refute_samples));
        Json results;
        results["cplus"] = spec_to_json(cplus);
        results["cminus"] = spec_to_json(cminus);
        results["refutation"] = refutation_to_json(refutation);
        results["transcript"] =
            transcript_to_json(*refutation.lift.lazy(), refutation.order_report);
        report = make_report("refute", std::move(inputs), std::move(results),
                             refutation.passes());
      }
    } else {
      err << "error: no subcommand selected\n";
      return 2;
    }

    if (stamp) report.body["stamp"] = utc_stamp();
    out << report.body.dump(2) << "\n";
    return report.pass ? 0 : 1;
  } catch (const BudgetExhausted& e) {
    Json j;
    j["command"] = failed_command;
    j["error"] = e.what();
    j["pass"] = false;
    out << j.dump(2) << "\n";
    return 1;
  } catch (const Inconclusive& e) {
    Json j;
    j["command"] = failed_command;
    j["error"] = e.what();
    j["pass"] = false;
    out << j.dump(2) << "\n";
    return 1;
  } catch (const OrderCapExceeded& e) {
    Json j;
    j["command"] = failed_command;
    j["error"] = e.what();
    j["pass"] = false;
    out << j.dump(2) << "\n";
    return 1;
  } catch (const SearchCapExceeded& e) {
    Json j;
    j["command"] = failed_command;
    j["error"] = e.what();
    j["pass"] = false;
    out << j.dump(2) << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qhalf::cli
