#include "qhalf/json_io.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhalf {

Json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational as a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json interval_to_json(const Interval& iv) {
  Json j;
  j["lower"] = iv.lower ? Json(iv.lower->str()) : Json(nullptr);
  j["upper"] = iv.upper ? Json(iv.upper->str()) : Json(nullptr);
  return j;
}

Interval interval_from_json(const Json& j) {
  std::optional<Rational> lower, upper;
  if (j.contains("lower") && !j.at("lower").is_null()) lower = rational_from_json(j.at("lower"));
  if (j.contains("upper") && !j.at("upper").is_null()) upper = rational_from_json(j.at("upper"));
  return Interval(lower, upper);
}

namespace {

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& q : values) j.push_back(q.str());
  return j;
}

}  // namespace

Json spec_to_json(const ColouringSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case ColouringSpec::Kind::piecewise:
      j["kind"] = "piecewise";
      j["cuts"] = rationals_to_json(spec.cuts());
      j["pieces"] = spec.piece_colours();
      j["cut_colours"] = spec.cut_colours();
      break;
    case ColouringSpec::Kind::denom_mod:
      j["kind"] = "denom_mod";
      j["m"] = spec.modulus();
      j["residues"] = spec.residue_colours();
      break;
    case ColouringSpec::Kind::pair:
      j["kind"] = "pair";
      j["first"] = spec_to_json(spec.first());
      j["second"] = spec_to_json(spec.second());
      break;
  }
  j["alphabet"] = spec.alphabet();
  return j;
}

ColouringSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument("colouring: expected an object with a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "piecewise") {
    return ColouringSpec::piecewise(rationals_from_json(j.at("cuts")),
                                    j.at("pieces").get<std::vector<int>>(),
                                    j.at("cut_colours").get<std::vector<int>>(),
                                    j.at("alphabet").get<int>());
  }
  if (kind == "denom_mod") {
    return ColouringSpec::denom_mod(j.at("m").get<int>(),
                                    j.at("residues").get<std::vector<int>>(),
                                    j.at("alphabet").get<int>());
  }
  if (kind == "pair") {
    return ColouringSpec::pair_of(spec_from_json(j.at("first")),
                                  spec_from_json(j.at("second")));
  }
  throw std::invalid_argument("colouring: unknown kind \"" + kind + "\"");
}

Json graph_to_json(const FiniteGraph& g) {
  Json j;
  if (g.has_labels()) {
    Json vertices = Json::array();
    for (const Vertex& v : g.labels()) {
      Json entry;
      entry["q"] = v.value.str();
      entry["side"] = v.side == Side::plus ? "+" : "-";
      vertices.push_back(std::move(entry));
    }
    j["vertices"] = std::move(vertices);
  } else {
    j["n"] = g.n();
  }
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

FiniteGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph: expected an object");
  std::vector<Vertex> labels;
  int n = 0;
  if (j.contains("vertices")) {
    for (const auto& entry : j.at("vertices")) {
      const std::string side = entry.at("side").get<std::string>();
      if (side != "+" && side != "-") {
        throw std::invalid_argument("graph: vertex side must be \"+\" or \"-\"");
      }
      labels.push_back({rational_from_json(entry.at("q")),
                        side == "+" ? Side::plus : Side::minus});
    }
    n = static_cast<int>(labels.size());
  } else if (j.contains("n")) {
    n = j.at("n").get<int>();
  } else {
    throw std::invalid_argument("graph: need either \"vertices\" or \"n\"");
  }

  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& pair : j.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("graph: each edge must be a pair");
      }
      edges.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
  } else if (!labels.empty()) {
    // Rebuild from the rule: a plus vertex meets a minus vertex exactly when
    // the plus value is below the minus value.
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const Vertex& a = labels[static_cast<std::size_t>(u)];
        const Vertex& b = labels[static_cast<std::size_t>(v)];
        if (a.side == b.side) continue;
        const Vertex& plus = a.side == Side::plus ? a : b;
        const Vertex& minus = a.side == Side::plus ? b : a;
        if (plus.value < minus.value) edges.push_back({u, v});
      }
    }
  } else {
    throw std::invalid_argument("graph: unlabelled graphs need an \"edges\" field");
  }

  FiniteGraph g(n, std::move(edges));
  if (!labels.empty()) g.set_labels(std::move(labels));
  return g;
}

Json order_map_to_json(const OrderMap& m) {
  Json j;
  Json anchors = Json::array();
  for (const auto& [x, y] : m.anchors()) {
    anchors.push_back(Json::array({x.str(), y.str()}));
  }
  j["anchors"] = std::move(anchors);
  j["orientation"] = m.orientation() == Orientation::increasing ? "increasing" : "decreasing";
  j["left_slope"] = m.left_slope().str();
  j["right_slope"] = m.right_slope().str();
  return j;
}

Json group_to_json(const PermGroup& g, bool include_elements) {
  Json j;
  j["degree"] = g.degree;
  j["order"] = g.order();
  j["generators"] = g.generators;
  if (include_elements) j["elements"] = g.elements;
  return j;
}

Json region_to_json(const DenseRegion& region) {
  Json j;
  j["interval"] = interval_to_json(region.interval);
  j["colours"] = region.colours;
  j["exact"] = region.exact;
  Json witnesses;
  for (const auto& [colour, points] : region.witnesses) {
    witnesses[std::to_string(colour)] = rationals_to_json(points);
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

Json report_to_json(const AutReport& report) {
  Json j;
  j["queries"] = report.queries;
  j["order_violations"] = report.order_violations;
  j["colour_violations"] = report.colour_violations;
  j["inverse_violations"] = report.inverse_violations;
  j["moved_points"] = report.moved_points;
  j["pass"] = report.passes();
  return j;
}

Json transcript_to_json(const LazyAut& aut, const AutReport& report) {
  Json j;
  j["region"] = region_to_json(aut.region());
  j["seed"] = Json::array({aut.seed().first.str(), aut.seed().second.str()});
  Json anchors = Json::array();
  for (const auto& [x, y] : aut.anchors()) {
    anchors.push_back(Json::array({x.str(), y.str()}));
  }
  j["anchors"] = std::move(anchors);
  Json log = Json::array();
  for (const auto& record : aut.query_log()) {
    Json entry;
    entry["op"] = record.op == LazyAut::QueryRecord::Op::image ? "image" : "preimage";
    entry["arg"] = record.arg.str();
    entry["result"] = record.result.str();
    log.push_back(std::move(entry));
  }
  j["query_log"] = std::move(log);
  j["report"] = report_to_json(report);
  return j;
}

Json structure_to_json(const StructureReport& report) {
  Json j;
  j["n"] = report.n;
  j["bipartite"] = report.bipartite;
  j["nested_neighbourhoods"] = report.nested_neighbourhoods;
  j["minus_from_plus"] = report.minus_from_plus;
  j["group_as_predicted"] = report.group_as_predicted;
  j["group_order"] = report.group_order;
  j["pass"] = report.all();
  return j;
}

Json refutation_to_json(const GraphRefutation& refutation) {
  Json j;
  j["pair_spec"] = spec_to_json(refutation.pair_spec);
  j["order_report"] = report_to_json(refutation.order_report);
  j["samples"] = refutation.sample_count;
  j["plus_violations"] = refutation.plus_violations;
  j["minus_violations"] = refutation.minus_violations;
  j["adjacency_violations"] = refutation.adjacency_violations;
  j["inverse_violations"] = refutation.inverse_violations;
  j["moved_points"] = refutation.moved_points;
  j["pass"] = refutation.passes();
  return j;
}

}  // namespace qhalf
