#pragma once

#include "json.hpp"
#include "qhalf/autgrp.hpp"
#include "qhalf/backforth.hpp"
#include "qhalf/colouring.hpp"
#include "qhalf/graph.hpp"
#include "qhalf/halfgraph.hpp"
#include "qhalf/order_map.hpp"
#include "qhalf/rational.hpp"

namespace qhalf {

/// All report output uses insertion-ordered JSON so that serialization is
/// byte-deterministic for a fixed input.
using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings, never as floats.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"lower": "p/q" | null, "upper": "p/q" | null}
Json interval_to_json(const Interval& iv);
Interval interval_from_json(const Json& j);

/// {"kind":"piecewise","cuts":[...],"pieces":[...],"cut_colours":[...],"alphabet":n}
/// {"kind":"denom_mod","m":m,"residues":[...],"alphabet":n}
/// {"kind":"pair","first":{...},"second":{...},"alphabet":n}
Json spec_to_json(const ColouringSpec& spec);
ColouringSpec spec_from_json(const Json& j);

/// Labelled graphs serialize their vertices as {"q":"p/q","side":"+"|"-"}
/// plus an explicit edge list; unlabelled graphs serialize as {"n","edges"}.
/// When a labelled graph is read back without an "edges" field, the edges
/// are regenerated from the comparison rule on the labels.
Json graph_to_json(const FiniteGraph& g);
FiniteGraph graph_from_json(const Json& j);

Json order_map_to_json(const OrderMap& m);
Json group_to_json(const PermGroup& g, bool include_elements = true);
Json region_to_json(const DenseRegion& region);
Json report_to_json(const AutReport& report);
/// Everything needed to replay a lazy automorphism run: the region it was
/// grown in, the seed pair, every anchor, the full query log, and the audit
/// counters.
Json transcript_to_json(const LazyAut& aut, const AutReport& report);
Json structure_to_json(const StructureReport& report);
Json refutation_to_json(const GraphRefutation& refutation);

}  // namespace qhalf
