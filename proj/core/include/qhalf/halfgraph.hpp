#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "qhalf/autgrp.hpp"
#include "qhalf/backforth.hpp"
#include "qhalf/colouring.hpp"
#include "qhalf/graph.hpp"
#include "qhalf/order_map.hpp"
#include "qhalf/rational.hpp"

namespace qhalf {

/// Finite induced piece of the bipartite graph on two copies of the
/// rationals where q on the plus side meets r on the minus side exactly when
/// q < r. The support must be strictly increasing. Vertices 0..n-1 carry the
/// plus copies in support order, vertices n..2n-1 the minus copies, and
/// (i, n+j) is an edge exactly when i < j. Labels record value and side.
FiniteGraph truncation(const std::vector<Rational>& support);

/// How a map of the line acts on the two-sided vertex set: up keeps sides
/// and applies the map, down swaps sides and negates the mapped value. Both
/// act on edges correctly only for increasing maps.
enum class Flavour { up, down };

Side flip(Side s);

/// An automorphism of the two-sided graph, driven either by a closed-form
/// order map of the line or by a lazily extended one.
class GraphAut {
 public:
  GraphAut(Flavour flavour, OrderMap map);
  GraphAut(Flavour flavour, std::shared_ptr<LazyAut> lazy);

  Flavour flavour() const { return flavour_; }
  bool is_lazy() const;
  const OrderMap& order_map() const;
  const std::shared_ptr<LazyAut>& lazy() const;

  /// Moves one labelled vertex. Lazy-backed maps may extend themselves.
  Vertex apply(const Vertex& v) const;

 private:
  Flavour flavour_;
  std::variant<OrderMap, std::shared_ptr<LazyAut>> map_;
};

/// An arc here is an ordered edge. The base arc runs from 0 on the plus side
/// to 1 on the minus side; a witness transports it onto the requested arc.
enum class ArcKind { plus_to_minus, minus_to_plus };

/// Closed-form automorphism sending the base arc onto (q, r) with the given
/// side pattern. plus_to_minus needs q < r and yields an up witness
/// x ↦ q + (r-q)x. minus_to_plus needs q > r and yields a down witness
/// x ↦ -q + (q-r)x. Anything else is rejected: the target is not an arc.
GraphAut arc_witness(const Rational& q, const Rational& r, ArcKind kind);

/// Outcome of the finite structure checks on one truncation.
struct StructureReport {
  int n = 0;
  bool bipartite = false;
  /// q >= r exactly when every neighbour of q-plus is one of r-plus.
  bool nested_neighbourhoods = false;
  /// For non-maximal q, the minus neighbourhood is the intersection of the
  /// neighbourhoods of all neighbours of q-plus, minus q-plus itself.
  bool minus_from_plus = false;
  /// The automorphism group is exactly the predicted one.
  bool group_as_predicted = false;
  std::uint64_t group_order = 0;

  bool all() const {
    return bipartite && nested_neighbourhoods && minus_from_plus && group_as_predicted;
  }
};

StructureReport check_structure(const std::vector<Rational>& support,
                                std::uint64_t order_cap = 1000000);

/// The expected automorphism group of a truncation on n points: order 2 for
/// n = 1, otherwise the order-4 group generated by swapping the two isolated
/// vertices (top plus, bottom minus) and reversing the index order across
/// sides.
PermGroup predicted_truncation_group(int n);

/// A two-sided refutation: colourings for the plus and minus copies are
/// merged into one pair colouring, a lazy automorphism is grown for it, and
/// the lift is audited in graph terms on top of the order-level report.
struct GraphRefutation {
  ColouringSpec pair_spec;
  /// Up-flavour witness backed by the lazy order automorphism; the shared
  /// LazyAut itself is reachable through lift.lazy().
  GraphAut lift;
  AutReport order_report;
  std::uint64_t sample_count = 0;
  std::uint64_t plus_violations = 0;
  std::uint64_t minus_violations = 0;
  std::uint64_t adjacency_violations = 0;
  std::uint64_t inverse_violations = 0;
  std::uint64_t moved_points = 0;

  bool passes() const {
    return order_report.passes() && plus_violations == 0 && minus_violations == 0 &&
           adjacency_violations == 0 && inverse_violations == 0 && moved_points >= 1;
  }
};

GraphRefutation refute_graph_colouring(const ColouringSpec& plus_colouring,
                                       const ColouringSpec& minus_colouring,
                                       std::size_t budget, std::size_t sample_count = 1000);

}  // namespace qhalf
