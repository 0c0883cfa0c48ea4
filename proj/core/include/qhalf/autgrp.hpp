#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhalf/graph.hpp"

namespace qhalf {

/// Permutation of 0..n-1, stored as the image vector.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_identity_perm(const Perm& p);
/// (outer * inner)(v) = outer[inner[v]].
Perm compose_perms(const Perm& outer, const Perm& inner);
Perm invert_perm(const Perm& p);
int moved_count(const Perm& p);

/// A fully enumerated permutation group. Elements are stored in
/// lexicographic order, so the identity always comes first. Generators are
/// a small subset whose closure is the whole element list.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> elements;
  std::vector<Perm> generators;

  std::uint64_t order() const { return elements.size(); }
  bool trivial() const { return elements.size() <= 1; }
};

/// Recomputes generators for an element list by greedy closure: repeatedly
/// adopt the first element not yet generated.
std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements);

/// Enumerates the full automorphism group of a graph. Vertices are first
/// partitioned by iterated neighbourhood colour refinement seeded from
/// degrees, then a backtracking search assigns images in increasing vertex
/// order, trying candidates in increasing order. The result is therefore
/// bit-identical to filtering all n! permutations in lexicographic order.
/// Throws OrderCapExceeded once more than order_cap automorphisms are found.
PermGroup automorphisms(const FiniteGraph& g, std::uint64_t order_cap = 1000000);

/// Least number of points moved by a non-identity element, or nullopt when
/// the group is trivial.
std::optional<std::uint64_t> motion(const PermGroup& g);
std::optional<std::uint64_t> motion(const FiniteGraph& g, std::uint64_t order_cap = 1000000);

/// Orbits of the group on 0..degree-1, each sorted, listed by least element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

/// Orbits of the subgroup fixing every listed point (most often one point).
std::vector<std::vector<int>> stabilizer_orbits(const PermGroup& g,
                                                const std::vector<int>& fixed);
std::vector<std::vector<int>> stabilizer_orbits(const PermGroup& g, int fixed);

/// True when only the identity element preserves the vertex colouring.
bool is_distinguishing(const PermGroup& g, const std::vector<int>& colouring);
bool is_distinguishing(const FiniteGraph& g, const std::vector<int>& colouring,
                       std::uint64_t order_cap = 1000000);

/// Least k such that some k-colouring of the vertices is preserved by no
/// automorphism except the identity. Candidate colourings are enumerated as
/// restricted growth strings using exactly k colours, so each partition is
/// tested once. Throws SearchCapExceeded when more than search_cap
/// candidates were examined, and OrderCapExceeded from group enumeration.
/// Returns nullopt if no k up to max_colours works.
std::optional<int> distinguishing_number(const FiniteGraph& g, int max_colours = 8,
                                         std::uint64_t order_cap = 1000000,
                                         std::uint64_t search_cap = 10000000);

/// A witness colouring for distinguishing_number, when one exists.
std::optional<std::vector<int>> distinguishing_colouring(const FiniteGraph& g,
                                                         int colours,
                                                         std::uint64_t order_cap = 1000000,
                                                         std::uint64_t search_cap = 10000000);

}  // namespace qhalf
