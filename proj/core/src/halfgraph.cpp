#include "qhalf/halfgraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhalf/enumerate.hpp"

namespace qhalf {

FiniteGraph truncation(const std::vector<Rational>& support) {
  const int n = static_cast<int>(support.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (!(support[static_cast<std::size_t>(i)] < support[static_cast<std::size_t>(i + 1)])) {
      throw std::invalid_argument("truncation: support must be strictly increasing");
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, n + j});
  }
  FiniteGraph g(2 * n, std::move(edges));
  std::vector<Vertex> labels;
  labels.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) labels.push_back({support[static_cast<std::size_t>(i)], Side::plus});
  for (int j = 0; j < n; ++j) labels.push_back({support[static_cast<std::size_t>(j)], Side::minus});
  g.set_labels(std::move(labels));
  return g;
}

Side flip(Side s) { return s == Side::plus ? Side::minus : Side::plus; }

GraphAut::GraphAut(Flavour flavour, OrderMap map) : flavour_(flavour), map_(std::move(map)) {
  if (std::get<OrderMap>(map_).orientation() != Orientation::increasing) {
    throw std::invalid_argument("GraphAut: order map must be increasing");
  }
}

GraphAut::GraphAut(Flavour flavour, std::shared_ptr<LazyAut> lazy)
    : flavour_(flavour), map_(std::move(lazy)) {
  if (!std::get<std::shared_ptr<LazyAut>>(map_)) {
    throw std::invalid_argument("GraphAut: null lazy map");
  }
}

bool GraphAut::is_lazy() const {
  return std::holds_alternative<std::shared_ptr<LazyAut>>(map_);
}

const OrderMap& GraphAut::order_map() const {
  if (is_lazy()) throw std::logic_error("GraphAut: lazy-backed, no order map");
  return std::get<OrderMap>(map_);
}

const std::shared_ptr<LazyAut>& GraphAut::lazy() const {
  if (!is_lazy()) throw std::logic_error("GraphAut: closed-form, no lazy map");
  return std::get<std::shared_ptr<LazyAut>>(map_);
}

Vertex GraphAut::apply(const Vertex& v) const {
  Rational mapped = is_lazy() ? std::get<std::shared_ptr<LazyAut>>(map_)->image(v.value)
                              : std::get<OrderMap>(map_).apply(v.value);
  if (flavour_ == Flavour::up) return {std::move(mapped), v.side};
  return {-mapped, flip(v.side)};
}

GraphAut arc_witness(const Rational& q, const Rational& r, ArcKind kind) {
  if (kind == ArcKind::plus_to_minus) {
    if (!(q < r)) {
      throw std::invalid_argument("arc_witness: plus-to-minus target needs q < r");
    }
    return GraphAut(Flavour::up, OrderMap::affine(q, r - q));
  }
  if (!(r < q)) {
    throw std::invalid_argument("arc_witness: minus-to-plus target needs q > r");
  }
  return GraphAut(Flavour::down, OrderMap::affine(-q, q - r));
}

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

StructureReport check_structure(const std::vector<Rational>& support,
                                std::uint64_t order_cap) {
  if (support.empty()) throw std::invalid_argument("check_structure: empty support");
  FiniteGraph g = truncation(support);
  const int n = static_cast<int>(support.size());

  StructureReport report;
  report.n = n;

  report.bipartite = true;
  for (const auto& [u, v] : g.edges()) {
    if ((u < n) == (v < n)) report.bipartite = false;
  }

  report.nested_neighbourhoods = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto& na = g.neighbours(a);
      const auto& nb = g.neighbours(b);
      bool subset = std::includes(nb.begin(), nb.end(), na.begin(), na.end());
      bool ge = !(support[static_cast<std::size_t>(a)] < support[static_cast<std::size_t>(b)]);
      if (subset != ge) report.nested_neighbourhoods = false;
    }
  }

  report.minus_from_plus = true;
  for (int i = 0; i + 1 < n; ++i) {
    const auto& around_plus = g.neighbours(i);
    std::vector<int> inter = g.neighbours(around_plus.front());
    for (std::size_t t = 1; t < around_plus.size(); ++t) {
      inter = sorted_intersection(inter, g.neighbours(around_plus[t]));
    }
    inter.erase(std::remove(inter.begin(), inter.end(), i), inter.end());
    if (inter != g.neighbours(n + i)) report.minus_from_plus = false;
  }

  PermGroup got = automorphisms(g, order_cap);
  PermGroup want = predicted_truncation_group(n);
  report.group_as_predicted = got.degree == want.degree && got.elements == want.elements;
  report.group_order = got.order();
  return report;
}

PermGroup predicted_truncation_group(int n) {
  if (n < 1) throw std::invalid_argument("predicted_truncation_group: need n >= 1");
  const int d = 2 * n;
  Perm id = identity_perm(d);
  Perm reversal(static_cast<std::size_t>(d));
  for (int v = 0; v < d; ++v) reversal[static_cast<std::size_t>(v)] = d - 1 - v;
  Perm swap_isolated = id;
  std::swap(swap_isolated[static_cast<std::size_t>(n - 1)],
            swap_isolated[static_cast<std::size_t>(n)]);
  std::vector<Perm> elements = {id, swap_isolated, reversal,
                                compose_perms(swap_isolated, reversal)};
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  PermGroup group;
  group.degree = d;
  group.elements = std::move(elements);
  group.generators = greedy_generators(d, group.elements);
  return group;
}

GraphRefutation refute_graph_colouring(const ColouringSpec& plus_colouring,
                                       const ColouringSpec& minus_colouring,
                                       std::size_t budget, std::size_t sample_count) {
  ColouringSpec pair = pair_colouring(plus_colouring, minus_colouring);
  auto aut = std::make_shared<LazyAut>(refute_order_colouring(pair, budget));

  GraphRefutation out{pair, GraphAut(Flavour::up, aut), aut->verify(sample_count)};
  out.sample_count = sample_count;

  Interval window(*aut->region().interval.lower - Rational(1),
                  *aut->region().interval.upper + Rational(1));
  std::vector<Rational> samples = enumerate_in(window, sample_count);
  std::vector<Rational> images;
  images.reserve(samples.size());
  for (const Rational& q : samples) {
    Rational y = out.lift.apply({q, Side::plus}).value;
    if (colour_of(plus_colouring, q) != colour_of(plus_colouring, y)) ++out.plus_violations;
    if (colour_of(minus_colouring, q) != colour_of(minus_colouring, y)) ++out.minus_violations;
    if (aut->preimage(y) != q) ++out.inverse_violations;
    images.push_back(std::move(y));
  }
  // The lift keeps sides, so the image of the arc from q plus-side to r
  // minus-side is an edge exactly when the images stay in the same order.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      bool edge_before = samples[i] < samples[j];
      bool edge_after = images[i] < images[j];
      if (edge_before != edge_after) ++out.adjacency_violations;
    }
  }
  for (const auto& [x, y] : aut->anchors()) {
    if (x != y) ++out.moved_points;
  }
  return out;
}

}  // namespace qhalf
