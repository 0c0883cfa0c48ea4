#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhalf/order_map.hpp"
#include "qhalf/rational.hpp"

using namespace qhalf;

namespace {

// Random increasing piecewise map: sorted distinct anchor xs, increasing ys,
// positive tail slopes.
OrderMap random_increasing_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> anchor_count(0, 5);
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 8);
  std::uniform_int_distribution<long long> step_num(1, 10);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  auto positive = [&] { return Rational(BigInt(step_num(rng)), BigInt(den(rng))); };

  int k = anchor_count(rng);
  std::set<Rational> xs;
  while (int(xs.size()) < k) xs.insert(draw());
  std::vector<std::pair<Rational, Rational>> anchors;
  Rational y = draw();
  for (const Rational& x : xs) {
    y = y + positive();
    anchors.emplace_back(x, y);
  }
  return OrderMap(std::move(anchors), Orientation::increasing, positive(), positive());
}

}  // namespace

TEST_CASE("identity fixes everything") {
  OrderMap id = OrderMap::identity();
  CHECK(id.is_identity());
  CHECK(id.apply(rat(7, 3)) == rat(7, 3));
  CHECK(id.apply(rat(-5)) == rat(-5));
  CHECK(id(rat(0)) == rat(0));
}

TEST_CASE("affine maps") {
  OrderMap m = OrderMap::affine(rat(2), rat(3));
  CHECK(m.apply(rat(0)) == rat(2));
  CHECK(m.apply(rat(1)) == rat(5));
  CHECK(m.apply(rat(1, 3)) == rat(3));
  CHECK(m.orientation() == Orientation::increasing);
  CHECK_FALSE(m.is_identity());

  OrderMap neg = OrderMap::affine(rat(0), rat(-1));
  CHECK(neg.orientation() == Orientation::decreasing);
  CHECK(neg.apply(rat(3)) == rat(-3));
  CHECK(neg.apply(rat(-1, 2)) == rat(1, 2));

  CHECK(OrderMap::affine(rat(0), rat(1)).is_identity());
  CHECK_THROWS_AS(OrderMap::affine(rat(1), rat(0)), std::invalid_argument);
}

TEST_CASE("piecewise interpolation with affine tails") {
  OrderMap m({{rat(0), rat(0)}, {rat(1, 2), rat(1, 3)}, {rat(1), rat(1)}},
             Orientation::increasing, rat(1), rat(1));
  CHECK(m.apply(rat(0)) == rat(0));
  CHECK(m.apply(rat(1, 2)) == rat(1, 3));
  CHECK(m.apply(rat(1)) == rat(1));
  CHECK(m.apply(rat(3, 4)) == rat(2, 3));
  CHECK(m.apply(rat(1, 4)) == rat(1, 6));
  CHECK(m.apply(rat(2)) == rat(2));
  CHECK(m.apply(rat(-1)) == rat(-1));
}

TEST_CASE("constructor validation") {
  using Anchors = std::vector<std::pair<Rational, Rational>>;
  CHECK_THROWS_AS(OrderMap(Anchors{{rat(1), rat(0)}, {rat(0), rat(1)}},
                           Orientation::increasing, rat(1), rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderMap(Anchors{{rat(0), rat(1)}, {rat(1), rat(1)}},
                           Orientation::increasing, rat(1), rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderMap(Anchors{{rat(0), rat(0)}, {rat(1), rat(1)}},
                           Orientation::decreasing, rat(1), rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderMap(Anchors{}, Orientation::increasing, rat(0), rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OrderMap(Anchors{}, Orientation::increasing, rat(1), rat(-2)),
                  std::invalid_argument);
}

TEST_CASE("normalization drops redundant anchors") {
  // All three anchors sit on the line y = 2x, matching both tail slopes.
  OrderMap m({{rat(0), rat(0)}, {rat(1), rat(2)}, {rat(2), rat(4)}},
             Orientation::increasing, rat(2), rat(2));
  CHECK(m.anchors().size() <= 1);
  CHECK(m == OrderMap::affine(rat(0), rat(2)));

  // The middle anchor is collinear with its neighbours.
  OrderMap p({{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}, {rat(3), rat(7)}},
             Orientation::increasing, rat(1), rat(5));
  OrderMap q({{rat(0), rat(0)}, {rat(2), rat(2)}, {rat(3), rat(7)}},
             Orientation::increasing, rat(1), rat(5));
  CHECK(p == q);
  CHECK(p.apply(rat(5, 2)) == q.apply(rat(5, 2)));
}

TEST_CASE("compose matches pointwise composition") {
  OrderMap a = OrderMap::affine(rat(1), rat(2));
  OrderMap b({{rat(0), rat(0)}, {rat(1), rat(3)}}, Orientation::increasing, rat(1), rat(2));
  OrderMap ab = compose(a, b);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 9);
  for (int i = 0; i < 200; ++i) {
    Rational x(BigInt(num(rng)), BigInt(den(rng)));
    CHECK(ab.apply(x) == a.apply(b.apply(x)));
  }

  OrderMap m = random_increasing_map(rng);
  CHECK(compose(OrderMap::identity(), m) == m);
  CHECK(compose(m, OrderMap::identity()) == m);
}

TEST_CASE("inverse undoes the map") {
  OrderMap m = OrderMap::affine(rat(1), rat(2));
  OrderMap inv = inverse(m);
  CHECK(inv.apply(rat(5)) == rat(2));
  CHECK(inv.apply(rat(1)) == rat(0));

  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long long> num(-40, 40);
  std::uniform_int_distribution<long long> den(1, 9);
  for (int round = 0; round < 20; ++round) {
    OrderMap f = random_increasing_map(rng);
    OrderMap g = inverse(f);
    for (int i = 0; i < 10; ++i) {
      Rational x(BigInt(num(rng)), BigInt(den(rng)));
      CHECK(g.apply(f.apply(x)) == x);
      CHECK(f.apply(g.apply(x)) == x);
    }
    CHECK(compose(g, f).is_identity());
    CHECK(compose(f, g).is_identity());
  }
}

TEST_CASE("orientation composes like signs") {
  OrderMap down = OrderMap::affine(rat(0), rat(-1));
  OrderMap up = OrderMap::affine(rat(3), rat(2));
  CHECK(compose(down, down).orientation() == Orientation::increasing);
  CHECK(compose(down, up).orientation() == Orientation::decreasing);
  CHECK(compose(up, down).orientation() == Orientation::decreasing);
  CHECK(compose(down, down).is_identity());
}

TEST_CASE("monotone on random points") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> num(-60, 60);
  std::uniform_int_distribution<long long> den(1, 11);
  for (int round = 0; round < 10; ++round) {
    OrderMap f = random_increasing_map(rng);
    for (int i = 0; i < 30; ++i) {
      Rational x(BigInt(num(rng)), BigInt(den(rng)));
      Rational y(BigInt(num(rng)), BigInt(den(rng)));
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      CHECK(f.apply(x) < f.apply(y));
    }
  }

  OrderMap down = OrderMap::affine(rat(5), rat(-3));
  CHECK(down.apply(rat(0)) == rat(5));
  CHECK(down.apply(rat(1)) == rat(2));
  CHECK(down.apply(rat(0)) > down.apply(rat(1)));
}
