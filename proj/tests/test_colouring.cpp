#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "qhalf/colouring.hpp"
#include "qhalf/enumerate.hpp"
#include "qhalf/errors.hpp"
#include "qhalf/rational.hpp"
#include "support/oracles.hpp"

using namespace qhalf;

namespace {
const int A = 0;
const int B = 1;
}  // namespace

TEST_CASE("piecewise reads pieces and cuts") {
  auto spec = ColouringSpec::piecewise({rat(0)}, {A, B}, {A}, 2);
  CHECK(spec.kind() == ColouringSpec::Kind::piecewise);
  CHECK(spec.alphabet() == 2);
  CHECK(spec.is_exact());
  CHECK(colour_of(spec, rat(-3)).id == A);
  CHECK(colour_of(spec, rat(0)).id == A);
  CHECK(colour_of(spec, rat(1, 2)).id == B);
  CHECK(colour_of(spec, rat(1000)).id == B);

  auto cut = ColouringSpec::piecewise({rat(1, 2)}, {A, A}, {B}, 2);
  CHECK(colour_of(cut, rat(1, 2)).id == B);
  CHECK(colour_of(cut, rat(1, 3)).id == A);
}

TEST_CASE("constant colours everything alike") {
  auto spec = ColouringSpec::constant();
  CHECK(spec.alphabet() == 1);
  CHECK(colour_of(spec, rat(-7, 3)).id == 0);
  auto wide = ColouringSpec::constant(2, 4);
  CHECK(colour_of(wide, rat(5)).id == 2);
}

TEST_CASE("denom_mod reads the reduced denominator") {
  auto spec = ColouringSpec::denom_mod(2, {0, 1}, 2);
  CHECK(spec.kind() == ColouringSpec::Kind::denom_mod);
  CHECK_FALSE(spec.is_exact());
  CHECK(colour_of(spec, rat(1, 2)).id == 0);
  CHECK(colour_of(spec, rat(1, 3)).id == 1);
  CHECK(colour_of(spec, rat(7)).id == 1);
  CHECK(colour_of(spec, rat(2, 4)).id == 0);
  CHECK(colour_of(spec, rat(3, 6)).id == 0);

  auto three = ColouringSpec::denom_mod(3, {0, 1, 2}, 3);
  CHECK(colour_of(three, rat(1, 3)).id == 0);
  CHECK(colour_of(three, rat(1, 4)).id == 1);
  CHECK(colour_of(three, rat(1, 5)).id == 2);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(ColouringSpec::piecewise({rat(1), rat(0)}, {0, 0, 0}, {0, 0}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::piecewise({rat(0)}, {0}, {0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::piecewise({rat(0)}, {0, 0}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::piecewise({rat(0)}, {0, 2}, {0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::piecewise({}, {0}, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::denom_mod(1, {0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::denom_mod(2, {0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ColouringSpec::denom_mod(2, {0, 5}, 2), std::invalid_argument);
}

TEST_CASE("pair product is row major and decodable") {
  auto p = ColouringSpec::piecewise({rat(0)}, {A, B}, {A}, 2);
  auto d = ColouringSpec::denom_mod(2, {0, 1}, 2);
  auto pair = pair_colouring(p, d);
  CHECK(pair.kind() == ColouringSpec::Kind::pair);
  CHECK(pair.alphabet() == 4);
  CHECK_FALSE(pair.is_exact());
  CHECK(ColouringSpec::pair_of(p, p).is_exact());

  // 1/2 lies in the B piece and has even denominator.
  CHECK(colour_of(pair, rat(1, 2)).id == B * 2 + 0);
  CHECK(colour_of(pair, rat(-1, 3)).id == A * 2 + 1);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    Rational q = oracles::random_rational(rng, -40, 40, 12);
    Colour c = colour_of(pair, q);
    auto [first, second] = decode_pair(pair, c);
    CHECK(first == colour_of(p, q));
    CHECK(second == colour_of(d, q));
  }
  CHECK_THROWS_AS(decode_pair(p, Colour{0, 2}), std::invalid_argument);
}

TEST_CASE("find_in on exact specs walks pieces then cuts") {
  auto spec = ColouringSpec::piecewise({rat(0)}, {A, B}, {A}, 2);
  Interval window(rat(-1), rat(1));

  auto hit = find_in(spec, Colour{B, 2}, window, 0);
  REQUIRE(hit.has_value());
  CHECK(*hit == rat(1, 2));

  auto left = find_in(spec, Colour{A, 2}, window, 0);
  REQUIRE(left.has_value());
  CHECK(*left == rat(-1, 2));

  CHECK_FALSE(find_in(spec, Colour{B, 2}, Interval(rat(-5), rat(-1)), 0).has_value());

  auto cut_only = ColouringSpec::piecewise({rat(0)}, {A, A}, {B}, 2);
  auto at_cut = find_in(cut_only, Colour{B, 2}, window, 0);
  REQUIRE(at_cut.has_value());
  CHECK(*at_cut == rat(0));
  CHECK_FALSE(find_in(cut_only, Colour{B, 2}, Interval(rat(1), rat(2)), 0).has_value());

  CHECK_THROWS_AS(find_in(spec, Colour{5, 2}, window, 0), std::invalid_argument);
}

TEST_CASE("find_in on sampled specs scans the enumeration") {
  auto spec = ColouringSpec::denom_mod(2, {0, 1}, 2);
  auto hit = find_in(spec, Colour{0, 2}, Interval(rat(0), rat(1)), 10);
  REQUIRE(hit.has_value());
  CHECK(*hit == rat(1, 2));

  CHECK_FALSE(find_in(spec, Colour{1, 2}, Interval(rat(0), rat(1)), 1).has_value());
  CHECK_FALSE(find_in(spec, Colour{0, 2}, Interval(rat(0), rat(1)), 0).has_value());

  auto found = find_in(spec, Colour{1, 2}, Interval(rat(0), rat(1)), 2);
  REQUIRE(found.has_value());
  CHECK(*found == rat(1, 3));
}

TEST_CASE("found witnesses have the right colour and position") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    auto spec = oracles::random_piecewise(rng, 6, 5);
    Rational a = oracles::random_rational(rng, -10, 10, 6);
    Interval window(a, a + rat(1, 2));
    for (int id = 0; id < spec.alphabet(); ++id) {
      auto hit = find_in(spec, Colour{id, spec.alphabet()}, window, 0);
      if (hit) {
        CHECK(window.contains(*hit));
        CHECK(colour_of(spec, *hit).id == id);
      } else {
        // Exact refusal really means absence: a long scan finds nothing.
        for (const Rational& q : enumerate_in(window, 200)) {
          CHECK(colour_of(spec, q).id != id);
        }
      }
    }
  }
}

TEST_CASE("dense_interval on an exact spec certifies one colour") {
  auto aba = ColouringSpec::piecewise({rat(0), rat(1)}, {A, B, A}, {A, A}, 2);
  DenseRegion r = dense_interval(aba, 100);
  CHECK(r.exact);
  CHECK(r.interval.lower == rat(0));
  CHECK(r.interval.upper == rat(1));
  CHECK(r.colours == std::vector<int>{B});
  REQUIRE(r.witnesses.count(B) == 1);
  CHECK(r.witnesses.at(B) == std::vector<Rational>{rat(1, 2), rat(1, 3), rat(2, 3)});
}

TEST_CASE("dense_interval refines past interior cuts") {
  auto spec = ColouringSpec::piecewise({rat(1, 3), rat(2, 3)}, {0, 1, 2}, {0, 0}, 3);
  DenseRegion r = dense_interval(spec, 100);
  CHECK(r.exact);
  CHECK(r.interval.lower == rat(0));
  CHECK(r.interval.upper == rat(1, 3));
  CHECK(r.colours == std::vector<int>{0});
  for (const Rational& w : r.witnesses.at(0)) {
    CHECK(r.interval.contains(w));
    CHECK(colour_of(spec, w).id == 0);
  }

  DenseRegion c = dense_interval(ColouringSpec::constant(0, 1), 10);
  CHECK(c.exact);
  CHECK(c.colours == std::vector<int>{0});
  CHECK(c.interval.lower == rat(0));
  CHECK(c.interval.upper == rat(1));
}

TEST_CASE("dense_interval on a sampled spec lists every observed colour") {
  auto spec = ColouringSpec::denom_mod(2, {0, 1}, 2);
  DenseRegion r = dense_interval(spec, 1000);
  CHECK_FALSE(r.exact);
  CHECK(r.interval.lower == rat(0));
  CHECK(r.interval.upper == rat(1));
  CHECK(r.colours == std::vector<int>{0, 1});
  for (int id : r.colours) {
    REQUIRE(r.witnesses.count(id) == 1);
    CHECK(r.witnesses.at(id).size() >= 3);
    for (const Rational& w : r.witnesses.at(id)) {
      CHECK(r.interval.contains(w));
      CHECK(colour_of(spec, w).id == id);
    }
  }
}

TEST_CASE("dense_interval of a mixed pair observes the product colours") {
  auto p = ColouringSpec::piecewise({rat(0)}, {A, B}, {A}, 2);
  auto d = ColouringSpec::denom_mod(2, {0, 1}, 2);
  DenseRegion r = dense_interval(pair_colouring(p, d), 1000);
  CHECK_FALSE(r.exact);
  CHECK(r.interval.lower == rat(0));
  CHECK(r.interval.upper == rat(1));
  // Inside (0,1) the piecewise component is constantly B, so only the two
  // pair colours above B occur.
  CHECK(r.colours == std::vector<int>{B * 2 + 0, B * 2 + 1});
}

TEST_CASE("dense_interval throws Inconclusive when the budget is too small") {
  CHECK_THROWS_AS(dense_interval(ColouringSpec::denom_mod(2, {0, 1}, 2), 3), Inconclusive);
  std::vector<int> residues(50);
  for (int i = 0; i < 50; ++i) residues[std::size_t(i)] = i;
  CHECK_THROWS_AS(dense_interval(ColouringSpec::denom_mod(50, residues, 50), 20),
                  Inconclusive);
}

TEST_CASE("dense_interval handles random exact specs") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    auto spec = oracles::random_piecewise(rng, 6, 5);
    DenseRegion r = dense_interval(spec, 100);
    CHECK(r.exact);
    CHECK(r.colours.size() == 1);
    int id = r.colours.front();
    CHECK(r.witnesses.at(id).size() >= 3);
    for (const Rational& q : enumerate_in(r.interval, 50)) {
      CHECK(colour_of(spec, q).id == id);
    }
  }
}
