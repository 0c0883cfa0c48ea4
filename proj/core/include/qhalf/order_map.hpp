#pragma once

#include <utility>
#include <vector>

#include "qhalf/rational.hpp"

namespace qhalf {

enum class Orientation { increasing, decreasing };

/// Piecewise-affine monotone bijection of the rationals: straight
/// interpolation through finitely many anchors, affine tails beyond them.
/// Slopes are stored positive; the orientation supplies the sign. With no
/// anchors the map pivots through the origin, so the default-constructed
/// value (slopes 1, increasing) is the identity.
class OrderMap {
 public:
  OrderMap();

  /// Anchors must be strictly increasing in x and strictly monotone in y in
  /// the direction of `orientation`; both slopes must be positive.
  /// Violations throw std::invalid_argument.
  OrderMap(std::vector<std::pair<Rational, Rational>> anchors,
           Orientation orientation, Rational left_slope, Rational right_slope);

  static OrderMap identity() { return OrderMap(); }

  /// x ↦ intercept + slope·x (slope nonzero; negative slope flips orientation).
  static OrderMap affine(const Rational& intercept, const Rational& slope);

  Rational apply(const Rational& x) const;
  Rational operator()(const Rational& x) const { return apply(x); }

  const std::vector<std::pair<Rational, Rational>>& anchors() const { return anchors_; }
  Orientation orientation() const { return orientation_; }
  const Rational& left_slope() const { return left_slope_; }
  const Rational& right_slope() const { return right_slope_; }

  bool is_identity() const;

  /// Structural equality of the normalized representation; normalized forms
  /// coincide exactly when the maps are pointwise equal.
  friend bool operator==(const OrderMap& a, const OrderMap& b);

 private:
  void validate() const;
  /// Drops anchors that lie on the line of their neighbours (or tails); the
  /// identity always normalizes to no anchors with unit slopes.
  void normalize();

  std::vector<std::pair<Rational, Rational>> anchors_;
  Orientation orientation_;
  Rational left_slope_;
  Rational right_slope_;
};

/// outer ∘ inner, with the merged anchor set.
OrderMap compose(const OrderMap& outer, const OrderMap& inner);

/// Inverse bijection.
OrderMap inverse(const OrderMap& m);

}  // namespace qhalf
