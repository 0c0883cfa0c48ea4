#include "qhalf/order_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhalf {

namespace {

Rational segment_slope(const std::pair<Rational, Rational>& a,
                       const std::pair<Rational, Rational>& b) {
  return (b.second - a.second) / (b.first - a.first);
}

bool collinear(const std::pair<Rational, Rational>& a,
               const std::pair<Rational, Rational>& m,
               const std::pair<Rational, Rational>& b) {
  return (m.second - a.second) * (b.first - a.first) ==
         (b.second - a.second) * (m.first - a.first);
}

}  // namespace

OrderMap::OrderMap()
    : orientation_(Orientation::increasing), left_slope_(1), right_slope_(1) {}

OrderMap::OrderMap(std::vector<std::pair<Rational, Rational>> anchors,
                   Orientation orientation, Rational left_slope,
                   Rational right_slope)
    : anchors_(std::move(anchors)),
      orientation_(orientation),
      left_slope_(std::move(left_slope)),
      right_slope_(std::move(right_slope)) {
  validate();
  normalize();
}

void OrderMap::validate() const {
  if (!(left_slope_ > Rational(0)) || !(right_slope_ > Rational(0))) {
    throw std::invalid_argument("OrderMap: slopes must be positive");
  }
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    if (!(anchors_[i - 1].first < anchors_[i].first)) {
      throw std::invalid_argument("OrderMap: anchor x-coordinates must strictly increase");
    }
    bool ok = orientation_ == Orientation::increasing
                  ? anchors_[i - 1].second < anchors_[i].second
                  : anchors_[i - 1].second > anchors_[i].second;
    if (!ok) {
      throw std::invalid_argument("OrderMap: anchor y-coordinates must be strictly monotone");
    }
  }
}

void OrderMap::normalize() {
  Rational sign_left = orientation_ == Orientation::increasing ? left_slope_ : -left_slope_;
  Rational sign_right = orientation_ == Orientation::increasing ? right_slope_ : -right_slope_;

  if (anchors_.size() >= 3) {
    std::vector<std::pair<Rational, Rational>> kept;
    kept.reserve(anchors_.size());
    for (auto& a : anchors_) {
      while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), a)) {
        kept.pop_back();
      }
      kept.push_back(std::move(a));
    }
    anchors_ = std::move(kept);
  }
  while (anchors_.size() >= 2 && segment_slope(anchors_[0], anchors_[1]) == sign_left) {
    anchors_.erase(anchors_.begin());
  }
  while (anchors_.size() >= 2 &&
         segment_slope(anchors_[anchors_.size() - 2], anchors_.back()) == sign_right) {
    anchors_.pop_back();
  }
  if (anchors_.size() == 1 && left_slope_ == right_slope_ &&
      anchors_[0].second == sign_left * anchors_[0].first) {
    anchors_.clear();
  }
  // A kink at the origin is already expressed by the anchor-free pivot form.
  if (anchors_.size() == 1 && anchors_[0].first.is_zero() && anchors_[0].second.is_zero()) {
    anchors_.clear();
  }
}

OrderMap OrderMap::affine(const Rational& intercept, const Rational& slope) {
  if (slope.is_zero()) throw std::invalid_argument("OrderMap: affine slope must be nonzero");
  Orientation o = slope > Rational(0) ? Orientation::increasing : Orientation::decreasing;
  Rational s = slope > Rational(0) ? slope : -slope;
  return OrderMap({{Rational(0), intercept}}, o, s, s);
}

Rational OrderMap::apply(const Rational& x) const {
  Rational sign_left = orientation_ == Orientation::increasing ? left_slope_ : -left_slope_;
  Rational sign_right = orientation_ == Orientation::increasing ? right_slope_ : -right_slope_;
  if (anchors_.empty()) {
    return x < Rational(0) ? sign_left * x : sign_right * x;
  }
  if (x < anchors_.front().first) {
    return anchors_.front().second + sign_left * (x - anchors_.front().first);
  }
  if (x > anchors_.back().first) {
    return anchors_.back().second + sign_right * (x - anchors_.back().first);
  }
  auto it = std::lower_bound(
      anchors_.begin(), anchors_.end(), x,
      [](const std::pair<Rational, Rational>& a, const Rational& v) { return a.first < v; });
  if (it->first == x) return it->second;
  auto hi = it;
  auto lo = it - 1;
  return lo->second +
         (hi->second - lo->second) * (x - lo->first) / (hi->first - lo->first);
}

bool OrderMap::is_identity() const {
  return anchors_.empty() && orientation_ == Orientation::increasing &&
         left_slope_ == Rational(1) && right_slope_ == Rational(1);
}

bool operator==(const OrderMap& a, const OrderMap& b) {
  return a.orientation_ == b.orientation_ && a.left_slope_ == b.left_slope_ &&
         a.right_slope_ == b.right_slope_ && a.anchors_ == b.anchors_;
}

namespace {

/// x-coordinates where the map can change slope.
std::vector<Rational> breakpoints(const OrderMap& m) {
  std::vector<Rational> xs;
  if (!m.anchors().empty()) {
    xs.reserve(m.anchors().size());
    for (const auto& a : m.anchors()) xs.push_back(a.first);
  } else if (m.left_slope() != m.right_slope()) {
    xs.push_back(Rational(0));  // anchor-free maps pivot at the origin
  }
  return xs;
}

}  // namespace

OrderMap compose(const OrderMap& outer, const OrderMap& inner) {
  OrderMap inner_inv = inverse(inner);
  std::vector<Rational> xs = breakpoints(inner);
  for (const Rational& bx : breakpoints(outer)) xs.push_back(inner_inv.apply(bx));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) xs.push_back(Rational(0));

  std::vector<std::pair<Rational, Rational>> anchors;
  anchors.reserve(xs.size());
  for (const Rational& x : xs) anchors.emplace_back(x, outer.apply(inner.apply(x)));

  Orientation o = outer.orientation() == inner.orientation() ? Orientation::increasing
                                                             : Orientation::decreasing;
  auto eval = [&](const Rational& x) { return outer.apply(inner.apply(x)); };
  Rational lx1 = xs.front() - Rational(2);
  Rational lx2 = xs.front() - Rational(1);
  Rational left = (eval(lx2) - eval(lx1)) / (lx2 - lx1);
  Rational rx1 = xs.back() + Rational(1);
  Rational rx2 = xs.back() + Rational(2);
  Rational right = (eval(rx2) - eval(rx1)) / (rx2 - rx1);
  if (left < Rational(0)) left = -left;
  if (right < Rational(0)) right = -right;
  return OrderMap(std::move(anchors), o, std::move(left), std::move(right));
}

OrderMap inverse(const OrderMap& m) {
  std::vector<std::pair<Rational, Rational>> anchors;
  anchors.reserve(m.anchors().size());
  if (m.orientation() == Orientation::increasing) {
    for (const auto& a : m.anchors()) anchors.emplace_back(a.second, a.first);
  } else {
    for (auto it = m.anchors().rbegin(); it != m.anchors().rend(); ++it) {
      anchors.emplace_back(it->second, it->first);
    }
  }
  Rational one(1);
  Rational left = m.orientation() == Orientation::increasing ? one / m.left_slope()
                                                             : one / m.right_slope();
  Rational right = m.orientation() == Orientation::increasing ? one / m.right_slope()
                                                              : one / m.left_slope();
  return OrderMap(std::move(anchors), m.orientation(), std::move(left), std::move(right));
}

}  // namespace qhalf
