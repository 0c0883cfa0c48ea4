#include "qhalf/enumerate.hpp"

namespace qhalf {

MediantEnumerator::MediantEnumerator(const Interval& window) {
  if (!window.lower && !window.upper) {
    // Both ends infinite: the mediant of -1/0 and 1/0 is degenerate, so the
    // sweep is rooted at 0/1 and splits into the two half-lines.
    origin_first_ = true;
    return;
  }
  Bound lo = window.lower ? Bound{window.lower->num(), window.lower->den()}
                          : Bound{BigInt(-1), BigInt(0)};
  Bound hi = window.upper ? Bound{window.upper->num(), window.upper->den()}
                          : Bound{BigInt(1), BigInt(0)};
  pending_.push_back({std::move(lo), std::move(hi)});
}

Rational MediantEnumerator::next() {
  if (origin_first_) {
    origin_first_ = false;
    Bound left{BigInt(-1), BigInt(0)};
    Bound origin{BigInt(0), BigInt(1)};
    Bound right{BigInt(1), BigInt(0)};
    pending_.push_back({left, origin});
    pending_.push_back({origin, right});
    return Rational(0);
  }
  auto [lo, hi] = pending_.front();
  pending_.pop_front();
  Bound mid{lo.num + hi.num, lo.den + hi.den};
  pending_.push_back({lo, mid});
  pending_.push_back({mid, hi});
  return Rational(mid.num, mid.den);
}

std::vector<Rational> enumerate_in(const Interval& window, std::size_t budget) {
  MediantEnumerator e(window);
  std::vector<Rational> out;
  out.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) out.push_back(e.next());
  return out;
}

}  // namespace qhalf
