#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "qhalf/rational.hpp"

namespace qhalf {

/// Deterministic enumeration of every rational strictly inside an open
/// interval, by breadth-first mediant splitting. Each emitted value is the
/// mediant of the raw numerator/denominator pair bracketing its subtree;
/// keeping the pairs unreduced is what makes the sweep hit every rational
/// exactly once, whatever the endpoints. Infinite ends are the formal
/// fractions -1/0 and 1/0; the whole-line enumeration starts at 0/1.
class MediantEnumerator {
 public:
  explicit MediantEnumerator(const Interval& window);

  /// Next value in breadth-first order. Never exhausts.
  Rational next();

 private:
  struct Bound {
    BigInt num;
    BigInt den;  // den == 0 marks an infinite end
  };

  std::deque<std::pair<Bound, Bound>> pending_;
  bool origin_first_ = false;
};

/// First `budget` values of the enumeration of `window`.
std::vector<Rational> enumerate_in(const Interval& window, std::size_t budget);

}  // namespace qhalf
