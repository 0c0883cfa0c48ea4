#include "qhalf/backforth.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhalf/enumerate.hpp"
#include "qhalf/errors.hpp"

namespace qhalf {

LazyAut::LazyAut(ColouringSpec spec, DenseRegion region, std::size_t budget)
    : spec_(std::move(spec)), region_(std::move(region)), budget_(budget) {
  if (!region_.interval.bounded()) {
    throw std::invalid_argument("LazyAut: region interval must be bounded");
  }
  Rational x0 = enumerate_in(region_.interval, 1).front();
  Colour k = colour_of(spec_, x0);
  std::optional<Rational> y0 =
      find_in(spec_, k, Interval(x0, *region_.interval.upper), budget_);
  if (!y0) y0 = find_in(spec_, k, Interval(*region_.interval.lower, x0), budget_);
  if (!y0) throw BudgetExhausted("seed_aut: no same-colour partner within budget");
  seed_ = {x0, *y0};
  insert_anchor(0, x0, *y0);
}

void LazyAut::insert_anchor(std::size_t pos, Rational x, Rational y) {
  anchors_.insert(anchors_.begin() + static_cast<std::ptrdiff_t>(pos),
                  {std::move(x), std::move(y)});
  audit_local(pos);
  if (full_audit_) audit_full();
}

void LazyAut::audit_local(std::size_t pos) const {
  const auto& [x, y] = anchors_[pos];
  if (!region_.interval.contains(x) || !region_.interval.contains(y)) {
    throw std::logic_error("LazyAut: anchor escaped the region");
  }
  if (pos > 0) {
    const auto& prev = anchors_[pos - 1];
    if (!(prev.first < x) || !(prev.second < y)) {
      throw std::logic_error("LazyAut: anchor order violated on the left");
    }
  }
  if (pos + 1 < anchors_.size()) {
    const auto& next = anchors_[pos + 1];
    if (!(x < next.first) || !(y < next.second)) {
      throw std::logic_error("LazyAut: anchor order violated on the right");
    }
  }
  if (colour_of(spec_, x).id != colour_of(spec_, y).id) {
    throw std::logic_error("LazyAut: anchor pair crosses colours");
  }
}

void LazyAut::audit_full() const {
  if (anchors_.empty()) throw std::logic_error("LazyAut: seed anchor missing");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    audit_local(i);
  }
  if (seed_.first == seed_.second) {
    throw std::logic_error("LazyAut: seed does not move");
  }
  bool seed_present = std::find(anchors_.begin(), anchors_.end(), seed_) != anchors_.end();
  if (!seed_present) throw std::logic_error("LazyAut: seed anchor lost");
}

Rational LazyAut::image(const Rational& q) {
  if (!region_.interval.contains(q)) {
    log_.push_back({QueryRecord::Op::image, q, q});
    return q;
  }
  auto it = std::lower_bound(
      anchors_.begin(), anchors_.end(), q,
      [](const std::pair<Rational, Rational>& a, const Rational& v) { return a.first < v; });
  std::size_t pos = static_cast<std::size_t>(it - anchors_.begin());
  if (it != anchors_.end() && it->first == q) {
    log_.push_back({QueryRecord::Op::image, q, it->second});
    return it->second;
  }
  Rational lo = pos > 0 ? anchors_[pos - 1].second : *region_.interval.lower;
  Rational hi = pos < anchors_.size() ? anchors_[pos].second : *region_.interval.upper;
  Colour k = colour_of(spec_, q);
  std::optional<Rational> y = find_in(spec_, k, Interval(lo, hi), budget_);
  if (!y) {
    throw BudgetExhausted("LazyAut: no image witness for " + q.str() + " within budget");
  }
  insert_anchor(pos, q, *y);
  log_.push_back({QueryRecord::Op::image, q, *y});
  return *y;
}

Rational LazyAut::preimage(const Rational& q) {
  if (!region_.interval.contains(q)) {
    log_.push_back({QueryRecord::Op::preimage, q, q});
    return q;
  }
  auto it = std::lower_bound(
      anchors_.begin(), anchors_.end(), q,
      [](const std::pair<Rational, Rational>& a, const Rational& v) { return a.second < v; });
  std::size_t pos = static_cast<std::size_t>(it - anchors_.begin());
  if (it != anchors_.end() && it->second == q) {
    log_.push_back({QueryRecord::Op::preimage, q, it->first});
    return it->first;
  }
  Rational lo = pos > 0 ? anchors_[pos - 1].first : *region_.interval.lower;
  Rational hi = pos < anchors_.size() ? anchors_[pos].first : *region_.interval.upper;
  Colour k = colour_of(spec_, q);
  std::optional<Rational> x = find_in(spec_, k, Interval(lo, hi), budget_);
  if (!x) {
    throw BudgetExhausted("LazyAut: no preimage witness for " + q.str() + " within budget");
  }
  insert_anchor(pos, *x, q);
  log_.push_back({QueryRecord::Op::preimage, q, *x});
  return *x;
}

AutReport LazyAut::verify(std::size_t sample_count) {
  if (sample_count < 2) throw std::invalid_argument("verify: need at least two samples");
  Interval window(*region_.interval.lower - Rational(1),
                  *region_.interval.upper + Rational(1));
  std::vector<Rational> samples = enumerate_in(window, sample_count);

  AutReport report;
  std::size_t log_before = log_.size();
  std::vector<Rational> images;
  images.reserve(samples.size());
  for (const Rational& q : samples) {
    Rational y = image(q);
    images.push_back(y);
    if (colour_of(spec_, q).id != colour_of(spec_, y).id) ++report.colour_violations;
    if (preimage(y) != q) ++report.inverse_violations;
    Rational x = preimage(q);
    if (image(x) != q) ++report.inverse_violations;
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      bool before = samples[i] < samples[j];
      bool after = images[i] < images[j];
      if (before != after) ++report.order_violations;
    }
  }
  for (const auto& [x, y] : anchors_) {
    if (x != y) ++report.moved_points;
  }
  report.queries = log_.size() - log_before;
  return report;
}

LazyAut seed_aut(const ColouringSpec& spec, const DenseRegion& region, std::size_t budget) {
  return LazyAut(spec, region, budget);
}

LazyAut refute_order_colouring(const ColouringSpec& spec, std::size_t budget) {
  DenseRegion region = dense_interval(spec, budget);
  return LazyAut(spec, std::move(region), budget);
}

}  // namespace qhalf
