#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhalf/colouring.hpp"
#include "qhalf/rational.hpp"

namespace qhalf {

/// Counters from auditing a lazy automorphism against samples.
struct AutReport {
  std::uint64_t queries = 0;
  std::uint64_t order_violations = 0;
  std::uint64_t colour_violations = 0;
  std::uint64_t inverse_violations = 0;
  std::uint64_t moved_points = 0;

  bool passes() const {
    return order_violations == 0 && colour_violations == 0 &&
           inverse_violations == 0 && moved_points >= 1;
  }
};

/// Query-driven colour-preserving order automorphism of the rationals. It is
/// the identity outside the dense region and is extended inside it one anchor
/// pair at a time, back-and-forth style: the image of a new point is a
/// same-colour witness strictly between the images of its anchor neighbours,
/// with the region endpoints acting as fixed sentinels. Anchors stay strictly
/// increasing in both coordinates, so the answered fragment is always a
/// partial order isomorphism; memoization makes repeated queries identical.
class LazyAut {
 public:
  /// Seeds the map with x0 (first enumerated point of the region) paired to
  /// the first same-colour partner found to its right, then to its left.
  /// Throws BudgetExhausted when no partner is found within budget.
  LazyAut(ColouringSpec spec, DenseRegion region, std::size_t budget);

  Rational image(const Rational& q);
  Rational preimage(const Rational& q);

  /// Samples `sample_count` points of a window spanning the region plus a
  /// unit margin on each side, and checks colour preservation, pairwise
  /// order preservation, and both round trips. Requires sample_count >= 2.
  AutReport verify(std::size_t sample_count);

  const ColouringSpec& spec() const { return spec_; }
  const DenseRegion& region() const { return region_; }
  std::size_t budget() const { return budget_; }
  const std::pair<Rational, Rational>& seed() const { return seed_; }
  const std::vector<std::pair<Rational, Rational>>& anchors() const { return anchors_; }

  struct QueryRecord {
    enum class Op { image, preimage };
    Op op;
    Rational arg;
    Rational result;
  };
  const std::vector<QueryRecord>& query_log() const { return log_; }

  /// Re-checks every state invariant: anchors doubly sorted and colour
  /// matched, all strictly inside the region, seed present and moving.
  /// Throws std::logic_error on any violation.
  void audit_full() const;

  /// When enabled, audit_full() runs after every anchor insertion (every
  /// insertion always gets the O(1) neighbour audit regardless).
  void enable_full_audit(bool on) { full_audit_ = on; }

 private:
  void insert_anchor(std::size_t pos, Rational x, Rational y);
  void audit_local(std::size_t pos) const;

  ColouringSpec spec_;
  DenseRegion region_;
  std::size_t budget_;
  std::pair<Rational, Rational> seed_;
  std::vector<std::pair<Rational, Rational>> anchors_;
  std::vector<QueryRecord> log_;
  bool full_audit_ = false;
};

/// Builds the seeded lazy automorphism for an already-extracted region.
LazyAut seed_aut(const ColouringSpec& spec, const DenseRegion& region, std::size_t budget);

/// Full pipeline: extract a dense region for the colouring and return a
/// nontrivial colour-preserving automorphism that is the identity outside it.
LazyAut refute_order_colouring(const ColouringSpec& spec, std::size_t budget);

}  // namespace qhalf
