#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qhalf/rational.hpp"

namespace qhalf {

/// A colour value together with the size of the palette it came from.
struct Colour {
  int id = 0;
  int alphabet = 1;

  friend bool operator==(const Colour& a, const Colour& b) {
    return a.id == b.id && a.alphabet == b.alphabet;
  }
  friend bool operator!=(const Colour& a, const Colour& b) { return !(a == b); }
};

/// Finite description of a colouring of the rationals. Three families:
///   piecewise  — constant on the open pieces between finitely many cuts,
///                with explicit colours at the cuts themselves;
///   denom_mod  — colour of p/q (lowest terms) determined by q mod m;
///   pair       — row-major product of two component colourings.
class ColouringSpec {
 public:
  enum class Kind { piecewise, denom_mod, pair };

  /// `piece_colours` has one entry more than `cuts`; `cut_colours` matches
  /// `cuts`. All colour ids must lie below `alphabet`.
  static ColouringSpec piecewise(std::vector<Rational> cuts,
                                 std::vector<int> piece_colours,
                                 std::vector<int> cut_colours, int alphabet);

  /// Single-piece colouring.
  static ColouringSpec constant(int colour_id = 0, int alphabet = 1);

  /// `residue_colours[r]` is the colour of denominators congruent to r mod m.
  static ColouringSpec denom_mod(int modulus, std::vector<int> residue_colours,
                                 int alphabet);

  static ColouringSpec pair_of(ColouringSpec first, ColouringSpec second);

  Kind kind() const;
  int alphabet() const { return alphabet_; }

  /// True when membership questions are decidable from the description
  /// alone (no denom_mod component anywhere).
  bool is_exact() const;

  // Structure accessors; each set is valid only for the matching kind.
  const std::vector<Rational>& cuts() const;
  const std::vector<int>& piece_colours() const;
  const std::vector<int>& cut_colours() const;
  int modulus() const;
  const std::vector<int>& residue_colours() const;
  const ColouringSpec& first() const;
  const ColouringSpec& second() const;

 private:
  struct Piecewise {
    std::vector<Rational> cuts;
    std::vector<int> piece_colours;
    std::vector<int> cut_colours;
  };
  struct DenomMod {
    int modulus;
    std::vector<int> residue_colours;
  };
  struct PairProduct {
    std::shared_ptr<const ColouringSpec> first;
    std::shared_ptr<const ColouringSpec> second;
  };

  ColouringSpec(std::variant<Piecewise, DenomMod, PairProduct> body, int alphabet)
      : body_(std::move(body)), alphabet_(alphabet) {}

  std::variant<Piecewise, DenomMod, PairProduct> body_;
  int alphabet_;
};

Colour colour_of(const ColouringSpec& spec, const Rational& q);

/// Splits a pair colour back into its components.
std::pair<Colour, Colour> decode_pair(const ColouringSpec& pair_spec, const Colour& c);

/// The product colouring q ↦ (plus colour of q, minus colour of q), encoded
/// row-major; its alphabet is the product of the component alphabets.
ColouringSpec pair_colouring(const ColouringSpec& plus_side, const ColouringSpec& minus_side);

/// A rational strictly inside `window` with colour `target`, chosen
/// deterministically: computed from the description for exact specs (where
/// std::nullopt certifies nonexistence), found by scanning the first
/// `budget` enumerated values otherwise (std::nullopt means the scan failed).
std::optional<Rational> find_in(const ColouringSpec& spec, const Colour& target,
                                const Interval& window, std::size_t budget);

/// An interval in which a known set of colours is dense and no other colour
/// occurs; for exact specs the certificate is exact, otherwise it holds up
/// to the sampling budget.
struct DenseRegion {
  Interval interval;
  std::vector<int> colours;                        // sorted ids
  std::map<int, std::vector<Rational>> witnesses;  // >= 3 per colour
  bool exact = false;
};

/// Extraction starts from the window (0,1) and shrinks it at most
/// alphabet-many times, discarding at least one colour per refinement.
/// Throws Inconclusive when sampling cannot certify density within budget.
DenseRegion dense_interval(const ColouringSpec& spec, std::size_t budget);

}  // namespace qhalf
