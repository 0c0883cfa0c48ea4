#include "qhalf/colouring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qhalf/enumerate.hpp"
#include "qhalf/errors.hpp"

namespace qhalf {

namespace {

void check_colour_ids(const std::vector<int>& ids, int alphabet, const char* what) {
  for (int id : ids) {
    if (id < 0 || id >= alphabet) {
      throw std::invalid_argument(std::string("ColouringSpec: ") + what +
                                  " colour id out of range");
    }
  }
}

}  // namespace

ColouringSpec ColouringSpec::piecewise(std::vector<Rational> cuts,
                                       std::vector<int> piece_colours,
                                       std::vector<int> cut_colours, int alphabet) {
  if (alphabet < 1) throw std::invalid_argument("ColouringSpec: alphabet must be >= 1");
  if (piece_colours.size() != cuts.size() + 1) {
    throw std::invalid_argument("ColouringSpec: need one piece colour per piece");
  }
  if (cut_colours.size() != cuts.size()) {
    throw std::invalid_argument("ColouringSpec: need one cut colour per cut");
  }
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (!(cuts[i - 1] < cuts[i])) {
      throw std::invalid_argument("ColouringSpec: cuts must strictly increase");
    }
  }
  check_colour_ids(piece_colours, alphabet, "piece");
  check_colour_ids(cut_colours, alphabet, "cut");
  return ColouringSpec(
      Piecewise{std::move(cuts), std::move(piece_colours), std::move(cut_colours)},
      alphabet);
}

ColouringSpec ColouringSpec::constant(int colour_id, int alphabet) {
  return piecewise({}, {colour_id}, {}, alphabet);
}

ColouringSpec ColouringSpec::denom_mod(int modulus, std::vector<int> residue_colours,
                                       int alphabet) {
  if (modulus < 2) throw std::invalid_argument("ColouringSpec: modulus must be >= 2");
  if (alphabet < 1) throw std::invalid_argument("ColouringSpec: alphabet must be >= 1");
  if (residue_colours.size() != static_cast<std::size_t>(modulus)) {
    throw std::invalid_argument("ColouringSpec: need one colour per residue");
  }
  check_colour_ids(residue_colours, alphabet, "residue");
  return ColouringSpec(DenomMod{modulus, std::move(residue_colours)}, alphabet);
}

ColouringSpec ColouringSpec::pair_of(ColouringSpec first, ColouringSpec second) {
  int alphabet = first.alphabet() * second.alphabet();
  PairProduct body{std::make_shared<const ColouringSpec>(std::move(first)),
                   std::make_shared<const ColouringSpec>(std::move(second))};
  return ColouringSpec(std::move(body), alphabet);
}

ColouringSpec::Kind ColouringSpec::kind() const {
  switch (body_.index()) {
    case 0: return Kind::piecewise;
    case 1: return Kind::denom_mod;
    default: return Kind::pair;
  }
}

bool ColouringSpec::is_exact() const {
  switch (kind()) {
    case Kind::piecewise: return true;
    case Kind::denom_mod: return false;
    case Kind::pair: return first().is_exact() && second().is_exact();
  }
  return false;
}

const std::vector<Rational>& ColouringSpec::cuts() const {
  return std::get<Piecewise>(body_).cuts;
}
const std::vector<int>& ColouringSpec::piece_colours() const {
  return std::get<Piecewise>(body_).piece_colours;
}
const std::vector<int>& ColouringSpec::cut_colours() const {
  return std::get<Piecewise>(body_).cut_colours;
}
int ColouringSpec::modulus() const { return std::get<DenomMod>(body_).modulus; }
const std::vector<int>& ColouringSpec::residue_colours() const {
  return std::get<DenomMod>(body_).residue_colours;
}
const ColouringSpec& ColouringSpec::first() const {
  return *std::get<PairProduct>(body_).first;
}
const ColouringSpec& ColouringSpec::second() const {
  return *std::get<PairProduct>(body_).second;
}

Colour colour_of(const ColouringSpec& spec, const Rational& q) {
  switch (spec.kind()) {
    case ColouringSpec::Kind::piecewise: {
      const auto& cuts = spec.cuts();
      auto it = std::lower_bound(cuts.begin(), cuts.end(), q);
      std::size_t idx = static_cast<std::size_t>(it - cuts.begin());
      if (it != cuts.end() && *it == q) {
        return Colour{spec.cut_colours()[idx], spec.alphabet()};
      }
      return Colour{spec.piece_colours()[idx], spec.alphabet()};
    }
    case ColouringSpec::Kind::denom_mod: {
      BigInt r = q.den() % spec.modulus();
      return Colour{spec.residue_colours()[r.convert_to<std::size_t>()], spec.alphabet()};
    }
    case ColouringSpec::Kind::pair: {
      Colour a = colour_of(spec.first(), q);
      Colour b = colour_of(spec.second(), q);
      return Colour{a.id * spec.second().alphabet() + b.id, spec.alphabet()};
    }
  }
  throw std::logic_error("colour_of: unreachable");
}

std::pair<Colour, Colour> decode_pair(const ColouringSpec& pair_spec, const Colour& c) {
  if (pair_spec.kind() != ColouringSpec::Kind::pair) {
    throw std::invalid_argument("decode_pair: spec is not a pair product");
  }
  int second_alpha = pair_spec.second().alphabet();
  return {Colour{c.id / second_alpha, pair_spec.first().alphabet()},
          Colour{c.id % second_alpha, second_alpha}};
}

ColouringSpec pair_colouring(const ColouringSpec& plus_side, const ColouringSpec& minus_side) {
  return ColouringSpec::pair_of(plus_side, minus_side);
}

namespace {

/// Flattened piecewise description of an exact spec: merged cuts, with the
/// colour of each open piece read off at a representative point.
struct FlatView {
  std::vector<Rational> cuts;
  std::vector<int> piece_colours;
  std::vector<int> cut_colours;
};

void collect_cuts(const ColouringSpec& spec, std::vector<Rational>& out) {
  switch (spec.kind()) {
    case ColouringSpec::Kind::piecewise:
      out.insert(out.end(), spec.cuts().begin(), spec.cuts().end());
      return;
    case ColouringSpec::Kind::denom_mod:
      return;
    case ColouringSpec::Kind::pair:
      collect_cuts(spec.first(), out);
      collect_cuts(spec.second(), out);
      return;
  }
}

std::vector<Rational> merged_cuts(const ColouringSpec& spec) {
  std::vector<Rational> cuts;
  collect_cuts(spec, cuts);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

FlatView flatten(const ColouringSpec& spec) {
  FlatView view;
  view.cuts = merged_cuts(spec);
  std::size_t m = view.cuts.size();
  view.piece_colours.reserve(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Rational rep;
    if (m == 0) {
      rep = Rational(0);
    } else if (i == 0) {
      rep = view.cuts.front() - Rational(1);
    } else if (i == m) {
      rep = view.cuts.back() + Rational(1);
    } else {
      rep = (view.cuts[i - 1] + view.cuts[i]) / Rational(2);
    }
    view.piece_colours.push_back(colour_of(spec, rep).id);
  }
  view.cut_colours.reserve(m);
  for (const Rational& c : view.cuts) view.cut_colours.push_back(colour_of(spec, c).id);
  return view;
}

std::optional<Rational> find_exact(const FlatView& view, int target,
                                   const Interval& window) {
  std::size_t m = view.cuts.size();
  for (std::size_t i = 0; i <= m; ++i) {
    if (view.piece_colours[i] == target) {
      Interval piece(i == 0 ? std::nullopt : std::optional<Rational>(view.cuts[i - 1]),
                     i == m ? std::nullopt : std::optional<Rational>(view.cuts[i]));
      if (auto hit = intersect(piece, window)) {
        return enumerate_in(*hit, 1).front();
      }
    }
    if (i < m && view.cut_colours[i] == target && window.contains(view.cuts[i])) {
      return view.cuts[i];
    }
  }
  return std::nullopt;
}

/// True when every piecewise component of `spec` takes a single colour on
/// the whole of `window`.
bool constant_on(const ColouringSpec& spec, const Interval& window) {
  switch (spec.kind()) {
    case ColouringSpec::Kind::denom_mod:
      return true;
    case ColouringSpec::Kind::pair:
      return constant_on(spec.first(), window) && constant_on(spec.second(), window);
    case ColouringSpec::Kind::piecewise:
      break;
  }
  const auto& cuts = spec.cuts();
  std::size_t m = cuts.size();
  std::optional<int> seen;
  auto note = [&](int id) {
    if (!seen) seen = id;
    return *seen == id;
  };
  for (std::size_t i = 0; i <= m; ++i) {
    bool left_ok = i == 0 || !window.upper || cuts[i - 1] < *window.upper;
    bool right_ok = i == m || !window.lower || cuts[i] > *window.lower;
    if (left_ok && right_ok && !note(spec.piece_colours()[i])) return false;
    if (i < m && window.contains(cuts[i]) && !note(spec.cut_colours()[i])) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> find_in(const ColouringSpec& spec, const Colour& target,
                                const Interval& window, std::size_t budget) {
  if (target.id < 0 || target.id >= spec.alphabet()) {
    throw std::invalid_argument("find_in: colour id out of range");
  }
  if (spec.is_exact()) {
    return find_exact(flatten(spec), target.id, window);
  }
  MediantEnumerator e(window);
  for (std::size_t i = 0; i < budget; ++i) {
    Rational q = e.next();
    if (colour_of(spec, q).id == target.id) return q;
  }
  return std::nullopt;
}

DenseRegion dense_interval(const ColouringSpec& spec, std::size_t budget) {
  Interval window(Rational(0), Rational(1));
  int refinements = 0;
  if (!constant_on(spec, window)) {
    std::vector<Rational> cuts = merged_cuts(spec);
    std::optional<Rational> first_inside;
    for (const Rational& c : cuts) {
      if (window.contains(c)) {
        first_inside = c;
        break;
      }
    }
    if (!first_inside) {
      throw std::logic_error("dense_interval: non-constant window without interior cut");
    }
    window = Interval(*window.lower, *first_inside);
    refinements = 1;
    if (!constant_on(spec, window)) {
      throw std::logic_error("dense_interval: refinement did not reach a constant window");
    }
  }
  if (refinements > spec.alphabet()) {
    throw std::logic_error("dense_interval: refinement count exceeded the alphabet");
  }

  DenseRegion region;
  region.interval = window;

  if (spec.is_exact()) {
    std::vector<Rational> witnesses = enumerate_in(window, 3);
    int id = colour_of(spec, witnesses.front()).id;
    for (const Rational& w : witnesses) {
      if (colour_of(spec, w).id != id) {
        throw std::logic_error("dense_interval: exact window is not monochromatic");
      }
    }
    region.colours = {id};
    region.witnesses.emplace(id, std::move(witnesses));
    region.exact = true;
    return region;
  }

  // Budgeted certification: every observed colour needs three witnesses and
  // occurrences on both halves of the window; absence of unobserved colours
  // holds only up to the budget.
  Rational mid = (*window.lower + *window.upper) / Rational(2);
  std::map<int, std::vector<Rational>> witnesses;
  std::map<int, std::pair<bool, bool>> halves;
  MediantEnumerator e(window);
  for (std::size_t i = 0; i < budget; ++i) {
    Rational q = e.next();
    int id = colour_of(spec, q).id;
    auto& w = witnesses[id];
    if (w.size() < 3) w.push_back(q);
    auto& h = halves[id];
    if (q < mid) h.first = true;
    if (q > mid) h.second = true;
  }
  for (const auto& [id, w] : witnesses) {
    const auto& h = halves[id];
    if (w.size() < 3 || !h.first || !h.second) {
      throw Inconclusive("dense_interval: colour " + std::to_string(id) +
                         " not certified dense within budget");
    }
    region.colours.push_back(id);
  }
  region.witnesses = std::move(witnesses);
  region.exact = false;
  return region;
}

}  // namespace qhalf
