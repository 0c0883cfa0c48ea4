#include "qhalf/autgrp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "qhalf/errors.hpp"

namespace qhalf {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
  return p;
}

bool is_identity_perm(const Perm& p) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (p[v] != static_cast<int>(v)) return false;
  }
  return true;
}

Perm compose_perms(const Perm& outer, const Perm& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("compose_perms: degree mismatch");
  }
  Perm out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) {
    out[v] = outer[static_cast<std::size_t>(inner[v])];
  }
  return out;
}

Perm invert_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    out[static_cast<std::size_t>(p[v])] = static_cast<int>(v);
  }
  return out;
}

int moved_count(const Perm& p) {
  int moved = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (p[v] != static_cast<int>(v)) ++moved;
  }
  return moved;
}

namespace {

// Iterated neighbourhood refinement seeded from degrees. Classes only ever
// split, and two vertices in the same automorphism orbit never separate, so
// the final classes are a sound candidate filter for the search below.
std::vector<int> refine_colours(const FiniteGraph& g) {
  const int n = g.n();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  {
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::vector<int> ranked = degrees;
    std::sort(ranked.begin(), ranked.end());
    ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
    for (int v = 0; v < n; ++v) {
      auto it = std::lower_bound(ranked.begin(), ranked.end(),
                                 degrees[static_cast<std::size_t>(v)]);
      colour[static_cast<std::size_t>(v)] = static_cast<int>(it - ranked.begin());
    }
  }
  std::size_t classes = static_cast<std::size_t>(
      std::set<int>(colour.begin(), colour.end()).size());
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (int w : g.neighbours(v)) around.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      signature[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)],
                                                std::move(around)};
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : rank) id = next++;
    for (int v = 0; v < n; ++v) {
      colour[static_cast<std::size_t>(v)] = rank.at(signature[static_cast<std::size_t>(v)]);
    }
    if (static_cast<std::size_t>(next) == classes) break;
    classes = static_cast<std::size_t>(next);
  }
  return colour;
}

struct AutSearch {
  const FiniteGraph& g;
  const std::vector<int>& colour;
  std::uint64_t cap;
  Perm current;
  std::vector<char> used;
  std::vector<Perm> found;

  void run(int k) {
    const int n = g.n();
    if (k == n) {
      if (found.size() >= cap) {
        throw OrderCapExceeded("automorphisms: group larger than order cap");
      }
      found.push_back(current);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      if (colour[static_cast<std::size_t>(img)] != colour[static_cast<std::size_t>(k)]) {
        continue;
      }
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        if (g.adjacent(i, k) != g.adjacent(current[static_cast<std::size_t>(i)], img)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current[static_cast<std::size_t>(k)] = img;
      used[static_cast<std::size_t>(img)] = 1;
      run(k + 1);
      used[static_cast<std::size_t>(img)] = 0;
    }
  }
};

std::set<Perm> close_under_product(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> have;
  std::vector<Perm> frontier;
  have.insert(identity_perm(degree));
  frontier.push_back(identity_perm(degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& gen : gens) {
        Perm q = compose_perms(gen, p);
        if (have.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return have;
}

}  // namespace

std::vector<Perm> greedy_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::set<Perm> have = close_under_product(degree, gens);
  for (const Perm& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    have = close_under_product(degree, gens);
  }
  return gens;
}

PermGroup automorphisms(const FiniteGraph& g, std::uint64_t order_cap) {
  AutSearch search{g, refine_colours(g), order_cap, identity_perm(g.n()),
                   std::vector<char>(static_cast<std::size_t>(g.n()), 0),
                   {}};
  search.run(0);
  PermGroup group;
  group.degree = g.n();
  group.elements = std::move(search.found);
  group.generators = greedy_generators(group.degree, group.elements);
  return group;
}

std::optional<std::uint64_t> motion(const PermGroup& g) {
  std::optional<std::uint64_t> best;
  for (const Perm& e : g.elements) {
    if (is_identity_perm(e)) continue;
    std::uint64_t moved = static_cast<std::uint64_t>(moved_count(e));
    if (!best || moved < *best) best = moved;
  }
  return best;
}

std::optional<std::uint64_t> motion(const FiniteGraph& g, std::uint64_t order_cap) {
  return motion(automorphisms(g, order_cap));
}

namespace {

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<std::vector<int>> orbit_partition(int degree, const std::vector<Perm>& perms) {
  Dsu dsu(degree);
  for (const Perm& p : perms) {
    for (int v = 0; v < degree; ++v) dsu.unite(v, p[static_cast<std::size_t>(v)]);
  }
  std::map<int, std::vector<int>> buckets;
  for (int v = 0; v < degree; ++v) buckets[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(buckets.size());
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  return orbit_partition(g.degree, g.generators);
}

std::vector<std::vector<int>> stabilizer_orbits(const PermGroup& g,
                                                const std::vector<int>& fixed) {
  for (int v : fixed) {
    if (v < 0 || v >= g.degree) {
      throw std::invalid_argument("stabilizer_orbits: fixed point out of range");
    }
  }
  std::vector<Perm> keep;
  for (const Perm& e : g.elements) {
    bool fixes = true;
    for (int v : fixed) {
      if (e[static_cast<std::size_t>(v)] != v) {
        fixes = false;
        break;
      }
    }
    if (fixes) keep.push_back(e);
  }
  return orbit_partition(g.degree, keep);
}

std::vector<std::vector<int>> stabilizer_orbits(const PermGroup& g, int fixed) {
  return stabilizer_orbits(g, std::vector<int>{fixed});
}

bool is_distinguishing(const PermGroup& g, const std::vector<int>& colouring) {
  if (static_cast<int>(colouring.size()) != g.degree) {
    throw std::invalid_argument("is_distinguishing: colouring size mismatch");
  }
  for (const Perm& e : g.elements) {
    if (is_identity_perm(e)) continue;
    bool preserved = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (colouring[static_cast<std::size_t>(e[v])] != colouring[v]) {
        preserved = false;
        break;
      }
    }
    if (preserved) return false;
  }
  return true;
}

bool is_distinguishing(const FiniteGraph& g, const std::vector<int>& colouring,
                       std::uint64_t order_cap) {
  return is_distinguishing(automorphisms(g, order_cap), colouring);
}

namespace {

// Enumerates restricted growth strings whose maximum entry is exactly
// colours-1, so each set partition into the requested number of classes is
// tested once. Returns the first distinguishing string, counting candidates
// against the cap.
std::optional<std::vector<int>> search_colourings(const PermGroup& group, int colours,
                                                  std::uint64_t search_cap,
                                                  std::uint64_t& examined) {
  const int n = group.degree;
  if (colours < 1 || colours > n) return std::nullopt;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::optional<std::vector<int>> hit;

  auto extend = [&](auto&& self, int pos, int prefix_max) -> bool {
    if (pos == n) {
      if (prefix_max != colours - 1) return false;
      if (++examined > search_cap) {
        throw SearchCapExceeded("distinguishing_number: candidate cap exceeded");
      }
      if (is_distinguishing(group, rgs)) {
        hit = rgs;
        return true;
      }
      return false;
    }
    int missing = colours - 1 - prefix_max;
    if (missing > n - pos) return false;
    int top = std::min(colours - 1, prefix_max + 1);
    for (int c = 0; c <= top; ++c) {
      rgs[static_cast<std::size_t>(pos)] = c;
      if (self(self, pos + 1, std::max(prefix_max, c))) return true;
    }
    return false;
  };
  extend(extend, 0, -1);
  return hit;
}

}  // namespace

std::optional<int> distinguishing_number(const FiniteGraph& g, int max_colours,
                                         std::uint64_t order_cap,
                                         std::uint64_t search_cap) {
  PermGroup group = automorphisms(g, order_cap);
  if (group.trivial()) return 1;
  std::uint64_t examined = 0;
  for (int k = 1; k <= max_colours; ++k) {
    if (search_colourings(group, k, search_cap, examined)) return k;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> distinguishing_colouring(const FiniteGraph& g, int colours,
                                                         std::uint64_t order_cap,
                                                         std::uint64_t search_cap) {
  PermGroup group = automorphisms(g, order_cap);
  std::uint64_t examined = 0;
  return search_colourings(group, colours, search_cap, examined);
}

}  // namespace qhalf
