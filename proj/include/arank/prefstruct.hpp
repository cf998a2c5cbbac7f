#ifndef ARANK_PREFSTRUCT_HPP
#define ARANK_PREFSTRUCT_HPP

// Preferential structures: indexed copies of points with an attack relation.
// Minimization, smoothness, rankedness, layer-rankedness, transitive closure
// and exhaustive small-scope enumeration.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arank/choice.hpp"
#include "arank/sets.hpp"

namespace arank {

struct Copy {
  int point;
  std::string tag;
};

struct PreferentialStructure {
  PointUniverse points;
  std::vector<Copy> copies;
  // Per copy, the sorted list of copies attacking it.
  std::vector<std::vector<int>> attackers;
  // Set when a transitive closure ran into a loop; self-attacks themselves
  // are never stored.
  bool cyclic = false;

  std::size_t copy_count() const { return copies.size(); }

  void reset_edges() {
    attackers.assign(copies.size(), {});
  }

  // Pre: src != dst, both valid copy indices.
  void add_attack(int src, int dst) {
    if (src == dst) throw std::invalid_argument("self-attack");
    auto& in = attackers[static_cast<std::size_t>(dst)];
    auto it = std::lower_bound(in.begin(), in.end(), src);
    if (it == in.end() || *it != src) in.insert(it, src);
  }

  bool attacks(int src, int dst) const {
    const auto& in = attackers[static_cast<std::size_t>(dst)];
    return std::binary_search(in.begin(), in.end(), src);
  }

  void validate() const {
    if (attackers.size() != copies.size())
      throw std::invalid_argument("attacker lists not parallel to copies");
    for (std::size_t i = 0; i < copies.size(); ++i) {
      for (std::size_t j = i + 1; j < copies.size(); ++j)
        if (copies[i].point == copies[j].point && copies[i].tag == copies[j].tag)
          throw std::invalid_argument("duplicate copy");
      for (int a : attackers[i]) {
        if (a < 0 || a >= static_cast<int>(copies.size()))
          throw std::invalid_argument("attack references a missing copy");
        if (a == static_cast<int>(i)) throw std::invalid_argument("self-attack");
      }
    }
  }

  std::string render_copy(int i) const {
    const Copy& c = copies[static_cast<std::size_t>(i)];
    return "<" + points.names[static_cast<std::size_t>(c.point)] + "," + c.tag + ">";
  }
};

// Per-copy bitmask of attacking points.
inline std::vector<PointSet> attacker_point_masks(const PreferentialStructure& s) {
  std::vector<PointSet> masks(s.copy_count(), 0);
  for (std::size_t i = 0; i < s.copy_count(); ++i)
    for (int a : s.attackers[i]) masks[i] |= single(s.copies[static_cast<std::size_t>(a)].point);
  return masks;
}

// Points of x_set with some copy whose attackers all lie outside x_set.
inline PointSet minimize(const PreferentialStructure& s, PointSet x_set) {
  std::vector<PointSet> masks = attacker_point_masks(s);
  PointSet out = 0;
  for (std::size_t i = 0; i < s.copy_count(); ++i) {
    int p = s.copies[i].point;
    if (contains(x_set, p) && (masks[i] & x_set) == 0) out = with(out, p);
  }
  return out;
}

inline ChoiceFunction induced_choice(const PreferentialStructure& s, const Domain& d) {
  ChoiceFunction f{d, {}};
  f.table.reserve(d.family.size());
  for (PointSet y : d.family) f.table.push_back(minimize(s, y));
  return f;
}

// Every copy with a point in X is minimal in X or attacked by a copy that is
// minimal in X. Witness: first (X, copy) in family then copy order.
inline ConditionReport is_smooth(const PreferentialStructure& s, const Domain& d) {
  std::vector<PointSet> masks = attacker_point_masks(s);
  for (PointSet x : d.family) {
    for (std::size_t i = 0; i < s.copy_count(); ++i) {
      if (!contains(x, s.copies[i].point)) continue;
      if ((masks[i] & x) == 0) continue;
      bool repaired = false;
      for (int a : s.attackers[i]) {
        std::size_t k = static_cast<std::size_t>(a);
        if (contains(x, s.copies[k].point) && (masks[k] & x) == 0) {
          repaired = true;
          break;
        }
      }
      if (!repaired) {
        Witness w{{{"X", x}}, {}, "copy " + s.render_copy(static_cast<int>(i))};
        return ConditionReport::fail("smooth", std::move(w));
      }
    }
  }
  return ConditionReport::pass("smooth");
}

struct RankWitness {
  // Level per copy; attacks point from lower to higher level.
  std::vector<int> levels;
};

// Longest-path levelling. Pre: relation acyclic.
inline std::vector<int> copy_heights(const PreferentialStructure& s) {
  std::vector<int> height(s.copy_count(), -1);
  std::vector<int> state(s.copy_count(), 0);
  struct Rec {
    const PreferentialStructure& s;
    std::vector<int>& height;
    std::vector<int>& state;
    int walk(int i) {
      std::size_t u = static_cast<std::size_t>(i);
      if (state[u] == 2) return height[u];
      if (state[u] == 1) throw std::logic_error("cycle during levelling");
      state[u] = 1;
      int h = 0;
      for (int a : s.attackers[u]) h = std::max(h, walk(a) + 1);
      state[u] = 2;
      height[u] = h;
      return h;
    }
  } rec{s, height, state};
  for (std::size_t i = 0; i < s.copy_count(); ++i) rec.walk(static_cast<int>(i));
  return height;
}

inline bool relation_has_cycle(const PreferentialStructure& s) {
  std::vector<int> state(s.copy_count(), 0);
  struct Rec {
    const PreferentialStructure& s;
    std::vector<int>& state;
    bool walk(int i) {
      std::size_t u = static_cast<std::size_t>(i);
      if (state[u] == 1) return true;
      if (state[u] == 2) return false;
      state[u] = 1;
      for (int a : s.attackers[u])
        if (walk(a)) return true;
      state[u] = 2;
      return false;
    }
  } rec{s, state};
  for (std::size_t i = 0; i < s.copy_count(); ++i)
    if (rec.walk(static_cast<int>(i))) return true;
  return false;
}

// Modularity over copies: if x and y are incomparable, everything below x is
// below y and everything above x is above y. When the check passes and the
// relation is cycle-free, a level witness is produced by height levelling.
inline std::pair<ConditionReport, std::optional<RankWitness>> is_ranked(
    const PreferentialStructure& s) {
  std::size_t n = s.copy_count();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      int xi = static_cast<int>(x), yi = static_cast<int>(y);
      if (s.attacks(xi, yi) || s.attacks(yi, xi)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        int zi = static_cast<int>(z);
        bool bad = (s.attacks(zi, xi) && !s.attacks(zi, yi)) ||
                   (s.attacks(xi, zi) && !s.attacks(yi, zi));
        if (bad) {
          Witness w{{},
                    {},
                    "copies z=" + s.render_copy(zi) + ", x=" + s.render_copy(xi) +
                        ", y=" + s.render_copy(yi)};
          return {ConditionReport::fail("ranked", std::move(w)), std::nullopt};
        }
      }
    }
  if (relation_has_cycle(s))
    return {ConditionReport::pass("ranked"), std::nullopt};
  return {ConditionReport::pass("ranked"), RankWitness{copy_heights(s)}};
}

// Every copy of a lower-layer point attacks every copy of a higher-layer
// point. Pre: all copy points lie in the layering carrier.
inline ConditionReport is_a_ranked(const PreferentialStructure& s, const Layering& layering) {
  PointSet carrier = layering.carrier();
  for (const Copy& c : s.copies)
    if (!contains(carrier, c.point))
      throw std::invalid_argument("copy point outside the layering");
  std::size_t n = s.copy_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (layering.rank_of(s.copies[i].point) < layering.rank_of(s.copies[j].point) &&
          !s.attacks(static_cast<int>(i), static_cast<int>(j))) {
        Witness w{{},
                  {},
                  "missing " + s.render_copy(static_cast<int>(i)) + " < " +
                      s.render_copy(static_cast<int>(j))};
        return ConditionReport::fail("a-ranked", std::move(w));
      }
    }
  return ConditionReport::pass("a-ranked");
}

// Warshall closure over copies. Loops are not materialized as self-attacks;
// they set the cyclic flag instead.
inline PreferentialStructure transitive_closure(const PreferentialStructure& s) {
  std::size_t n = s.copy_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (int a : s.attackers[i]) reach[static_cast<std::size_t>(a)][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (reach[k][j]) reach[i][j] = true;
    }
  PreferentialStructure out = s;
  out.reset_edges();
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i][i]) out.cyclic = true;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && reach[i][j]) out.add_attack(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

// Exhaustive enumeration of structures over z: every point receives one copy
// per count assignment (1..max_copies), and every attack subset is emitted.
// The stream is deterministic and restartable from a global index.
class StructureEnumerator {
 public:
  // Pre: |z| <= 4 and max_copies <= 2.
  StructureEnumerator(const PointUniverse& points, int max_copies)
      : points_(points), max_copies_(max_copies) {
    if (points.size() > 4 || max_copies < 1 || max_copies > 2)
      throw std::invalid_argument("enumeration budget exceeded");
    int n = static_cast<int>(points.size());
    std::vector<int> counts(static_cast<std::size_t>(n), 1);
    for (;;) {
      assignments_.push_back(counts);
      int i = n - 1;
      while (i >= 0 && counts[static_cast<std::size_t>(i)] == max_copies) {
        counts[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++counts[static_cast<std::size_t>(i)];
    }
  }

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (const auto& counts : assignments_) sum += edge_masks(counts);
    return sum;
  }

  // Structure at a global index, in (assignment, edge mask) order.
  PreferentialStructure at(std::uint64_t index) const {
    for (const auto& counts : assignments_) {
      std::uint64_t span = edge_masks(counts);
      if (index < span) return build(counts, index);
      index -= span;
    }
    throw std::out_of_range("enumeration index out of range");
  }

 private:
  PointUniverse points_;
  int max_copies_;
  std::vector<std::vector<int>> assignments_;

  static int copy_total(const std::vector<int>& counts) {
    int m = 0;
    for (int c : counts) m += c;
    return m;
  }

  static std::uint64_t edge_masks(const std::vector<int>& counts) {
    int m = copy_total(counts);
    return std::uint64_t{1} << (m * (m - 1));
  }

  PreferentialStructure build(const std::vector<int>& counts, std::uint64_t mask) const {
    PreferentialStructure s;
    s.points = points_;
    for (std::size_t p = 0; p < counts.size(); ++p)
      for (int i = 0; i < counts[p]; ++i)
        s.copies.push_back(Copy{static_cast<int>(p), std::to_string(i)});
    s.reset_edges();
    int m = static_cast<int>(s.copy_count());
    int bit = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        if ((mask >> bit) & 1u) s.add_attack(i, j);
        ++bit;
      }
    return s;
  }
};

}  // namespace arank

#endif  // ARANK_PREFSTRUCT_HPP
