#ifndef ARANK_REPRESENT_GENERAL_HPP
#define ARANK_REPRESENT_GENERAL_HPP

// General layered representation of a choice function: selection-function
// machinery, the direct construction whose copies are indexed by selection
// functions, and the transitive construction whose copies are indexed by
// canonicalized index trees.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arank/choice.hpp"
#include "arank/prefstruct.hpp"
#include "arank/sets.hpp"

namespace arank {

// One selection function: a choice from each demoting set, in family order.
struct SelectionFn {
  std::vector<int> choice;
  PointSet range = 0;
  std::string tag;  // chosen point names joined by ",", "-" when empty
};

// For one point x: the demoting sets Y with x in Y - mu(Y), and all
// selection functions over them.
struct SelectionContext {
  int point = -1;
  std::vector<int> demoting;  // indices into dom.family
  std::vector<SelectionFn> functions;
};

// Pre: budget bounds the number of selection functions enumerated.
inline SelectionContext selection_context(const ChoiceFunction& f, int x,
                                          std::uint64_t budget = 1'000'000) {
  SelectionContext ctx;
  ctx.point = x;
  const Domain& d = f.dom;
  for (std::size_t i = 0; i < d.family.size(); ++i) {
    PointSet y = d.family[i];
    if (contains(y, x) && !contains(f.table[i], x))
      ctx.demoting.push_back(static_cast<int>(i));
  }

  std::uint64_t count = 1;
  std::vector<std::vector<int>> pools;
  for (int i : ctx.demoting) {
    PointSet y = d.family[static_cast<std::size_t>(i)];
    count *= static_cast<std::uint64_t>(set_size(y));
    if (count > budget) throw std::length_error("selection function budget exceeded");
    pools.push_back(members(y));
  }

  std::vector<std::size_t> odo(pools.size(), 0);
  for (;;) {
    SelectionFn fn;
    for (std::size_t k = 0; k < pools.size(); ++k) {
      int p = pools[k][odo[k]];
      fn.choice.push_back(p);
      fn.range = with(fn.range, p);
      if (!fn.tag.empty()) fn.tag += ",";
      fn.tag += d.points.names[static_cast<std::size_t>(p)];
    }
    if (fn.tag.empty()) fn.tag = "-";
    ctx.functions.push_back(std::move(fn));
    std::size_t k = pools.size();
    while (k > 0 && ++odo[k - 1] == pools[k - 1].size()) odo[--k] = 0;
    if (k == 0) break;
  }
  return ctx;
}

// x in mu(U) iff x in U and some selection function misses U entirely.
inline bool characterize_minimal(const ChoiceFunction& f, int x, PointSet u) {
  if (f.dom.index_of_set(u) < 0)
    throw std::invalid_argument("set outside the family: " + f.dom.points.render(u));
  if (!contains(u, x)) return false;
  SelectionContext ctx = selection_context(f, x);
  for (const SelectionFn& fn : ctx.functions)
    if ((fn.range & u) == 0) return true;
  return false;
}

namespace detail {

inline void require_conditions(const ChoiceFunction& f, const Layering& layering,
                               const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    ConditionReport r = check_mu(id, f, &layering);
    if (!r.holds) throw PreconditionError(std::move(r), f.dom.points);
  }
}

inline PointSet lower_rank_points(const Layering& layering, int rank) {
  PointSet s = 0;
  for (int r = 0; r + 1 < rank; ++r) s |= layering.blocks[static_cast<std::size_t>(r)];
  return s;
}

inline bool has_demoting_set(const ChoiceFunction& f, int w) {
  for (std::size_t i = 0; i < f.dom.family.size(); ++i)
    if (contains(f.dom.family[i], w) && !contains(f.table[i], w)) return true;
  return false;
}

inline std::string point_list(const PointUniverse& u, PointSet s) {
  if (s == 0) return "-";
  std::string out;
  for (int p : members(s)) {
    if (!out.empty()) out += ",";
    out += u.names[static_cast<std::size_t>(p)];
  }
  return out;
}

}  // namespace detail

// Tree of points materialized to a finite height; height 1 is a bare root.
struct IndexTree {
  int point = -1;
  std::vector<IndexTree> children;
};

// Self-similar tree of w in which every node keeps the root's rank cap:
// children are w itself while some set demotes w, plus all points of rank
// below the cap.
inline IndexTree tail_tree(const ChoiceFunction& f, const Layering& layering, int w,
                           int cap_rank, int height) {
  IndexTree t;
  t.point = w;
  if (height <= 1) return t;
  PointSet kids = detail::lower_rank_points(layering, cap_rank);
  if (detail::has_demoting_set(f, w)) kids = with(kids, w);
  for (int z : members(kids))
    t.children.push_back(tail_tree(f, layering, z, cap_rank, height - 1));
  return t;
}

// Tree of one selection function: root x over the tail trees of ran(g) and
// of the points ranked below x, all capped at x's rank.
inline IndexTree fn_tree(const ChoiceFunction& f, const Layering& layering, int x,
                         const SelectionFn& g, int height) {
  IndexTree t;
  t.point = x;
  if (height <= 1) return t;
  int cap = layering.rank_of(x);
  PointSet kids = g.range | detail::lower_rank_points(layering, cap);
  for (int y : members(kids))
    t.children.push_back(tail_tree(f, layering, y, cap, height - 1));
  return t;
}

inline std::string render_tree(const IndexTree& t, const PointUniverse& u) {
  std::string out = u.names[static_cast<std::size_t>(t.point)];
  if (t.children.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ",";
    out += render_tree(t.children[i], u);
  }
  return out + ")";
}

// Copies <x,g> for every selection function g; <x',g'> attacks <x,g> iff
// x' is in ran(g) or x' has lower rank than x. When a point's only copy
// would have to attack itself, a parity twin realizes the kill as a
// two-cycle instead.
// Pre: mu-subset, mu-pr and mu-a hold; every point lies in the layering.
inline PreferentialStructure construct_general(const ChoiceFunction& f,
                                               const Layering& layering,
                                               std::uint64_t budget = 1'000'000) {
  detail::require_conditions(f, layering, {"mu-subset", "mu-pr", "mu-a"});
  const PointUniverse& u = f.dom.points;
  if (!subset_of(u.full(), layering.carrier()))
    throw std::invalid_argument("layering does not cover the universe");

  PreferentialStructure s;
  s.points = u;
  std::vector<PointSet> kill;  // per copy: points whose copies attack it
  std::uint64_t copies = 0;
  for (int x = 0; x < static_cast<int>(u.size()); ++x) {
    SelectionContext ctx = selection_context(f, x, budget);
    copies += ctx.functions.size();
    if (copies > budget) throw std::length_error("copy budget exceeded");
    PointSet lower = detail::lower_rank_points(layering, layering.rank_of(x));
    bool lone = ctx.functions.size() == 1;
    for (const SelectionFn& fn : ctx.functions) {
      s.copies.push_back(Copy{x, fn.tag});
      kill.push_back(fn.range | lower);
      if (lone && contains(fn.range, x)) {
        s.copies.push_back(Copy{x, fn.tag + "#1"});
        kill.push_back(fn.range | lower);
      }
    }
  }

  s.reset_edges();
  int n = static_cast<int>(s.copy_count());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && contains(kill[static_cast<std::size_t>(j)],
                             s.copies[static_cast<std::size_t>(i)].point))
        s.add_attack(i, j);
  return s;
}

// Copies indexed by the distinct index trees among all selection trees and
// all capped tail trees, collapsed under structural equality of the
// unbounded trees (bisimulation over the finite generator graph). A tree
// attacks every tree it occurs in as a subtree; a tree that repeats itself
// is carried by a parity twin pair. The relation is transitively closed.
// Pre: as construct_general; depth at least |Z| + 1.
inline PreferentialStructure construct_transitive(const ChoiceFunction& f,
                                                  const Layering& layering, int depth,
                                                  std::uint64_t budget = 1'000'000) {
  detail::require_conditions(f, layering, {"mu-subset", "mu-pr", "mu-a"});
  const PointUniverse& u = f.dom.points;
  if (!subset_of(u.full(), layering.carrier()))
    throw std::invalid_argument("layering does not cover the universe");
  if (depth < static_cast<int>(u.size()) + 1)
    throw std::invalid_argument("depth below the stable bound");

  int n = static_cast<int>(u.size());
  int ranks = layering.rank_count();

  struct Node {
    int point;
    int cap;
    PointSet fn_children;  // selection trees only
    bool from_fn;
    std::vector<int> kids;
  };
  std::vector<Node> nodes;
  auto tail_id = [ranks](int w, int r) { return w * ranks + (r - 1); };
  for (int w = 0; w < n; ++w) {
    bool rep = detail::has_demoting_set(f, w);
    for (int r = 1; r <= ranks; ++r) {
      Node nd{w, r, 0, false, {}};
      PointSet kids = detail::lower_rank_points(layering, r);
      if (rep) kids = with(kids, w);
      for (int z : members(kids)) nd.kids.push_back(tail_id(z, r));
      nodes.push_back(std::move(nd));
    }
  }
  for (int x = 0; x < n; ++x) {
    SelectionContext ctx = selection_context(f, x, budget);
    int cap = layering.rank_of(x);
    PointSet lower = detail::lower_rank_points(layering, cap);
    std::vector<PointSet> seen;
    for (const SelectionFn& g : ctx.functions) {
      PointSet kids = g.range | lower;
      if (std::find(seen.begin(), seen.end(), kids) != seen.end()) continue;
      seen.push_back(kids);
      Node nd{x, cap, kids, true, {}};
      for (int y : members(kids)) nd.kids.push_back(tail_id(y, cap));
      nodes.push_back(std::move(nd));
      if (nodes.size() > budget) throw std::length_error("copy budget exceeded");
    }
  }

  // Partition refinement: two nodes generate the same unbounded tree iff
  // they end up in the same class.
  std::vector<int> cls(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) cls[i] = nodes[i].point;
  std::size_t distinct = 0;
  for (;;) {
    std::map<std::vector<int>, int> index;
    std::vector<int> next(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::vector<int> key{cls[i]};
      std::vector<int> kid_cls;
      for (int k : nodes[i].kids) kid_cls.push_back(cls[static_cast<std::size_t>(k)]);
      std::sort(kid_cls.begin(), kid_cls.end());
      kid_cls.erase(std::unique(kid_cls.begin(), kid_cls.end()), kid_cls.end());
      key.insert(key.end(), kid_cls.begin(), kid_cls.end());
      auto it = index.find(key);
      if (it == index.end()) it = index.emplace(std::move(key), static_cast<int>(index.size())).first;
      next[i] = it->second;
    }
    bool stable = index.size() == distinct;
    distinct = index.size();
    cls = std::move(next);
    if (stable) break;
  }

  struct ClassInfo {
    int point = -1;
    std::string tag;
    bool has_fn = false;
    PointSet fn_children = 0;
    int min_cap = 0;
    int rep_node = -1;
    std::vector<int> child_classes;
    bool self_child = false;
    int primary = -1;
    int twin = -1;
  };
  std::vector<ClassInfo> info(distinct);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ClassInfo& ci = info[static_cast<std::size_t>(cls[i])];
    ci.point = nodes[i].point;
    if (ci.rep_node < 0) ci.rep_node = static_cast<int>(i);
    if (nodes[i].from_fn) {
      ci.has_fn = true;
      ci.fn_children = nodes[i].fn_children;
    } else if (ci.min_cap == 0 || nodes[i].cap < ci.min_cap) {
      ci.min_cap = nodes[i].cap;
    }
  }
  for (std::size_t c = 0; c < distinct; ++c) {
    ClassInfo& ci = info[c];
    for (int k : nodes[static_cast<std::size_t>(ci.rep_node)].kids)
      ci.child_classes.push_back(cls[static_cast<std::size_t>(k)]);
    std::sort(ci.child_classes.begin(), ci.child_classes.end());
    ci.child_classes.erase(std::unique(ci.child_classes.begin(), ci.child_classes.end()),
                           ci.child_classes.end());
    ci.self_child = std::binary_search(ci.child_classes.begin(), ci.child_classes.end(),
                                       static_cast<int>(c));
    ci.tag = ci.has_fn ? "tf:" + detail::point_list(u, ci.fn_children)
                       : "tc:" + std::to_string(ci.min_cap);
  }

  struct Slot {
    int point;
    std::string tag;
    int cls;
    int parity;
  };
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < distinct; ++c) {
    slots.push_back(Slot{info[c].point, info[c].tag, static_cast<int>(c), 0});
    if (info[c].self_child)
      slots.push_back(Slot{info[c].point, info[c].tag + "#1", static_cast<int>(c), 1});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.tag < b.tag;
  });

  PreferentialStructure s;
  s.points = u;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    s.copies.push_back(Copy{slots[i].point, slots[i].tag});
    if (slots[i].parity == 0)
      info[static_cast<std::size_t>(slots[i].cls)].primary = static_cast<int>(i);
    else
      info[static_cast<std::size_t>(slots[i].cls)].twin = static_cast<int>(i);
  }

  s.reset_edges();
  for (std::size_t c = 0; c < distinct; ++c) {
    const ClassInfo& ci = info[c];
    for (int d : ci.child_classes) {
      if (d == static_cast<int>(c)) {
        s.add_attack(ci.twin, ci.primary);
        s.add_attack(ci.primary, ci.twin);
      } else {
        s.add_attack(info[static_cast<std::size_t>(d)].primary, ci.primary);
        if (ci.twin >= 0) s.add_attack(info[static_cast<std::size_t>(d)].primary, ci.twin);
      }
    }
  }
  return transitive_closure(s);
}

// Set-by-set comparison of the structure's induced choice with the table.
inline ConditionReport verify_representation(const PreferentialStructure& s,
                                             const ChoiceFunction& f) {
  for (std::size_t i = 0; i < f.dom.family.size(); ++i) {
    PointSet y = f.dom.family[i];
    PointSet got = minimize(s, y);
    if (got != f.table[i]) {
      Witness w;
      w.sets = {{"U", y}, {"expected", f.table[i]}, {"got", got}};
      return ConditionReport::fail("representation", std::move(w));
    }
  }
  return ConditionReport::pass("representation");
}

}  // namespace arank

#endif  // ARANK_REPRESENT_GENERAL_HPP
