#ifndef ARANK_CHOICE_HPP
#define ARANK_CHOICE_HPP

// Explicit choice functions over a declared set family, and checkers for the
// algebraic conditions on them. Conditions are checked with partial-domain
// semantics: every set a condition mentions (quantified or combined, such as
// X u Y or X n Y) must itself belong to the family for a tuple to count.
// Failure witnesses are the first violating tuple, scanning quantifiers in
// written order over the family in declaration order.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arank/sets.hpp"

namespace arank {

struct Domain {
  PointUniverse points;
  std::vector<PointSet> family;

  // Pre: members distinct and inside the universe.
  void validate() const {
    PointSet all = points.full();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!subset_of(family[i], all))
        throw std::invalid_argument("family member outside the universe");
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (family[i] == family[j])
          throw std::invalid_argument("duplicate family member " + points.render(family[i]));
    }
  }

  int index_of_set(PointSet y) const {
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i] == y) return static_cast<int>(i);
    return -1;
  }

  bool has_set(PointSet y) const { return index_of_set(y) >= 0; }
};

struct ChoiceFunction {
  Domain dom;
  std::vector<PointSet> table;  // parallel to dom.family

  void validate() const {
    dom.validate();
    if (table.size() != dom.family.size())
      throw std::invalid_argument("choice table not total on the family");
    for (PointSet v : table)
      if (!subset_of(v, dom.points.full()))
        throw std::invalid_argument("choice value outside the universe");
  }

  // Pre: y in the family.
  PointSet mu(PointSet y) const {
    int i = dom.index_of_set(y);
    if (i < 0)
      throw std::invalid_argument("set outside the family: " + dom.points.render(y));
    return table[static_cast<std::size_t>(i)];
  }
};

struct Witness {
  std::vector<std::pair<std::string, PointSet>> sets;
  std::vector<std::pair<std::string, int>> points;
  std::string note;

  std::string render(const PointUniverse& u) const {
    std::string out;
    for (const auto& [label, s] : sets) {
      if (!out.empty()) out += ", ";
      out += label + "=" + u.render(s);
    }
    for (const auto& [label, p] : points) {
      if (!out.empty()) out += ", ";
      out += label + "=" + u.names[static_cast<std::size_t>(p)];
    }
    if (!note.empty()) out += (out.empty() ? "" : " ") + note;
    return out;
  }
};

struct ConditionReport {
  std::string id;
  bool holds = true;
  std::optional<Witness> witness;

  static ConditionReport pass(std::string id) { return ConditionReport{std::move(id), true, {}}; }
  static ConditionReport fail(std::string id, Witness w) {
    return ConditionReport{std::move(id), false, std::move(w)};
  }
};

// Thrown when a construction is handed inputs failing its required
// conditions; carries the failing report.
struct PreconditionError : std::runtime_error {
  ConditionReport report;
  PreconditionError(ConditionReport r, const PointUniverse& u)
      : std::runtime_error("precondition failed: " + r.id +
                           (r.witness ? ", witness " + r.witness->render(u) : "")),
        report(std::move(r)) {}
};

inline const std::vector<std::string>& mu_condition_ids() {
  static const std::vector<std::string> ids = {
      "mu-subset", "mu-pr",        "mu-pr-prime", "mu-cut",    "mu-cm",
      "mu-resm",   "mu-cum",       "mu-sub-sup",  "mu-or",     "mu-wor",
      "mu-disjor", "mu-empty",     "mu-empty-fin", "mu-ratm",  "mu-eq",
      "mu-eq-prime", "mu-par",     "mu-cup",      "mu-cup-prime", "mu-in",
      "mu-a"};
  return ids;
}

namespace detail {

inline ConditionReport check_one_set(
    const ChoiceFunction& f, const std::string& id,
    bool (*ok)(const ChoiceFunction&, PointSet)) {
  for (PointSet x : f.dom.family)
    if (!ok(f, x)) return ConditionReport::fail(id, Witness{{{"X", x}}, {}, ""});
  return ConditionReport::pass(id);
}

inline ConditionReport check_two_sets(
    const ChoiceFunction& f, const std::string& id,
    bool (*ok)(const ChoiceFunction&, PointSet, PointSet)) {
  for (PointSet x : f.dom.family)
    for (PointSet y : f.dom.family)
      if (!ok(f, x, y)) return ConditionReport::fail(id, Witness{{{"X", x}, {"Y", y}}, {}, ""});
  return ConditionReport::pass(id);
}

}  // namespace detail

// Pre: id names a known condition; layering present exactly when id needs it.
inline ConditionReport check_mu(const std::string& id, const ChoiceFunction& f,
                                const Layering* layering = nullptr) {
  using detail::check_one_set;
  using detail::check_two_sets;
  const Domain& d = f.dom;

  if (id == "mu-subset")
    return check_one_set(f, id, [](const ChoiceFunction& g, PointSet x) {
      return subset_of(g.mu(x), x);
    });

  if (id == "mu-pr")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!subset_of(x, y)) return true;
      return subset_of(g.mu(y) & x, g.mu(x));
    });

  if (id == "mu-pr-prime")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!g.dom.has_set(x & y)) return true;
      return subset_of(g.mu(x) & y, g.mu(x & y));
    });

  if (id == "mu-cut")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!(subset_of(g.mu(x), y) && subset_of(y, x))) return true;
      return subset_of(g.mu(x), g.mu(y));
    });

  if (id == "mu-cm")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!(subset_of(g.mu(x), y) && subset_of(y, x))) return true;
      return subset_of(g.mu(y), g.mu(x));
    });

  if (id == "mu-resm") {
    // f(X) <= A n B implies f(X n A) <= B, with X n A in the family.
    for (PointSet x : d.family)
      for (PointSet a : d.family)
        for (PointSet b : d.family) {
          if (!subset_of(f.mu(x), a & b)) continue;
          if (!d.has_set(x & a)) continue;
          if (!subset_of(f.mu(x & a), b))
            return ConditionReport::fail(id, Witness{{{"X", x}, {"A", a}, {"B", b}}, {}, ""});
        }
    return ConditionReport::pass(id);
  }

  if (id == "mu-cum")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!(subset_of(g.mu(x), y) && subset_of(y, x))) return true;
      return g.mu(y) == g.mu(x);
    });

  if (id == "mu-sub-sup")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!(subset_of(g.mu(x), y) && subset_of(g.mu(y), x))) return true;
      return g.mu(x) == g.mu(y);
    });

  if (id == "mu-or")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!g.dom.has_set(x | y)) return true;
      return subset_of(g.mu(x | y), g.mu(x) | g.mu(y));
    });

  if (id == "mu-wor")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!g.dom.has_set(x | y)) return true;
      return subset_of(g.mu(x | y), g.mu(x) | y);
    });

  if (id == "mu-disjor")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if ((x & y) != 0 || !g.dom.has_set(x | y)) return true;
      return subset_of(g.mu(x | y), g.mu(x) | g.mu(y));
    });

  if (id == "mu-empty")
    return check_one_set(f, id, [](const ChoiceFunction& g, PointSet x) {
      return g.mu(x) != 0 || x == 0;
    });

  if (id == "mu-empty-fin")
    return check_one_set(f, id, [](const ChoiceFunction& g, PointSet x) {
      return x == 0 || g.mu(x) != 0;
    });

  if (id == "mu-ratm")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!subset_of(x, y) || (x & g.mu(y)) == 0) return true;
      return subset_of(g.mu(x), g.mu(y) & x);
    });

  if (id == "mu-eq")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!subset_of(x, y) || (x & g.mu(y)) == 0) return true;
      return g.mu(x) == (g.mu(y) & x);
    });

  if (id == "mu-eq-prime") {
    // f(Y) n X nonempty implies f(Y n X) = f(Y) n X, with Y n X in the family.
    for (PointSet y : d.family)
      for (PointSet x : d.family) {
        if ((f.mu(y) & x) == 0 || !d.has_set(y & x)) continue;
        if (f.mu(y & x) != (f.mu(y) & x))
          return ConditionReport::fail(id, Witness{{{"Y", y}, {"X", x}}, {}, ""});
      }
    return ConditionReport::pass(id);
  }

  if (id == "mu-par")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if (!g.dom.has_set(x | y)) return true;
      PointSet u = g.mu(x | y);
      return u == g.mu(x) || u == g.mu(y) || u == (g.mu(x) | g.mu(y));
    });

  if (id == "mu-cup")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if ((g.mu(y) & (x & ~g.mu(x))) == 0 || !g.dom.has_set(x | y)) return true;
      return (g.mu(x | y) & y) == 0;
    });

  if (id == "mu-cup-prime")
    return check_two_sets(f, id, [](const ChoiceFunction& g, PointSet x, PointSet y) {
      if ((g.mu(y) & (x & ~g.mu(x))) == 0 || !g.dom.has_set(x | y)) return true;
      return g.mu(x | y) == g.mu(x);
    });

  if (id == "mu-in") {
    // a in X - f(X) implies some b in X with {a,b} in the family and
    // a not in f({a,b}).
    for (PointSet x : d.family)
      for (int a : members(x & ~f.mu(x))) {
        bool witnessed = false;
        for (int b : members(x)) {
          PointSet pair = with(single(a), b);
          if (!d.has_set(pair)) continue;
          if (!contains(f.mu(pair), a)) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed)
          return ConditionReport::fail(id, Witness{{{"X", x}}, {{"a", a}}, ""});
      }
    return ConditionReport::pass(id);
  }

  if (id == "mu-a") {
    if (layering == nullptr)
      throw std::invalid_argument("mu-a requires a layering");
    // X meets A_i and A_j with i < j implies f(X) misses A_j.
    for (PointSet x : d.family)
      for (std::size_t i = 0; i < layering->blocks.size(); ++i)
        for (std::size_t j = i + 1; j < layering->blocks.size(); ++j) {
          if ((x & layering->blocks[i]) == 0 || (x & layering->blocks[j]) == 0) continue;
          if ((f.mu(x) & layering->blocks[j]) != 0)
            return ConditionReport::fail(
                id, Witness{{{"X", x},
                             {"A" + std::to_string(i + 1), layering->blocks[i]},
                             {"A" + std::to_string(j + 1), layering->blocks[j]}},
                            {},
                            ""});
        }
    return ConditionReport::pass(id);
  }

  throw std::invalid_argument("unknown condition id: " + id);
}

// which: "finite-union" or "finite-intersection".
inline ConditionReport check_domain_closure(const Domain& d, const std::string& which) {
  bool take_union = which == "finite-union";
  if (!take_union && which != "finite-intersection")
    throw std::invalid_argument("unknown closure kind: " + which);
  for (PointSet x : d.family)
    for (PointSet y : d.family) {
      PointSet combined = take_union ? (x | y) : (x & y);
      if (!d.has_set(combined))
        return ConditionReport::fail(which, Witness{{{"X", x}, {"Y", y}}, {}, ""});
    }
  return ConditionReport::pass(which);
}

}  // namespace arank

#endif  // ARANK_CHOICE_HPP
