#ifndef ARANK_TESTS_FIXTURES_HPP
#define ARANK_TESTS_FIXTURES_HPP

// Shared fixture builders for the test suite. E1 is the three-point choice
// function with layering {a,b} < {c}; S1 is the minimum-of-a-total-order
// function on the full powerset of {a,b,c}.

#include <initializer_list>
#include <string>
#include <vector>

#include "arank/choice.hpp"
#include "arank/prefstruct.hpp"
#include "arank/sets.hpp"

namespace fixtures {

inline arank::PointUniverse abc() { return arank::PointUniverse{{"a", "b", "c"}}; }

inline arank::PointSet pset(const arank::PointUniverse& u,
                            std::initializer_list<std::string> names) {
  arank::PointSet s = 0;
  for (const auto& n : names) s = arank::with(s, u.require(n));
  return s;
}

// All non-empty subsets, largest first within size order is not needed;
// declaration order is by increasing bitmask.
inline std::vector<arank::PointSet> powerset_family(const arank::PointUniverse& u,
                                                    bool include_empty = false) {
  std::vector<arank::PointSet> family;
  if (include_empty) family.push_back(0);
  for (arank::PointSet s = 1; s <= u.full(); ++s) family.push_back(s);
  return family;
}

inline arank::Domain e1_domain() {
  arank::PointUniverse u = abc();
  return arank::Domain{u, {pset(u, {"a", "b", "c"}), pset(u, {"a", "b"}),
                           pset(u, {"a", "c"}), pset(u, {"b", "c"})}};
}

inline arank::ChoiceFunction e1() {
  arank::Domain d = e1_domain();
  const arank::PointUniverse& u = d.points;
  return arank::ChoiceFunction{
      d, {pset(u, {"b"}), pset(u, {"a", "b"}), 0, pset(u, {"b"})}};
}

inline arank::Layering e1_layering() {
  arank::PointUniverse u = abc();
  return arank::Layering{{pset(u, {"a", "b"}), pset(u, {"c"})}};
}

// The one-copy relation a < c < a, b < c representing E1.
inline arank::PreferentialStructure e1_relation() {
  arank::PreferentialStructure s;
  s.points = abc();
  s.copies = {{0, "0"}, {1, "0"}, {2, "0"}};
  s.reset_edges();
  s.add_attack(0, 2);
  s.add_attack(2, 0);
  s.add_attack(1, 2);
  return s;
}

// Minimum under a < b < c on the full non-empty powerset.
inline arank::ChoiceFunction s1() {
  arank::PointUniverse u = abc();
  arank::Domain d{u, powerset_family(u)};
  arank::ChoiceFunction f{d, {}};
  for (arank::PointSet y : d.family)
    f.table.push_back(arank::single(arank::first_point(y)));
  return f;
}

inline arank::Layering s1_layering() {
  arank::PointUniverse u = abc();
  return arank::Layering{{pset(u, {"a"}), pset(u, {"b"}), pset(u, {"c"})}};
}

}  // namespace fixtures

#endif  // ARANK_TESTS_FIXTURES_HPP
