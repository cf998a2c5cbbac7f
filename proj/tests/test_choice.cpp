#include "arank/choice.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace arank;
using fixtures::pset;

namespace {

// Independent violation predicates used to re-check failure witnesses.
bool violates_cum(const ChoiceFunction& f, PointSet x, PointSet y) {
  return subset_of(f.mu(x), y) && subset_of(y, x) && f.mu(y) != f.mu(x);
}
bool violates_pr(const ChoiceFunction& f, PointSet x, PointSet y) {
  return subset_of(x, y) && !subset_of(f.mu(y) & x, f.mu(x));
}

ChoiceFunction random_subset_table(const Domain& d, std::mt19937& rng) {
  ChoiceFunction f{d, {}};
  for (PointSet y : d.family) {
    PointSet v = 0;
    for (int p : members(y)) {
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng)) v = with(v, p);
    }
    f.table.push_back(v);
  }
  return f;
}

}  // namespace

TEST_CASE("E1 satisfies the layer condition and fails cumulativity") {
  ChoiceFunction f = fixtures::e1();
  Layering l = fixtures::e1_layering();
  const PointUniverse& u = f.dom.points;

  CHECK(check_mu("mu-a", f, &l).holds);
  CHECK(check_mu("mu-subset", f).holds);
  CHECK(check_mu("mu-pr", f).holds);

  ConditionReport cum = check_mu("mu-cum", f);
  REQUIRE_FALSE(cum.holds);
  REQUIRE(cum.witness.has_value());
  CHECK(cum.witness->sets[0].second == pset(u, {"a", "b", "c"}));
  CHECK(cum.witness->sets[1].second == pset(u, {"a", "b"}));
  CHECK(violates_cum(f, cum.witness->sets[0].second, cum.witness->sets[1].second));
}

TEST_CASE("identity choice function passes subset and preservation") {
  Domain d = fixtures::e1_domain();
  ChoiceFunction f{d, d.family};
  CHECK(check_mu("mu-subset", f).holds);
  CHECK(check_mu("mu-pr", f).holds);
  CHECK(check_mu("mu-cum", f).holds);
  CHECK(check_mu("mu-in", f).holds);
}

TEST_CASE("layer condition needs a layering") {
  ChoiceFunction f = fixtures::e1();
  CHECK_THROWS_AS(check_mu("mu-a", f), std::invalid_argument);
  CHECK_THROWS_AS(check_mu("mu-bogus", f), std::invalid_argument);
}

TEST_CASE("domain closure checks") {
  Domain e1 = fixtures::e1_domain();
  CHECK(check_domain_closure(e1, "finite-union").holds);

  PointUniverse ab{{"a", "b"}};
  Domain full{ab, fixtures::powerset_family(ab, true)};
  CHECK(check_domain_closure(full, "finite-union").holds);
  CHECK(check_domain_closure(full, "finite-intersection").holds);

  Domain split{ab, {pset(ab, {"a"}), pset(ab, {"b"})}};
  ConditionReport r = check_domain_closure(split, "finite-union");
  REQUIRE_FALSE(r.holds);
  CHECK(r.witness->sets[0].second == pset(ab, {"a"}));
  CHECK(r.witness->sets[1].second == pset(ab, {"b"}));
}

TEST_CASE("ranks are 1-based block indices") {
  Layering l = fixtures::e1_layering();
  PointUniverse u = fixtures::abc();
  CHECK(l.rank_of(u.require("a")) == 1);
  CHECK(l.rank_of(u.require("c")) == 2);
  CHECK(u.index_of("d") == -1);
  CHECK_THROWS_AS(u.require("d"), std::invalid_argument);

  PointUniverse wide{{"a", "b", "c", "d"}};
  Layering partial{{pset(wide, {"a", "b"}), pset(wide, {"c"})}};
  CHECK_THROWS_AS(partial.rank_of(wide.require("d")), std::invalid_argument);
}

TEST_CASE("failure witnesses re-check as genuine violations") {
  PointUniverse u = fixtures::abc();
  Domain d{u, fixtures::powerset_family(u)};
  std::mt19937 rng(20240818);
  for (int round = 0; round < 200; ++round) {
    ChoiceFunction f = random_subset_table(d, rng);
    ConditionReport pr = check_mu("mu-pr", f);
    if (!pr.holds)
      CHECK(violates_pr(f, pr.witness->sets[0].second, pr.witness->sets[1].second));
    ConditionReport cum = check_mu("mu-cum", f);
    if (!cum.holds)
      CHECK(violates_cum(f, cum.witness->sets[0].second, cum.witness->sets[1].second));
    ConditionReport sub = check_mu("mu-subset", f);
    CHECK(sub.holds);
  }
}

TEST_CASE("preservation plus intersection closure gives the primed form") {
  PointUniverse u = fixtures::abc();
  Domain d{u, fixtures::powerset_family(u, true)};
  REQUIRE(check_domain_closure(d, "finite-intersection").holds);
  std::mt19937 rng(31);
  int checked = 0;
  for (int round = 0; round < 400; ++round) {
    ChoiceFunction f = random_subset_table(d, rng);
    if (!check_mu("mu-pr", f).holds) continue;
    ++checked;
    CHECK(check_mu("mu-pr-prime", f).holds);
  }
  CHECK(checked > 0);
}

TEST_CASE("all condition ids dispatch") {
  ChoiceFunction f = fixtures::e1();
  Layering l = fixtures::e1_layering();
  for (const std::string& id : mu_condition_ids()) {
    ConditionReport r = check_mu(id, f, &l);
    CHECK(r.id == id);
    CHECK(r.holds == !r.witness.has_value());
  }
}
