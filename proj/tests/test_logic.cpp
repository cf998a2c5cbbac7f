#include "arank/logic.hpp"

#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

using namespace arank;

namespace {

Vocabulary pq() { return Vocabulary{{"p", "q"}}; }
Vocabulary pqr() { return Vocabulary{{"p", "q", "r"}}; }

FormulaPtr random_ast(std::mt19937& rng, const Vocabulary& v, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  switch (pick(rng)) {
    case 0:
    case 1: {
      std::uniform_int_distribution<int> var(0, static_cast<int>(v.size()) - 1);
      return make_var(var(rng));
    }
    case 2: {
      std::uniform_int_distribution<int> c(0, 1);
      return make_const(c(rng) == 1);
    }
    case 3:
      return make_not(random_ast(rng, v, depth - 1));
    case 4:
      return make_bin(FormulaKind::And, random_ast(rng, v, depth - 1),
                      random_ast(rng, v, depth - 1));
    case 5:
      return make_bin(FormulaKind::Or, random_ast(rng, v, depth - 1),
                      random_ast(rng, v, depth - 1));
    case 6:
      return make_bin(FormulaKind::Imp, random_ast(rng, v, depth - 1),
                      random_ast(rng, v, depth - 1));
    default:
      return make_bin(FormulaKind::Iff, random_ast(rng, v, depth - 1),
                      random_ast(rng, v, depth - 1));
  }
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
  Vocabulary v = pq();

  FormulaPtr f = parse_formula("~p & q", v);
  FormulaPtr expected = make_bin(FormulaKind::And, make_not(make_var(0)), make_var(1));
  CHECK(same_formula(f, expected));

  Vocabulary v3 = pqr();
  FormulaPtr g = parse_formula("p -> q -> r", v3);
  FormulaPtr nested =
      make_bin(FormulaKind::Imp, make_var(0),
               make_bin(FormulaKind::Imp, make_var(1), make_var(2)));
  CHECK(same_formula(g, nested));

  FormulaPtr left = parse_formula("p & q & r", v3);
  FormulaPtr left_expected =
      make_bin(FormulaKind::And,
               make_bin(FormulaKind::And, make_var(0), make_var(1)), make_var(2));
  CHECK(same_formula(left, left_expected));
}

TEST_CASE("parser reports positions and unknown variables") {
  Vocabulary v = pq();

  try {
    parse_formula("p &", v);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 3);
  }

  try {
    parse_formula("p & z", v);
    FAIL("expected an unknown-variable error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }

  CHECK_THROWS_AS(parse_formula("(p | q", v), ParseError);
  CHECK_THROWS_AS(parse_formula("p q", v), ParseError);
}

TEST_CASE("models_of enumerates satisfying valuations") {
  Vocabulary v = pq();

  CHECK(models_of({}, Vocabulary{{"p"}}) == ModelSet{0, 1});

  Theory t{parse_formula("p | q", v), parse_formula("~p", v)};
  CHECK(models_of(t, v) == ModelSet{2});

  Theory contradiction{parse_formula("p", v), parse_formula("~p", v)};
  CHECK(models_of(contradiction, v).empty());
}

TEST_CASE("defining formulas are canonical DNF") {
  Vocabulary v = pq();
  Vocabulary p1{{"p"}};

  CHECK(print_formula(defining_formula({}, v), v) == "F");
  CHECK(print_formula(defining_formula({3}, v), v) == "p & q");
  CHECK(print_formula(defining_formula({0, 1}, p1), p1) == "~p | p");
  CHECK(print_formula(defining_formula({1, 2}, v), v) == "p & ~q | ~p & q");
}

TEST_CASE("theory_of round-trips every model set") {
  Vocabulary v = pq();
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    ModelSet x;
    for (std::uint32_t val = 0; val < 4; ++val)
      if ((bits >> val) & 1u) x.push_back(val);
    CHECK(models_of(theory_of(x, v), v) == x);
  }

  CHECK(models_of(theory_of(Vocabulary{{"p"}}.full_space(), Vocabulary{{"p"}}),
                  Vocabulary{{"p"}}) == Vocabulary{{"p"}}.full_space());
  CHECK(models_of(theory_of({}, v), v).empty());
}

TEST_CASE("classical entailment") {
  Vocabulary v = pq();
  CHECK(classically_entails({parse_formula("p", v)}, parse_formula("p | q", v), v));
  CHECK_FALSE(classically_entails({}, parse_formula("p", v), v));
  CHECK(classically_entails({parse_formula("p -> q", v), parse_formula("p", v)},
                            parse_formula("q", v), v));
}

TEST_CASE("print then parse is the identity on ASTs") {
  Vocabulary v = pqr();
  std::mt19937 rng(20240817);
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = random_ast(rng, v, 4);
    std::string text = print_formula(f, v);
    FormulaPtr g = parse_formula(text, v);
    REQUIRE(same_formula(f, g));
  }
}

TEST_CASE("parse then print preserves semantics on valid strings") {
  Vocabulary v = pqr();
  std::vector<std::string> inputs = {
      "p",          "~~p",          "p&q|r",        "p -> (q -> p)",
      "p <-> q <-> r", "(p|q)&~r",  "T -> p",       "F | p & q",
      "~(p & q) <-> ~p | ~q"};
  for (const auto& text : inputs) {
    FormulaPtr f = parse_formula(text, v);
    FormulaPtr g = parse_formula(print_formula(f, v), v);
    CHECK(same_formula(f, g));
    CHECK(models_of_formula(f, v) == models_of_formula(g, v));
  }
}

TEST_CASE("entailment is reflexive and transitive on single formulas") {
  Vocabulary v = pq();
  std::mt19937 rng(7);
  std::vector<FormulaPtr> formulas;
  for (int i = 0; i < 12; ++i) formulas.push_back(random_ast(rng, v, 3));
  for (const auto& f : formulas) CHECK(classically_entails({f}, f, v));
  for (const auto& f : formulas)
    for (const auto& g : formulas)
      for (const auto& h : formulas)
        if (classically_entails({f}, g, v) && classically_entails({g}, h, v))
          CHECK(classically_entails({f}, h, v));
}
