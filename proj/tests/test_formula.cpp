#include <random>

#include "doctest.h"
#include "succinct/error.hpp"
#include "succinct/formula.hpp"

using namespace succinct;

namespace {

Formula random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: return Formula::atom(vars[rng() % vars.size()]);
    case 1: return rng() % 5 == 0 ? Formula::constant(rng() % 2) : Formula::atom(vars[rng() % vars.size()]);
    case 2: return Formula::negate(random_formula(rng, depth - 1, vars));
    case 3:
    case 4: {
      std::vector<Formula> parts;
      int n = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < n; ++i) parts.push_back(random_formula(rng, depth - 1, vars));
      return rng() % 2 ? Formula::conj(parts) : Formula::disj(parts);
    }
    case 5: return Formula::implies(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    case 6: return Formula::iff(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
    default: return Formula::differs(random_formula(rng, depth - 1, vars), random_formula(rng, depth - 1, vars));
  }
}

} // namespace

TEST_CASE("natural order compares embedded numbers") {
  CHECK(natural_less("x2", "x10"));
  CHECK_FALSE(natural_less("x10", "x2"));
  CHECK(natural_less("a", "b"));
  auto f = parse_formula("x10 & x2 | y1 & x1");
  CHECK(atoms(f) == std::vector<std::string>{"x1", "x2", "x10", "y1"});
}

TEST_CASE("parser precedence and associativity") {
  auto f = parse_formula("a | b & !c -> d <-> e");
  CHECK(f.kind() == FormulaKind::Iff);
  CHECK(f.children()[0].kind() == FormulaKind::Implies);
  auto g = parse_formula("a -> b -> c");
  CHECK(g.children()[1].kind() == FormulaKind::Implies);
  CHECK_THROWS_AS(parse_formula("a & "), input_error);
  CHECK_THROWS_AS(parse_formula("(a"), input_error);
  CHECK_THROWS_AS(parse_formula("a b"), input_error);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(7);
  std::vector<std::string> vars{"p", "q", "r", "x10"};
  for (int i = 0; i < 300; ++i) {
    auto f = random_formula(rng, 4, vars);
    auto g = parse_formula(to_string(f));
    for (unsigned m = 0; m < 16; ++m) {
      Assignment a{{"p", m & 1}, {"q", m >> 1 & 1}, {"r", m >> 2 & 1}, {"x10", m >> 3 & 1}};
      REQUIRE(eval_formula(f, a) == eval_formula(g, a));
    }
  }
}

TEST_CASE("compiled evaluation agrees with tree evaluation") {
  std::mt19937 rng(11);
  std::vector<std::string> vars{"a", "b", "c"};
  for (int i = 0; i < 300; ++i) {
    auto f = random_formula(rng, 5, vars);
    CompiledFormula cf(f, vars);
    for (unsigned m = 0; m < 8; ++m) {
      Bits bits{bool(m & 4), bool(m & 2), bool(m & 1)};
      Assignment a{{"a", bits[0]}, {"b", bits[1]}, {"c", bits[2]}};
      REQUIRE(cf.eval(bits) == eval_formula(f, a));
    }
  }
}

TEST_CASE("empty and singleton junctions normalize") {
  CHECK(eval_formula(Formula::conj({}), {}));
  CHECK_FALSE(eval_formula(Formula::disj({}), {}));
  auto a = Formula::atom("a");
  CHECK(Formula::conj({a}) == a);
}

TEST_CASE("missing atom is an error") {
  CHECK_THROWS_AS(eval_formula(parse_formula("a & b"), {{"a", true}}), input_error);
}

TEST_CASE("brute_sat returns the lexicographically first model") {
  auto m = brute_sat(parse_formula("(a | b) & (!a | c)"));
  REQUIRE(m);
  // Order 000, 001, 010 (a=0,b=1,c=0) is first satisfying.
  CHECK(m->at("a") == false);
  CHECK(m->at("b") == true);
  CHECK(m->at("c") == false);
  CHECK_FALSE(brute_sat(parse_formula("a & !a")));
  std::string big = "v1";
  for (int i = 2; i <= 21; ++i) big += " & v" + std::to_string(i);
  CHECK_THROWS_AS(brute_sat(parse_formula(big)), cap_exceeded);
}
