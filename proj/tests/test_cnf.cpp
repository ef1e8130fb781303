#include <functional>

#include "doctest.h"
#include "succinct/cnf.hpp"
#include "succinct/error.hpp"

using namespace succinct;

namespace {

// Every clause list with indices in range, for round-trip checks.
void all_cnfs(unsigned r, unsigned c, const std::function<void(const Cnf3&)>& visit) {
  std::vector<Literal> lits;
  for (unsigned v = 1; v <= r; ++v)
    for (bool s : {false, true}) lits.push_back({v, s});
  Cnf3 f(c);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == 3 * c) {
      visit(f);
      return;
    }
    for (const auto& l : lits) {
      f[pos / 3][pos % 3] = l;
      rec(pos + 1);
    }
  };
  rec(0);
}

} // namespace

TEST_CASE("encoding widths") {
  CHECK(Cnf3Encoding{1, 1}.m() == 3);
  CHECK(Cnf3Encoding{2, 1}.m() == 6);
  CHECK(Cnf3Encoding{3, 2}.m() == 18);
  CHECK(Cnf3Encoding{4, 1}.m() == 9);
  CHECK(Cnf3Encoding{5, 1}.m() == 12);
}

TEST_CASE("hand-encoded single clause") {
  Cnf3Encoding enc{2, 1};
  Cnf3 f{{Literal{1, true}, Literal{1, true}, Literal{1, true}}};
  CHECK(to_string(encode_cnf(f, enc)) == "010101");
  CHECK(decode_cnf(parse_bits("010101"), enc) == f);
  // All-zero string: three negative x1 literals.
  auto z = decode_cnf(std::uint64_t{0}, enc);
  CHECK(z == Cnf3{{Literal{1, false}, Literal{1, false}, Literal{1, false}}});
  // Index wraps modulo r.
  auto w = decode_cnf(parse_bits("111111111"), Cnf3Encoding{3, 1});
  CHECK(w == Cnf3{{Literal{1, true}, Literal{1, true}, Literal{1, true}}});
}

TEST_CASE("decode inverts encode for r, c <= 3") {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned c = 1; c <= (r == 3 ? 2U : 3U); ++c) {
      Cnf3Encoding enc{r, c};
      std::size_t count = 0;
      all_cnfs(r, c, [&](const Cnf3& f) {
        ++count;
        REQUIRE(decode_cnf(encode_cnf(f, enc), enc) == f);
      });
      CHECK(count > 0);
    }
  CHECK_THROWS_AS(encode_cnf({}, Cnf3Encoding{2, 1}), input_error);
}

TEST_CASE("every bit string decodes") {
  Cnf3Encoding enc{3, 1};
  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    auto f = decode_cnf(k, enc);
    for (const auto& cl : f)
      for (const auto& l : cl) CHECK((l.var >= 1 && l.var <= 3));
  }
}

TEST_CASE("evaluation circuit agrees with formula semantics") {
  for (unsigned c = 1; c <= 2; ++c) {
    Cnf3Encoding enc{2, c};
    auto circuit = cnf_eval_circuit(enc);
    CHECK(circuit.num_inputs() == enc.m() + 2);
    for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
      auto f = cnf_formula(decode_cnf(k, enc));
      for (std::uint64_t v = 0; v < 4; ++v) {
        auto model = to_bits(v, 2);
        bool expect = eval_formula(f, {{"x1", model[0]}, {"x2", model[1]}});
        REQUIRE(circuit.evaluate(concat(to_bits(k, static_cast<unsigned>(enc.m())), model))[0] == expect);
      }
    }
  }
  auto one = cnf_eval_circuit(Cnf3Encoding{1, 1});
  CHECK(one.evaluate(parse_bits("1111"))[0]);
  CHECK_FALSE(one.evaluate(parse_bits("1110"))[0]);
}

TEST_CASE("satisfiability helpers agree with brute_sat") {
  Cnf3Encoding enc{2, 2};
  for (std::uint64_t k = 0; k < enc.formula_count(); k += 7) {
    auto f = decode_cnf(k, enc);
    auto formula = cnf_formula(f);
    bool brute = brute_sat(formula).has_value();
    CHECK(cnf_satisfiable(f, 2) == brute);
  }
}
