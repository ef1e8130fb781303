#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"
#include "succinct/ltl.hpp"

using namespace succinct;
using L = LtlFormula;

namespace {

// Unrolled semantics: positions past the lasso fold back into the period.
struct Naive {
  const LassoModel& m;
  std::size_t fold(std::size_t i) const {
    const std::size_t I = m.initial.size(), P = m.period.size();
    return i < I ? i : I + (i - I) % P;
  }
  bool atom(const std::string& name, std::size_t i) const {
    for (std::size_t k = 0; k < m.vars.size(); ++k)
      if (m.vars[k] == name) return m.at(fold(i))[k];
    return false;
  }
  bool eval(const L& f, std::size_t i) const {
    i = fold(i);
    const auto& k = f.children();
    const std::size_t horizon = i + m.length() + 1;
    switch (f.kind()) {
      case LtlKind::Const: return f.value();
      case LtlKind::Atom: return atom(f.name(), i);
      case LtlKind::Not: return !eval(k[0], i);
      case LtlKind::And:
        for (const auto& c : k)
          if (!eval(c, i)) return false;
        return true;
      case LtlKind::Or:
        for (const auto& c : k)
          if (eval(c, i)) return true;
        return false;
      case LtlKind::Implies: return !eval(k[0], i) || eval(k[1], i);
      case LtlKind::Iff: return eval(k[0], i) == eval(k[1], i);
      case LtlKind::Next: return eval(k[0], i + 1);
      case LtlKind::Finally:
        for (std::size_t j = i; j < horizon; ++j)
          if (eval(k[0], j)) return true;
        return false;
      case LtlKind::Globally:
        for (std::size_t j = i; j < horizon; ++j)
          if (!eval(k[0], j)) return false;
        return true;
      case LtlKind::Until:
        for (std::size_t j = i; j < horizon; ++j) {
          if (eval(k[1], j)) return true;
          if (!eval(k[0], j)) return false;
        }
        return false;
    }
    return false;
  }
};

bool naive_eval(const L& f, const LassoModel& m, std::size_t pos = 0) { return Naive{m}.eval(f, pos); }

L random_ltl(std::mt19937_64& rng, int d, const std::vector<std::string>& names) {
  std::uniform_int_distribution<int> pick(0, d <= 0 ? 1 : 11);
  const int c = pick(rng);
  auto sub = [&] { return random_ltl(rng, d - 1, names); };
  switch (c) {
    case 0: return L::atom(names[rng() % names.size()]);
    case 1: return rng() % 5 == 0 ? L::constant(rng() & 1U) : L::atom(names[rng() % names.size()]);
    case 2: return L::negate(sub());
    case 3: return L::conj({sub(), sub()});
    case 4: return L::disj({sub(), sub(), sub()});
    case 5: return L::implies(sub(), sub());
    case 6: return L::iff(sub(), sub());
    case 7: return L::next(sub());
    case 8: return L::finally(sub());
    case 9: return L::globally(sub());
    default: return L::until(sub(), sub());
  }
}

LassoModel random_lasso(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t max_init,
                        std::size_t max_period) {
  LassoModel m;
  m.vars = vars;
  auto state = [&] {
    State s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.push_back(rng() & 1U);
    return s;
  };
  const std::size_t I = rng() % (max_init + 1), P = 1 + rng() % max_period;
  for (std::size_t i = 0; i < I; ++i) m.initial.push_back(state());
  for (std::size_t i = 0; i < P; ++i) m.period.push_back(state());
  return m;
}

// Every lasso with |I| <= max_init and |P| <= max_period over vars, in a fixed order.
template <class Fn>
bool for_each_lasso(const std::vector<std::string>& vars, std::size_t max_init, std::size_t max_period, Fn&& fn) {
  const std::size_t states = std::size_t{1} << vars.size();
  for (std::size_t I = 0; I <= max_init; ++I)
    for (std::size_t P = 1; P <= max_period; ++P) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < I + P; ++i) total *= states;
      for (std::size_t code = 0; code < total; ++code) {
        LassoModel m;
        m.vars = vars;
        std::size_t rest = code;
        for (std::size_t i = 0; i < I + P; ++i) {
          State s = to_bits(rest % states, static_cast<unsigned>(vars.size()));
          rest /= states;
          (i < I ? m.initial : m.period).push_back(s);
        }
        if (fn(m)) return true;
      }
    }
  return false;
}

std::vector<std::string> xs(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

bool same_word(const LassoModel& a, const LassoModel& b) {
  const std::size_t span = 3 * (a.length() + b.length());
  for (std::size_t i = 0; i < span; ++i)
    if (a.at(Naive{a}.fold(i)) != b.at(Naive{b}.fold(i))) return false;
  return true;
}

bool counts_up(const LassoModel& m, std::size_t n) {
  const std::uint64_t mod = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < m.length(); ++i) {
    const auto a = from_bits(m.at(i), 0, n);
    const auto b = from_bits(m.at(Naive{m}.fold(i + 1)), 0, n);
    if (b != (a + 1) % mod) return false;
  }
  return true;
}

Formula random_matrix(std::mt19937_64& rng, int d, const std::vector<std::string>& names) {
  if (d <= 0 || rng() % 4 == 0) {
    Formula a = Formula::atom(names[rng() % names.size()]);
    return rng() & 1U ? a : Formula::negate(a);
  }
  auto sub = [&] { return random_matrix(rng, d - 1, names); };
  switch (rng() % 4) {
    case 0: return Formula::conj({sub(), sub()});
    case 1: return Formula::disj({sub(), sub()});
    case 2: return Formula::iff(sub(), sub());
    default: return Formula::negate(sub());
  }
}

Circuit counter_circuit(std::size_t n, std::uint64_t wrap_from, std::uint64_t wrap_to) {
  CircuitBuilder b("count");
  auto in = b.inputs(xs(n));
  auto up = b.increment(in);
  auto out = b.mux(b.eq_const(in, wrap_from), b.constant_word(wrap_to, n), up);
  std::vector<std::string> outs;
  for (auto& v : xs(n)) outs.push_back(v + "_next");
  b.outputs(outs, out);
  return b.build();
}

} // namespace

TEST_CASE("ltl parser precedence and round trip") {
  CHECK(parse_ltl("X a U b") == L::until(L::next(L::atom("a")), L::atom("b")));
  CHECK(parse_ltl("a U b U c") == L::until(L::until(L::atom("a"), L::atom("b")), L::atom("c")));
  CHECK(parse_ltl("a & b U c") == L::conj({L::atom("a"), L::until(L::atom("b"), L::atom("c"))}));
  CHECK(parse_ltl("a -> b -> c") == L::implies(L::atom("a"), L::implies(L::atom("b"), L::atom("c"))));
  CHECK(parse_ltl("F G !a") == L::finally(L::globally(L::negate(L::atom("a")))));
  CHECK(parse_ltl("Xa") == L::atom("Xa"));
  CHECK(parse_ltl("X(a)") == L::next(L::atom("a")));
  CHECK(parse_ltl("true U Fx") == L::until(L::constant(true), L::atom("Fx")));
  for (const char* bad : {"a U", "(a", "X", "1a", "a &", "U a", "a b"}) CHECK_THROWS_AS(parse_ltl(bad), input_error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    L f = random_ltl(rng, 4, {"a", "b", "c"});
    const std::string s = to_string(f);
    CHECK(parse_ltl(s) == f);
    CHECK(to_string(parse_ltl(s)) == s);
  }
}

TEST_CASE("ltl_eval agrees with unrolled semantics") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    L f = random_ltl(rng, 4, {"a", "b"});
    LassoModel m = random_lasso(rng, {"a", "b"}, 3, 4);
    for (std::size_t p = 0; p < m.length(); ++p) REQUIRE(ltl_eval(f, m, p) == naive_eval(f, m, p));
  }
  LassoModel m{{"a"}, {{true}}, {{false}}};
  CHECK(ltl_eval(L::atom("zz"), m) == false);
  CHECK_THROWS_AS(ltl_eval(L::atom("a"), m, 2), input_error);
  CHECK_THROWS_AS(ltl_eval(L::atom("a"), LassoModel{{"a"}, {{true}}, {}}), input_error);
}

TEST_CASE("F and G agree with their until forms") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    L g = random_ltl(rng, 3, {"a", "b"});
    LassoModel m = random_lasso(rng, {"a", "b"}, 3, 4);
    CHECK(ltl_eval(L::finally(g), m) == ltl_eval(L::until(L::constant(true), g), m));
    CHECK(ltl_eval(L::globally(g), m) == ltl_eval(L::negate(L::finally(L::negate(g))), m));
  }
}

TEST_CASE("canonicalize keeps the word and is minimal") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    LassoModel m = random_lasso(rng, {"a"}, 4, 6);
    if (rng() & 1U) {
      auto p = m.period;
      m.period.insert(m.period.end(), p.begin(), p.end());
    }
    LassoModel c = canonicalize(m);
    CHECK(same_word(m, c));
    CHECK(canonicalize(c) == c);
    CHECK(c.length() <= m.length());
    if (!c.initial.empty()) CHECK(c.initial.back() != c.period.back());
    // no shorter lasso spells the same word
    bool shorter = for_each_lasso({"a"}, c.initial.size(), c.period.size(), [&](const LassoModel& o) {
      return o.length() < c.length() && same_word(o, c);
    });
    CHECK_FALSE(shorter);
  }
}

TEST_CASE("counter formula models are exactly the counting words") {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint64_t start = 0; start < (std::uint64_t{1} << n); ++start) {
      CHECK(ltl_eval(count_formula(n), lexicographic_model(n, start)));
      CHECK(ltl_eval(count_formula(n), lexicographic_model(n, start, {{"e", true}, {"f", false}})));
    }
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + rng() % 3;
    LassoModel m;
    if (rng() % 2) {
      m = lexicographic_model(n, rng() % (1U << n));
      auto& s = m.period[rng() % m.period.size()];
      const auto k = rng() % n;
      s[k] = !s[k];
      if (rng() % 2) m.initial.push_back(m.period.back());
    } else {
      m = random_lasso(rng, xs(n), 2, 8);
    }
    CHECK(ltl_eval(count_formula(n), m) == counts_up(m, n));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<L> start{count_formula(n)};
    for (auto& v : xs(n)) start.push_back(L::negate(L::atom(v)));
    auto found = find_model(L::conj(start));
    REQUIRE(found);
    CHECK(*found == canonicalize(lexicographic_model(n, 0)));
  }
  CHECK(ltl_eval(L::globally(count_step({"p", "q"}, 2)),
                 LassoModel{{"p", "q"}, {}, {{false, false}, {false, true}, {false, true}, {true, false},
                                              {true, false}, {true, true}, {true, true}, {false, false}}}));
}

TEST_CASE("qbf reduction to the counter model") {
  Qbf q;
  q.prefix = {{Quantifier::Exists, {"u", "v"}}, {Quantifier::Forall, {"w"}}};
  q.matrix = parse_formula("u | w");
  Qbf r = reindex_for_ltl(q);
  REQUIRE(r.prefix.size() == 3);
  CHECK(r.prefix[0].vars == std::vector<std::string>{"x5"});
  CHECK(r.prefix[1].vars == std::vector<std::string>{"x3"});
  CHECK(r.prefix[2].vars == std::vector<std::string>{"x1"});
  CHECK(r.matrix == parse_formula("x5 | x1"));
  CHECK(qbf_to_ltl(r).vars == std::vector<std::string>{"x6", "x5", "x4", "x3", "x2", "x1"});
  CHECK_THROWS_AS(qbf_to_ltl(q), input_error);

  std::mt19937_64 rng(15);
  int valid_count = 0;
  for (int i = 0; i < 120; ++i) {
    const std::size_t m = 1 + rng() % 3;
    Qbf g;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < m; ++k) {
      names.push_back("v" + std::to_string(k));
      g.prefix.push_back({rng() & 1U ? Quantifier::Exists : Quantifier::Forall, {names.back()}});
    }
    g.matrix = random_matrix(rng, 3, names);
    const bool valid = qbf_brute_valid(g);
    valid_count += valid;
    LtlReduction red = qbf_to_ltl(reindex_for_ltl(g));
    const LassoModel lex = lexicographic_model(red.vars, 0);
    CHECK(ltl_eval(red.formula, lex) == valid);
    CHECK(ltl_eval(red.sat_formula, lex) == valid);
    if (m == 1) {
      auto found = find_model(red.sat_formula);
      CHECK(found.has_value() == valid);
    }
  }
  CHECK(valid_count > 10);
  CHECK(valid_count < 110);
}

TEST_CASE("find_model is sound and finds every small model") {
  CHECK(find_model(parse_ltl("a & G !a")) == std::nullopt);
  CHECK(find_model(parse_ltl("F a & G !a")) == std::nullopt);
  CHECK(find_model(parse_ltl("false")) == std::nullopt);
  auto alt = find_model(parse_ltl("a & G(a -> X !a) & G(!a -> X a)"));
  REQUIRE(alt);
  CHECK(alt->period.size() == 2);
  CHECK(find_model(parse_ltl("G F a & G F !a")));
  CHECK(find_model(parse_ltl("true"))->length() == 1);

  std::mt19937_64 rng(16);
  for (int i = 0; i < 250; ++i) {
    L f = random_ltl(rng, 3, {"a", "b"});
    std::optional<LassoModel> found;
    try {
      found = find_model(f);
    } catch (const cap_exceeded&) {
      continue;
    }
    const std::vector<std::string> vars = atoms(f);
    if (found) {
      CHECK(found->vars == vars);
      CHECK(naive_eval(f, *found));
      CHECK(canonicalize(*found) == *found);
    } else {
      CHECK_FALSE(for_each_lasso(vars, 2, 2, [&](const LassoModel& m) { return naive_eval(f, m); }));
    }
  }
  CHECK_THROWS_AS(find_model(count_formula(6)), cap_exceeded);
}

TEST_CASE("succinct lassos: expansion and both check modes") {
  SuccinctLasso ss;
  ss.kind = LassoKind::SS;
  ss.vars = xs(3);
  ss.circuit = counter_circuit(3, 7, 2);
  ss.n_init = 2;
  ss.n_period = 6;
  ss.s0 = State(3, false);
  LassoModel m = expand(ss);
  CHECK(m.initial.size() == 2);
  CHECK(m.period.size() == 6);
  CHECK(from_bits(m.period.front()) == 2);
  CHECK(from_bits(m.period.back()) == 7);

  SuccinctLasso bad = ss;
  bad.n_period = 5;
  CHECK_THROWS_AS(expand(bad), input_error);
  bad = ss;
  bad.n_period = 7;
  CHECK_THROWS_AS(expand(bad), input_error);
  CHECK_THROWS_AS(expand(ss, 4), cap_exceeded);

  // time/state lasso spelling the same word
  SuccinctLasso ts;
  ts.kind = LassoKind::TS;
  ts.vars = xs(3);
  ts.circuit = counter_circuit(3, 7, 7).renamed("ts", {"t1", "t2", "t3"}, {"o1", "o2", "o3"});
  ts.n_init = 1;
  ts.n_period = 7;
  CHECK(expand(ts).period.size() == 7);
  CHECK(from_bits(expand(ts).initial.front()) == 1);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    L f = random_ltl(rng, 3, {"x1", "x2", "x3", "q"});
    for (const auto* lasso : {&ss, &ts}) {
      const bool e = check_succinct_model(f, *lasso, CheckMode::Expand);
      CHECK(e == naive_eval(f, expand(*lasso)));
      CHECK(e == check_succinct_model(f, *lasso, CheckMode::Conjoin));
    }
  }
  // gate names clash with formula atoms
  const std::string gate = ss.circuit.variable_name(static_cast<std::uint32_t>(ss.circuit.num_inputs()));
  L clash = L::globally(L::negate(L::atom(gate)));
  CHECK(check_succinct_model(clash, ss, CheckMode::Conjoin) == check_succinct_model(clash, ss, CheckMode::Expand));
}

namespace {

PlanSeqRepr ss_sequence(std::size_t n, std::uint64_t start, std::uint64_t N) {
  PlanSeqRepr r;
  r.kind = SeqKind::SS;
  r.vars = xs(n);
  r.s0 = to_bits(start, static_cast<unsigned>(n));
  r.N = N;
  r.circuit = counter_circuit(n, (std::uint64_t{1} << n) - 1, 0);
  return r;
}

PlanSeqRepr ts_sequence(std::size_t n, std::uint64_t N, unsigned w) {
  PlanSeqRepr r;
  r.kind = SeqKind::TS;
  r.vars = xs(n);
  r.N = N;
  CircuitBuilder b("ts");
  std::vector<std::string> t;
  for (unsigned i = 1; i <= w; ++i) t.push_back("t" + std::to_string(i));
  auto in = b.inputs(t);
  CircuitBuilder::Word out;
  // Gray code of the low n time bits
  const std::size_t low = w - n;
  for (std::size_t k = 0; k < n; ++k) out.push_back(k == 0 ? in[low] : b.xor_(in[low + k - 1], in[low + k]));
  std::vector<std::string> outs;
  for (auto& v : xs(n)) outs.push_back(v + "_at");
  b.outputs(outs, out);
  r.circuit = b.build();
  r.s0 = r.circuit.evaluate(State(w, false));
  return r;
}

void check_embedding(const PlanSeqRepr& s1) {
  UniqueModelEmbedding e = embed_unique_model(s1);
  const auto states = expand(s1).states;
  CHECK(e.lasso.n_init == 2 * s1.N + 1);
  CHECK(e.lasso.n_period == 1);
  const LassoModel m = expand(e.lasso);
  CHECK(ltl_eval(e.formula, m));
  CHECK(naive_eval(e.formula, m));
  StateList all = m.initial;
  all.insert(all.end(), m.period.begin(), m.period.end());
  CHECK(expands_check(s1.vars, states, m.vars, divide(all, 2)));
  CHECK(check_succinct_model(e.formula, e.lasso, CheckMode::Conjoin));
}

} // namespace

TEST_CASE("unique model embedding") {
  for (std::uint64_t N = 0; N <= 6; ++N) check_embedding(ss_sequence(3, 1, N));
  for (std::uint64_t N = 0; N <= 6; ++N) check_embedding(ts_sequence(3, N, 3));
  check_embedding(ts_sequence(2, 2, 4));
  CHECK_THROWS_AS(embed_unique_model(ss_sequence(1, 0, 3)), input_error);

  // the embedded lasso is the only model among all short lassos
  for (auto s1 : {ss_sequence(1, 0, 1), ts_sequence(1, 1, 1)}) {
    UniqueModelEmbedding e = embed_unique_model(s1);
    const LassoModel want = canonicalize(expand(e.lasso));
    REQUIRE(e.lasso.vars.size() == 3);
    int models = 0;
    for_each_lasso(e.lasso.vars, 4, 1, [&](const LassoModel& m) {
      if (ltl_eval(e.formula, m)) {
        ++models;
        CHECK(same_word(m, want));
      }
      return false;
    });
    CHECK(models >= 1);
    for_each_lasso(e.lasso.vars, 1, 4, [&](const LassoModel& m) {
      if (ltl_eval(e.formula, m)) CHECK(same_word(m, want));
      return false;
    });
  }
}

TEST_CASE("divide and expands_check") {
  StateList s{{false}, {true}, {false}, {true}, {true}};
  CHECK(divide(s, 2) == StateList{{false}, {false}, {true}});
  CHECK(divide(s, 1) == s);
  CHECK(divide(s, 7) == StateList{{false}});
  CHECK_THROWS_AS(divide(s, 0), input_error);
  CHECK(expands_check({"a"}, {{true}, {false}}, {"b", "a"}, {{false, true}, {false, false}}));
  CHECK_FALSE(expands_check({"a"}, {{true}, {false}}, {"b", "a"}, {{true, true}, {false, false}}));
  CHECK_FALSE(expands_check({"a"}, {{true}}, {"b"}, {{true}}));
  CHECK_FALSE(expands_check({"a"}, {{true}}, {"a"}, {{true}, {true}}));
}

TEST_CASE("worked examples") {
  const L x = L::atom("x"), a = L::atom("a"), b = L::atom("b");
  CHECK(ltl_eval(L::globally(L::finally(x)), LassoModel{{"x"}, {}, {{true}}}));
  for (const State& tail : {State{false, false}, State{true, true}})
    CHECK(ltl_eval(L::until(a, b), LassoModel{{"a", "b"}, {{true, false}, {true, false}, {false, true}}, {tail}}));
  CHECK(ltl_eval(L::conj({L::negate(a), L::next(L::negate(a)), L::next(a, 2), L::next(a, 3)}),
                 LassoModel{{"a"}, {{false}, {false}, {true}}, {{true}}}));

  // states a, b, c over two bits
  const State sa{false, false}, sb{false, true}, sc{true, false};
  const std::vector<std::string> v2{"p", "q"};
  CHECK(canonicalize(LassoModel{v2, {sa, sb}, {sc, sb}}) == LassoModel{v2, {sa}, {sb, sc}});
  CHECK(canonicalize(LassoModel{v2, {sa}, {sb, sc, sb, sc}}) == LassoModel{v2, {sa}, {sb, sc}});
  CHECK(canonicalize(LassoModel{v2, {sa}, {sb, sc}}) == LassoModel{v2, {sa}, {sb, sc}});

  CHECK(count_formula(1) == L::globally(L::differs(L::atom("x1"), L::next(L::atom("x1")))));
  CHECK(lexicographic_model(2, 0).period == std::vector<State>{{false, false}, {false, true}, {true, false}, {true, true}});
  CHECK(lexicographic_model(1, 0).period == std::vector<State>{{false}, {true}});
  CHECK_FALSE(ltl_eval(count_formula(2), LassoModel{xs(2), {}, {{false, false}}}));
  CHECK_THROWS_AS(lexicographic_model(2, 4), input_error);

  Qbf all1{{{Quantifier::Forall, {"x1"}}}, parse_formula("x1 | !x1")};
  CHECK(qbf_to_ltl(all1).formula == L::until(L::from_formula(all1.matrix), L::atom("x2")));
  Qbf ex1{{{Quantifier::Exists, {"x1"}}}, parse_formula("x1")};
  CHECK(qbf_to_ltl(ex1).formula == L::negate(L::until(L::negate(L::atom("x1")), L::atom("x2"))));
  Qbf q3{{{Quantifier::Forall, {"x3"}}, {Quantifier::Exists, {"x1"}}}, parse_formula("x3 | x1")};
  CHECK(ltl_eval(qbf_to_ltl(q3).formula, lexicographic_model(qbf_to_ltl(q3).vars, 0)));

  auto only_x = find_model(x);
  REQUIRE(only_x);
  CHECK(*only_x == LassoModel{{"x"}, {}, {{true}}});
  CHECK(find_model(L::conj({x, L::negate(x)})) == std::nullopt);
  auto both = find_model(parse_ltl("G F x & G F !x"));
  REQUIRE(both);
  CHECK(std::count(both->period.begin(), both->period.end(), State{true}) >= 1);
  CHECK(std::count(both->period.begin(), both->period.end(), State{false}) >= 1);

  SuccinctLasso ones;
  ones.kind = LassoKind::SS;
  ones.vars = {"x"};
  {
    CircuitBuilder cb("one");
    cb.input("x");
    cb.output("x_next", cb.constant(true));
    ones.circuit = cb.build();
  }
  ones.s0 = {true};
  SuccinctLasso inc;
  inc.kind = LassoKind::SS;
  inc.vars = xs(2);
  inc.circuit = counter_circuit(2, 3, 0);
  inc.n_period = 4;
  inc.s0 = {false, false};
  SuccinctLasso flip = inc;
  flip.vars = {"x", "w"};
  for (auto mode : {CheckMode::Expand, CheckMode::Conjoin}) {
    CHECK(check_succinct_model(L::globally(L::finally(x)), ones, mode));
    CHECK(check_succinct_model(count_formula(2), inc, mode));
    CHECK_FALSE(check_succinct_model(L::globally(x), flip, mode));
  }

  PlanSeqRepr single = ss_sequence(2, 1, 0);
  UniqueModelEmbedding e = embed_unique_model(single);
  CHECK(expand(e.lasso).length() == 2);
  CHECK(ltl_eval(e.formula, expand(e.lasso)));
  check_embedding(ss_sequence(2, 0, 2));
}
