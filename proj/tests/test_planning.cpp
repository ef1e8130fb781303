#include <chrono>
#include <deque>
#include <map>
#include <random>

#include "doctest.h"
#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"
#include "succinct/planning.hpp"

using namespace succinct;

namespace {

std::vector<std::string> names(const std::string& p, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(p + std::to_string(i));
  return out;
}

Action table_action(const std::string& name, std::size_t n, const std::vector<std::uint64_t>& table) {
  auto vars = names("v", n);
  std::vector<std::string> outs;
  for (auto& v : vars) outs.push_back(v + "_next");
  return {name, truth_table_circuit(name, vars, outs, [&](const Bits& x) {
            return to_bits(table[from_bits(x)], static_cast<unsigned>(n));
          })};
}

std::vector<std::uint64_t> counter_table(std::size_t n, int delta) {
  std::vector<std::uint64_t> t(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < t.size(); ++v) t[v] = (v + t.size() + delta) % t.size();
  return t;
}

PolyplanInstance counter(std::size_t n) {
  PolyplanInstance inst;
  inst.vars = names("v", n);
  inst.init = State(n, false);
  inst.goal = State(n, true);
  inst.actions.push_back(table_action("inc", n, counter_table(n, 1)));
  return inst;
}

// Shortest distance from init to goal over explicit successor tables.
std::optional<std::size_t> table_distance(std::uint64_t init, std::uint64_t goal,
                                          const std::vector<std::vector<std::uint64_t>>& tables, std::size_t states) {
  std::vector<int> dist(states, -1);
  dist[init] = 0;
  std::deque<std::uint64_t> q{init};
  while (!q.empty()) {
    auto v = q.front();
    q.pop_front();
    if (v == goal) return static_cast<std::size_t>(dist[v]);
    for (const auto& t : tables)
      if (dist[t[v]] < 0) {
        dist[t[v]] = dist[v] + 1;
        q.push_back(t[v]);
      }
  }
  return std::nullopt;
}

Formula formula_from_table(const std::vector<std::string>& vars, std::uint32_t table) {
  std::vector<Formula> minterms;
  for (std::uint32_t row = 0; row < (1U << vars.size()); ++row) {
    if (!((table >> row) & 1U)) continue;
    std::vector<Formula> lits;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      bool bit = (row >> (vars.size() - 1 - i)) & 1U;
      lits.push_back(bit ? Formula::atom(vars[i]) : Formula::negate(Formula::atom(vars[i])));
    }
    minterms.push_back(Formula::conj(lits));
  }
  if (minterms.empty()) return Formula::constant(false);
  return Formula::disj(minterms);
}

Qbf exists_forall(std::vector<std::string> xs, std::vector<std::string> ys, Formula e) {
  return Qbf{{{Quantifier::Exists, std::move(xs)}, {Quantifier::Forall, std::move(ys)}}, std::move(e)};
}

} // namespace

TEST_CASE("apply_action") {
  auto inst = counter(2);
  CHECK(apply_action(parse_bits("00"), inst.actions[0]) == parse_bits("01"));
  CHECK(apply_action(parse_bits("11"), inst.actions[0]) == parse_bits("00"));
  auto id = table_action("id", 2, {0, 1, 2, 3});
  CHECK(apply_action(parse_bits("10"), id) == parse_bits("10"));
  auto k = table_action("k", 2, {2, 2, 2, 2});
  CHECK(apply_action(parse_bits("01"), k) == parse_bits("10"));
  CHECK_THROWS_AS(apply_action(parse_bits("010"), id), input_error);
}

TEST_CASE("simulate explicit plans") {
  auto inst = counter(2);
  CHECK(simulate(inst, Plan{0, 0, 0}).valid);

  auto v = simulate(inst, Plan{0, 0, 0, 0});
  CHECK_FALSE(v.valid);
  CHECK(v.step == 4);
  CHECK(v.reason == FailureReason::Repetition);

  SimulationOptions loose;
  loose.check_repetition = false;
  v = simulate(inst, Plan{0, 0, 0, 0}, loose);
  CHECK(v.reason == FailureReason::GoalMiss);
  CHECK(v.step == 4);

  v = simulate(inst, Plan{0, 3});
  CHECK(v.reason == FailureReason::BadActionIndex);
  CHECK(v.step == 1);

  v = simulate(inst, Plan{0});
  CHECK(v.reason == FailureReason::GoalMiss);

  auto same = inst;
  same.goal = same.init;
  CHECK(simulate(same, Plan{}).valid);

  auto predicate = inst;
  CircuitBuilder b("goal");
  auto s = b.inputs(inst.vars);
  b.output("ok", s[0]);
  predicate.goal_circuit = b.build();
  CHECK(simulate(predicate, Plan{0, 0}).valid);
  CHECK_FALSE(simulate(predicate, Plan{0}).valid);
}

TEST_CASE("simulate representations") {
  auto inst = counter(3);
  PlanSeqRepr r;
  r.vars = inst.vars;
  r.s0 = inst.init;
  r.actions = inst.actions;
  r.N = 7;

  r.kind = SeqKind::SS;
  r.circuit = inst.actions[0].circuit;
  SimulationStats stats;
  CHECK(simulate(inst, r, {}, &stats).valid);
  CHECK(stats.peak_states <= 2);

  r.kind = SeqKind::TS;
  r.circuit = truth_table_circuit("ts", names("t", 3), inst.vars, [](const Bits& t) { return t; });
  CHECK(simulate(inst, r, {}, &stats).valid);
  CHECK(stats.peak_states <= 2);

  r.kind = SeqKind::TA;
  r.circuit = truth_table_circuit("ta", names("t", 3), {"a1"}, [](const Bits&) { return Bits{false}; });
  CHECK(simulate(inst, r).valid);
  r.kind = SeqKind::SA;
  r.circuit = truth_table_circuit("sa", inst.vars, {"a1"}, [](const Bits&) { return Bits{false}; });
  CHECK(simulate(inst, r).valid);
  r.circuit = truth_table_circuit("sa", inst.vars, {"a1"}, [](const Bits&) { return Bits{true}; });
  auto v = simulate(inst, r);
  CHECK(v.reason == FailureReason::BadActionIndex);
  CHECK(v.step == 0);

  // 000, 010, ... skips states the action cannot reach
  r.kind = SeqKind::TS;
  r.N = 3;
  r.circuit = truth_table_circuit("ts", names("t", 3), inst.vars, [](const Bits& t) {
    return to_bits(2 * from_bits(t) % 8, 3);
  });
  v = simulate(inst, r);
  CHECK(v.reason == FailureReason::NoWitness);
  CHECK(v.step == 0);

  r.kind = SeqKind::SS;
  r.s0 = parse_bits("001");
  r.circuit = inst.actions[0].circuit;
  CHECK(simulate(inst, r).reason == FailureReason::InitMismatch);
}

TEST_CASE("streaming retains two states") {
  auto inst = gen_long_plan_instance(254);
  REQUIRE(inst.width() == 8);
  Plan plan(255, 0);
  SimulationStats stats;
  CHECK(simulate(inst, plan, {}, &stats).valid);
  CHECK(stats.peak_states == 2);
  CHECK(stats.evaluations == 255 + 255 * 256 / 2);
}

TEST_CASE("search_plan") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto p = search_plan(counter(n));
    REQUIRE(p);
    CHECK(p->size() == (std::size_t{1} << n) - 1);
  }
  auto same = counter(2);
  same.goal = same.init;
  CHECK(search_plan(same)->empty());

  auto stuck = counter(2);
  stuck.actions = {table_action("k", 2, {1, 1, 1, 1})};
  CHECK_FALSE(search_plan(stuck));

  // tie-break: both actions reach the goal in one step; the first wins
  auto two = counter(2);
  two.actions = {table_action("p", 2, {3, 3, 3, 3}), table_action("q", 2, {3, 0, 0, 0})};
  CHECK(*search_plan(two) == Plan{0});
  std::swap(two.actions[0], two.actions[1]);
  CHECK(*search_plan(two) == Plan{0});
  CHECK(two.actions[0].name == "q");

  CHECK_THROWS_AS(search_plan(counter(3), 2), cap_exceeded);
}

TEST_CASE("search_plan agrees with table reachability") {
  std::mt19937_64 rng(17);
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t states = std::size_t{1} << n;
    const std::size_t na = 1 + rng() % 3;
    std::vector<std::vector<std::uint64_t>> tables(na, std::vector<std::uint64_t>(states));
    PolyplanInstance inst;
    inst.vars = names("v", n);
    for (std::size_t a = 0; a < na; ++a) {
      for (auto& x : tables[a]) x = rng() % states;
      inst.actions.push_back(table_action("a" + std::to_string(a), n, tables[a]));
    }
    const std::uint64_t init = rng() % states, goal = rng() % states;
    inst.init = to_bits(init, static_cast<unsigned>(n));
    inst.goal = to_bits(goal, static_cast<unsigned>(n));
    auto expected = table_distance(init, goal, tables, states);
    auto plan = search_plan(inst);
    REQUIRE(plan.has_value() == expected.has_value());
    if (!plan) continue;
    ++found;
    CHECK(plan->size() == *expected);
    CHECK(simulate(inst, *plan).valid);
  }
  CHECK(found > 20);
}

TEST_CASE("all_plans") {
  auto inst = counter(3);
  CHECK(all_plans(inst).size() == 1);
  inst.actions.push_back(table_action("dec", 3, counter_table(3, -1)));
  // up seven times or down once
  auto plans = all_plans(inst);
  CHECK(plans.size() == 2);
  for (const auto& p : plans) CHECK(simulate(inst, p).valid);
}

TEST_CASE("gen_long_plan_instance") {
  auto i0 = gen_long_plan_instance(0);
  CHECK(i0.width() == 1);
  CHECK(search_plan(i0)->size() == 1);
  auto i6 = gen_long_plan_instance(6);
  CHECK(i6.width() == 3);
  CHECK(search_plan(i6)->size() == 7);
  for (std::uint64_t k = 0; k < 40; ++k) CHECK(search_plan(gen_long_plan_instance(k))->size() >= k + 1);
  CHECK(gen_long_plan_instance(4094).width() == 12);
  CHECK(gen_long_plan_instance(4095).width() == 13);
}

TEST_CASE("bounded_succinct_plan_exists") {
  auto single = counter(2);
  auto ta = bounded_succinct_plan_exists(single, 0, SeqKind::TA);
  REQUIRE(ta);
  CHECK(ta->circuit.size() == 0);
  CHECK(ta->N == 3);

  auto inst = gen_long_plan_instance(0);
  CHECK(inst.actions[0].circuit.size() == 2);
  // the constant 1 already agrees with inc on the only visited state
  auto ss = bounded_succinct_plan_exists(inst, 0, SeqKind::SS);
  REQUIRE(ss);
  CHECK(ss->N == 1);
  CHECK(ss->circuit.evaluate(parse_bits("0")) == inst.actions[0].circuit.evaluate(parse_bits("0")));
  auto bigger = bounded_succinct_plan_exists(inst, 2, SeqKind::SS);
  REQUIRE(bigger);
  CHECK(bigger->circuit == ss->circuit);

  auto long3 = gen_long_plan_instance(3);
  CHECK_FALSE(bounded_succinct_plan_exists(long3, 0, SeqKind::TS));
  CHECK_FALSE(bounded_succinct_plan_exists(long3, 0, SeqKind::SS));
  // one action: a constant index designates it at every step
  CHECK(bounded_succinct_plan_exists(long3, 0, SeqKind::TA));
  CHECK(bounded_succinct_plan_exists(long3, 0, SeqKind::SA));
}

TEST_CASE("bounded search agrees with expansion over all circuits") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2;
    PolyplanInstance inst;
    inst.vars = names("v", n);
    for (int a = 0; a < 2; ++a) {
      std::vector<std::uint64_t> t(4);
      for (auto& x : t) x = rng() % 4;
      inst.actions.push_back(table_action("a" + std::to_string(a), n, t));
    }
    inst.init = to_bits(rng() % 4, 2);
    inst.goal = to_bits(rng() % 4, 2);
    for (auto kind : {SeqKind::TS, SeqKind::SS, SeqKind::TA, SeqKind::SA}) {
      const std::size_t k = 2;
      auto got = bounded_succinct_plan_exists(inst, k, kind);
      if (got) CHECK(simulate(inst, *got).valid);
      // oracle: expand every candidate with the sequence validator
      const bool timed = kind == SeqKind::TS || kind == SeqKind::TA;
      const bool indexed = kind == SeqKind::TA || kind == SeqKind::SA;
      std::vector<std::string> outs = indexed ? names("a", 1) : inst.vars;
      if (kind == SeqKind::SS) outs = {"v1_next", "v2_next"};
      bool any = false;
      for (const auto& c : enumerate_circuits(timed ? names("t", n) : inst.vars, outs, k)) {
        for (std::uint64_t N = 0; N < 4 && !any; ++N) {
          PlanSeqRepr r{kind, inst.vars, inst.init, inst.actions, N, c};
          auto trace = expand(r);
          if (trace.states.front() != inst.init || trace.states.back() != inst.goal) continue;
          if (validate(r).valid) any = true;
        }
        if (any) break;
      }
      CHECK(got.has_value() == any);
    }
  }
}

TEST_CASE("gen_qbf_instance examples") {
  auto x = Formula::atom("x"), y = Formula::atom("y");
  auto valid = gen_qbf_instance(exists_forall({"x"}, {"y"}, Formula::disj({x, y})));
  CHECK(valid.vars == std::vector<std::string>{"g", "z1", "x", "y"});
  CHECK(valid.init == parse_bits("0000"));
  CHECK(valid.goal == parse_bits("1000"));
  auto plan = search_plan(valid);
  REQUIRE(plan);
  CHECK(simulate(valid, *plan).valid);
  std::vector<std::string> used;
  for (auto a : *plan) used.push_back(valid.actions[a].name);
  CHECK(used == std::vector<std::string>{"settrue", "move", "last"});

  CHECK_FALSE(search_plan(gen_qbf_instance(exists_forall({"x"}, {"y"}, Formula::conj({x, y})))));
  CHECK_THROWS_AS(gen_qbf_instance(Qbf{{{Quantifier::Forall, {"x"}}}, x}), input_error);

  // names colliding with the auxiliary variables are kept apart
  auto g = gen_qbf_instance(exists_forall({"g"}, {"z1"}, Formula::disj({Formula::atom("g"), Formula::atom("z1")})));
  CHECK(g.vars == std::vector<std::string>{"_g", "_z1", "g", "z1"});
  CHECK(search_plan(g));
}

TEST_CASE("gen_qbf_instance matches brute-force validity") {
  std::mt19937 rng(2024);
  const std::vector<std::string> xs{"x1", "x2"}, ys{"y1", "y2"};
  std::vector<std::string> all{"x1", "x2", "y1", "y2"};
  int valid = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // bias toward dense tables so that both outcomes occur
    std::uint32_t table = rng() & 0xFFFF;
    if (trial % 2) table |= rng() & 0xFFFF;
    auto q = exists_forall(xs, ys, formula_from_table(all, table));
    const bool expected = qbf_brute_valid(q);
    valid += expected;
    auto inst = gen_qbf_instance(q);
    auto plan = search_plan(inst);
    CHECK(plan.has_value() == expected);
    if (plan) CHECK(simulate(inst, *plan).valid);
  }
  CHECK(valid > 5);
  CHECK(valid < 95);
}

TEST_CASE("gen_unique_plan_instance") {
  const unsigned r = 2, c = 1;
  const Cnf3Encoding enc{r, c};
  auto inst = gen_unique_plan_instance(r, c);
  CHECK(inst.width() == 3 + enc.m() + r);
  const std::size_t sat = 0, unsat = 1;

  // successor of <0,0,0,F,M0> under sat is <1,1,0,F,M0>
  for (std::uint64_t k = 0; k < enc.formula_count(); k += 7) {
    State open = concat(concat(Bits{false, false, false}, to_bits(k, static_cast<unsigned>(enc.m()))), to_bits(0, r));
    State expect = open;
    expect[0] = expect[1] = true;
    CHECK(apply_action(open, inst.actions[sat]) == expect);
    expect[1] = false;
    CHECK(apply_action(open, inst.actions[unsat]) == expect);
  }

  auto plans = all_plans(inst);
  REQUIRE(plans.size() == 1);
  const auto& plan = plans[0];
  CHECK(plan.size() == enc.formula_count() * ((1U << r) + 1) - 1);
  CHECK(simulate(inst, plan).valid);
  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    const bool expected = brute_sat(cnf_formula(decode_cnf(k, enc))).has_value();
    const auto action = plan[unique_plan_chunk_opening(enc, k)];
    CHECK_MESSAGE((action == sat) == expected, "formula " << k);
    CHECK((action == sat || action == unsat));
  }
  CHECK(*search_plan(inst) == plan);
}

TEST_CASE("gen_unique_plan_instance small encodings") {
  for (unsigned r : {1U, 3U}) {
    const Cnf3Encoding enc{r, 1};
    if (3 + enc.m() + r > 16) continue;
    auto inst = gen_unique_plan_instance(r, 1);
    auto plans = all_plans(inst);
    REQUIRE(plans.size() == 1);
    for (std::uint64_t k = 0; k < enc.formula_count(); ++k)
      CHECK((plans[0][unique_plan_chunk_opening(enc, k)] == 0) == cnf_satisfiable(decode_cnf(k, enc), r));
  }
}
