#include "succinct/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "succinct/circuit_builder.hpp"
#include "succinct/cnf.hpp"
#include "succinct/error.hpp"
#include "succinct/ltl.hpp"
#include "succinct/planning.hpp"
#include "succinct/qbf.hpp"
#include "succinct/sequences.hpp"

namespace succinct {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;
using L = LtlFormula;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool passed = false;
  std::string detail;
  std::optional<double> timed = std::nullopt;  // seconds of the timed part, when not the whole run
};

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Row i of the table is the assignment whose big-endian bits over vars are i.
Formula formula_from_table(const std::vector<std::string>& vars, std::uint64_t table) {
  std::vector<Formula> minterms;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << vars.size()); ++row) {
    if (!((table >> row) & 1U)) continue;
    std::vector<Formula> lits;
    const Bits bits = to_bits(row, static_cast<unsigned>(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i)
      lits.push_back(bits[i] ? Formula::atom(vars[i]) : Formula::negate(Formula::atom(vars[i])));
    minterms.push_back(Formula::conj(std::move(lits)));
  }
  return Formula::disj(std::move(minterms));
}

Quantifier other(Quantifier q) { return q == Quantifier::Forall ? Quantifier::Exists : Quantifier::Forall; }

// Prefixes with at most two alternating blocks over vars in order.
std::vector<std::vector<QuantBlock>> prefixes(const std::vector<std::string>& vars) {
  std::vector<std::vector<QuantBlock>> out;
  for (auto q : {Quantifier::Forall, Quantifier::Exists}) {
    out.push_back({{q, vars}});
    for (std::size_t split = 1; split < vars.size(); ++split)
      out.push_back({{q, {vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(split)}},
                     {other(q), {vars.begin() + static_cast<std::ptrdiff_t>(split), vars.end()}}});
  }
  return out;
}

bool brute_formula_sat(const Cnf3Encoding& enc, std::uint64_t k) {
  return brute_sat(cnf_formula(decode_cnf(k, enc))).has_value();
}

// LTL by unrolling: positions past the lasso fold back into the period, and
// temporal operators scan one full lasso length ahead.
struct NaiveLtl {
  const LassoModel& m;
  std::size_t fold(std::size_t i) const {
    const std::size_t I = m.initial.size();
    return i < I ? i : I + (i - I) % m.period.size();
  }
  bool eval(const L& f, std::size_t i) const {
    i = fold(i);
    const auto& k = f.children();
    const std::size_t horizon = i + m.length() + 1;
    switch (f.kind()) {
      case LtlKind::Const: return f.value();
      case LtlKind::Atom:
        for (std::size_t v = 0; v < m.vars.size(); ++v)
          if (m.vars[v] == f.name()) return m.at(i)[v];
        return false;
      case LtlKind::Not: return !eval(k[0], i);
      case LtlKind::And: return std::all_of(k.begin(), k.end(), [&](const L& c) { return eval(c, i); });
      case LtlKind::Or: return std::any_of(k.begin(), k.end(), [&](const L& c) { return eval(c, i); });
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

bool naive_eval(const L& f, const LassoModel& m, std::size_t pos = 0) { return NaiveLtl{m}.eval(f, pos); }

L random_ltl(Rng& rng, int depth, const std::vector<std::string>& names) {
  const auto c = depth <= 0 ? rng() % 2 : rng() % 12;
  auto sub = [&] { return random_ltl(rng, depth - 1, names); };
  switch (c) {
    case 0: return L::atom(names[rng() % names.size()]);
    case 1: return rng() % 6 == 0 ? L::constant(rng() & 1U) : L::atom(names[rng() % names.size()]);
    case 2: return L::negate(sub());
    case 3: return L::conj({sub(), sub()});
    case 4: return L::disj({sub(), sub()});
    case 5: return L::implies(sub(), sub());
    case 6: return L::iff(sub(), sub());
    case 7: return L::next(sub());
    case 8: return L::finally(sub());
    case 9: return L::globally(sub());
    default: return L::until(sub(), sub());
  }
}

State random_state(Rng& rng, std::size_t n) {
  State s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(rng() & 1U);
  return s;
}

// Does any lasso with |initial| <= max_init and |period| <= max_period satisfy f?
bool naive_lasso_search(const L& f, const std::vector<std::string>& vars, std::size_t max_init,
                        std::size_t max_period) {
  const std::size_t states = std::size_t{1} << vars.size();
  for (std::size_t I = 0; I <= max_init; ++I)
    for (std::size_t P = 1; P <= max_period; ++P) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < I + P; ++i) total *= states;
      LassoModel m;
      m.vars = vars;
      m.initial.resize(I);
      m.period.resize(P);
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 0; i < I + P; ++i) {
          (i < I ? m.initial[i] : m.period[i - I]) = to_bits(rest % states, static_cast<unsigned>(vars.size()));
          rest /= states;
        }
        if (naive_eval(f, m)) return true;
      }
    }
  return false;
}

bool counts_up(const LassoModel& m, std::size_t n) {
  const std::uint64_t mod = std::uint64_t{1} << n;
  NaiveLtl fold{m};
  for (std::size_t i = 0; i < m.length(); ++i)
    if (from_bits(m.at(fold.fold(i + 1)), 0, n) != (from_bits(m.at(i), 0, n) + 1) % mod) return false;
  return true;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------------------

constexpr std::size_t model_bound = 3;

Outcome qbf_model_soundness(Rng& rng) {
  std::size_t qbfs = 0, models = 0, violations = 0;
  auto check = [&](const Qbf& q) {
    ++qbfs;
    auto m = bounded_model_exists(q, model_bound);
    if (!m) return;
    ++models;
    if (!check_model(q, *m) || !qbf_brute_valid(q)) ++violations;
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto vars = numbered("v", n);
    for (const auto& prefix : prefixes(vars))
      for (std::uint64_t table = 0; table < (std::uint64_t{1} << (1U << n)); ++table)
        check(Qbf{prefix, formula_from_table(vars, table)});
  }
  const auto vars = numbered("v", 4);
  const auto shapes = prefixes(vars);
  for (int i = 0; i < 200; ++i) check(Qbf{shapes[rng() % shapes.size()], formula_from_table(vars, rng() & 0xFFFF)});
  return {violations == 0,
          std::to_string(qbfs) + " formulas, " + std::to_string(models) + " models at bound " +
              std::to_string(model_bound) + ", " + std::to_string(violations) + " violations"};
}

Outcome hard_family_bounds(Rng&) {
  bool ok = true;
  std::string detail;
  for (unsigned k : {1U, 2U}) {
    const Qbf q = hard_family(k);
    const bool valid = qbf_brute_valid(q);
    const auto found = bounded_model_exists(q, k);
    const DirectionalModel w = hard_family_witness(k);
    const bool witness = w.size() == k + 1 && check_model(q, w);
    ok = ok && valid && !found && witness;
    if (!detail.empty()) detail += "; ";
    detail += "k=" + std::to_string(k) + ": " + (valid ? "valid" : "NOT valid") + ", bound " + std::to_string(k) + " " +
              (found ? "FOUND a model of size " + std::to_string(found->size()) : std::string("no model")) +
              ", witness size " + std::to_string(w.size()) + (witness ? " checks" : " FAILS");
  }
  return {ok, detail};
}

Outcome sat_scan_positions(Rng&) {
  const Cnf3Encoding enc{2, 1};
  const std::size_t m = enc.m();
  const std::uint64_t chunk = (std::uint64_t{1} << enc.r) + 1;
  const auto states = expand(gen_sat_sequence(enc)).states;
  std::size_t mismatches = 0, arithmetic = 0;
  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    const std::uint64_t last = (k + 1) * chunk, first = k * chunk + 1;
    if (sat_index(enc, k) != last || chunk_start(enc, k) != first) ++arithmetic;
    const State& end = states.at(last - 1);
    if (from_bits(end, 0, m) != k || end[m + enc.r] != brute_formula_sat(enc, k)) ++mismatches;
    const State& open = states.at(first - 1);
    if (from_bits(open, 0, m) != k || from_bits(open, m, enc.r) != 0) ++arithmetic;
    if (k > 0 && from_bits(states.at(first - 2), 0, m) != k - 1) ++arithmetic;
  }
  return {mismatches == 0 && arithmetic == 0,
          std::to_string(enc.formula_count()) + " formulas, " + std::to_string(mismatches) + " answer mismatches, " +
              std::to_string(arithmetic) + " chunk-boundary mismatches"};
}

Outcome sat_generators(Rng&) {
  const Cnf3Encoding enc{2, 1};
  const unsigned r = enc.r;
  const std::size_t m = enc.m();
  std::size_t flag_bad = 0, chunk_bad = 0, state_bad = 0;

  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    const auto tr = expand(gen_sat_timeaction_flag(decode_cnf(k, enc), r));
    if (tr.states.back()[0] != brute_formula_sat(enc, k)) ++flag_bad;
  }

  const auto chunked = gen_sat_timeaction_chunked(enc);
  const auto ct = expand(chunked);
  const std::uint64_t len = timeaction_chunk_length(enc);
  const std::size_t flip = action_index(chunked.actions, "flip"), next = action_index(chunked.actions, "next");
  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    const bool sat = brute_formula_sat(enc, k);
    const State& end = ct.states.at(k * len + len - 2);
    const State& flipped = ct.states.at(k * len + len - 1);
    bool ok = from_bits(end, 0, m) == k && end[m + r] == sat && end[m + r + 1] && flipped[m + r] == !sat;
    const std::uint64_t at = sat ? k * len + len - 1 : k * len + len - 2;
    if (at < chunked.N) ok = ok && ct.actions[at] == (sat ? next : flip);
    chunk_bad += !ok;
  }

  const auto sa = gen_sat_stateaction(enc);
  const auto st = expand(sa);
  const std::size_t sat_a = action_index(sa.actions, "sat"), unsat_a = action_index(sa.actions, "unsat");
  const std::uint64_t span = std::uint64_t{1} << r;
  for (std::uint64_t k = 0; k < enc.formula_count(); ++k) {
    const std::uint64_t last = k * span + span - 1;
    const std::size_t action =
        last < sa.N ? st.actions[last] : static_cast<std::size_t>(from_bits(sa.circuit.evaluate(st.states[last])));
    const bool sat = brute_formula_sat(enc, k);
    if (from_bits(st.states[last], 0, m) != k || action != (sat ? sat_a : unsat_a)) ++state_bad;
  }
  return {flag_bad + chunk_bad + state_bad == 0,
          "flag " + std::to_string(flag_bad) + ", chunked " + std::to_string(chunk_bad) + ", state/action " +
              std::to_string(state_bad) + " mismatches over " + std::to_string(enc.formula_count()) + " formulas"};
}

Outcome unique_plan(Rng&) {
  const Cnf3Encoding enc{2, 1};
  const auto inst = gen_unique_plan_instance(2, 1);
  const auto plans = all_plans(inst);
  std::size_t mismatches = 0;
  if (plans.size() == 1) {
    const std::size_t sat = action_index(inst.actions, "sat"), unsat = action_index(inst.actions, "unsat");
    for (std::uint64_t k = 0; k < enc.formula_count(); ++k)
      if (plans[0].at(unique_plan_chunk_opening(enc, k)) != (brute_formula_sat(enc, k) ? sat : unsat)) ++mismatches;
  }
  return {plans.size() == 1 && mismatches == 0, std::to_string(plans.size()) + " plan(s), " +
                                                    std::to_string(mismatches) + " chunk-opening mismatches"};
}

Outcome qbf_planning(Rng& rng) {
  const std::vector<std::string> xs{"x1", "x2"}, ys{"y1", "y2"}, all{"x1", "x2", "y1", "y2"};
  int agree = 0, valid = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t table = rng() & 0xFFFF;
    if (trial % 2) table |= rng() & 0xFFFF;
    const Qbf q{{{Quantifier::Exists, xs}, {Quantifier::Forall, ys}}, formula_from_table(all, table)};
    const bool expected = qbf_brute_valid(q);
    valid += expected;
    agree += search_plan(gen_qbf_instance(q)).has_value() == expected;
  }
  return {agree == 100, std::to_string(agree) + "/100 agree (" + std::to_string(valid) + " valid)"};
}

Outcome conversion_lattice(Rng& rng) {
  int preserved = 0, refused = 0, refusals_expected = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t na = 1 + rng() % 3;
    const auto vars = numbered("v", n);
    auto outs = vars;
    for (auto& o : outs) o += "_next";
    ActionSet actions;
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<std::uint64_t> t(std::size_t{1} << n);
      for (auto& v : t) v = rng() % t.size();
      actions.push_back({"a" + std::to_string(a), truth_table_circuit("a" + std::to_string(a), vars, outs, [&](const Bits& x) {
                           return to_bits(t[from_bits(x)], static_cast<unsigned>(n));
                         })});
    }
    std::vector<std::uint64_t> choice(std::size_t{1} << n);
    for (auto& v : choice) v = rng() % na;
    PlanSeqRepr sa;
    sa.kind = SeqKind::SA;
    sa.vars = vars;
    sa.s0 = random_state(rng, n);
    sa.actions = actions;
    sa.N = rng() % 33;
    sa.circuit = truth_table_circuit("c", vars, numbered("i", index_width(actions)),
                                     [&](const Bits& x) { return to_bits(choice[from_bits(x)], index_width(actions)); });
    const auto base = expand(sa).states;

    auto same_actions = [&](const PlanSeqRepr& r) {
      if (r.actions.size() != actions.size()) return false;
      for (std::size_t a = 0; a < na; ++a)
        if (r.actions[a].name != actions[a].name || !(r.actions[a].circuit == actions[a].circuit)) return false;
      return true;
    };
    const auto ss = convert(sa, SeqKind::SS);
    const auto sa2 = convert(ss, SeqKind::SA);
    PlanSeqRepr ts = sa;
    ts.kind = SeqKind::TS;
    ts.circuit = truth_table_circuit("ts", numbered("t", width_for(sa.N + 1)), numbered("o", n), [&](const Bits& t) {
      const auto i = from_bits(t);
      return i <= sa.N ? base[i] : base.back();
    });
    const auto ta = convert(ts, SeqKind::TA);
    const bool ok = expand(ss).states == base && expand(sa2).states == base && expand(ta).states == base &&
                    same_actions(ss) && same_actions(sa2) && same_actions(ta) && ss.kind == SeqKind::SS &&
                    sa2.kind == SeqKind::SA && ta.kind == SeqKind::TA;
    preserved += ok;

    for (auto [from, to] : std::vector<std::pair<const PlanSeqRepr*, SeqKind>>{
             {&ss, SeqKind::TS}, {&ta, SeqKind::TS}, {&ta, SeqKind::SA}, {&sa, SeqKind::TA}, {&ts, SeqKind::SS}}) {
      ++refusals_expected;
      try {
        convert(*from, to);
      } catch (const unsupported_direction&) {
        ++refused;
      }
    }
  }
  return {preserved == trials && refused == refusals_expected,
          std::to_string(preserved) + "/" + std::to_string(trials) + " conversions preserved, " +
              std::to_string(refused) + "/" + std::to_string(refusals_expected) + " forbidden directions refused"};
}

Outcome streaming(Rng&) {
  const auto inst = gen_long_plan_instance(4094);
  const Plan plan(4095, action_index(inst.actions, "inc"));
  SimulationStats stats;
  const auto start = Clock::now();
  const Verdict v = simulate(inst, plan, {}, &stats);
  const double secs = since(start);

  const auto literal = gen_long_plan_instance(4095);
  const Plan literal_plan((std::uint64_t{1} << literal.width()) - 1, 0);
  SimulationStats lstats;
  const auto lstart = Clock::now();
  const Verdict lv = simulate(literal, literal_plan, {}, &lstats);
  const double lsecs = since(lstart);

  const bool ok = v.valid && stats.peak_states <= 2 && inst.width() == 12 && secs < 5.0;
  return {ok,
          std::to_string(inst.width()) + " bits, " + std::to_string(plan.size()) + " steps " +
              (v.valid ? "valid" : "INVALID") + ", peak " + std::to_string(stats.peak_states) + " states, " +
              std::to_string(stats.evaluations) + " evaluations; k=4095 as written: " +
              std::to_string(literal.width()) + " bits, " + std::to_string(literal_plan.size()) + " steps " +
              (lv.valid ? "valid" : "INVALID") + ", peak " + std::to_string(lstats.peak_states) + ", " +
              fmt("%.2f s", lsecs),
          secs};
}

Outcome ltl_evaluator(Rng& rng) {
  const std::vector<std::string> names{"a", "b"};
  int agree = 0;
  const int pairs = 200;
  for (int i = 0; i < pairs; ++i) {
    const L f = random_ltl(rng, 3, names);
    LassoModel m;
    m.vars = names;
    const std::size_t I = rng() % 3, P = 1 + rng() % 2;
    for (std::size_t k = 0; k < I; ++k) m.initial.push_back(random_state(rng, 2));
    for (std::size_t k = 0; k < P; ++k) m.period.push_back(random_state(rng, 2));
    bool same = true;
    for (std::size_t p = 0; p < m.length(); ++p) same = same && ltl_eval(f, m, p) == naive_eval(f, m, p);
    agree += same;
  }
  const L x = L::atom("x"), a = L::atom("a"), b = L::atom("b");
  int examples = 0;
  examples += ltl_eval(L::globally(L::finally(x)), LassoModel{{"x"}, {}, {{true}}});
  examples += ltl_eval(L::until(a, b), LassoModel{{"a", "b"}, {{true, false}, {true, false}, {false, true}}, {{false, false}}});
  examples += ltl_eval(L::conj({L::negate(a), L::next(L::negate(a)), L::next(a, 2), L::next(a, 3)}),
                       LassoModel{{"a"}, {{false}, {false}, {true}}, {{true}}});
  return {agree == pairs && examples == 3,
          std::to_string(agree) + "/" + std::to_string(pairs) + " pairs agree, " + std::to_string(examples) +
              "/3 worked examples hold"};
}

Outcome counter_models(Rng& rng) {
  int lex_ok = 0, lex_total = 0;
  for (unsigned n = 1; n <= 3; ++n)
    for (std::uint64_t start = 0; start < (std::uint64_t{1} << n); ++start) {
      ++lex_total;
      const LassoModel m = lexicographic_model(n, start);
      lex_ok += ltl_eval(count_formula(n), m) && counts_up(m, n);
    }
  int falsified = 0, samples = 0;
  while (samples < 100) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    LassoModel m;
    m.vars = numbered("x", n);
    const std::size_t I = rng() % 3;
    for (std::size_t k = 0; k < I; ++k) m.initial.push_back(random_state(rng, n));
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) m.period.push_back(random_state(rng, n));
    if (counts_up(m, n)) continue;
    ++samples;
    falsified += !ltl_eval(count_formula(n), m);
  }
  return {lex_ok == lex_total && falsified == samples,
          std::to_string(lex_ok) + "/" + std::to_string(lex_total) + " lexicographic models satisfy, " +
              std::to_string(falsified) + "/" + std::to_string(samples) + " non-lexicographic lassos falsify"};
}

constexpr std::size_t lex_size_factor = 9;

Outcome qbf_ltl(Rng& rng) {
  std::size_t total = 0, agree = 0;
  auto check = [&](const Qbf& q) {
    ++total;
    const LtlReduction red = qbf_to_ltl(reindex_for_ltl(q));
    agree += ltl_eval(red.formula, lexicographic_model(red.vars, 0)) == qbf_brute_valid(q);
  };
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto vars = numbered("v", n);
    for (std::uint64_t qs = 0; qs < (std::uint64_t{1} << n); ++qs) {
      std::vector<QuantBlock> prefix;
      for (std::size_t i = 0; i < n; ++i)
        prefix.push_back({((qs >> i) & 1U) ? Quantifier::Exists : Quantifier::Forall, {vars[i]}});
      for (std::uint64_t table = 0; table < (std::uint64_t{1} << (1U << n)); ++table)
        check(Qbf{prefix, formula_from_table(vars, table)});
    }
  }
  const auto vars = numbered("v", 3);
  for (int i = 0; i < 100; ++i) {
    std::vector<QuantBlock> prefix;
    for (const auto& v : vars) prefix.push_back({rng() & 1U ? Quantifier::Exists : Quantifier::Forall, {v}});
    check(Qbf{prefix, formula_from_table(vars, rng() & 0xFF)});
  }

  // succinct circuits of the all-false-start lexicographic model
  bool sizes_ok = true;
  std::string sizes;
  for (unsigned n : {1U, 3U, 5U, 7U}) {
    const auto cvars = numbered("x", n + 1);
    std::vector<std::string> next;
    for (const auto& v : cvars) next.push_back(v + "_next");
    CircuitBuilder b("lex");
    b.outputs(next, b.increment(b.inputs(cvars)));
    SuccinctLasso ss{LassoKind::SS, cvars, b.build(), 0, std::uint64_t{1} << (n + 1), State(n + 1, false)};
    CircuitBuilder tb("lex_time");
    const auto t = tb.inputs(numbered("t", n + 1));
    tb.outputs(cvars, t);
    SuccinctLasso ts{LassoKind::TS, cvars, tb.build(), 0, std::uint64_t{1} << (n + 1), {}};
    const LassoModel want = lexicographic_model(cvars, 0);
    const std::size_t ss_size = ss.circuit.size(), ts_size = ts.circuit.size();
    sizes_ok = sizes_ok && expand(ss) == want && expand(ts) == want && ss_size <= lex_size_factor * (n + 1) &&
               ts_size == n + 1;
    sizes += " n=" + std::to_string(n) + ": SS " + std::to_string(ss_size) + ", TS " + std::to_string(ts_size) + ";";
  }
  sizes.pop_back();
  return {agree == total && sizes_ok,
          std::to_string(agree) + "/" + std::to_string(total) + " formulas agree; lexicographic circuit sizes over n+1 counter bits (SS at most " +
              std::to_string(lex_size_factor) + " per bit):" + sizes};
}

Outcome model_search(Rng& rng) {
  const std::vector<std::string> names{"a", "b"};
  int unsound = 0, missed = 0, found = 0, none = 0;
  for (int i = 0; i < 200; ++i) {
    const L f = random_ltl(rng, 3, names);
    const auto m = find_model(f);
    if (m) {
      ++found;
      if (!ltl_eval(f, *m) || !naive_eval(f, *m)) ++unsound;
    } else {
      ++none;
      if (naive_lasso_search(f, atoms(f), 4, 4)) ++missed;
    }
  }
  return {unsound == 0 && missed == 0, std::to_string(found) + " models (" + std::to_string(unsound) + " unsound), " +
                                           std::to_string(none) + " unsatisfiable (" + std::to_string(missed) +
                                           " missed by find_model)"};
}

Outcome unique_embedding(Rng& rng) {
  int ok[2] = {0, 0};
  const int per_kind = 50;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 0; i < per_kind; ++i) {
      const std::size_t n = 1 + rng() % 3;
      const std::uint64_t span = std::uint64_t{1} << n;
      const std::uint64_t N = rng() % std::min<std::uint64_t>(5, span);
      std::vector<std::uint64_t> order(span);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(N + 1);
      const auto vars = numbered("x", n);
      PlanSeqRepr s1;
      s1.vars = vars;
      s1.N = N;
      s1.s0 = to_bits(order[0], static_cast<unsigned>(n));
      if (kind == 0) {
        s1.kind = SeqKind::SS;
        auto outs = vars;
        for (auto& o : outs) o += "_next";
        s1.circuit = truth_table_circuit("step", vars, outs, [&](const Bits& x) {
          const auto v = from_bits(x);
          for (std::uint64_t t = 0; t < N; ++t)
            if (order[t] == v) return to_bits(order[t + 1], static_cast<unsigned>(n));
          return x;
        });
      } else {
        s1.kind = SeqKind::TS;
        s1.circuit = truth_table_circuit("at", numbered("t", width_for(N + 1)), numbered("o", n), [&](const Bits& t) {
          return to_bits(order[std::min<std::uint64_t>(from_bits(t), N)], static_cast<unsigned>(n));
        });
      }
      const UniqueModelEmbedding e = embed_unique_model(s1);
      const LassoModel m = expand(e.lasso);
      StateList all = m.initial;
      all.insert(all.end(), m.period.begin(), m.period.end());
      ok[kind] += ltl_eval(e.formula, m, 0) && expands_check(s1.vars, expand(s1).states, m.vars, divide(all, 2));
    }
  return {ok[0] == per_kind && ok[1] == per_kind,
          "SS " + std::to_string(ok[0]) + "/" + std::to_string(per_kind) + ", TS " + std::to_string(ok[1]) + "/" +
              std::to_string(per_kind) + " embeddings hold"};
}

struct Criterion {
  const char* title;
  double limit;
  Outcome (*run)(Rng&);
};

const Criterion criteria[acceptance_criteria] = {
    {"QBF model checking soundness", 60, qbf_model_soundness},
    {"hard family needs size k+1", 120, hard_family_bounds},
    {"satisfiability scan answers and chunk positions", 60, sat_scan_positions},
    {"flag, chunked and state/action scans", 0, sat_generators},
    {"unique plan encodes satisfiability", 300, unique_plan},
    {"planning decides exists-forall formulas", 0, qbf_planning},
    {"representation conversion lattice", 0, conversion_lattice},
    {"streaming plan simulation", 5, streaming},
    {"LTL evaluator", 0, ltl_evaluator},
    {"counter formula models", 0, counter_models},
    {"QBF to LTL reduction", 0, qbf_ltl},
    {"LTL model search", 0, model_search},
    {"unique-model embeddings", 0, unique_embedding},
};

} // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > acceptance_criteria) throw input_error("no acceptance criterion " + std::to_string(id));
  const Criterion& c = criteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.limit_seconds = c.limit;
  Rng rng(seed * 1000003 + static_cast<std::uint64_t>(id));
  const auto start = Clock::now();
  try {
    Outcome o = c.run(rng);
    r.seconds = o.timed ? *o.timed : since(start);
    r.passed = o.passed && (c.limit == 0 || r.seconds <= c.limit);
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.seconds = since(start);
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::string out = "criterion " + std::to_string(r.id) + (r.id < 10 ? "  " : " ") + (r.passed ? "PASS " : "FAIL ") +
                    r.title + ": " + r.detail + " (" + fmt("%.2f s", r.seconds);
  if (r.limit_seconds > 0) out += ", limit " + fmt("%.0f s", r.limit_seconds);
  return out + ")";
}

} // namespace succinct
