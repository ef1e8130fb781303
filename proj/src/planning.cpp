#include "succinct/planning.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "succinct/circuit_builder.hpp"
#include "succinct/cnf.hpp"
#include "succinct/error.hpp"

namespace succinct {

using Word = CircuitBuilder::Word;
using Var = CircuitBuilder::Var;

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> suffixed(const std::vector<std::string>& names, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + suffix);
  return out;
}

Word slice(const Word& w, std::size_t first, std::size_t count) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(first), w.begin() + static_cast<std::ptrdiff_t>(first + count));
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Action make_action(const std::string& name, CircuitBuilder& b, const std::vector<std::string>& vars,
                   const Word& next) {
  b.outputs(suffixed(vars, "_next"), next);
  return {name, b.build()};
}

class StateCounter {
public:
  void acquire() { peak_ = std::max(peak_, ++live_); }
  void release() { --live_; }
  std::size_t peak() const { return peak_; }

private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

/// An explicit state counted while it is alive.
class TrackedState {
public:
  TrackedState(StateCounter& counter, State s) : counter_(counter), s_(std::move(s)) { counter_.acquire(); }
  ~TrackedState() { counter_.release(); }
  TrackedState(const TrackedState&) = delete;
  TrackedState& operator=(const TrackedState&) = delete;

  State& operator*() { return s_; }
  const State& operator*() const { return s_; }

private:
  StateCounter& counter_;
  State s_;
};

std::string describe(const State& s) { return to_string(s); }

// Streams s_0 .. s_N. `advance(t, s)` turns s_t into s_{t+1} in place;
// `check(t, s)` validates the transition out of s_t before it is taken.
template <typename First, typename Check, typename Advance>
Verdict stream(const PolyplanInstance& inst, std::uint64_t N, const SimulationOptions& opts, SimulationStats* stats,
               First first, Check check, Advance advance) {
  if (N > opts.max_length)
    throw cap_exceeded("plan length " + std::to_string(N) + " exceeds cap " + std::to_string(opts.max_length));
  StateCounter counter;
  std::uint64_t evaluations = 0;
  auto finish = [&](Verdict v) {
    if (stats) {
      stats->peak_states = counter.peak();
      stats->evaluations = evaluations;
    }
    return v;
  };
  auto fail = [&](std::uint64_t step, FailureReason r, std::string msg) {
    return finish(Verdict{false, step, r, std::move(msg)});
  };

  TrackedState cur(counter, first());
  if (*cur != inst.init)
    return fail(0, FailureReason::InitMismatch,
                "initial state " + describe(*cur) + " differs from " + describe(inst.init));
  for (std::uint64_t t = 0; t < N; ++t) {
    if (auto problem = check(t, *cur); problem.reason != FailureReason::None) return finish(problem);
    advance(t, *cur);
    ++evaluations;
    if (!opts.check_repetition) continue;
    TrackedState probe(counter, first());
    for (std::uint64_t j = 0; j <= t; ++j) {
      if (*probe == *cur)
        return fail(t + 1, FailureReason::Repetition,
                    "state " + describe(*cur) + " at step " + std::to_string(t + 1) + " revisits step " +
                        std::to_string(j));
      advance(j, *probe);
      ++evaluations;
    }
  }
  if (!inst.is_goal(*cur))
    return fail(N, FailureReason::GoalMiss, "final state " + describe(*cur) + " is not the goal");
  return finish(Verdict{});
}

Verdict ok() { return Verdict{}; }

Verdict bad_index(std::uint64_t t, std::uint64_t idx) {
  return Verdict{false, t, FailureReason::BadActionIndex,
                 "invalid action index " + std::to_string(idx) + " at step " + std::to_string(t)};
}

// One output: whether some action leads from s_t to s_{t+1}.
Circuit witness_circuit(const PlanSeqRepr& r, const ActionSet& actions) {
  CircuitBuilder b("witness");
  Word cur, next;
  if (r.kind == SeqKind::TS) {
    Word t = b.inputs(numbered("t", r.circuit.num_inputs()));
    cur = b.inline_circuit(r.circuit, t);
    next = b.inline_circuit(r.circuit, b.increment(t));
  } else {
    cur = b.inputs(r.vars);
    next = b.inline_circuit(r.circuit, cur);
  }
  std::vector<Var> matches;
  for (const auto& a : actions) matches.push_back(b.equal(b.inline_circuit(a.circuit, cur), next));
  b.output("found", b.or_(matches));
  return b.build();
}

std::uint64_t pow2_checked(std::size_t n, std::size_t cap) {
  if (n > cap) throw cap_exceeded(std::to_string(n) + " state variables exceed the cap of " + std::to_string(cap));
  return std::uint64_t{1} << n;
}

} // namespace

void PolyplanInstance::validate() const {
  const std::size_t n = vars.size();
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != n) throw input_error("duplicate state variable");
  if (init.size() != n) throw input_error("initial state has " + std::to_string(init.size()) + " bits, expected " +
                                          std::to_string(n));
  if (goal_circuit) {
    if (goal_circuit->num_inputs() != n || goal_circuit->num_outputs() != 1)
      throw input_error("goal circuit must read the state and output one bit");
  } else if (goal.size() != n) {
    throw input_error("goal state has " + std::to_string(goal.size()) + " bits, expected " + std::to_string(n));
  }
  validate_actions(actions, n);
}

bool PolyplanInstance::is_goal(const State& s) const {
  if (goal_circuit) return goal_circuit->evaluate(s)[0];
  return s == goal;
}

State apply_action(const State& s, const Action& a) {
  if (a.circuit.num_inputs() != s.size() || a.circuit.num_outputs() != s.size())
    throw input_error("action '" + a.name + "' does not map " + std::to_string(s.size()) + " bits to " +
                      std::to_string(s.size()) + " bits");
  return a.circuit.evaluate(s);
}

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::BadActionIndex: return "bad-action-index";
    case FailureReason::NoWitness: return "no-witness";
    case FailureReason::Repetition: return "repetition";
    case FailureReason::GoalMiss: return "goal-miss";
    case FailureReason::InitMismatch: return "init-mismatch";
  }
  return "unknown";
}

Verdict simulate(const PolyplanInstance& inst, const Plan& plan, const SimulationOptions& opts,
                 SimulationStats* stats) {
  inst.validate();
  const auto& actions = inst.actions;
  return stream(
      inst, plan.size(), opts, stats, [&] { return inst.init; },
      [&](std::uint64_t t, const State&) { return plan[t] < actions.size() ? ok() : bad_index(t, plan[t]); },
      [&](std::uint64_t t, State& s) { actions[plan[t]].circuit.evaluate_into(s, s); });
}

Verdict simulate(const PolyplanInstance& inst, const PlanSeqRepr& repr, const SimulationOptions& opts,
                 SimulationStats* stats) {
  inst.validate();
  PlanSeqRepr r = repr;
  r.actions = inst.actions;
  r.validate_shape();
  if (r.vars.size() != inst.width()) throw input_error("representation and instance widths differ");
  const auto& actions = inst.actions;
  const auto& c = r.circuit;
  const std::size_t tw = c.num_inputs();
  auto time = [tw](std::uint64_t t) { return to_bits(t, static_cast<unsigned>(tw)); };
  Bits scratch;
  auto designated = [&](std::uint64_t t, const State& s) {
    c.evaluate_into(r.kind == SeqKind::TA ? time(t) : s, scratch);
    return from_bits(scratch);
  };

  switch (r.kind) {
    case SeqKind::TS:
    case SeqKind::SS: {
      Circuit witness = witness_circuit(r, actions);
      auto first = [&] { return r.kind == SeqKind::TS ? c.evaluate(time(0)) : r.s0; };
      auto check = [&](std::uint64_t t, const State& s) {
        if (witness.evaluate(r.kind == SeqKind::TS ? time(t) : s)[0]) return ok();
        return Verdict{false, t, FailureReason::NoWitness,
                       "no action leads from step " + std::to_string(t) + " to step " + std::to_string(t + 1)};
      };
      auto advance = [&](std::uint64_t t, State& s) {
        if (r.kind == SeqKind::TS)
          c.evaluate_into(time(t + 1), s);
        else
          c.evaluate_into(s, s);
      };
      return stream(inst, r.N, opts, stats, first, check, advance);
    }
    case SeqKind::TA:
    case SeqKind::SA: {
      auto first = [&] { return r.s0; };
      auto check = [&](std::uint64_t t, const State& s) {
        auto idx = designated(t, s);
        return idx < actions.size() ? ok() : bad_index(t, idx);
      };
      auto advance = [&](std::uint64_t t, State& s) { actions[designated(t, s)].circuit.evaluate_into(s, s); };
      return stream(inst, r.N, opts, stats, first, check, advance);
    }
  }
  return Verdict{};
}

std::optional<Plan> search_plan(const PolyplanInstance& inst, std::size_t max_bits) {
  inst.validate();
  const std::uint64_t count = pow2_checked(inst.width(), max_bits);
  if (inst.is_goal(inst.init)) return Plan{};
  constexpr std::uint64_t unseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> parent(count, unseen);
  std::vector<std::uint32_t> via(count, 0);
  const unsigned n = static_cast<unsigned>(inst.width());
  const std::uint64_t start = from_bits(inst.init);
  parent[start] = start;
  std::deque<std::uint64_t> queue{start};
  State next;
  while (!queue.empty()) {
    const std::uint64_t cur = queue.front();
    queue.pop_front();
    const State s = to_bits(cur, n);
    for (std::size_t a = 0; a < inst.actions.size(); ++a) {
      inst.actions[a].circuit.evaluate_into(s, next);
      const std::uint64_t v = from_bits(next);
      if (parent[v] != unseen) continue;
      parent[v] = cur;
      via[v] = static_cast<std::uint32_t>(a);
      if (inst.is_goal(next)) {
        Plan plan;
        for (std::uint64_t x = v; x != start; x = parent[x]) plan.push_back(via[x]);
        return Plan(plan.rbegin(), plan.rend());
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::vector<Plan> all_plans(const PolyplanInstance& inst, std::size_t max_plans, std::uint64_t max_nodes) {
  inst.validate();
  const std::uint64_t count = pow2_checked(inst.width(), default_search_bits);
  std::vector<bool> on_path(count, false);
  std::vector<Plan> out;
  if (inst.is_goal(inst.init)) return {Plan{}};

  struct Frame {
    State state;
    std::size_t next_action;
  };
  std::vector<Frame> stack{{inst.init, 0}};
  on_path[from_bits(inst.init)] = true;
  Plan path;
  std::uint64_t nodes = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_action == inst.actions.size()) {
      on_path[from_bits(top.state)] = false;
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const std::size_t a = top.next_action++;
    State s = apply_action(top.state, inst.actions[a]);
    const std::uint64_t key = from_bits(s);
    if (on_path[key]) continue;
    if (++nodes > max_nodes) throw cap_exceeded("plan enumeration visited more than " + std::to_string(max_nodes) + " nodes");
    path.push_back(a);
    if (inst.is_goal(s)) {
      out.push_back(path);
      if (out.size() > max_plans) throw cap_exceeded("more than " + std::to_string(max_plans) + " plans");
      path.pop_back();
      continue;
    }
    on_path[key] = true;
    stack.push_back({std::move(s), 0});
  }
  return out;
}

std::optional<PlanSeqRepr> bounded_succinct_plan_exists(const PolyplanInstance& inst, std::size_t k, SeqKind kind,
                                                        const BoundedPlanLimits& limits) {
  inst.validate();
  const std::size_t n = inst.width();
  const std::uint64_t horizon = pow2_checked(n, limits.max_bits);
  if (inst.actions.empty() && kind != SeqKind::TS && kind != SeqKind::SS) return std::nullopt;
  const bool timed = kind == SeqKind::TS || kind == SeqKind::TA;
  const bool indexed = kind == SeqKind::TA || kind == SeqKind::SA;
  const auto in_names = timed ? numbered("t", n) : inst.vars;
  const auto out_names = indexed ? numbered("a", index_width(inst.actions))
                                 : (kind == SeqKind::SS ? suffixed(inst.vars, "_next") : inst.vars);
  const auto circuits = enumerate_circuits(in_names, out_names, k, limits.enumeration);

  PlanSeqRepr r;
  r.kind = kind;
  r.vars = inst.vars;
  r.s0 = inst.init;
  r.actions = inst.actions;
  for (const auto& c : circuits) {
    r.circuit = c;
    // Walk the sequence until it fails; the first prefix ending in the goal
    // is this circuit's shortest plan.
    std::set<State> seen;
    State s = kind == SeqKind::TS ? c.evaluate(to_bits(0, static_cast<unsigned>(n))) : inst.init;
    if (s != inst.init) continue;
    seen.insert(s);
    std::optional<std::uint64_t> found;
    for (std::uint64_t N = 0; N < horizon; ++N) {
      if (inst.is_goal(s)) {
        found = N;
        break;
      }
      if (N + 1 >= horizon) break;
      State next;
      if (kind == SeqKind::TS || kind == SeqKind::SS) {
        next = kind == SeqKind::TS ? c.evaluate(to_bits(N + 1, static_cast<unsigned>(n))) : c.evaluate(s);
        bool witnessed = false;
        for (const auto& a : inst.actions) witnessed = witnessed || a.circuit.evaluate(s) == next;
        if (!witnessed) break;
      } else {
        const auto idx = from_bits(c.evaluate(kind == SeqKind::TA ? to_bits(N, static_cast<unsigned>(n)) : s));
        if (idx >= inst.actions.size()) break;
        next = inst.actions[idx].circuit.evaluate(s);
      }
      if (!seen.insert(next).second) break;
      s = std::move(next);
    }
    if (!found) continue;
    r.N = *found;
    if (!simulate(inst, r).valid) throw std::logic_error("bounded plan search produced a rejected plan");
    return r;
  }
  return std::nullopt;
}

PolyplanInstance gen_qbf_instance(const Qbf& q) {
  q.validate();
  if (q.prefix.size() != 2 || q.prefix[0].quantifier != Quantifier::Exists ||
      q.prefix[1].quantifier != Quantifier::Forall)
    throw input_error("expected a formula of the form exists X forall Y . E");
  const auto& xs = q.prefix[0].vars;
  const auto& ys = q.prefix[1].vars;
  const std::size_t p = xs.size();
  const std::size_t m = ys.size();

  std::set<std::string> taken(xs.begin(), xs.end());
  taken.insert(ys.begin(), ys.end());
  std::string g = "g";
  std::string zp = "z";
  auto clash = [&](const std::string& prefix) {
    for (const auto& t : taken)
      if (t == prefix || (t.rfind(prefix, 0) == 0 && t.size() > prefix.size() &&
                          t.find_first_not_of("0123456789", prefix.size()) == std::string::npos))
        return true;
    return false;
  };
  while (taken.count(g)) g = "_" + g;
  while (clash(zp)) zp = "_" + zp;

  PolyplanInstance inst;
  inst.vars.push_back(g);
  for (auto& z : numbered(zp, p)) inst.vars.push_back(z);
  inst.vars.insert(inst.vars.end(), xs.begin(), xs.end());
  inst.vars.insert(inst.vars.end(), ys.begin(), ys.end());
  const std::size_t n = inst.vars.size();
  inst.init = State(n, false);
  inst.goal = State(n, false);
  inst.goal[0] = true;

  struct Parts {
    Var g;
    Word Z, X, Y;
  };
  auto begin = [&](CircuitBuilder& b) {
    Word s = b.inputs(inst.vars);
    return Parts{s[0], slice(s, 1, p), slice(s, 1 + p, p), slice(s, 1 + 2 * p, m)};
  };
  auto matrix = [&](CircuitBuilder& b, const Parts& st) {
    std::map<std::string, Var> atoms;
    for (std::size_t i = 0; i < p; ++i) atoms[xs[i]] = st.X[i];
    for (std::size_t i = 0; i < m; ++i) atoms[ys[i]] = st.Y[i];
    return b.formula(q.matrix, atoms);
  };
  // first_false[i]: z_i is the first false z
  auto first_false = [&](CircuitBuilder& b, const Word& Z) {
    std::vector<Var> out;
    std::vector<Var> prefix;
    for (std::size_t i = 0; i < p; ++i) {
      auto conj = prefix;
      conj.push_back(b.not_(Z[i]));
      out.push_back(b.and_(conj));
      prefix.push_back(Z[i]);
    }
    return out;
  };

  for (bool value : {true, false}) {
    CircuitBuilder b(value ? "settrue" : "setfalse");
    auto st = begin(b);
    auto ff = first_false(b, st.Z);
    Word Z = st.Z, X = st.X;
    for (std::size_t i = 0; i < p; ++i) {
      Z[i] = b.or_(st.Z[i], ff[i]);
      if (value) X[i] = b.or_(st.X[i], ff[i]);
    }
    inst.actions.push_back(make_action(value ? "settrue" : "setfalse", b, inst.vars, cat({{st.g}, Z, X, st.Y})));
  }
  {
    CircuitBuilder b("move");
    auto st = begin(b);
    Var guard = b.and_({b.all_ones(st.Z), b.not_(b.all_ones(st.Y)), matrix(b, st)});
    Word Y = b.mux(guard, b.increment(st.Y), st.Y);
    inst.actions.push_back(make_action("move", b, inst.vars, cat({{st.g}, st.Z, st.X, Y})));
  }
  {
    CircuitBuilder b("last");
    auto st = begin(b);
    Var guard = b.and_({b.all_ones(st.Z), b.all_ones(st.Y), matrix(b, st)});
    Word s = cat({{st.g}, st.Z, st.X, st.Y});
    Word goal = b.constant_word(0, n);
    goal[0] = b.constant(true);
    inst.actions.push_back(make_action("last", b, inst.vars, b.mux(guard, goal, s)));
  }
  return inst;
}

PolyplanInstance gen_unique_plan_instance(unsigned r, unsigned c) {
  const Cnf3Encoding enc{r, c};
  const std::size_t m = enc.m();
  if (m + r + 3 > default_search_bits) throw cap_exceeded("unique-plan instance too large");
  PolyplanInstance inst;
  inst.vars = {"b1", "b2", "b3"};
  for (auto& v : numbered("F", m)) inst.vars.push_back(v);
  for (auto& v : numbered("M", r)) inst.vars.push_back(v);
  const std::size_t n = inst.vars.size();
  const Circuit eval = cnf_eval_circuit(enc);

  struct Parts {
    Var b1, b2, b3;
    Word F, M;
  };
  auto begin = [&](CircuitBuilder& b) {
    Word s = b.inputs(inst.vars);
    return Parts{s[0], s[1], s[2], slice(s, 3, m), slice(s, 3 + m, r)};
  };
  auto join = [](const Parts& st) { return cat({{st.b1, st.b2, st.b3}, st.F, st.M}); };

  for (bool sat : {true, false}) {
    CircuitBuilder b(sat ? "sat" : "unsat");
    auto st = begin(b);
    Parts out = st;
    Var open = b.not_(st.b1);
    out.b1 = b.or_(st.b1, open);
    if (sat) out.b2 = b.or_(st.b2, open);
    inst.actions.push_back(make_action(sat ? "sat" : "unsat", b, inst.vars, join(out)));
  }
  {
    CircuitBuilder b("move");
    auto st = begin(b);
    Var sat_now = b.inline_circuit(eval, cat({st.F, st.M}))[0];
    Var at_last = b.all_ones(st.M);
    Parts step = st;
    step.M = b.increment(st.M);
    step.b3 = b.or_(st.b3, sat_now);
    Var advance = b.or_({b.and_({b.not_(st.b2), b.not_(st.b3), b.not_(sat_now)}), b.and_(st.b2, st.b3),
                         b.and_(st.b2, sat_now)});
    Parts next_chunk{b.constant(false), b.constant(false), b.constant(false), b.increment(st.F),
                     b.constant_word(0, r)};
    Word at_end = b.mux(advance, join(next_chunk), join(st));
    Word moved = b.mux(at_last, at_end, join(step));
    inst.actions.push_back(make_action("move", b, inst.vars, b.mux(st.b1, moved, join(st))));
  }

  inst.init = State(n, false);
  // Goal: last state of the final formula's chunk.
  const std::uint64_t last_f = enc.formula_count() - 1;
  const Cnf3 f = decode_cnf(last_f, enc);
  const std::uint64_t models = std::uint64_t{1} << r;
  bool seen_model = false;
  for (std::uint64_t M = 0; M + 1 < models; ++M) seen_model = seen_model || cnf_satisfied(f, to_bits(M, r));
  const bool satisfiable = seen_model || cnf_satisfied(f, to_bits(models - 1, r));
  inst.goal = concat(concat(Bits{true, satisfiable, seen_model}, to_bits(last_f, static_cast<unsigned>(m))),
                     to_bits(models - 1, r));
  return inst;
}

std::uint64_t unique_plan_chunk_opening(const Cnf3Encoding& enc, std::uint64_t k) {
  return k * ((std::uint64_t{1} << enc.r) + 1);
}

PolyplanInstance gen_long_plan_instance(std::uint64_t k) {
  if (k > (std::uint64_t{1} << 40)) throw cap_exceeded("bound too large");
  const unsigned w = width_for(k + 2);
  PolyplanInstance inst;
  inst.vars = numbered("c", w);
  inst.init = State(w, false);
  inst.goal = State(w, true);
  CircuitBuilder b("inc");
  Word s = b.inputs(inst.vars);
  inst.actions.push_back(make_action("inc", b, inst.vars, b.increment(s)));
  return inst;
}

} // namespace succinct
