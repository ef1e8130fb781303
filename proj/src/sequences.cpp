#include "succinct/sequences.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "succinct/circuit_builder.hpp"
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

void check_cap(std::uint64_t count, std::uint64_t cap) {
  if (count > cap)
    throw cap_exceeded("expansion of " + std::to_string(count) + " elements exceeds cap " + std::to_string(cap));
}

std::uint64_t pow2(std::size_t w) {
  if (w >= 63) throw cap_exceeded("width " + std::to_string(w) + " too large");
  return std::uint64_t{1} << w;
}

Word slice(const Word& w, std::size_t first, std::size_t count) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(first), w.begin() + static_cast<std::ptrdiff_t>(first + count));
}

Word join(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// Index of the first true entry among `matches`, or 0 when none is.
Word first_match(CircuitBuilder& b, const std::vector<Var>& matches, unsigned width) {
  std::vector<std::vector<Var>> bits(width);
  std::vector<Var> earlier;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    std::vector<Var> chosen_parts{matches[i]};
    for (Var e : earlier) chosen_parts.push_back(b.not_(e));
    Var chosen = b.and_(chosen_parts);
    auto idx = to_bits(i, width);
    for (unsigned k = 0; k < width; ++k)
      if (idx[k]) bits[k].push_back(chosen);
    earlier.push_back(matches[i]);
  }
  Word out;
  for (auto& v : bits) out.push_back(b.or_(v));
  return out;
}

Var formula_value(CircuitBuilder& b, const Cnf3& f, const Word& model) {
  std::vector<Var> clauses;
  for (const auto& clause : f) {
    std::vector<Var> lits;
    for (const auto& lit : clause) {
      Var v = model.at(lit.var - 1);
      lits.push_back(lit.positive ? v : b.not_(v));
    }
    clauses.push_back(b.or_(lits));
  }
  return b.and_(clauses);
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Circuit build_action(CircuitBuilder& b, const std::vector<std::string>& vars, const Word& next) {
  b.outputs(suffixed(vars, "_next"), next);
  return b.build();
}

} // namespace

// Element representations -----------------------------------------------------

StateList expand(const TimeElementRepr& r, std::uint64_t cap) {
  check_cap(r.N, cap);
  StateList out;
  for (std::uint64_t t = 0; t < r.N; ++t) out.push_back(element_at(r, t));
  return out;
}

State element_at(const TimeElementRepr& r, std::uint64_t t) {
  if (t >= r.N) throw input_error("element index " + std::to_string(t) + " out of range");
  unsigned w = width_for(r.N);
  if (r.circuit.num_inputs() != w)
    throw input_error("time/element circuit must have exactly " + std::to_string(w) + " time inputs");
  return r.circuit.evaluate(to_bits(t, w));
}

StateList expand(const NextElementRepr& r, std::uint64_t cap) {
  check_cap(r.N, cap);
  StateList out;
  std::set<State> seen;
  State s = r.s0;
  for (std::uint64_t t = 0; t < r.N; ++t) {
    if (!seen.insert(s).second) throw input_error("next-element sequence repeats at index " + std::to_string(t));
    out.push_back(s);
    if (t + 1 < r.N) s = r.circuit.evaluate(s);
  }
  return out;
}

State element_at(const NextElementRepr& r, std::uint64_t t) {
  if (t >= r.N) throw input_error("element index " + std::to_string(t) + " out of range");
  State s = r.s0;
  for (std::uint64_t i = 0; i < t; ++i) s = r.circuit.evaluate(s);
  return s;
}

// Plan representations --------------------------------------------------------

void validate_actions(const ActionSet& actions, std::size_t n) {
  std::set<std::string> names;
  for (const auto& a : actions) {
    if (!names.insert(a.name).second) throw input_error("duplicate action name '" + a.name + "'");
    if (a.circuit.num_inputs() != n || a.circuit.num_outputs() != n)
      throw input_error("action '" + a.name + "' must have " + std::to_string(n) + " inputs and outputs");
  }
}

std::size_t action_index(const ActionSet& actions, const std::string& name) {
  for (std::size_t i = 0; i < actions.size(); ++i)
    if (actions[i].name == name) return i;
  throw input_error("unknown action '" + name + "'");
}

unsigned index_width(const ActionSet& actions) { return width_for(actions.size()); }

std::string to_string(SeqKind k) {
  switch (k) {
    case SeqKind::TS: return "TS";
    case SeqKind::SS: return "SS";
    case SeqKind::TA: return "TA";
    case SeqKind::SA: return "SA";
  }
  return "?";
}

SeqKind parse_seq_kind(std::string_view s) {
  if (s == "TS" || s == "ts") return SeqKind::TS;
  if (s == "SS" || s == "ss") return SeqKind::SS;
  if (s == "TA" || s == "ta") return SeqKind::TA;
  if (s == "SA" || s == "sa") return SeqKind::SA;
  throw input_error("unknown sequence kind '" + std::string(s) + "' (expected TS, SS, TA or SA)");
}

void PlanSeqRepr::validate_shape() const {
  const std::size_t n = vars.size();
  if (s0.size() != n) throw input_error("initial state width differs from the variable count");
  validate_actions(actions, n);
  const auto& c = circuit;
  switch (kind) {
    case SeqKind::TS:
      if (c.num_inputs() < width_for(N + 1) || c.num_inputs() >= 63)
        throw input_error("time/state circuit needs at least " + std::to_string(width_for(N + 1)) + " time inputs");
      if (c.num_outputs() != n) throw input_error("time/state circuit must output the state");
      break;
    case SeqKind::SS:
      if (c.num_inputs() != n || c.num_outputs() != n)
        throw input_error("next-state circuit must map the state to the state");
      break;
    case SeqKind::TA:
      if (c.num_inputs() < width_for(N) || c.num_inputs() >= 63)
        throw input_error("time/action circuit needs at least " + std::to_string(width_for(N)) + " time inputs");
      if (actions.empty() || c.num_outputs() != index_width(actions))
        throw input_error("time/action circuit must output a " + std::to_string(index_width(actions)) +
                          "-bit action index");
      break;
    case SeqKind::SA:
      if (c.num_inputs() != n) throw input_error("state/action circuit must read the state");
      if (actions.empty() || c.num_outputs() != index_width(actions))
        throw input_error("state/action circuit must output a " + std::to_string(index_width(actions)) +
                          "-bit action index");
      break;
  }
}

namespace {

// Designated action at step t from state s (TA/SA kinds).
std::uint64_t designated(const PlanSeqRepr& r, std::uint64_t t, const State& s) {
  Bits in = r.kind == SeqKind::TA ? to_bits(t, static_cast<unsigned>(r.circuit.num_inputs())) : s;
  return from_bits(r.circuit.evaluate(in));
}

State time_state(const PlanSeqRepr& r, std::uint64_t t) {
  return r.circuit.evaluate(to_bits(t, static_cast<unsigned>(r.circuit.num_inputs())));
}

} // namespace

PlanTrace expand(const PlanSeqRepr& r, std::uint64_t cap) {
  r.validate_shape();
  check_cap(r.N + 1, cap);
  PlanTrace out;
  out.states.reserve(r.N + 1);
  State s = r.kind == SeqKind::TS ? time_state(r, 0) : r.s0;
  out.states.push_back(s);
  for (std::uint64_t t = 0; t < r.N; ++t) {
    switch (r.kind) {
      case SeqKind::TS: s = time_state(r, t + 1); break;
      case SeqKind::SS: s = r.circuit.evaluate(s); break;
      case SeqKind::TA:
      case SeqKind::SA: {
        auto idx = designated(r, t, s);
        if (idx >= r.actions.size())
          throw input_error("invalid action index " + std::to_string(idx) + " at step " + std::to_string(t));
        out.actions.push_back(idx);
        s = r.actions[idx].circuit.evaluate(s);
        break;
      }
    }
    out.states.push_back(s);
  }
  return out;
}

State element_at(const PlanSeqRepr& r, std::uint64_t t) {
  r.validate_shape();
  if (t > r.N) throw input_error("step " + std::to_string(t) + " beyond sequence length " + std::to_string(r.N));
  if (r.kind == SeqKind::TS) return time_state(r, t);
  State s = r.s0;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (r.kind == SeqKind::SS) {
      s = r.circuit.evaluate(s);
      continue;
    }
    auto idx = designated(r, i, s);
    if (idx >= r.actions.size())
      throw input_error("invalid action index " + std::to_string(idx) + " at step " + std::to_string(i));
    s = r.actions[idx].circuit.evaluate(s);
  }
  return s;
}

ValidationReport validate(const PlanSeqRepr& r, std::uint64_t cap) {
  ValidationReport rep;
  auto fail = [&](std::uint64_t step, std::string msg) {
    if (!rep.first_bad_step) rep.first_bad_step = step;
    rep.valid = false;
    rep.problems.push_back(std::move(msg));
  };
  try {
    r.validate_shape();
  } catch (const input_error& e) {
    rep.valid = false;
    rep.problems.emplace_back(e.what());
    return rep;
  }
  check_cap(r.N + 1, cap);
  std::map<State, std::uint64_t> seen;
  State s = r.kind == SeqKind::TS ? time_state(r, 0) : r.s0;
  if (s != r.s0) fail(0, "first state " + to_string(s) + " differs from the initial state " + to_string(r.s0));
  for (std::uint64_t t = 0;; ++t) {
    auto [it, fresh] = seen.emplace(s, t);
    if (!fresh && !rep.repetition) {
      rep.repetition = std::make_pair(it->second, t);
      fail(t, "state " + to_string(s) + " at step " + std::to_string(t) + " repeats step " +
                  std::to_string(it->second));
    }
    if (t == r.N) break;
    State next;
    std::optional<std::size_t> witness;
    if (r.kind == SeqKind::TS || r.kind == SeqKind::SS) {
      next = r.kind == SeqKind::TS ? time_state(r, t + 1) : r.circuit.evaluate(s);
      for (std::size_t i = 0; i < r.actions.size() && !witness; ++i)
        if (r.actions[i].circuit.evaluate(s) == next) witness = i;
      if (!witness) fail(t, "no action leads from step " + std::to_string(t) + " to step " + std::to_string(t + 1));
    } else {
      auto idx = designated(r, t, s);
      if (idx >= r.actions.size()) {
        fail(t, "invalid action index " + std::to_string(idx) + " at step " + std::to_string(t));
        rep.witnesses.push_back(std::nullopt);
        break;
      }
      witness = idx;
      next = r.actions[idx].circuit.evaluate(s);
    }
    rep.witnesses.push_back(witness);
    s = std::move(next);
  }
  return rep;
}

// Conversions ----------------------------------------------------------------

namespace {

[[noreturn]] void unsupported(SeqKind from, SeqKind to) {
  std::string reason;
  auto key = std::make_pair(from, to);
  if (key == std::make_pair(SeqKind::SS, SeqKind::TS))
    reason = "the time point problem is hard for next-state sequences but easy for time/state ones";
  else if (key == std::make_pair(SeqKind::TA, SeqKind::TS))
    reason = "the time point problem is hard for time/action sequences but easy for time/state ones";
  else if (key == std::make_pair(SeqKind::TA, SeqKind::SA))
    reason = "the next action problem is hard for time/action sequences but easy for state/action ones";
  else if (key == std::make_pair(SeqKind::SA, SeqKind::TA))
    reason = "the time/action problem is hard for state/action sequences but easy for time/action ones";
  else if (key == std::make_pair(SeqKind::TS, SeqKind::SS))
    reason = "a polynomial translation would invert every injective polynomial-time function";
  else
    reason = "no direct translation is provided; supported directions are SA->SS, SS->SA and TS->TA";
  throw unsupported_direction("cannot convert " + to_string(from) + " to " + to_string(to) + ": " + reason);
}

std::vector<Word> apply_all(CircuitBuilder& b, const ActionSet& actions, const Word& s) {
  std::vector<Word> out;
  for (const auto& a : actions) out.push_back(b.inline_circuit(a.circuit, s));
  return out;
}

} // namespace

PlanSeqRepr convert(const PlanSeqRepr& r, SeqKind target) {
  r.validate_shape();
  if (r.kind == target) return r;
  PlanSeqRepr out = r;
  out.kind = target;
  const unsigned iw = index_width(r.actions);
  if (r.kind == SeqKind::SA && target == SeqKind::SS) {
    CircuitBuilder b("C_SS");
    auto s = b.inputs(r.vars);
    auto idx = b.inline_circuit(r.circuit, s);
    out.circuit = build_action(b, r.vars, b.select(idx, apply_all(b, r.actions, s), s));
  } else if (r.kind == SeqKind::SS && target == SeqKind::SA) {
    if (r.actions.empty()) throw input_error("cannot derive actions from an empty action set");
    CircuitBuilder b("C_SA");
    auto s = b.inputs(r.vars);
    auto next = b.inline_circuit(r.circuit, s);
    std::vector<Var> matches;
    for (const auto& res : apply_all(b, r.actions, s)) matches.push_back(b.equal(res, next));
    b.outputs(numbered("a", iw), first_match(b, matches, iw));
    out.circuit = b.build();
  } else if (r.kind == SeqKind::TS && target == SeqKind::TA) {
    if (r.actions.empty()) throw input_error("cannot derive actions from an empty action set");
    CircuitBuilder b("C_TA");
    auto t = b.inputs(r.circuit.input_names());
    auto now = b.inline_circuit(r.circuit, t);
    auto next = b.inline_circuit(r.circuit, b.increment(t));
    std::vector<Var> matches;
    for (const auto& res : apply_all(b, r.actions, now)) matches.push_back(b.equal(res, next));
    b.outputs(numbered("a", iw), first_match(b, matches, iw));
    out.circuit = b.build();
  } else {
    unsupported(r.kind, target);
  }
  return out;
}

// Generators ------------------------------------------------------------------

namespace {

std::vector<std::string> sat_vars(const Cnf3Encoding& enc, bool with_y) {
  auto vars = numbered("F", enc.m());
  for (auto& n : numbered("M", enc.r)) vars.push_back(n);
  vars.push_back("x");
  if (with_y) vars.push_back("y");
  return vars;
}

void check_sat_caps(const Cnf3Encoding& enc) {
  if (enc.m() + enc.r > 40) throw cap_exceeded("formula encoding too wide for a generated sequence");
}

Var satisfied(CircuitBuilder& b, const Cnf3Encoding& enc, const Word& F, const Word& M) {
  static thread_local std::map<std::pair<unsigned, unsigned>, Circuit> cache;
  auto key = std::make_pair(enc.r, enc.c);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, cnf_eval_circuit(enc)).first;
  return b.inline_circuit(it->second, join({F, M}))[0];
}

} // namespace

std::uint64_t sat_index(const Cnf3Encoding& enc, std::uint64_t k) { return (k + 1) * (pow2(enc.r) + 1); }
std::uint64_t chunk_start(const Cnf3Encoding& enc, std::uint64_t k) { return k * (pow2(enc.r) + 1) + 1; }

PlanSeqRepr gen_sat_sequence(const Cnf3Encoding& enc) {
  check_sat_caps(enc);
  const std::size_t m = enc.m(), r = enc.r;
  auto vars = sat_vars(enc, true);
  CircuitBuilder b("C_SS");
  auto s = b.inputs(vars);
  Word F = slice(s, 0, m), M = slice(s, m, r);
  Var x = s[m + r], y = s[m + r + 1];
  Var sat = satisfied(b, enc, F, M);
  Var ny = b.not_(y);
  Word next = join({b.mux(y, b.increment(F), F), b.mux(y, b.constant_word(0, r), b.increment(M)),
                    {b.and_(ny, b.or_(x, sat)), b.and_(ny, b.all_ones(M))}});
  Circuit c = build_action(b, vars, next);

  PlanSeqRepr out;
  out.kind = SeqKind::SS;
  out.vars = vars;
  out.s0 = State(vars.size(), false);
  out.actions = {{"step", c.renamed("step", c.input_names(), c.output_names())}};
  out.N = enc.formula_count() * (pow2(r) + 1) - 1;
  out.circuit = c;
  return out;
}

PlanSeqRepr gen_sat_timeaction_flag(const Cnf3& f, unsigned r) {
  if (r < 1) throw input_error("need at least one variable");
  if (r > 30) throw cap_exceeded("too many variables for a time/action sequence");
  for (const auto& cl : f)
    for (const auto& l : cl)
      if (l.var < 1 || l.var > r) throw input_error("formula variable out of range");
  std::vector<std::string> vars{"flag"};
  for (auto& n : numbered("T", r)) vars.push_back(n);

  ActionSet actions;
  for (bool set : {true, false}) {
    CircuitBuilder b(set ? "sat" : "unsat");
    auto s = b.inputs(vars);
    Word time = slice(s, 1, r);
    Word next = join({{set ? b.constant(true) : s[0]}, reversed(b.increment(reversed(time)))});
    actions.push_back({set ? "sat" : "unsat", build_action(b, vars, next)});
  }

  CircuitBuilder b("C_TA");
  auto t = b.inputs(numbered("t", r));
  b.output("a1", b.not_(formula_value(b, f, t)));

  PlanSeqRepr out;
  out.kind = SeqKind::TA;
  out.vars = vars;
  out.s0 = State(vars.size(), false);
  out.actions = std::move(actions);
  out.N = pow2(r);
  out.circuit = b.build();
  return out;
}

std::uint64_t timeaction_chunk_length(const Cnf3Encoding& enc) { return pow2(enc.r) + 2; }

PlanSeqRepr gen_sat_timeaction_chunked(const Cnf3Encoding& enc) {
  check_sat_caps(enc);
  const std::size_t m = enc.m(), r = enc.r;
  auto vars = sat_vars(enc, true);
  ActionSet actions;
  for (const std::string name : {"step", "flip", "next"}) {
    CircuitBuilder b(name);
    auto s = b.inputs(vars);
    Word F = slice(s, 0, m), M = slice(s, m, r);
    Var x = s[m + r], y = s[m + r + 1];
    Word next;
    if (name == "step") {
      Var sat = satisfied(b, enc, F, M);
      next = b.mux(y, s, join({F, b.increment(M), {b.or_(x, sat), b.all_ones(M)}}));
    } else if (name == "flip") {
      next = join({F, M, {b.xor_(x, y), y}});
    } else {
      next = b.mux(y, join({b.increment(F), b.constant_word(0, r + 2)}), s);
    }
    actions.push_back({name, build_action(b, vars, next)});
  }

  PlanSeqRepr out;
  out.kind = SeqKind::TA;
  out.vars = vars;
  out.s0 = State(vars.size(), false);
  out.actions = std::move(actions);
  const std::uint64_t len = timeaction_chunk_length(enc);
  out.N = enc.formula_count() * len - 1;
  CircuitBuilder b("C_TA");
  auto t = b.inputs(numbered("t", width_for(out.N)));
  auto [q, j] = b.divmod_const(t, len);
  b.output("a1", b.eq_const(j, len - 1));
  b.output("a2", b.eq_const(j, len - 2));
  out.circuit = b.build();
  return out;
}

PlanSeqRepr gen_sat_stateaction(const Cnf3Encoding& enc) {
  check_sat_caps(enc);
  const std::size_t m = enc.m(), r = enc.r;
  auto vars = sat_vars(enc, false);
  ActionSet actions;
  for (const std::string name : {"ok", "no", "sat", "unsat"}) {
    CircuitBuilder b(name);
    auto s = b.inputs(vars);
    Word F = slice(s, 0, m), M = slice(s, m, r);
    Var x = s[m + r];
    Var sat = satisfied(b, enc, F, M);
    Var last = b.all_ones(M);
    Word advance = join({b.increment(F), b.constant_word(0, r + 1)});
    Word next;
    if (name == "ok") next = b.mux(sat, join({F, b.increment(M), {b.constant(true)}}), s);
    else if (name == "no") next = b.mux(sat, s, join({F, b.increment(M), {x}}));
    else if (name == "sat") next = b.mux(b.and_(last, b.or_(x, sat)), advance, s);
    else next = b.mux(b.and_({last, b.not_(x), b.not_(sat)}), advance, s);
    actions.push_back({name, build_action(b, vars, next)});
  }

  CircuitBuilder b("C_SA");
  auto s = b.inputs(vars);
  Word F = slice(s, 0, m), M = slice(s, m, r);
  Var sat = satisfied(b, enc, F, M);
  Var last = b.all_ones(M);
  b.output("a1", last);
  b.output("a2", b.mux(last, b.not_(b.or_(s[m + r], sat)), b.not_(sat)));

  PlanSeqRepr out;
  out.kind = SeqKind::SA;
  out.vars = vars;
  out.s0 = State(vars.size(), false);
  out.actions = std::move(actions);
  out.N = enc.formula_count() * pow2(r) - 1;
  out.circuit = b.build();
  return out;
}

PlanSeqRepr gen_function_pair_sequence(const Circuit& f) {
  const std::size_t n = f.num_inputs();
  if (f.num_outputs() != n || n == 0) throw input_error("function circuit must map n > 0 bits to n bits");
  if (n > 12) throw cap_exceeded("function sequence: tabulated action limited to 12 bits");
  auto vars = numbered("v", n);
  vars.push_back("b");

  CircuitBuilder b("C_TS");
  auto t = b.inputs(numbered("t", n + 1));
  Word x = slice(t, 0, n);
  Var bit = t[n];
  Word fx = b.inline_circuit(f, x);
  b.outputs(vars, join({b.mux(bit, x, fx), {bit}}));

  // Successor table: f(x)0 -> x1 -> f(x+1)0; states off the sequence are fixed.
  std::vector<std::uint64_t> image(pow2(n));
  std::map<std::uint64_t, std::uint64_t> preimage;
  for (std::uint64_t v = 0; v < image.size(); ++v) {
    image[v] = from_bits(f.evaluate(to_bits(v, static_cast<unsigned>(n))));
    preimage.emplace(image[v], v);
  }
  auto next = truth_table_circuit("next", vars, suffixed(vars, "_next"), [&](const Bits& s) {
    std::uint64_t y = from_bits(s, 0, n);
    if (!s[n]) {
      auto it = preimage.find(y);
      if (it == preimage.end()) return s;
      return concat(to_bits(it->second, static_cast<unsigned>(n)), {true});
    }
    if (y + 1 >= image.size()) return s;
    return concat(to_bits(image[y + 1], static_cast<unsigned>(n)), {false});
  });

  PlanSeqRepr out;
  out.kind = SeqKind::TS;
  out.vars = vars;
  out.circuit = b.build();
  out.s0 = out.circuit.evaluate(State(n + 1, false));
  out.actions = {{"next", next}};
  out.N = pow2(n + 1) - 1;
  return out;
}

PlanSeqRepr gen_function_chunk_sequence(const Circuit& f) {
  const std::size_t n = f.num_inputs();
  if (f.num_outputs() != n || n == 0) throw input_error("function circuit must map n > 0 bits to n bits");
  if (n > 24) throw cap_exceeded("function sequence too long");
  auto vars = numbered("A", n);
  for (auto& v : numbered("B", n)) vars.push_back(v);
  for (auto& v : numbered("C", n)) vars.push_back(v);

  ActionSet actions;
  for (bool value : {false, true})
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = (value ? "set" : "clear") + std::to_string(i + 1);
      CircuitBuilder b(name);
      auto s = b.inputs(vars);
      Word next = s;
      next[n + i] = b.constant(value);
      next[2 * n + i] = b.constant(true);
      actions.push_back({name, build_action(b, vars, next)});
    }
  {
    CircuitBuilder b("advance");
    auto s = b.inputs(vars);
    Word B = slice(s, n, n), C = slice(s, 2 * n, n);
    Word fx = b.inline_circuit(f, b.increment(B));
    actions.push_back({"advance", build_action(b, vars, b.mux(b.all_ones(C), join({fx, fx, b.constant_word(0, n)}), s))});
  }

  PlanSeqRepr out;
  out.kind = SeqKind::TS;
  out.vars = vars;
  out.actions = std::move(actions);
  out.N = pow2(n) * (n + 1) - 1;
  CircuitBuilder b("C_TS");
  auto t = b.inputs(numbered("t", width_for(out.N + 1)));
  auto [q, j] = b.divmod_const(t, n + 1);
  Word x = slice(q, q.size() - n, n);
  Word fx = b.inline_circuit(f, x);
  Word B, C;
  for (std::size_t i = 0; i < n; ++i) {
    Var done = b.ge_const(j, i + 1);
    C.push_back(done);
    B.push_back(b.mux(done, x[i], fx[i]));
  }
  b.outputs(vars, join({fx, B, C}));
  out.circuit = b.build();
  out.s0 = out.circuit.evaluate(State(out.circuit.num_inputs(), false));
  return out;
}

} // namespace succinct
