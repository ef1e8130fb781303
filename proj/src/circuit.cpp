#include "succinct/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "succinct/error.hpp"

namespace succinct {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::True: return "TRUE";
    case Op::False: return "FALSE";
    case Op::Id: return "ID";
    case Op::Not: return "NOT";
    case Op::And: return "AND";
    case Op::Or: return "OR";
  }
  return "?";
}

Op parse_op(std::string_view name) {
  if (name == "TRUE") return Op::True;
  if (name == "FALSE") return Op::False;
  if (name == "ID") return Op::Id;
  if (name == "NOT") return Op::Not;
  if (name == "AND") return Op::And;
  if (name == "OR") return Op::Or;
  throw input_error("unknown gate operator '" + std::string(name) + "'");
}

bool op_is_costed(Op op) { return op == Op::And || op == Op::Or || op == Op::Not; }

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void check_arity(Op op, std::size_t n, const std::string& target) {
  bool ok = true;
  switch (op) {
    case Op::True:
    case Op::False: ok = n == 0; break;
    case Op::Id:
    case Op::Not: ok = n == 1; break;
    case Op::And:
    case Op::Or: ok = n >= 1; break;
  }
  if (!ok)
    throw input_error("gate '" + target + "': operator " + std::string(op_name(op)) + " has wrong arity " +
                      std::to_string(n));
}

} // namespace

Circuit::Circuit(std::string name, std::vector<std::string> inputs, std::vector<NamedGate> gates,
                 std::vector<std::string> outputs)
    : name_(std::move(name)), num_inputs_(inputs.size()) {
  std::map<std::string, std::uint32_t> index;
  std::set<std::string> targets;
  for (const auto& g : gates) targets.insert(g.target);
  for (auto& in : inputs) {
    if (!is_identifier(in)) throw input_error("circuit '" + name_ + "': bad input name '" + in + "'");
    if (!index.emplace(in, static_cast<std::uint32_t>(names_.size())).second)
      throw input_error("circuit '" + name_ + "': duplicate input '" + in + "'");
    names_.push_back(std::move(in));
  }
  gates_.reserve(gates.size());
  for (auto& g : gates) {
    if (!is_identifier(g.target)) throw input_error("circuit '" + name_ + "': bad gate target '" + g.target + "'");
    check_arity(g.op, g.operands.size(), g.target);
    Gate gate{g.op, {}};
    gate.operands.reserve(g.operands.size());
    for (const auto& o : g.operands) {
      auto it = index.find(o);
      if (it == index.end()) {
        if (targets.count(o))
          throw input_error("circuit '" + name_ + "': gate '" + g.target + "' reads '" + o +
                            "' before its definition (topological order violation)");
        throw input_error("circuit '" + name_ + "': gate '" + g.target + "' reads undefined variable '" + o + "'");
      }
      gate.operands.push_back(it->second);
    }
    if (!index.emplace(g.target, static_cast<std::uint32_t>(names_.size())).second)
      throw input_error("circuit '" + name_ + "': variable '" + g.target + "' defined twice");
    names_.push_back(std::move(g.target));
    gates_.push_back(std::move(gate));
  }
  offsets_.push_back(0);
  for (const auto& g : gates_) {
    ops_.push_back(g.op);
    flat_operands_.insert(flat_operands_.end(), g.operands.begin(), g.operands.end());
    offsets_.push_back(static_cast<std::uint32_t>(flat_operands_.size()));
  }
  is_output_.assign(names_.size(), false);
  for (const auto& o : outputs) {
    auto it = index.find(o);
    if (it == index.end() || it->second < num_inputs_)
      throw input_error("circuit '" + name_ + "': output '" + o + "' has no defining gate");
    if (is_output_[it->second]) throw input_error("circuit '" + name_ + "': duplicate output '" + o + "'");
    is_output_[it->second] = true;
    outputs_.push_back(it->second);
  }
}

bool Circuit::is_output(std::uint32_t v) const { return v < is_output_.size() && is_output_[v]; }

std::vector<std::string> Circuit::input_names() const {
  return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(num_inputs_)};
}

std::vector<std::string> Circuit::output_names() const {
  std::vector<std::string> out;
  for (auto v : outputs_) out.push_back(names_[v]);
  return out;
}

std::vector<std::string> Circuit::internal_names() const {
  std::vector<std::string> out;
  for (std::size_t v = num_inputs_; v < names_.size(); ++v)
    if (!is_output_[v]) out.push_back(names_[v]);
  return out;
}

std::vector<NamedGate> Circuit::named_gates() const {
  std::vector<NamedGate> out;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    NamedGate ng{names_[num_inputs_ + g], gates_[g].op, {}};
    for (auto o : gates_[g].operands) ng.operands.push_back(names_[o]);
    out.push_back(std::move(ng));
  }
  return out;
}

namespace {
thread_local std::vector<std::uint8_t> eval_values;
}

void Circuit::run(const Bits& input) const {
  if (input.size() != num_inputs_)
    throw input_error("circuit '" + name_ + "': expected " + std::to_string(num_inputs_) + " input bits, got " +
                      std::to_string(input.size()));
  auto& val = eval_values;
  val.resize(names_.size());
  for (std::size_t i = 0; i < num_inputs_; ++i) val[i] = input[i];
  std::size_t v = num_inputs_;
  const std::uint32_t* operands = flat_operands_.data();
  for (std::size_t g = 0; g < ops_.size(); ++g, ++v) {
    const std::uint32_t* first = operands + offsets_[g];
    const std::uint32_t* last = operands + offsets_[g + 1];
    std::uint8_t r = 0;
    switch (ops_[g]) {
      case Op::True: r = 1; break;
      case Op::False: r = 0; break;
      case Op::Id: r = val[*first]; break;
      case Op::Not: r = val[*first] ^ 1U; break;
      case Op::And:
        r = 1;
        for (; first != last && r; ++first) r = val[*first];
        break;
      case Op::Or:
        r = 0;
        for (; first != last && !r; ++first) r = val[*first];
        break;
    }
    val[v] = r;
  }
}

Bits Circuit::evaluate_all(const Bits& input) const {
  run(input);
  return Bits(eval_values.begin(), eval_values.end());
}

void Circuit::evaluate_into(const Bits& input, Bits& output) const {
  run(input);
  output.resize(outputs_.size());
  for (std::size_t i = 0; i < outputs_.size(); ++i) output[i] = eval_values[outputs_[i]];
}

Bits Circuit::evaluate(const Bits& input) const {
  Bits out;
  evaluate_into(input, out);
  return out;
}

std::size_t Circuit::size() const {
  std::size_t s = 0;
  for (const auto& g : gates_) {
    if (op_is_costed(g.op)) ++s;
    for (auto o : g.operands)
      if (o < num_inputs_) ++s;
  }
  return s;
}

Circuit Circuit::renamed(std::string name, const std::vector<std::string>& inputs,
                         const std::vector<std::string>& outputs) const {
  if (inputs.size() != num_inputs_ || outputs.size() != outputs_.size())
    throw input_error("renamed: arity mismatch for circuit '" + name_ + "'");
  std::vector<std::string> names = names_;
  for (std::size_t i = 0; i < inputs.size(); ++i) names[i] = inputs[i];
  for (std::size_t i = 0; i < outputs.size(); ++i) names[outputs_[i]] = outputs[i];
  // Internal names must not collide with the new interface names.
  std::set<std::string> reserved(inputs.begin(), inputs.end());
  reserved.insert(outputs.begin(), outputs.end());
  std::size_t counter = 0;
  for (std::size_t v = num_inputs_; v < names.size(); ++v) {
    if (is_output_[v] || !reserved.count(names[v])) continue;
    std::string fresh;
    do fresh = "z" + std::to_string(++counter) + "_";
    while (reserved.count(fresh) || std::find(names.begin(), names.end(), fresh) != names.end());
    names[v] = fresh;
  }
  std::vector<NamedGate> gates;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    NamedGate ng{names[num_inputs_ + g], gates_[g].op, {}};
    for (auto o : gates_[g].operands) ng.operands.push_back(names[o]);
    gates.push_back(std::move(ng));
  }
  return Circuit(std::move(name), inputs, std::move(gates), outputs);
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.name_ != b.name_ || a.num_inputs_ != b.num_inputs_ || a.names_ != b.names_ || a.outputs_ != b.outputs_ ||
      a.gates_.size() != b.gates_.size())
    return false;
  for (std::size_t i = 0; i < a.gates_.size(); ++i)
    if (a.gates_[i].op != b.gates_[i].op || a.gates_[i].operands != b.gates_[i].operands) return false;
  return true;
}

Formula gate_formula(Op op, const std::vector<Formula>& operands) {
  switch (op) {
    case Op::True: return Formula::constant(true);
    case Op::False: return Formula::constant(false);
    case Op::Id: return operands[0];
    case Op::Not: return Formula::negate(operands[0]);
    case Op::And: return Formula::conj(operands);
    case Op::Or: return Formula::disj(operands);
  }
  return Formula::constant(false);
}

Formula u_transform(const Circuit& c) {
  std::vector<Formula> parts;
  for (std::size_t g = 0; g < c.num_gates(); ++g) {
    const auto& gate = c.gates()[g];
    std::vector<Formula> ops;
    for (auto o : gate.operands) ops.push_back(Formula::atom(c.variable_name(o)));
    parts.push_back(Formula::differs(Formula::atom(c.variable_name(static_cast<std::uint32_t>(c.num_inputs() + g))),
                                     gate_formula(gate.op, ops)));
  }
  return Formula::disj(std::move(parts));
}

Formula circuit_formula(const Circuit& c) {
  std::vector<Formula> parts;
  for (std::size_t g = 0; g < c.num_gates(); ++g) {
    const auto& gate = c.gates()[g];
    std::vector<Formula> ops;
    for (auto o : gate.operands) ops.push_back(Formula::atom(c.variable_name(o)));
    parts.push_back(Formula::iff(Formula::atom(c.variable_name(static_cast<std::uint32_t>(c.num_inputs() + g))),
                                 gate_formula(gate.op, ops)));
  }
  return Formula::conj(std::move(parts));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Candidate {
  Op op;
  std::vector<std::uint32_t> operands;
  std::size_t cost;
};

std::size_t candidate_cost(Op op, const std::vector<std::uint32_t>& operands, std::size_t num_inputs) {
  std::size_t c = op_is_costed(op) ? 1 : 0;
  for (auto o : operands)
    if (o < num_inputs) ++c;
  return c;
}

// Internal gates: NOT(a) and AND/OR over subsets of size >= 2.
std::vector<Candidate> logic_candidates(std::size_t vars, std::size_t num_inputs, std::size_t budget) {
  std::vector<Candidate> out;
  for (std::uint32_t a = 0; a < vars; ++a) {
    std::vector<std::uint32_t> ops{a};
    auto cost = candidate_cost(Op::Not, ops, num_inputs);
    if (cost <= budget) out.push_back({Op::Not, ops, cost});
  }
  if (vars >= 2) {
    if (vars > 24) throw cap_exceeded("enumerate_circuits: too many variables for subset enumeration");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars); ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      std::vector<std::uint32_t> ops;
      for (std::uint32_t b = 0; b < vars; ++b)
        if (mask >> b & 1U) ops.push_back(b);
      auto cost = candidate_cost(Op::And, ops, num_inputs);
      if (cost > budget) continue;
      out.push_back({Op::And, ops, cost});
      out.push_back({Op::Or, ops, cost});
    }
  }
  return out;
}

auto internal_key(const Candidate& c) {
  return std::make_tuple(c.operands.back(), static_cast<int>(c.op), c.operands);
}

struct Found {
  std::size_t size;
  std::vector<std::uint32_t> encoding;
  std::vector<Candidate> internals;
  std::vector<Candidate> outputs;
};

class Enumerator {
public:
  Enumerator(std::size_t n, std::size_t m, std::size_t budget, std::size_t cap)
      : n_(n), m_(m), budget_(budget), cap_(cap) {}

  std::vector<Found> run() {
    std::vector<Candidate> internals;
    extend(internals, 0);
    return std::move(found_);
  }

private:
  std::size_t n_, m_, budget_, cap_;
  std::vector<Found> found_;
  std::map<std::size_t, std::vector<Candidate>> output_cache_, internal_cache_;

  const std::vector<Candidate>& internal_candidates(std::size_t vars) {
    auto it = internal_cache_.find(vars);
    if (it == internal_cache_.end())
      it = internal_cache_.emplace(vars, logic_candidates(vars, n_, budget_)).first;
    return it->second;
  }

  const std::vector<Candidate>& output_candidates(std::size_t vars) {
    auto it = output_cache_.find(vars);
    if (it != output_cache_.end()) return it->second;
    std::vector<Candidate> out{{Op::True, {}, 0}, {Op::False, {}, 0}};
    for (std::uint32_t i = 0; i < vars; ++i) out.push_back({Op::Id, {i}, i < n_ ? std::size_t{1} : 0});
    auto logic = logic_candidates(vars, n_, budget_);
    out.insert(out.end(), logic.begin(), logic.end());
    return output_cache_.emplace(vars, std::move(out)).first->second;
  }

  void extend(std::vector<Candidate>& internals, std::size_t cost) {
    std::vector<Candidate> outs;
    choose_outputs(internals, outs, cost);
    const std::size_t vars = n_ + internals.size();
    // Copy: the cache may rehash during recursion.
    const std::vector<Candidate> cands = internal_candidates(vars);
    for (const auto& c : cands) {
      if (cost + c.cost > budget_) continue;
      if (!internals.empty() && !(internal_key(internals.back()) < internal_key(c))) continue;
      internals.push_back(c);
      extend(internals, cost + c.cost);
      internals.pop_back();
    }
  }

  void choose_outputs(const std::vector<Candidate>& internals, std::vector<Candidate>& outs, std::size_t cost) {
    if (outs.size() == m_) {
      record(internals, outs, cost);
      return;
    }
    const std::size_t vars = n_ + internals.size();
    const std::vector<Candidate> cands = output_candidates(vars);
    for (const auto& c : cands) {
      if (cost + c.cost > budget_) continue;
      outs.push_back(c);
      choose_outputs(internals, outs, cost + c.cost);
      outs.pop_back();
    }
  }

  void record(const std::vector<Candidate>& internals, const std::vector<Candidate>& outs, std::size_t cost) {
    std::vector<std::size_t> uses(internals.size(), 0);
    auto mark = [&](const Candidate& c) {
      for (auto o : c.operands)
        if (o >= n_) ++uses[o - n_];
    };
    for (const auto& c : internals) mark(c);
    for (const auto& c : outs) mark(c);
    if (std::find(uses.begin(), uses.end(), 0) != uses.end()) return;
    // An internal gate read only by one output ID could have been that output.
    for (const auto& c : outs)
      if (c.op == Op::Id && c.operands[0] >= n_ && uses[c.operands[0] - n_] < 2) return;
    if (found_.size() >= cap_)
      throw cap_exceeded("enumerate_circuits: more than " + std::to_string(cap_) + " circuits");
    Found f{cost, {static_cast<std::uint32_t>(internals.size())}, internals, outs};
    auto encode = [&](const Candidate& c) {
      f.encoding.push_back(static_cast<std::uint32_t>(c.op));
      f.encoding.push_back(static_cast<std::uint32_t>(c.operands.size()));
      f.encoding.insert(f.encoding.end(), c.operands.begin(), c.operands.end());
    };
    for (const auto& c : internals) encode(c);
    for (const auto& c : outs) encode(c);
    found_.push_back(std::move(f));
  }
};

} // namespace

std::vector<Circuit> enumerate_circuits(const std::vector<std::string>& inputs,
                                        const std::vector<std::string>& outputs, std::size_t max_size,
                                        EnumerationLimits limits) {
  const std::size_t n = inputs.size();
  auto found = Enumerator(n, outputs.size(), max_size, limits.max_count).run();
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return std::tie(a.size, a.encoding) < std::tie(b.size, b.encoding);
  });

  std::set<std::string> reserved(inputs.begin(), inputs.end());
  reserved.insert(outputs.begin(), outputs.end());
  std::vector<std::string> internal_names;
  for (std::size_t k = 1; internal_names.size() < max_size; ++k) {
    std::string nm = "z" + std::to_string(k);
    while (reserved.count(nm)) nm = "_" + nm;
    internal_names.push_back(nm);
  }

  std::vector<Circuit> result;
  result.reserve(found.size());
  for (const auto& f : found) {
    std::vector<std::string> names = inputs;
    for (std::size_t i = 0; i < f.internals.size(); ++i) names.push_back(internal_names[i]);
    std::vector<NamedGate> gates;
    auto named = [&](const std::string& target, const Candidate& c) {
      NamedGate g{target, c.op, {}};
      for (auto o : c.operands) g.operands.push_back(names[o]);
      return g;
    };
    for (std::size_t i = 0; i < f.internals.size(); ++i) gates.push_back(named(internal_names[i], f.internals[i]));
    for (std::size_t j = 0; j < f.outputs.size(); ++j) gates.push_back(named(outputs[j], f.outputs[j]));
    result.emplace_back("enum", inputs, std::move(gates), outputs);
  }
  return result;
}

std::vector<Circuit> enumerate_circuits(std::size_t num_inputs, std::size_t num_outputs, std::size_t max_size,
                                        EnumerationLimits limits) {
  std::vector<std::string> in, out;
  for (std::size_t i = 1; i <= num_inputs; ++i) in.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= num_outputs; ++i) out.push_back("o" + std::to_string(i));
  return enumerate_circuits(in, out, max_size, limits);
}

} // namespace succinct
