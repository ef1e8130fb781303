#include "succinct/circuit_builder.hpp"

#include <algorithm>
#include <set>

#include "succinct/error.hpp"

namespace succinct {

CircuitBuilder::Var CircuitBuilder::input(std::string name) {
  Var v = static_cast<Var>(nodes_.size());
  nodes_.push_back({true, Op::Id, {}});
  input_names_.push_back(std::move(name));
  input_vars_.push_back(v);
  return v;
}

CircuitBuilder::Word CircuitBuilder::inputs(const std::vector<std::string>& names) {
  Word w;
  for (const auto& n : names) w.push_back(input(n));
  return w;
}

CircuitBuilder::Var CircuitBuilder::make(Op op, std::vector<Var> operands) {
  auto key = std::make_pair(op, operands);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Var v = static_cast<Var>(nodes_.size());
  nodes_.push_back({false, op, std::move(operands)});
  cache_.emplace(std::move(key), v);
  return v;
}

int CircuitBuilder::const_value(Var v) const {
  const auto& n = nodes_[v];
  if (n.is_input) return -1;
  if (n.op == Op::True) return 1;
  if (n.op == Op::False) return 0;
  return -1;
}

CircuitBuilder::Var CircuitBuilder::constant(bool value) { return make(value ? Op::True : Op::False, {}); }

CircuitBuilder::Word CircuitBuilder::constant_word(std::uint64_t value, std::size_t width) {
  Word w;
  for (bool b : to_bits(value, width)) w.push_back(constant(b));
  return w;
}

CircuitBuilder::Var CircuitBuilder::not_(Var a) {
  if (int c = const_value(a); c >= 0) return constant(c == 0);
  if (auto it = negation_of_.find(a); it != negation_of_.end()) return it->second;
  Var v = make(Op::Not, {a});
  negation_of_[v] = a;
  negation_of_[a] = v;
  return v;
}

CircuitBuilder::Var CircuitBuilder::and_(std::vector<Var> ops) {
  std::vector<Var> kept;
  for (Var o : ops) {
    int c = const_value(o);
    if (c == 0) return constant(false);
    if (c == 1) continue;
    kept.push_back(o);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Var o : kept)
    if (auto it = negation_of_.find(o); it != negation_of_.end() &&
                                        std::binary_search(kept.begin(), kept.end(), it->second))
      return constant(false);
  if (kept.empty()) return constant(true);
  if (kept.size() == 1) return kept.front();
  return make(Op::And, std::move(kept));
}

CircuitBuilder::Var CircuitBuilder::or_(std::vector<Var> ops) {
  std::vector<Var> kept;
  for (Var o : ops) {
    int c = const_value(o);
    if (c == 1) return constant(true);
    if (c == 0) continue;
    kept.push_back(o);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Var o : kept)
    if (auto it = negation_of_.find(o); it != negation_of_.end() &&
                                        std::binary_search(kept.begin(), kept.end(), it->second))
      return constant(true);
  if (kept.empty()) return constant(false);
  if (kept.size() == 1) return kept.front();
  return make(Op::Or, std::move(kept));
}

CircuitBuilder::Var CircuitBuilder::xor_(Var a, Var b) {
  int ca = const_value(a), cb = const_value(b);
  if (ca >= 0) return ca ? not_(b) : b;
  if (cb >= 0) return cb ? not_(a) : a;
  return or_(and_(a, not_(b)), and_(not_(a), b));
}

CircuitBuilder::Var CircuitBuilder::mux(Var sel, Var when_true, Var when_false) {
  if (int c = const_value(sel); c >= 0) return c ? when_true : when_false;
  if (when_true == when_false) return when_true;
  return or_(and_(sel, when_true), and_(not_(sel), when_false));
}

CircuitBuilder::Word CircuitBuilder::mux(Var sel, const Word& when_true, const Word& when_false) {
  if (when_true.size() != when_false.size()) throw input_error("mux: word widths differ");
  Word out;
  for (std::size_t i = 0; i < when_true.size(); ++i) out.push_back(mux(sel, when_true[i], when_false[i]));
  return out;
}

CircuitBuilder::Var CircuitBuilder::equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw input_error("equal: word widths differ");
  std::vector<Var> parts;
  for (std::size_t i = 0; i < a.size(); ++i) parts.push_back(xnor_(a[i], b[i]));
  return and_(parts);
}

CircuitBuilder::Var CircuitBuilder::eq_const(const Word& a, std::uint64_t value) {
  if (a.size() < 64 && value >> a.size()) return constant(false);
  Bits bits = to_bits(value, a.size());
  std::vector<Var> lits;
  for (std::size_t i = 0; i < a.size(); ++i) lits.push_back(bits[i] ? a[i] : not_(a[i]));
  return and_(lits);
}

CircuitBuilder::Var CircuitBuilder::ge_const(const Word& a, std::uint64_t value) {
  if (a.size() < 64 && value >> a.size()) return constant(false);
  Bits bits = to_bits(value, a.size());
  Var rest = constant(true);
  for (std::size_t i = a.size(); i-- > 0;) rest = bits[i] ? and_(a[i], rest) : or_(a[i], rest);
  return rest;
}

CircuitBuilder::Word CircuitBuilder::add_const(const Word& a, std::uint64_t value) {
  const std::size_t w = a.size();
  Bits k = to_bits(w < 64 ? value & ((std::uint64_t{1} << w) - 1) : value, w);
  Word out(w);
  Var carry = constant(false);
  for (std::size_t i = w; i-- > 0;) {
    if (k[i]) {
      out[i] = xnor_(a[i], carry);
      carry = or_(a[i], carry);
    } else {
      out[i] = xor_(a[i], carry);
      carry = and_(a[i], carry);
    }
  }
  return out;
}

CircuitBuilder::Word CircuitBuilder::sub_const(const Word& a, std::uint64_t value) {
  const std::size_t w = a.size();
  std::uint64_t mask = w < 64 ? (std::uint64_t{1} << w) - 1 : ~std::uint64_t{0};
  return add_const(a, (~(value & mask) + 1) & mask);
}

std::pair<CircuitBuilder::Word, CircuitBuilder::Word> CircuitBuilder::divmod_const(const Word& a,
                                                                                 std::uint64_t divisor) {
  if (divisor == 0) throw input_error("divmod_const: division by zero");
  const std::size_t rw = width_for(divisor);
  Word rem = constant_word(0, rw + 1);
  Word quotient;
  for (Var bit : a) {
    Word shifted(rem.begin() + 1, rem.end());
    shifted.push_back(bit);
    Var take = ge_const(shifted, divisor);
    quotient.push_back(take);
    rem = mux(take, sub_const(shifted, divisor), shifted);
  }
  return {quotient, Word(rem.begin() + 1, rem.end())};
}

CircuitBuilder::Word CircuitBuilder::select(const Word& index, const std::vector<Word>& options,
                                            const Word& fallback) {
  const std::size_t width = fallback.size();
  std::vector<std::vector<Var>> terms(width);
  std::vector<Var> hits;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i].size() != width) throw input_error("select: option widths differ");
    Var hit = eq_const(index, i);
    if (const_value(hit) == 0) continue;
    hits.push_back(hit);
    for (std::size_t b = 0; b < width; ++b) terms[b].push_back(and_(hit, options[i][b]));
  }
  Var none = not_(or_(hits));
  Word out;
  for (std::size_t b = 0; b < width; ++b) {
    terms[b].push_back(and_(none, fallback[b]));
    out.push_back(or_(terms[b]));
  }
  return out;
}

std::vector<CircuitBuilder::Var> CircuitBuilder::inline_circuit(const Circuit& c, const std::vector<Var>& args) {
  if (args.size() != c.num_inputs())
    throw input_error("inline_circuit: circuit '" + c.name() + "' expects " + std::to_string(c.num_inputs()) +
                      " inputs");
  std::vector<Var> map(args);
  for (const auto& g : c.gates()) {
    std::vector<Var> ops;
    for (auto o : g.operands) ops.push_back(map[o]);
    Var v = 0;
    switch (g.op) {
      case Op::True: v = constant(true); break;
      case Op::False: v = constant(false); break;
      case Op::Id: v = ops[0]; break;
      case Op::Not: v = not_(ops[0]); break;
      case Op::And: v = and_(ops); break;
      case Op::Or: v = or_(ops); break;
    }
    map.push_back(v);
  }
  std::vector<Var> out;
  for (auto o : c.outputs()) out.push_back(map[o]);
  return out;
}

CircuitBuilder::Var CircuitBuilder::formula(const Formula& f, const std::map<std::string, Var>& atoms) {
  std::vector<Var> kids;
  for (const auto& c : f.children()) kids.push_back(formula(c, atoms));
  switch (f.kind()) {
    case FormulaKind::Const: return constant(f.value());
    case FormulaKind::Atom: {
      auto it = atoms.find(f.name());
      if (it == atoms.end()) throw input_error("unbound atom '" + f.name() + "'");
      return it->second;
    }
    case FormulaKind::Not: return not_(kids[0]);
    case FormulaKind::And: return and_(kids);
    case FormulaKind::Or: return or_(kids);
    case FormulaKind::Implies: return implies(kids[0], kids[1]);
    case FormulaKind::Iff: return xnor_(kids[0], kids[1]);
  }
  return constant(false);
}

void CircuitBuilder::output(const std::string& name, Var v) { outputs_.emplace_back(name, v); }

void CircuitBuilder::outputs(const std::vector<std::string>& names, const Word& vs) {
  if (names.size() != vs.size()) throw input_error("outputs: name count differs from word width");
  for (std::size_t i = 0; i < names.size(); ++i) output(names[i], vs[i]);
}

Circuit CircuitBuilder::build() const {
  std::vector<bool> live(nodes_.size(), false);
  std::vector<Var> stack;
  for (const auto& [n, v] : outputs_) stack.push_back(v);
  while (!stack.empty()) {
    Var v = stack.back();
    stack.pop_back();
    if (live[v]) continue;
    live[v] = true;
    for (Var o : nodes_[v].operands) stack.push_back(o);
  }

  std::set<std::string> reserved(input_names_.begin(), input_names_.end());
  for (const auto& [n, v] : outputs_) reserved.insert(n);

  // Each output either names a distinct gate or becomes an ID gate.
  std::vector<std::string> names(nodes_.size());
  for (std::size_t i = 0; i < input_vars_.size(); ++i) names[input_vars_[i]] = input_names_[i];
  std::vector<std::pair<std::string, Var>> id_outputs;
  std::vector<bool> named(nodes_.size(), false);
  for (const auto& [n, v] : outputs_) {
    if (!nodes_[v].is_input && !named[v]) {
      names[v] = n;
      named[v] = true;
    } else {
      id_outputs.emplace_back(n, v);
    }
  }
  std::size_t counter = 0;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].is_input || named[v] || !live[v]) continue;
    std::string nm;
    do nm = "g" + std::to_string(++counter);
    while (reserved.count(nm));
    names[v] = nm;
  }

  std::vector<NamedGate> gates;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].is_input || !live[v]) continue;
    NamedGate g{names[v], nodes_[v].op, {}};
    for (Var o : nodes_[v].operands) g.operands.push_back(names[o]);
    gates.push_back(std::move(g));
  }
  for (const auto& [n, v] : id_outputs) gates.push_back({n, Op::Id, {names[v]}});

  std::vector<std::string> outs;
  for (const auto& [n, v] : outputs_) outs.push_back(n);
  return Circuit(name_, input_names_, std::move(gates), std::move(outs));
}

Circuit truth_table_circuit(std::string name, const std::vector<std::string>& inputs,
                            const std::vector<std::string>& outputs, const std::function<Bits(const Bits&)>& fn) {
  if (inputs.size() > 20) throw cap_exceeded("truth_table_circuit: too many inputs");
  CircuitBuilder b(std::move(name));
  auto in = b.inputs(inputs);
  std::vector<std::vector<CircuitBuilder::Var>> terms(outputs.size());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << inputs.size()); ++x) {
    Bits xb = to_bits(x, inputs.size());
    Bits y = fn(xb);
    if (y.size() != outputs.size()) throw input_error("truth_table_circuit: function returned wrong width");
    if (std::none_of(y.begin(), y.end(), [](bool v) { return v; })) continue;
    auto minterm = b.eq_const(in, x);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j]) terms[j].push_back(minterm);
  }
  for (std::size_t j = 0; j < outputs.size(); ++j) b.output(outputs[j], b.or_(terms[j]));
  return b.build();
}

} // namespace succinct
