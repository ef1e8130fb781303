#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/formula.hpp"

namespace succinct {

/// Incremental circuit construction with constant folding and structural
/// sharing. Words are big-endian vectors of variables (index 0 is the MSB).
/// Gates not reachable from an output are dropped by build().
class CircuitBuilder {
public:
  using Var = std::uint32_t;
  using Word = std::vector<Var>;

  explicit CircuitBuilder(std::string name) : name_(std::move(name)) {}

  Var input(std::string name);
  Word inputs(const std::vector<std::string>& names);

  Var constant(bool value);
  Word constant_word(std::uint64_t value, std::size_t width);

  Var not_(Var a);
  Var and_(std::vector<Var> ops);
  Var or_(std::vector<Var> ops);
  Var and_(Var a, Var b) { return and_(std::vector<Var>{a, b}); }
  Var or_(Var a, Var b) { return or_(std::vector<Var>{a, b}); }
  Var xor_(Var a, Var b);
  Var xnor_(Var a, Var b) { return not_(xor_(a, b)); }
  Var implies(Var a, Var b) { return or_(not_(a), b); }
  /// sel ? when_true : when_false
  Var mux(Var sel, Var when_true, Var when_false);
  Word mux(Var sel, const Word& when_true, const Word& when_false);

  Var equal(const Word& a, const Word& b);
  Var eq_const(const Word& a, std::uint64_t value);
  Var ge_const(const Word& a, std::uint64_t value);
  Var all_ones(const Word& a) { return and_(a); }
  Var any(const Word& a) { return or_(a); }

  /// (a + value) mod 2^width
  Word add_const(const Word& a, std::uint64_t value);
  Word increment(const Word& a) { return add_const(a, 1); }
  Word sub_const(const Word& a, std::uint64_t value);
  /// Quotient and remainder by a positive constant; quotient has a's width,
  /// remainder has width_for(divisor) bits.
  std::pair<Word, Word> divmod_const(const Word& a, std::uint64_t divisor);

  /// options[index]; fallback when index >= options.size().
  Word select(const Word& index, const std::vector<Word>& options, const Word& fallback);

  /// Copies `c` with its inputs bound to `args`; returns its outputs.
  std::vector<Var> inline_circuit(const Circuit& c, const std::vector<Var>& args);

  /// Gates computing `f`; every atom must be bound in `atoms`.
  Var formula(const Formula& f, const std::map<std::string, Var>& atoms);

  void output(const std::string& name, Var v);
  void outputs(const std::vector<std::string>& names, const Word& vs);

  Circuit build() const;

private:
  struct Node {
    bool is_input;
    Op op;
    std::vector<Var> operands;
  };
  Var make(Op op, std::vector<Var> operands);
  int const_value(Var v) const;

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<std::string> input_names_;
  std::vector<Var> input_vars_;
  std::vector<std::pair<std::string, Var>> outputs_;
  std::map<std::pair<Op, std::vector<Var>>, Var> cache_;
  std::map<Var, Var> negation_of_;
};

} // namespace succinct
