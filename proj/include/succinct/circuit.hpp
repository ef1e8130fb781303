#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/bits.hpp"
#include "succinct/formula.hpp"

namespace succinct {

enum class Op : std::uint8_t { True, False, Id, Not, And, Or };

std::string_view op_name(Op op);
Op parse_op(std::string_view name);
/// AND, OR and NOT carry a unit gate cost; ID, TRUE and FALSE are free.
bool op_is_costed(Op op);

/// A gate as written in text: target variable, operator, operand names.
struct NamedGate {
  std::string target;
  Op op;
  std::vector<std::string> operands;
};

/// Single-operator gate over variable indices. Variable i < num_inputs is an
/// input; variable num_inputs + g is the target of gate g.
struct Gate {
  Op op;
  std::vector<std::uint32_t> operands;
};

/// Boolean circuit: inputs, then gates in topological (definition) order.
/// Outputs are gate targets; every other gate target is internal.
class Circuit {
public:
  Circuit() = default;
  /// Validates the circuit invariants, throwing input_error on violations.
  Circuit(std::string name, std::vector<std::string> inputs, std::vector<NamedGate> gates,
          std::vector<std::string> outputs);

  const std::string& name() const { return name_; }
  std::size_t num_inputs() const { return num_inputs_; }
  std::size_t num_outputs() const { return outputs_.size(); }
  std::size_t num_gates() const { return gates_.size(); }
  std::size_t num_variables() const { return names_.size(); }

  std::span<const Gate> gates() const { return gates_; }
  /// Variable indices of the outputs, in output order.
  std::span<const std::uint32_t> outputs() const { return outputs_; }
  const std::string& variable_name(std::uint32_t v) const { return names_[v]; }
  bool is_output(std::uint32_t v) const;

  std::vector<std::string> input_names() const;
  std::vector<std::string> output_names() const;
  std::vector<std::string> internal_names() const;
  std::vector<NamedGate> named_gates() const;

  /// Output values for the given input values; throws input_error on width mismatch.
  Bits evaluate(const Bits& input) const;
  /// Values of every variable (inputs, then gate targets in order).
  Bits evaluate_all(const Bits& input) const;
  /// evaluate() writing into `output`, reusing its storage.
  void evaluate_into(const Bits& input, Bits& output) const;

  /// Input-operand reads plus one per AND/OR/NOT gate.
  std::size_t size() const;

  /// Same structure with new names for the inputs, outputs and circuit.
  Circuit renamed(std::string name, const std::vector<std::string>& inputs,
                  const std::vector<std::string>& outputs) const;

  friend bool operator==(const Circuit& a, const Circuit& b);

private:
  std::string name_;
  std::size_t num_inputs_ = 0;
  std::vector<std::string> names_;
  std::vector<Gate> gates_;
  std::vector<std::uint32_t> outputs_;
  std::vector<bool> is_output_;
  // Flattened gate program for evaluation.
  std::vector<Op> ops_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> flat_operands_;

  void run(const Bits& input) const;
};

inline Bits evaluate(const Circuit& c, const Bits& input) { return c.evaluate(input); }
inline std::size_t circuit_size(const Circuit& c) { return c.size(); }

/// Disjunction of gate-equation violations: false exactly on assignments
/// consistent with every gate.
Formula u_transform(const Circuit& c);
/// Conjunction of gate equations (target <-> op(operands)).
Formula circuit_formula(const Circuit& c);
/// The formula op(operands) for one gate, operands as atoms.
Formula gate_formula(Op op, const std::vector<Formula>& operands);

struct EnumerationLimits {
  std::size_t max_count = 2'000'000;
};

/// All canonical circuits of size <= max_size, ordered by (size, gate encoding).
///
/// Canonical form: internal gates are AND/OR/NOT only, AND/OR have at least two
/// strictly ascending operands, internal gates appear in strictly increasing
/// (largest operand, op, operands) order and each feeds a later gate, and an
/// output ID gate reads either an input or an internal gate that has another reader. Throws cap_exceeded past limits.max_count.
std::vector<Circuit> enumerate_circuits(const std::vector<std::string>& inputs,
                                        const std::vector<std::string>& outputs,
                                        std::size_t max_size, EnumerationLimits limits = {});
std::vector<Circuit> enumerate_circuits(std::size_t num_inputs, std::size_t num_outputs,
                                        std::size_t max_size, EnumerationLimits limits = {});

/// Sum-of-minterms circuit for an arbitrary function; exponential in the inputs.
Circuit truth_table_circuit(std::string name, const std::vector<std::string>& inputs,
                            const std::vector<std::string>& outputs,
                            const std::function<Bits(const Bits&)>& fn);

} // namespace succinct
