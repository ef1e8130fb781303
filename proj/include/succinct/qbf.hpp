#pragma once

#include <optional>
#include <string>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/formula.hpp"

namespace succinct {

enum class Quantifier { Forall, Exists };

struct QuantBlock {
  Quantifier quantifier;
  std::vector<std::string> vars;
  friend bool operator==(const QuantBlock&, const QuantBlock&) = default;
};

struct Qbf {
  std::vector<QuantBlock> prefix;
  Formula matrix = Formula::constant(true);

  /// All prefix variables in prefix order.
  std::vector<std::string> variables() const;
  /// Throws input_error on duplicate variables or free matrix atoms.
  void validate() const;
};

inline constexpr std::size_t default_qbf_cap = 16;

bool qbf_brute_valid(const Qbf& q, std::size_t cap = default_qbf_cap);

/// One circuit per existential block, in prefix order. Circuit i reads the
/// universal variables of all earlier blocks and writes the block's variables.
struct DirectionalModel {
  std::vector<Circuit> circuits;
  std::size_t size() const;
};

/// Inputs the circuit for existential block `block` must read, in order.
std::vector<std::string> model_inputs(const Qbf& q, std::size_t block);
/// Throws input_error when the circuits do not fit the prefix.
void check_model_shape(const Qbf& q, const DirectionalModel& m);
/// True iff every universal branch, completed by the circuits, satisfies the matrix.
bool check_model(const Qbf& q, const DirectionalModel& m);

/// First model of total size <= k in (total size, per-block size split,
/// per-block enumeration order) order.
std::optional<DirectionalModel> bounded_model_exists(const Qbf& q, std::size_t k, EnumerationLimits limits = {});

/// forall x1 exists y1 ... forall xk exists yk . yk <-> (x1 | ... | xk)
Qbf hard_family(unsigned k);
/// y_i := TRUE for i < k, y_k := OR(x1..xk); total size k + 1.
DirectionalModel hard_family_witness(unsigned k);

/// prefix, exists {o, Z} . o & C
Qbf embed_exists(const std::vector<QuantBlock>& prefix, const Circuit& property);
/// prefix, forall {o, Z} . o | U(C)
Qbf embed_forall(const std::vector<QuantBlock>& prefix, const Circuit& property);

std::string to_string(Quantifier q);

} // namespace succinct
