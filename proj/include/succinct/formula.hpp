#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/bits.hpp"

namespace succinct {

enum class FormulaKind { Const, Atom, Not, And, Or, Implies, Iff };

/// Immutable propositional formula. Copies share structure.
class Formula {
public:
  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negate(Formula f);
  static Formula conj(std::vector<Formula> parts);
  static Formula disj(std::vector<Formula> parts);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  /// lhs xor rhs, spelled as !(lhs <-> rhs).
  static Formula differs(Formula lhs, Formula rhs);

  FormulaKind kind() const;
  bool value() const;                         // Const only
  const std::string& name() const;            // Atom only
  const std::vector<Formula>& children() const;

  friend bool operator==(const Formula& a, const Formula& b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, bool>;

/// Orders identifiers so that embedded numbers compare numerically (x2 < x10).
bool natural_less(std::string_view a, std::string_view b);

/// Distinct atoms of `f`, in natural order.
std::vector<std::string> atoms(const Formula& f);

/// Throws input_error if an atom is missing from the assignment.
bool eval_formula(const Formula& f, const Assignment& assignment);

/// Formula compiled against a fixed variable order for repeated evaluation.
class CompiledFormula {
public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& variables);
  bool eval(const Bits& values) const;

private:
  struct Instr {
    FormulaKind kind;
    std::uint32_t arg;  // atom index, const value, or child count
  };
  std::vector<Instr> program_;
};

inline constexpr std::size_t default_sat_cap = 20;

/// First satisfying assignment in lexicographic order over `atoms(f)`,
/// the first atom being the most significant.
std::optional<Assignment> brute_sat(const Formula& f, std::size_t cap = default_sat_cap);

std::string to_string(const Formula& f);
/// Syntax: atoms, true/false, ! & | -> <->, parentheses; arrows right-associative.
Formula parse_formula(std::string_view text);

} // namespace succinct
