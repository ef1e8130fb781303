#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/formula.hpp"
#include "succinct/qbf.hpp"
#include "succinct/sequences.hpp"

namespace succinct {

enum class LtlKind { Const, Atom, Not, And, Or, Implies, Iff, Next, Finally, Globally, Until };

/// Immutable LTL formula. F and G are primitive rather than sugar.
class LtlFormula {
public:
  static LtlFormula constant(bool value);
  static LtlFormula atom(std::string name);
  static LtlFormula negate(LtlFormula f);
  static LtlFormula conj(std::vector<LtlFormula> parts);
  static LtlFormula disj(std::vector<LtlFormula> parts);
  static LtlFormula implies(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula iff(LtlFormula lhs, LtlFormula rhs);
  /// !(lhs <-> rhs)
  static LtlFormula differs(LtlFormula lhs, LtlFormula rhs);
  static LtlFormula next(LtlFormula f, unsigned times = 1);
  static LtlFormula finally(LtlFormula f);
  static LtlFormula globally(LtlFormula f);
  static LtlFormula until(LtlFormula lhs, LtlFormula rhs);

  /// Propositional formula with each atom replaced by `atom(name)`.
  static LtlFormula from_formula(const Formula& f, const std::function<LtlFormula(const std::string&)>& atom);
  static LtlFormula from_formula(const Formula& f);

  LtlKind kind() const;
  bool value() const;
  const std::string& name() const;
  const std::vector<LtlFormula>& children() const;

  friend bool operator==(const LtlFormula& a, const LtlFormula& b);

private:
  struct Node;
  explicit LtlFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Distinct atoms in natural order.
std::vector<std::string> atoms(const LtlFormula& f);
std::size_t depth(const LtlFormula& f);
std::string to_string(const LtlFormula& f);
/// Precedence, tightest first: ! X F G, U (left-assoc), &, |, -> and <->
/// (right-assoc). X, F, G, U, true and false are reserved words.
LtlFormula parse_ltl(std::string_view text);

/// Ultimately periodic word: initial, then period repeated forever.
struct LassoModel {
  std::vector<std::string> vars;
  std::vector<State> initial;
  std::vector<State> period;

  std::size_t length() const { return initial.size() + period.size(); }
  const State& at(std::size_t pos) const {
    return pos < initial.size() ? initial[pos] : period[pos - initial.size()];
  }
  /// Throws input_error on width mismatches or an empty period.
  void validate() const;
  friend bool operator==(const LassoModel&, const LassoModel&) = default;
};

/// Truth of f at position pos < length(). Atoms outside m.vars are false.
bool ltl_eval(const LtlFormula& f, const LassoModel& m, std::size_t pos = 0);

/// Shortest primitive period, then shortest initial part; same word.
LassoModel canonicalize(const LassoModel& m);

/// Steps of a binary counter over vars (vars.front() most significant),
/// with X read as `stride` nested X operators; no G.
LtlFormula count_step(const std::vector<std::string>& vars, unsigned stride = 1);
/// G(count_step(vars)).
LtlFormula count_formula(const std::vector<std::string>& vars);
/// Over x1 .. xn, xn least significant.
LtlFormula count_formula(unsigned n);

using ConstantExtras = std::vector<std::pair<std::string, bool>>;
/// Period of the 2^n counter values from `start`, extras held constant.
LassoModel lexicographic_model(const std::vector<std::string>& vars, std::uint64_t start,
                               const ConstantExtras& extras = {});
LassoModel lexicographic_model(unsigned n, std::uint64_t start, const ConstantExtras& extras = {});

/// Splits blocks into single variables and renames them x_{2m-1}, ..., x3, x1
/// from the outermost in.
Qbf reindex_for_ltl(const Qbf& q);

struct LtlReduction {
  LtlFormula formula = LtlFormula::constant(true);      // true on the all-false counter model iff q is valid
  LtlFormula sat_formula = LtlFormula::constant(true);  // formula & counter & all-false start
  std::vector<std::string> vars;  // x_{n+1}, ..., x1, most significant first
};

/// q must have single-variable blocks x_n, x_{n-2}, ..., x1 with n odd.
LtlReduction qbf_to_ltl(const Qbf& q);

struct FindModelLimits {
  std::size_t max_free = 12;  // atoms plus temporal subformulas
};

/// A model of f over atoms(f), or none when f is unsatisfiable.
std::optional<LassoModel> find_model(const LtlFormula& f, const FindModelLimits& limits = {});

enum class LassoKind { TS, SS };
std::string to_string(LassoKind k);

/// Lasso of n_init + n_period states given by a circuit. TS: state p is
/// C(p), time inputs big-endian. SS: s0, C(s0), ... with the states
/// distinct and C mapping the last state back to the first period state.
struct SuccinctLasso {
  LassoKind kind = LassoKind::SS;
  std::vector<std::string> vars;
  Circuit circuit;
  std::uint64_t n_init = 0;
  std::uint64_t n_period = 1;
  State s0;

  void validate_shape() const;
};

inline constexpr std::uint64_t default_lasso_cap = std::uint64_t{1} << 20;

/// Throws input_error when an SS lasso repeats a state or fails to close.
LassoModel expand(const SuccinctLasso& m, std::uint64_t cap = default_lasso_cap);

enum class CheckMode { Expand, Conjoin };

/// Expand: ltl_eval on the expansion. Conjoin: f together with the formula
/// pinning the circuit's behaviour, evaluated on the expansion extended with
/// the circuit's internal (and, for TS, time) values.
bool check_succinct_model(const LtlFormula& f, const SuccinctLasso& m, CheckMode mode);

struct UniqueModelEmbedding {
  LtlFormula formula = LtlFormula::constant(true);
  SuccinctLasso lasso;
};

/// For s1 of kind SS or TS: a lasso alternating the states of s1 (even
/// positions, extras false) with marker states, ending in a repeated marker,
/// and a formula whose only model it is. The states of s1 must be distinct.
UniqueModelEmbedding embed_unique_model(const PlanSeqRepr& s1);

/// Elements at positions 0, t, 2t, ...
StateList divide(const StateList& s, std::size_t t);
/// Same length, equal on vars1, and every other variable of vars2 false.
bool expands_check(const std::vector<std::string>& vars1, const StateList& s1, const std::vector<std::string>& vars2,
                   const StateList& s2);

} // namespace succinct
