#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/qbf.hpp"
#include "succinct/sequences.hpp"

namespace succinct {

/// Variables, initial state, goal and circuit actions. The goal is a single
/// state unless `goal_circuit` (n inputs, one output) is set.
struct PolyplanInstance {
  std::vector<std::string> vars;
  State init;
  State goal;
  std::optional<Circuit> goal_circuit;
  ActionSet actions;

  std::size_t width() const { return vars.size(); }
  /// Throws input_error on width or arity mismatches.
  void validate() const;
  bool is_goal(const State& s) const;
};

using Plan = std::vector<std::size_t>;

/// Throws input_error on a width mismatch.
State apply_action(const State& s, const Action& a);

enum class FailureReason { None, BadActionIndex, NoWitness, Repetition, GoalMiss, InitMismatch };
std::string to_string(FailureReason r);

struct Verdict {
  bool valid = true;
  std::uint64_t step = 0;
  FailureReason reason = FailureReason::None;
  std::string message;
};

struct SimulationOptions {
  bool check_repetition = true;
  std::uint64_t max_length = std::uint64_t{1} << 20;
};

struct SimulationStats {
  std::size_t peak_states = 0;  // explicit states alive at once
  std::uint64_t evaluations = 0;
};

/// Streams the states of the plan from the initial state. Repetitions are
/// found by regenerating the earlier states one at a time, so at most two
/// explicit states are alive at any moment. For PlanSeqRepr the instance's
/// actions are used; s0 (or C_TS(0)) must equal the initial state.
Verdict simulate(const PolyplanInstance& inst, const Plan& plan, const SimulationOptions& opts = {},
                 SimulationStats* stats = nullptr);
Verdict simulate(const PolyplanInstance& inst, const PlanSeqRepr& repr, const SimulationOptions& opts = {},
                 SimulationStats* stats = nullptr);

inline constexpr std::size_t default_search_bits = 20;

/// Shortest plan by breadth-first search, ties broken by action order.
/// Throws cap_exceeded when n exceeds `max_bits`.
std::optional<Plan> search_plan(const PolyplanInstance& inst, std::size_t max_bits = default_search_bits);

/// Every plan without repeated states, by depth-first search in action order.
/// Throws cap_exceeded past `max_plans` plans or `max_nodes` visited nodes.
std::vector<Plan> all_plans(const PolyplanInstance& inst, std::size_t max_plans = 1000,
                            std::uint64_t max_nodes = std::uint64_t{1} << 24);

struct BoundedPlanLimits {
  std::size_t max_bits = 8;
  EnumerationLimits enumeration;
};

/// First representation of the given kind whose circuit has size <= k, in
/// circuit enumeration order and then by increasing N < 2^n. Time inputs
/// have n bits.
std::optional<PlanSeqRepr> bounded_succinct_plan_exists(const PolyplanInstance& inst, std::size_t k, SeqKind kind,
                                                        const BoundedPlanLimits& limits = {});

/// Planning instance for exists X forall Y . E: state <g, Z, X, Y>, actions
/// settrue, setfalse, move, last. It has a plan iff the formula is valid.
PolyplanInstance gen_qbf_instance(const Qbf& q);

/// State <b1, b2, b3, F, M> with actions sat, unsat, move; the only plan
/// chooses sat exactly at the chunks of satisfiable formulas.
PolyplanInstance gen_unique_plan_instance(unsigned r, unsigned c);
/// Index in the unique plan of the action opening formula k's chunk.
std::uint64_t unique_plan_chunk_opening(const Cnf3Encoding& enc, std::uint64_t k);

/// ceil(log2(k+2))-bit counter from all zeros to all ones with one action inc.
PolyplanInstance gen_long_plan_instance(std::uint64_t k);

} // namespace succinct
