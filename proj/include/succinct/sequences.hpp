#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/cnf.hpp"

namespace succinct {

using StateList = std::vector<State>;

inline constexpr std::uint64_t default_expand_cap = std::uint64_t{1} << 22;

/// Sequence e_0 .. e_{N-1} with e_t = C(t); time width is exactly width_for(N).
struct TimeElementRepr {
  Circuit circuit;
  std::uint64_t N = 0;
};

/// Sequence s0, C(s0), C(C(s0)), ... of N elements without repetitions.
struct NextElementRepr {
  State s0;
  Circuit circuit;
  std::uint64_t N = 0;
};

StateList expand(const TimeElementRepr& r, std::uint64_t cap = default_expand_cap);
/// Throws input_error if an element repeats.
StateList expand(const NextElementRepr& r, std::uint64_t cap = default_expand_cap);
State element_at(const TimeElementRepr& r, std::uint64_t t);
State element_at(const NextElementRepr& r, std::uint64_t t);

struct Action {
  std::string name;
  Circuit circuit;
};
using ActionSet = std::vector<Action>;

/// Throws input_error unless names are unique and every action maps n bits to n bits.
void validate_actions(const ActionSet& actions, std::size_t n);
/// Index of the action named `name`, or throws input_error.
std::size_t action_index(const ActionSet& actions, const std::string& name);
/// Output width of action-index circuits: width_for(|A|).
unsigned index_width(const ActionSet& actions);

enum class SeqKind { TS, SS, TA, SA };
std::string to_string(SeqKind k);
SeqKind parse_seq_kind(std::string_view s);

/// Plan-like sequence s_0 .. s_N with actions. The circuit is C_TS (time ->
/// state), C_SS (state -> state), C_TA (time -> action index) or C_SA
/// (state -> action index). Time inputs are big-endian.
struct PlanSeqRepr {
  SeqKind kind = SeqKind::SS;
  std::vector<std::string> vars;
  State s0;
  ActionSet actions;
  std::uint64_t N = 0;
  Circuit circuit;

  std::size_t width() const { return vars.size(); }
  /// Throws input_error on arity mismatches or a time width too small for N.
  void validate_shape() const;
};

struct PlanTrace {
  StateList states;                  // N + 1 states
  std::vector<std::size_t> actions;  // designated actions (TA/SA kinds only)
};

/// Throws input_error on an invalid action index, cap_exceeded past `cap`.
PlanTrace expand(const PlanSeqRepr& r, std::uint64_t cap = default_expand_cap);
/// State at step t (0 <= t <= N).
State element_at(const PlanSeqRepr& r, std::uint64_t t);

struct ValidationReport {
  bool valid = true;
  /// Per step: the first action leading from s_t to s_{t+1} (TS/SS) or the
  /// designated action (TA/SA); absent where none exists.
  std::vector<std::optional<std::size_t>> witnesses;
  std::optional<std::uint64_t> first_bad_step;
  /// First repeated state: (earlier index, later index).
  std::optional<std::pair<std::uint64_t, std::uint64_t>> repetition;
  std::vector<std::string> problems;
};

ValidationReport validate(const PlanSeqRepr& r, std::uint64_t cap = default_expand_cap);

/// Supported: SA->SS, SS->SA, TS->TA, and identity. The five directions
/// without polynomial translations (SS->TS, TA->TS, TA->SA, SA->TA, TS->SS)
/// and any other pair raise unsupported_direction.
PlanSeqRepr convert(const PlanSeqRepr& r, SeqKind target);

// Generators -----------------------------------------------------------------

/// Next-state scan of every formula: state <F (m bits), M (r bits), x, y>.
PlanSeqRepr gen_sat_sequence(const Cnf3Encoding& enc);
/// 1-indexed position of the last state of formula k's chunk: (k+1)(2^r+1).
std::uint64_t sat_index(const Cnf3Encoding& enc, std::uint64_t k);
/// 1-indexed position of the first state of formula k's chunk: k(2^r+1)+1.
std::uint64_t chunk_start(const Cnf3Encoding& enc, std::uint64_t k);

/// Time/action sequence over one formula: state = flag then an r-bit
/// little-endian copy of the time; actions sat (index 0) and unsat; N = 2^r.
/// The time copy wraps, so an unsatisfiable formula ends where it started.
PlanSeqRepr gen_sat_timeaction_flag(const Cnf3& f, unsigned r);

/// Time/action scan of every formula with actions step, flip, next; each
/// chunk holds 2^r + 2 states and ends in <F, 0, x, 1> followed by <F, 0, !x, 1>.
PlanSeqRepr gen_sat_timeaction_chunked(const Cnf3Encoding& enc);
std::uint64_t timeaction_chunk_length(const Cnf3Encoding& enc);

/// State/action scan with actions ok, no, sat, unsat: state <F, M, x>.
PlanSeqRepr gen_sat_stateaction(const Cnf3Encoding& enc);

/// Time/state alternation f(x)0, x1 for every x; a single tabulated action.
PlanSeqRepr gen_function_pair_sequence(const Circuit& f);
/// Time/state chunks (f(x), f(x), 0..0) -> ... -> (f(x), x, 1..1) with
/// 2n bit-setting actions plus an advance action.
PlanSeqRepr gen_function_chunk_sequence(const Circuit& f);

} // namespace succinct
