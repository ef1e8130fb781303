#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/ltl.hpp"
#include "succinct/planning.hpp"
#include "succinct/qbf.hpp"
#include "succinct/sequences.hpp"

namespace succinct {

// Line-based formats. Tokens are whitespace separated, `#` starts a comment,
// blank lines are skipped. A state with no variables is written `-`.
// Readers throw input_error with a line number.

std::string write_circuit(const Circuit& c);
/// Header name replaced by `name`.
std::string write_circuit(const Circuit& c, const std::string& name);
Circuit read_circuit(std::string_view text);

std::string write_qbf(const Qbf& q);
Qbf read_qbf(std::string_view text);

/// Circuit blocks in prefix order.
std::string write_model(const DirectionalModel& m);
DirectionalModel read_model(std::string_view text);

/// `seq <kind>`, vars, init, len, `actions`, the action circuits (named by
/// their action), the representation circuit last, `end`.
std::string write_seq(const PlanSeqRepr& r);
PlanSeqRepr read_seq(std::string_view text);

std::string write_polyplan(const PolyplanInstance& inst);
PolyplanInstance read_polyplan(std::string_view text);

/// `plan`, one action name per line, `end`.
std::string write_plan(const Plan& plan, const ActionSet& actions);
Plan read_plan(std::string_view text, const ActionSet& actions);

std::string write_lasso(const LassoModel& m);
LassoModel read_lasso(std::string_view text);

/// `slasso <TS|SS>`, vars, `init` (SS), `initlen`, `periodlen`, circuit, `end`.
std::string write_slasso(const SuccinctLasso& m);
SuccinctLasso read_slasso(std::string_view text);

/// First keyword of the text: circuit, qbf, seq, polyplan, plan, lasso,
/// slasso; empty when the text has no lines.
std::string detect_format(std::string_view text);

std::string read_file(const std::string& path);

} // namespace succinct
