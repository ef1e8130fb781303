#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "succinct/circuit.hpp"
#include "succinct/formula.hpp"

namespace succinct {

struct Literal {
  unsigned var = 1;  // 1-based: x1 ... xr
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};
using Clause = std::array<Literal, 3>;
using Cnf3 = std::vector<Clause>;

/// Fixed-width bit encoding of 3CNF formulas over r variables with c clauses.
/// Each literal is ceil(log2 r) big-endian index bits (index i names x_{i+1},
/// taken modulo r) followed by a sign bit, 1 meaning positive.
struct Cnf3Encoding {
  unsigned r = 1;
  unsigned c = 1;

  unsigned index_bits() const;
  unsigned literal_bits() const { return index_bits() + 1; }
  std::size_t m() const { return std::size_t{3} * c * literal_bits(); }
  /// Number of distinct formula strings, 2^m.
  std::uint64_t formula_count() const;
};

Bits encode_cnf(const Cnf3& f, const Cnf3Encoding& enc);
Cnf3 decode_cnf(const Bits& bits, const Cnf3Encoding& enc);
/// Formula whose m-bit big-endian string has integer value k.
Cnf3 decode_cnf(std::uint64_t k, const Cnf3Encoding& enc);

/// Formula over atoms x1 ... xr.
Formula cnf_formula(const Cnf3& f);
/// model[j] is the value of x_{j+1}.
bool cnf_satisfied(const Cnf3& f, const Bits& model);
bool cnf_satisfiable(const Cnf3& f, unsigned r);
std::string to_string(const Cnf3& f);

/// Inputs: the m formula bits f0..f{m-1}, then model bits x1..xr. Output `sat`.
Circuit cnf_eval_circuit(const Cnf3Encoding& enc);

} // namespace succinct
