#include "succinct/cnf.hpp"

#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"

namespace succinct {

unsigned Cnf3Encoding::index_bits() const {
  if (r == 0) throw input_error("3CNF encoding needs at least one variable");
  return r == 1 ? 0 : width_for(r);
}

std::uint64_t Cnf3Encoding::formula_count() const {
  if (m() >= 63) throw cap_exceeded("3CNF encoding too wide to enumerate");
  return std::uint64_t{1} << m();
}

Bits encode_cnf(const Cnf3& f, const Cnf3Encoding& enc) {
  if (f.size() != enc.c)
    throw input_error("encode_cnf: expected " + std::to_string(enc.c) + " clauses, got " + std::to_string(f.size()));
  Bits out;
  for (const auto& clause : f)
    for (const auto& lit : clause) {
      if (lit.var < 1 || lit.var > enc.r) throw input_error("encode_cnf: variable index out of range");
      auto idx = to_bits(lit.var - 1, enc.index_bits());
      out.insert(out.end(), idx.begin(), idx.end());
      out.push_back(lit.positive);
    }
  return out;
}

Cnf3 decode_cnf(const Bits& bits, const Cnf3Encoding& enc) {
  if (bits.size() != enc.m())
    throw input_error("decode_cnf: expected " + std::to_string(enc.m()) + " bits, got " + std::to_string(bits.size()));
  Cnf3 f(enc.c);
  std::size_t pos = 0;
  for (auto& clause : f)
    for (auto& lit : clause) {
      auto idx = from_bits(bits, pos, enc.index_bits());
      pos += enc.index_bits();
      lit.var = static_cast<unsigned>(idx % enc.r) + 1;
      lit.positive = bits[pos++];
    }
  return f;
}

Cnf3 decode_cnf(std::uint64_t k, const Cnf3Encoding& enc) {
  return decode_cnf(to_bits(k, static_cast<unsigned>(enc.m())), enc);
}

Formula cnf_formula(const Cnf3& f) {
  std::vector<Formula> clauses;
  for (const auto& clause : f) {
    std::vector<Formula> lits;
    for (const auto& lit : clause) {
      auto a = Formula::atom("x" + std::to_string(lit.var));
      lits.push_back(lit.positive ? a : Formula::negate(a));
    }
    clauses.push_back(Formula::disj(lits));
  }
  return Formula::conj(clauses);
}

bool cnf_satisfied(const Cnf3& f, const Bits& model) {
  for (const auto& clause : f) {
    bool sat = false;
    for (const auto& lit : clause) sat |= model.at(lit.var - 1) == lit.positive;
    if (!sat) return false;
  }
  return true;
}

bool cnf_satisfiable(const Cnf3& f, unsigned r) {
  if (r > 30) throw cap_exceeded("cnf_satisfiable: too many variables");
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v)
    if (cnf_satisfied(f, to_bits(v, r))) return true;
  return false;
}

std::string to_string(const Cnf3& f) {
  if (f.empty()) return "true";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " & ";
    s += "(";
    for (std::size_t j = 0; j < 3; ++j) {
      if (j) s += " | ";
      if (!f[i][j].positive) s += "!";
      s += "x" + std::to_string(f[i][j].var);
    }
    s += ")";
  }
  return s;
}

Circuit cnf_eval_circuit(const Cnf3Encoding& enc) {
  CircuitBuilder b("cnf_eval");
  std::vector<std::string> fnames, xnames;
  for (std::size_t i = 0; i < enc.m(); ++i) fnames.push_back("f" + std::to_string(i));
  for (unsigned j = 1; j <= enc.r; ++j) xnames.push_back("x" + std::to_string(j));
  auto fbits = b.inputs(fnames);
  auto model = b.inputs(xnames);
  const unsigned ib = enc.index_bits();
  std::vector<CircuitBuilder::Word> options;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << ib); ++v) options.push_back({model[v % enc.r]});
  std::vector<CircuitBuilder::Var> clauses;
  std::size_t pos = 0;
  for (unsigned c = 0; c < enc.c; ++c) {
    std::vector<CircuitBuilder::Var> lits;
    for (int l = 0; l < 3; ++l) {
      CircuitBuilder::Word index(fbits.begin() + static_cast<std::ptrdiff_t>(pos),
                                 fbits.begin() + static_cast<std::ptrdiff_t>(pos + ib));
      pos += ib;
      auto value = b.select(index, options, {b.constant(false)})[0];
      lits.push_back(b.xnor_(fbits[pos++], value));
    }
    clauses.push_back(b.or_(lits));
  }
  b.output("sat", b.and_(clauses));
  return b.build();
}

} // namespace succinct
