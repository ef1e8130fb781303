#include "succinct/qbf.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "succinct/error.hpp"

namespace succinct {

std::string to_string(Quantifier q) { return q == Quantifier::Forall ? "forall" : "exists"; }

std::vector<std::string> Qbf::variables() const {
  std::vector<std::string> out;
  for (const auto& b : prefix) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

void Qbf::validate() const {
  std::set<std::string> seen;
  for (const auto& v : variables())
    if (!seen.insert(v).second) throw input_error("qbf: variable '" + v + "' quantified twice");
  for (const auto& a : atoms(matrix))
    if (!seen.count(a)) throw input_error("qbf: matrix atom '" + a + "' is not quantified");
}

bool qbf_brute_valid(const Qbf& q, std::size_t cap) {
  q.validate();
  auto vars = q.variables();
  if (vars.size() > cap)
    throw cap_exceeded("qbf_brute_valid: " + std::to_string(vars.size()) + " variables exceed cap " +
                       std::to_string(cap));
  CompiledFormula matrix(q.matrix, vars);
  std::vector<Quantifier> quant;
  for (const auto& b : q.prefix)
    for (std::size_t i = 0; i < b.vars.size(); ++i) quant.push_back(b.quantifier);
  Bits values(vars.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == vars.size()) return matrix.eval(values);
    bool want_all = quant[i] == Quantifier::Forall;
    for (bool v : {false, true}) {
      values[i] = v;
      bool r = rec(i + 1);
      if (want_all && !r) return false;
      if (!want_all && r) return true;
    }
    return want_all;
  };
  return rec(0);
}

std::size_t DirectionalModel::size() const {
  std::size_t s = 0;
  for (const auto& c : circuits) s += c.size();
  return s;
}

std::vector<std::string> model_inputs(const Qbf& q, std::size_t block) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < block && i < q.prefix.size(); ++i)
    if (q.prefix[i].quantifier == Quantifier::Forall)
      out.insert(out.end(), q.prefix[i].vars.begin(), q.prefix[i].vars.end());
  return out;
}

void check_model_shape(const Qbf& q, const DirectionalModel& m) {
  std::size_t next = 0;
  for (std::size_t i = 0; i < q.prefix.size(); ++i) {
    if (q.prefix[i].quantifier != Quantifier::Exists) continue;
    if (next >= m.circuits.size())
      throw input_error("model has " + std::to_string(m.circuits.size()) + " circuits, too few for the prefix");
    const auto& c = m.circuits[next++];
    if (c.input_names() != model_inputs(q, i))
      throw input_error("model circuit '" + c.name() + "' must read exactly the preceding universal variables");
    if (c.output_names() != q.prefix[i].vars)
      throw input_error("model circuit '" + c.name() + "' must write exactly its block's variables");
  }
  if (next != m.circuits.size())
    throw input_error("model has " + std::to_string(m.circuits.size()) + " circuits, expected " +
                      std::to_string(next));
}

bool check_model(const Qbf& q, const DirectionalModel& m) {
  q.validate();
  check_model_shape(q, m);
  auto vars = q.variables();
  CompiledFormula matrix(q.matrix, vars);
  std::vector<std::size_t> offset;
  std::size_t pos = 0;
  for (const auto& b : q.prefix) {
    offset.push_back(pos);
    pos += b.vars.size();
  }
  Bits values(vars.size());
  Bits universals;
  // Depth-first over universal blocks; only the current path is kept.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t block, std::size_t circuit) -> bool {
    if (block == q.prefix.size()) return matrix.eval(values);
    const auto& b = q.prefix[block];
    if (b.quantifier == Quantifier::Exists) {
      auto out = m.circuits[circuit].evaluate(universals);
      for (std::size_t i = 0; i < out.size(); ++i) values[offset[block] + i] = out[i];
      return rec(block + 1, circuit + 1);
    }
    const std::size_t w = b.vars.size();
    if (w > 30) throw cap_exceeded("check_model: universal block too wide");
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << w); ++v) {
      auto bits = to_bits(v, static_cast<unsigned>(w));
      for (std::size_t i = 0; i < w; ++i) values[offset[block] + i] = bits[i];
      universals.insert(universals.end(), bits.begin(), bits.end());
      bool ok = rec(block + 1, circuit);
      universals.resize(universals.size() - w);
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, 0);
}

std::optional<DirectionalModel> bounded_model_exists(const Qbf& q, std::size_t k, EnumerationLimits limits) {
  q.validate();
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < q.prefix.size(); ++i)
    if (q.prefix[i].quantifier == Quantifier::Exists) blocks.push_back(i);

  // Candidates per block, bucketed by size.
  std::vector<std::vector<std::vector<Circuit>>> by_size(blocks.size(), std::vector<std::vector<Circuit>>(k + 1));
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto all = enumerate_circuits(model_inputs(q, blocks[j]), q.prefix[blocks[j]].vars, k, limits);
    for (auto& c : all) by_size[j][c.size()].push_back(c.renamed("C" + std::to_string(j + 1), c.input_names(),
                                                                  c.output_names()));
  }
  if (blocks.empty()) {
    DirectionalModel empty;
    if (check_model(q, empty)) return empty;
    return std::nullopt;
  }

  std::size_t checked = 0;
  DirectionalModel current;
  current.circuits.resize(blocks.size());
  std::vector<std::size_t> split(blocks.size());
  std::function<bool(std::size_t)> pick = [&](std::size_t j) -> bool {
    if (j == blocks.size()) {
      if (++checked > limits.max_count)
        throw cap_exceeded("bounded_model_exists: more than " + std::to_string(limits.max_count) + " candidate models");
      return check_model(q, current);
    }
    for (const auto& c : by_size[j][split[j]]) {
      current.circuits[j] = c;
      if (pick(j + 1)) return true;
    }
    return false;
  };
  std::function<bool(std::size_t, std::size_t)> distribute = [&](std::size_t j, std::size_t left) -> bool {
    if (j + 1 == blocks.size()) {
      split[j] = left;
      return pick(0);
    }
    for (std::size_t s = 0; s <= left; ++s) {
      split[j] = s;
      if (distribute(j + 1, left - s)) return true;
    }
    return false;
  };
  for (std::size_t total = 0; total <= k; ++total)
    if (distribute(0, total)) return current;
  return std::nullopt;
}

Qbf hard_family(unsigned k) {
  if (k < 1) throw input_error("hard_family: k must be at least 1");
  Qbf q;
  std::vector<Formula> xs;
  for (unsigned i = 1; i <= k; ++i) {
    q.prefix.push_back({Quantifier::Forall, {"x" + std::to_string(i)}});
    q.prefix.push_back({Quantifier::Exists, {"y" + std::to_string(i)}});
    xs.push_back(Formula::atom("x" + std::to_string(i)));
  }
  q.matrix = Formula::iff(Formula::atom("y" + std::to_string(k)), Formula::disj(xs));
  return q;
}

DirectionalModel hard_family_witness(unsigned k) {
  if (k < 1) throw input_error("hard_family_witness: k must be at least 1");
  DirectionalModel m;
  std::vector<std::string> xs;
  for (unsigned i = 1; i <= k; ++i) {
    xs.push_back("x" + std::to_string(i));
    std::string y = "y" + std::to_string(i);
    NamedGate g = i < k ? NamedGate{y, Op::True, {}} : NamedGate{y, Op::Or, xs};
    m.circuits.emplace_back("C" + std::to_string(i), xs, std::vector<NamedGate>{g}, std::vector<std::string>{y});
  }
  return m;
}

namespace {

std::vector<std::string> check_property(const std::vector<QuantBlock>& prefix, const Circuit& property) {
  if (property.num_outputs() != 1) throw input_error("embedding: property circuit must have exactly one output");
  std::vector<std::string> pv;
  for (const auto& b : prefix) pv.insert(pv.end(), b.vars.begin(), b.vars.end());
  auto in = property.input_names();
  if (std::set<std::string>(pv.begin(), pv.end()) != std::set<std::string>(in.begin(), in.end()) ||
      pv.size() != in.size())
    throw input_error("embedding: property inputs must be exactly the prefix variables");
  std::vector<std::string> fresh = property.output_names();
  auto internal = property.internal_names();
  fresh.insert(fresh.end(), internal.begin(), internal.end());
  return fresh;
}

} // namespace

Qbf embed_exists(const std::vector<QuantBlock>& prefix, const Circuit& property) {
  auto fresh = check_property(prefix, property);
  Qbf q{prefix, Formula::conj({Formula::atom(fresh.front()), circuit_formula(property)})};
  q.prefix.push_back({Quantifier::Exists, fresh});
  q.validate();
  return q;
}

Qbf embed_forall(const std::vector<QuantBlock>& prefix, const Circuit& property) {
  auto fresh = check_property(prefix, property);
  Qbf q{prefix, Formula::disj({Formula::atom(fresh.front()), u_transform(property)})};
  q.prefix.push_back({Quantifier::Forall, fresh});
  q.validate();
  return q;
}

} // namespace succinct
