#include "succinct/trees.hpp"

#include "succinct/circuit_builder.hpp"
#include "succinct/error.hpp"

namespace succinct {

namespace {

void check_depth(unsigned depth) {
  if (depth < 1) throw input_error("tree depth must be at least 1");
  if (depth > max_tree_depth) throw cap_exceeded("tree depth exceeds cap " + std::to_string(max_tree_depth));
}

std::vector<std::string> numbered(const std::string& prefix, unsigned count) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> child_outputs(unsigned label_bits) {
  std::vector<std::string> out{"lp"};
  for (auto& n : numbered("l", label_bits)) out.push_back(n);
  out.push_back("rp");
  for (auto& n : numbered("r", label_bits)) out.push_back(n);
  return out;
}

std::vector<std::string> node_outputs(unsigned label_bits) {
  std::vector<std::string> out{"present"};
  for (auto& n : numbered("label", label_bits)) out.push_back(n);
  return out;
}

void check_shape(const Circuit& c, std::size_t inputs, std::size_t outputs, const char* what) {
  if (c.num_inputs() != inputs || c.num_outputs() != outputs)
    throw input_error(std::string(what) + " circuit has the wrong number of inputs or outputs");
}

unsigned level_of(std::uint64_t index) {
  unsigned l = 0;
  while (index >> (l + 1)) ++l;
  return l;
}

} // namespace

ExplicitTree expand(const DirectionalTreeRepr& t) {
  check_depth(t.depth);
  check_shape(t.circuit, 2 * (t.depth - 1), 2 * (t.label_bits + 1), "directional tree");
  ExplicitTree out{t.depth, t.label_bits, std::vector<std::optional<Bits>>(std::size_t{1} << t.depth)};
  if (t.root_present) out.nodes[1] = t.root_label;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << (t.depth - 1)); ++i) {
    if (!out.nodes[i]) continue;
    unsigned level = level_of(i);
    Bits in(2 * (t.depth - 1), false);
    for (unsigned j = 0; j < level; ++j) {
      in[j] = (i >> (level - 1 - j)) & 1U;
      in[t.depth - 1 + j] = true;
    }
    auto y = t.circuit.evaluate(in);
    for (unsigned c = 0; c < 2; ++c) {
      std::size_t base = c * (t.label_bits + 1);
      if (y[base]) out.nodes[2 * i + c] = Bits(y.begin() + base + 1, y.begin() + base + 1 + t.label_bits);
    }
  }
  return out;
}

ExplicitTree expand(const PositionalTreeRepr& t) {
  check_depth(t.depth);
  check_shape(t.circuit, t.depth, t.label_bits + 1, "positional tree");
  ExplicitTree out{t.depth, t.label_bits, std::vector<std::optional<Bits>>(std::size_t{1} << t.depth)};
  for (std::uint64_t i = 1; i < out.nodes.size(); ++i) {
    if (i > 1 && !out.nodes[i / 2]) continue;
    auto y = t.circuit.evaluate(to_bits(i, t.depth));
    if (y[0]) out.nodes[i] = Bits(y.begin() + 1, y.end());
  }
  return out;
}

PositionalTreeRepr directional_to_positional(const DirectionalTreeRepr& t) {
  check_depth(t.depth);
  const unsigned d = t.depth, lb = t.label_bits;
  check_shape(t.circuit, 2 * (d - 1), 2 * (lb + 1), "directional tree");
  CircuitBuilder b("positional");
  auto index = b.inputs(numbered("i", d));
  using Word = CircuitBuilder::Word;

  Word result(lb + 1, b.constant(false));
  for (unsigned level = 0; level < d; ++level) {
    // Index has its leading one at position d-1-level.
    std::vector<CircuitBuilder::Var> guard_bits;
    for (unsigned j = 0; j + level + 1 < d; ++j) guard_bits.push_back(b.not_(index[j]));
    guard_bits.push_back(index[d - 1 - level]);
    auto guard = b.and_(guard_bits);
    Word path(index.end() - level, index.end());

    Word node;
    if (level == 0) {
      node.push_back(b.constant(t.root_present));
      for (bool v : t.root_label) node.push_back(b.constant(v));
    } else {
      std::vector<CircuitBuilder::Var> present{b.constant(t.root_present)};
      Word label;
      for (unsigned step = 1; step <= level; ++step) {
        Word args(2 * (d - 1), b.constant(false));
        for (unsigned j = 0; j + 1 < step; ++j) {
          args[j] = path[j];
          args[d - 1 + j] = b.constant(true);
        }
        auto out = b.inline_circuit(t.circuit, args);
        auto dir = path[step - 1];
        Word left(out.begin(), out.begin() + lb + 1), right(out.begin() + lb + 1, out.end());
        auto child = b.mux(dir, right, left);
        present.push_back(child[0]);
        if (step == level) label.assign(child.begin() + 1, child.end());
      }
      node.push_back(b.and_(present));
      node.insert(node.end(), label.begin(), label.end());
    }
    for (unsigned k = 0; k <= lb; ++k) result[k] = b.or_(result[k], b.and_(guard, node[k]));
  }
  b.outputs(node_outputs(lb), result);
  return {d, lb, b.build()};
}

DirectionalTreeRepr positional_to_directional(const PositionalTreeRepr& t) {
  check_depth(t.depth);
  const unsigned d = t.depth, lb = t.label_bits;
  check_shape(t.circuit, d, lb + 1, "positional tree");
  DirectionalTreeRepr out{d, lb, false, Bits(lb, false), {}};
  auto root = t.circuit.evaluate(to_bits(1, d));
  out.root_present = root[0];
  out.root_label.assign(root.begin() + 1, root.end());

  CircuitBuilder b("directional");
  auto path = b.inputs(numbered("p", d - 1));
  auto unary = b.inputs(numbered("u", d - 1));
  using Word = CircuitBuilder::Word;
  Word result(2 * (lb + 1), b.constant(false));
  for (unsigned level = 0; level + 1 < d; ++level) {
    std::vector<CircuitBuilder::Var> guard_bits;
    for (unsigned j = 0; j < d - 1; ++j) guard_bits.push_back(j < level ? unary[j] : b.not_(unary[j]));
    auto guard = b.and_(guard_bits);
    for (unsigned c = 0; c < 2; ++c) {
      // Child heap index: zeros, leading one, path[0..level), direction.
      Word idx(d, b.constant(false));
      unsigned lead = d - 2 - level;
      idx[lead] = b.constant(true);
      for (unsigned j = 0; j < level; ++j) idx[lead + 1 + j] = path[j];
      idx[d - 1] = b.constant(c == 1);
      auto y = b.inline_circuit(t.circuit, idx);
      for (unsigned k = 0; k <= lb; ++k) {
        auto& slot = result[c * (lb + 1) + k];
        slot = b.or_(slot, b.and_(guard, y[k]));
      }
    }
  }
  b.outputs(child_outputs(lb), result);
  out.circuit = b.build();
  return out;
}

PositionalTreeRepr positional_from_tree(const ExplicitTree& t) {
  check_depth(t.depth);
  auto c = truth_table_circuit("positional", numbered("i", t.depth), node_outputs(t.label_bits), [&](const Bits& x) {
    auto i = from_bits(x);
    Bits y(t.label_bits + 1, false);
    if (i >= 1 && i < t.nodes.size() && t.nodes[i]) {
      y[0] = true;
      std::copy(t.nodes[i]->begin(), t.nodes[i]->end(), y.begin() + 1);
    }
    return y;
  });
  return {t.depth, t.label_bits, c};
}

DirectionalTreeRepr directional_from_tree(const ExplicitTree& t) {
  check_depth(t.depth);
  const unsigned d = t.depth;
  std::vector<std::string> in = numbered("p", d - 1);
  for (auto& n : numbered("u", d - 1)) in.push_back(n);
  auto c = truth_table_circuit("directional", in, child_outputs(t.label_bits), [&](const Bits& x) {
    Bits y(2 * (t.label_bits + 1), false);
    unsigned level = 0;
    while (level < d - 1 && x[d - 1 + level]) ++level;
    if (level + 1 >= d) return y;
    std::uint64_t node = 1;
    for (unsigned j = 0; j < level; ++j) node = 2 * node + x[j];
    for (unsigned c = 0; c < 2; ++c) {
      const auto& child = t.nodes[2 * node + c];
      if (!child) continue;
      std::size_t base = c * (t.label_bits + 1);
      y[base] = true;
      std::copy(child->begin(), child->end(), y.begin() + base + 1);
    }
    return y;
  });
  DirectionalTreeRepr out{d, t.label_bits, t.nodes[1].has_value(),
                          t.nodes[1] ? *t.nodes[1] : Bits(t.label_bits, false), c};
  return out;
}

} // namespace succinct
