#pragma once

#include <optional>
#include <vector>

#include "succinct/circuit.hpp"

namespace succinct {

/// Complete binary tree shape of `depth` levels in heap numbering: node 1 is
/// the root, node i has children 2i and 2i+1. nodes[0] is unused. A missing
/// label marks an absent node; children of absent nodes are absent.
struct ExplicitTree {
  unsigned depth = 1;
  unsigned label_bits = 1;
  std::vector<std::optional<Bits>> nodes;

  friend bool operator==(const ExplicitTree&, const ExplicitTree&) = default;
};

/// Tree given by the children of each node. Circuit inputs: depth-1 path bits
/// p1.. (root-to-node directions, 1 = right) then depth-1 unary length bits
/// u1.. (the first `level` of them set). Outputs: left present flag and label,
/// then right present flag and label.
struct DirectionalTreeRepr {
  unsigned depth = 1;
  unsigned label_bits = 1;
  bool root_present = true;
  Bits root_label;
  Circuit circuit;
};

/// Tree given by node position: inputs are the depth-bit heap index,
/// outputs are the present flag and the label. Index 0 is never present.
struct PositionalTreeRepr {
  unsigned depth = 1;
  unsigned label_bits = 1;
  Circuit circuit;
};

inline constexpr unsigned max_tree_depth = 20;

ExplicitTree expand(const DirectionalTreeRepr& t);
ExplicitTree expand(const PositionalTreeRepr& t);

PositionalTreeRepr directional_to_positional(const DirectionalTreeRepr& t);
DirectionalTreeRepr positional_to_directional(const PositionalTreeRepr& t);

/// Truth-table representations of an explicit tree (exponential; for tests and small inputs).
PositionalTreeRepr positional_from_tree(const ExplicitTree& t);
DirectionalTreeRepr directional_from_tree(const ExplicitTree& t);

} // namespace succinct
