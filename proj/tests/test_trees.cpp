#include <functional>

#include "doctest.h"
#include "succinct/error.hpp"
#include "succinct/trees.hpp"

using namespace succinct;

namespace {

// All trees of the given depth over 1-bit labels, absent subtrees pruned.
std::vector<ExplicitTree> all_trees(unsigned depth) {
  std::vector<ExplicitTree> out;
  ExplicitTree t{depth, 1, std::vector<std::optional<Bits>>(std::size_t{1} << depth)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == t.nodes.size()) {
      out.push_back(t);
      return;
    }
    if (i > 1 && !t.nodes[i / 2]) {
      t.nodes[i].reset();
      rec(i + 1);
      return;
    }
    for (int choice = 0; choice < 3; ++choice) {
      if (choice == 0) t.nodes[i].reset();
      else t.nodes[i] = Bits{choice == 2};
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

} // namespace

TEST_CASE("truth-table representations expand to their tree") {
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& t : all_trees(d)) {
      REQUIRE(expand(positional_from_tree(t)) == t);
      REQUIRE(expand(directional_from_tree(t)) == t);
    }
}

TEST_CASE("conversions preserve the denoted tree for every small tree") {
  for (unsigned d = 1; d <= 3; ++d) {
    auto trees = all_trees(d);
    CAPTURE(d);
    for (const auto& t : trees) {
      auto p = directional_to_positional(directional_from_tree(t));
      REQUIRE(expand(p) == t);
      auto dr = positional_to_directional(positional_from_tree(t));
      REQUIRE(expand(dr) == t);
    }
  }
}

TEST_CASE("path parity labels") {
  // Directional circuit labelling each child with the parity of its path.
  const unsigned d = 4;
  ExplicitTree t{d, 1, std::vector<std::optional<Bits>>(std::size_t{1} << d)};
  for (std::size_t i = 1; i < t.nodes.size(); ++i) t.nodes[i] = Bits{bool(__builtin_popcountll(i) % 2 == 0)};
  auto p = directional_to_positional(directional_from_tree(t));
  auto e = expand(p);
  for (std::size_t i = 1; i < e.nodes.size(); ++i) {
    REQUIRE(e.nodes[i]);
    CHECK((*e.nodes[i])[0] == (__builtin_popcountll(i) % 2 == 0));
  }
  CHECK(expand(positional_to_directional(p)) == t);
}

TEST_CASE("conversions on wider labels and absent positions") {
  const unsigned d = 4;
  ExplicitTree t{d, 2, std::vector<std::optional<Bits>>(std::size_t{1} << d)};
  for (std::size_t i = 1; i < t.nodes.size(); ++i)
    if (i != 3 && i / 2 != 3 && i / 4 != 3 && i != 10) t.nodes[i] = to_bits(i % 4, 2);
  CHECK(expand(directional_to_positional(directional_from_tree(t))) == t);
  CHECK(expand(positional_to_directional(positional_from_tree(t))) == t);
  CHECK_THROWS_AS(expand(PositionalTreeRepr{0, 1, {}}), input_error);
}
