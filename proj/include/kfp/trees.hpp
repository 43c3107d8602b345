#pragma once

#include <string>
#include <vector>

#include "kfp/errors.hpp"

namespace kfp {

// A finite ordered rooted tree with labels < m and branching degrees < n;
// n = 0 stands for unbounded branching.
struct LabeledTree {
  int label = 0;
  std::vector<LabeledTree> children;

  int vertex_count() const;
  int height() const;
  int max_branching() const;
  int max_label() const;
  bool operator==(const LabeledTree& o) const;
};

// Membership in the (m, n) universe; branch_bound = 0 means unbounded.
bool tree_in_universe(const LabeledTree& t, int label_bound, int branch_bound);

// Homeomorphic embedding: roots match with the child sequences compared via
// a strictly increasing index map, or s embeds into some child of t.
bool tree_leq(const LabeledTree& s, const LabeledTree& t);

// Independent semantics: an injective vertex map preserving labels, ancestry
// in both directions, meets, and left-to-right order, found by exhaustive
// search. Shares no code with tree_leq.
bool tree_leq_oracle(const LabeledTree& s, const LabeledTree& t, int vertex_cap = 8);

// Full k-branching tree of height j; full_tree(k, 0) is the single 0-node.
LabeledTree full_tree(int k, int j);

// The label-simulation gadget t(l) = full_tree(l+1, m-l), pairwise
// incomparable under tree_leq for distinct l < m.
LabeledTree label_gadget(int m, int l);

// Grammar: tree := label "*(" tree* ")", children separated by whitespace.
std::string tree_to_string(const LabeledTree& t);
LabeledTree tree_parse(const std::string& text);

// All trees in the (m, n) universe with at most max_vertices vertices,
// deterministic order (vertex count, then grammar string).
std::vector<LabeledTree> enumerate_trees(int label_bound, int branch_bound, int max_vertices);

}  // namespace kfp
