#include "kfp/trees.hpp"

#include "doctest.h"

using namespace kfp;

TEST_CASE("tree grammar") {
  LabeledTree t = tree_parse("1*(0*() 0*(1*()))");
  CHECK(t.label == 1);
  CHECK(t.children.size() == 2);
  CHECK(t.vertex_count() == 4);
  CHECK(t.height() == 2);
  CHECK(tree_to_string(t) == "1*(0*() 0*(1*()))");
  CHECK_THROWS_AS(tree_parse("*("), ParseError);
  CHECK_THROWS_AS(tree_parse("0*()x"), ParseError);
}

TEST_CASE("full trees and gadgets") {
  CHECK(full_tree(2, 0) == tree_parse("0*()"));
  CHECK(full_tree(5, 0) == tree_parse("0*()"));
  CHECK(full_tree(2, 2).vertex_count() == 7);
  CHECK(label_gadget(2, 0) == full_tree(1, 2));
  CHECK(label_gadget(2, 0).vertex_count() == 3);
  CHECK_THROWS_AS(label_gadget(2, 2), OrderError);
}

TEST_CASE("embedding examples") {
  CHECK(tree_leq(tree_parse("0*()"), tree_parse("0*()")));
  // distinct single labels have nowhere to go
  CHECK(!tree_leq(tree_parse("0*()"), tree_parse("1*()")));
  // taller full trees do not embed into shorter ones
  CHECK(!tree_leq(full_tree(2, 2), full_tree(2, 1)));
  CHECK(tree_leq(full_tree(2, 1), full_tree(2, 2)));
  // a 3-node path does not embed into the 3-node star
  CHECK(!tree_leq(tree_parse("0*(0*(0*()))"), tree_parse("0*(0*() 0*())")));
}

TEST_CASE("oracle examples") {
  CHECK(tree_leq_oracle(tree_parse("0*(1*())"), tree_parse("0*(1*())")));
  CHECK(tree_leq_oracle(full_tree(2, 1), full_tree(2, 2)));
  CHECK(!tree_leq_oracle(tree_parse("0*(0*(0*()))"), tree_parse("0*(0*() 0*())")));
  CHECK_THROWS_AS(tree_leq_oracle(full_tree(2, 3), full_tree(2, 3), 8), ResourceError);
}

TEST_CASE("oracle equivalence on a small corpus") {
  auto trees = enumerate_trees(2, 3, 4);
  for (const auto& s : trees)
    for (const auto& t : trees) CHECK(tree_leq(s, t) == tree_leq_oracle(s, t));
}

TEST_CASE("embedding is a partial order on small trees") {
  auto trees = enumerate_trees(2, 3, 4);
  size_t n = trees.size();
  std::vector<std::vector<char>> m(n, std::vector<char>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = tree_leq(trees[i], trees[j]);
  for (size_t i = 0; i < n; ++i) {
    CHECK(m[i][i]);
    for (size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j] && m[j][i]) CHECK(trees[i] == trees[j]);
      for (size_t k = 0; k < n; ++k)
        if (m[i][j] && m[j][k]) CHECK(m[i][k]);
    }
  }
}

TEST_CASE("universe membership") {
  CHECK(tree_in_universe(tree_parse("1*(0*())"), 2, 3));
  CHECK(!tree_in_universe(tree_parse("2*()"), 2, 3));
  CHECK(!tree_in_universe(tree_parse("0*(0*() 0*() 0*())"), 1, 3));
  CHECK(tree_in_universe(tree_parse("0*(0*() 0*() 0*())"), 1, 0));  // unbounded
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_trees(1, 2, 4).size() == 4);    // unary chains
  CHECK(enumerate_trees(1, 3, 5).size() == 17);   // 1+1+2+4+9
  CHECK(enumerate_trees(2, 3, 3).size() == 22);   // 2+4+16
}
