#include "kfp/bridges.hpp"

#include "doctest.h"
#include "kfp/corpus.hpp"

using namespace kfp;

TEST_CASE("tree_to_fixpoint base cases") {
  SeqDilator sd = seq_dilator(3);
  TermSystem ts(sd.dil);
  TermSystem::Term leaf = tree_to_fixpoint(sd, ts, tree_parse("0*()"));
  CHECK(ts.to_string(leaf) == "(empty:)");
  TermSystem::Term one = tree_to_fixpoint(sd, ts, tree_parse("0*(0*())"));
  CHECK(ts.children_of(one).size() == 1);
  CHECK(sd.dil.token(ts.token_of(one)).shape.size() == 1);
  // repeated identical subtrees collapse into one child with a longer token
  TermSystem::Term twin = tree_to_fixpoint(sd, ts, tree_parse("0*(0*() 0*())"));
  CHECK(ts.children_of(twin).size() == 1);
  CHECK(ts.token_of(twin) == sd.dil.token_index("s00"));
  CHECK_THROWS_AS(tree_to_fixpoint(sd, ts, tree_parse("0*(0*() 0*() 0*())")), OrderError);
  CHECK_THROWS_AS(tree_to_fixpoint(sd, ts, tree_parse("1*()")), OrderError);
}

TEST_CASE("tree_to_fixpoint reflects on small ternary trees") {
  SeqDilator sd = seq_dilator(3);
  TermSystem ts(sd.dil);
  auto trees = enumerate_trees(1, 3, 5);
  std::vector<TermSystem::Term> img;
  for (const auto& t : trees) img.push_back(tree_to_fixpoint(sd, ts, t));
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = 0; j < trees.size(); ++j)
      if (ts.leq(img[i], img[j])) CHECK(tree_leq(trees[i], trees[j]));
}

TEST_CASE("delabel") {
  CHECK_THROWS_AS(delabel(3, 3, tree_parse("0*()")), OrderError);
  LabeledTree img = delabel(2, 3, tree_parse("1*()"));
  CHECK(img.label == 0);
  REQUIRE(img.children.size() == 3);
  for (const auto& c : img.children) CHECK(c == label_gadget(2, 1));
  CHECK(tree_in_universe(img, 1, 4));

  LabeledTree i0 = delabel(2, 3, tree_parse("0*()"));
  CHECK(!tree_leq(i0, img));
  CHECK(!tree_leq(img, i0));
}

TEST_CASE("fixpoint_to_tree") {
  SeqDilator sd = seq_dilator(2);
  TermSystem ts(sd.dil);
  FixToTree inj = default_injection(sd.dil);
  TermSystem::Term leaf = ts.mk_term({}, sd.dil.token_index("empty"));
  LabeledTree lt = fixpoint_to_tree(ts, inj, leaf);
  CHECK(lt.children.empty());
  CHECK(lt.label == inj.e[sd.dil.token_index("empty")]);

  auto en = ts.enumerate(3, 100);
  for (auto s : en.terms)
    for (auto t : en.terms)
      if (tree_leq(fixpoint_to_tree(ts, inj, s), fixpoint_to_tree(ts, inj, t)))
        CHECK(ts.leq(s, t));

  // composing with tree_to_fixpoint preserves vertex counts on unary trees
  for (const auto& t : enumerate_trees(1, 2, 4)) {
    TermSystem ts3(seq_dilator(2).dil);
    SeqDilator sd3 = seq_dilator(2);
    auto term = tree_to_fixpoint(sd3, ts3, t);
    CHECK(fixpoint_to_tree(ts3, default_injection(sd3.dil), term).vertex_count() ==
          t.vertex_count());
  }

  FixToTree bad = inj;
  bad.e[0] = bad.e[1];
  CHECK_THROWS_AS(fixpoint_to_tree(ts, bad, leaf), OrderError);
}

TEST_CASE("unary_to_seq") {
  WzDilator wd = wz_dilator(FinPoset(1));
  TermSystem ts(wd.dil);
  UnarySeqCodomain y = unary_seq_codomain(wd.dil);
  CHECK(y.w0.elems.size() == 1);
  CHECK(y.w1.elems.size() == 2);
  CHECK(y.y.size() == 3);

  TermSystem::Term leaf = ts.mk_term({}, wd.one_token);
  auto s0 = unary_to_seq(ts, y, leaf);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0] < static_cast<int>(y.w0.elems.size()));  // tagged (0, sigma)

  TermSystem::Term one = ts.mk_term({leaf}, wd.pair_token[0]);
  auto s1 = unary_to_seq(ts, y, one);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] >= static_cast<int>(y.w0.elems.size()));  // head tagged (1, sigma)

  auto en = ts.enumerate(4, 100);
  for (auto s : en.terms) {
    CHECK(static_cast<int>(unary_to_seq(ts, y, s).size()) == ts.length(s));
    for (auto t : en.terms)
      if (higman_leq(unary_to_seq(ts, y, s), unary_to_seq(ts, y, t), y.y))
        CHECK(ts.leq(s, t));
  }

  CHECK_THROWS_AS(unary_seq_codomain(product_dilator(2).dil), OrderError);
}

TEST_CASE("to_prime") {
  SeqDilator sd = seq_dilator(2);
  PrimeDilator pd = prime_transform(sd.dil);
  TermSystem base_ts(sd.dil), prime_ts(pd.dil);
  TermSystem::Term star = prime_star_term(pd, prime_ts);
  TermSystem::Term plus = prime_plus_term(pd, prime_ts);
  CHECK(star != plus);
  CHECK(!prime_ts.leq(star, plus));
  CHECK(!prime_ts.leq(plus, star));

  TermSystem::Term leaf = base_ts.mk_term({}, sd.dil.token_index("empty"));
  ToPrime img = to_prime(base_ts, pd, prime_ts, leaf);
  CHECK(!img.defaulted);
  const auto& kids = prime_ts.children_of(img.term);
  REQUIRE(kids.size() == 2);
  CHECK(((kids[0] == star && kids[1] == plus) || (kids[0] == plus && kids[1] == star)));
  CHECK(!prime_ts.leq(img.term, star));
  CHECK(!prime_ts.leq(img.term, plus));
  // a term with two leaf children: one level up, three nodes in total
  CHECK(prime_ts.height(img.term) == 1);
  CHECK(prime_ts.length(img.term) == 3);

  auto en = base_ts.enumerate(2, 100);
  std::vector<TermSystem::Term> images;
  for (auto t : en.terms) {
    ToPrime r = to_prime(base_ts, pd, prime_ts, t);
    CHECK(!r.defaulted);
    images.push_back(r.term);
  }
  for (size_t i = 0; i < en.terms.size(); ++i)
    for (size_t j = 0; j < en.terms.size(); ++j)
      if (prime_ts.leq(images[i], images[j])) CHECK(base_ts.leq(en.terms[i], en.terms[j]));
}

TEST_CASE("wz isomorphism at small heights") {
  for (const FinPoset& z : {FinPoset(1), FinPoset::antichain(2), FinPoset::chain(2)}) {
    WzDilator wd = wz_dilator(z);
    TermSystem ts(wd.dil);
    auto en = ts.enumerate(3, 1000);
    for (auto t : en.terms) {
      auto seq = wz_term_to_seq(wd, ts, t);
      CHECK(static_cast<int>(seq.size()) == ts.height(t));
      CHECK(wz_seq_to_term(wd, ts, seq) == t);
      for (auto u : en.terms)
        CHECK(ts.leq(t, u) == higman_leq(seq, wz_term_to_seq(wd, ts, u), z));
    }
  }
}
