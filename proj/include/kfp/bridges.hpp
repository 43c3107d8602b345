#pragma once

#include <vector>

#include "kfp/dilator.hpp"
#include "kfp/fixpoint.hpp"
#include "kfp/trees.hpp"

namespace kfp {

// Unlabeled bounded-branching trees into the fixed point of the sequence
// dilator: f(0*(t0 ... tk-1)) builds the term with those recursive images as
// the W-element <f(t0),...,f(tk-1)>. Reflects the tree embedding.
TermSystem::Term tree_to_fixpoint(const SeqDilator& sd, TermSystem& ts, const LabeledTree& t);

// Labels below m simulated by gadget trees: children padded to exactly n
// copies of label_gadget(m, l). Requires m < n. Output lives in the
// (1, n+1) universe.
LabeledTree delabel(int m, int n, const LabeledTree& t);

// Terms into labeled trees: the root label is e(token) and the children are
// the images of the support in enumeration order. e must be injective on the
// trace; label_count is the m of the target universe.
struct FixToTree {
  std::vector<int> e;  // token index -> label
  int label_count = 0;
  int branch_bound = 0;  // the n of the target universe
};
FixToTree default_injection(const CodedDilator& d);
LabeledTree fixpoint_to_tree(TermSystem& ts, const FixToTree& inj, TermSystem::Term t);

// Codomain Y = W(0) + W(1) (incomparable summands) for the unary sequence
// coding; entries of produced sequences index Y.
struct UnarySeqCodomain {
  EvalOrder w0, w1;
  FinPoset y;  // sum order, W(0) then W(1)
};
UnarySeqCodomain unary_seq_codomain(const CodedDilator& d);

// j(term) = <(0,sigma)> for leaves and <(1,sigma)> ++ j(child) otherwise.
std::vector<int> unary_to_seq(TermSystem& ts, const UnarySeqCodomain& y, TermSystem::Term t);

// Terms of the base dilator into terms of its prime transform:
// j(o(a, sigma)) = kappa'(<star-bar, plus-bar, W(j o en_a)(sigma)>).
// The default branch (star-bar when j o en_a is no quasi-embedding) is kept
// and reported through the `defaulted` flag.
struct ToPrime {
  TermSystem::Term term;
  bool defaulted = false;
};
ToPrime to_prime(TermSystem& base_ts, const PrimeDilator& pd, TermSystem& prime_ts,
                 TermSystem::Term t);

TermSystem::Term prime_star_term(const PrimeDilator& pd, TermSystem& prime_ts);
TermSystem::Term prime_plus_term(const PrimeDilator& pd, TermSystem& prime_ts);

// The Kruskal fixed point of 1 + Z*X against Higman sequences over Z.
std::vector<int> wz_term_to_seq(const WzDilator& wd, TermSystem& ts, TermSystem::Term t);
TermSystem::Term wz_seq_to_term(const WzDilator& wd, TermSystem& ts, const std::vector<int>& seq);

}  // namespace kfp
