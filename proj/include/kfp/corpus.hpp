#pragma once

#include "kfp/dilator.hpp"

namespace kfp {

// The working set of built-in dilators exercised by the property suite.
struct Corpus {
  SeqDilator seq2, seq3;
  ProdDilator prod1, prod2;
  WzDilator wz1, wz2a;
};
Corpus make_corpus();

// Rigged dilators. All are valid coded PO-dilators; each breaks exactly the
// property its name says.

// W(X) = X with the comparison table reversed on chains: unary, not normal,
// not monotone.
CodedDilator reversed_identity_dilator();

// Two disjoint unary copies, the second order-reversed: not monotone.
CodedDilator two_copy_reversed_dilator();

// W(X) = X^2 ordered by the strict first coordinate only (or equality):
// binary support, valid, monotonicity fails, normality fails.
CodedDilator first_coordinate_dilator();

// W(X) = X x X with the second coordinate compared in reverse: valid,
// binary support, not monotone, not normal. Its violations admit witness
// pairs whose values overlap off the diagonal.
CodedDilator reversed_pair_dilator();

// A well-behaved unary dilator with one leaf constructor and two chained
// point constructors: normal, monotone.
CodedDilator ladder_unary_dilator();

// Every token has empty shape; W(X) is a fixed 2-chain.
CodedDilator constant_chain2_dilator();

// Concrete readings of built-in elements (the oracle side of the semantics
// checks): the stored token payload pushed through the subset enumeration.
std::vector<int> seq_concrete(const SeqDilator& sd, const FinPoset& host, const DilElem& e);
std::vector<int> prod_concrete(const ProdDilator& pd, const FinPoset& host, const DilElem& e);
// {} for the isolated point, {z, x} for a pair.
std::vector<int> wz_concrete(const WzDilator& wd, const FinPoset& host, const DilElem& e);

}  // namespace kfp
