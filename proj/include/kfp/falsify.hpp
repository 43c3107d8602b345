#pragma once

#include <optional>
#include <vector>

#include "kfp/dilator.hpp"
#include "kfp/ordterm.hpp"

namespace kfp {

// A bad subsequence of an enumeration stream: indices i1 < i2 < ... with
// p[ia] not<= p[ib] for all a < b. "none" means the bounded search space was
// exhausted; "inconclusive" means the node budget ran out first. Neither is
// a well-partial-order proof.
struct BadSearchResult {
  enum class Status { found, none, inconclusive };
  Status status = Status::none;
  std::vector<int> indices;
  long long nodes_visited = 0;
};

// Searches the first width_bound stream elements for a bad subsequence of
// exactly length_bound elements (length_bound >= 2); the witness is the
// lexicographically least index sequence.
BadSearchResult bad_search(const FinPoset& stream, int length_bound, int width_bound = -1,
                           long long budget = 1000000);

// Same search over the element stream of an eval order, with every witness
// re-verified pairwise through leq_W before being reported.
BadSearchResult bad_search_eval(const CodedDilator& d, const EvalOrder& eval, int length_bound,
                                long long budget = 1000000);

// The finite truncation of the antichain construction for normal dilators
// with a token supported on at least two points: Y = chain(L) + chain(L)* +
// discrete rest, tau_z = W(f_z)(token). For normal input the list is pairwise
// incomparable; otherwise a comparability witness is reported instead.
struct AntichainResult {
  FinPoset host;
  std::vector<DilElem> elems;
  bool antichain = false;
  std::optional<std::pair<int, int>> comparable;  // i, j with elems[i] <= elems[j]
};

AntichainResult two_point_antichain(const CodedDilator& d, int token, int chain_len);

// Turns a monotonicity violation into a bad sequence along the ladder
// h_k : c -> |c| x chain(K). Reduces the witness to one with disjoint value
// overlap (through the lexicographic Y x 2 step) before building the ladder,
// and re-verifies badness pairwise.
struct LadderResult {
  FinPoset host;
  std::vector<DilElem> elems;
  bool bad = false;
  std::optional<std::pair<int, int>> violation;  // k < l with elems[k] <= elems[l]
};

LadderResult ladder_bad_sequence(const CodedDilator& d, const MonotonicityWitness& w, int K);

// A strictly descending chain of at most `steps` terms strictly below `from`.
std::vector<OrdTerm> descent_search(const OrdTerm& from, int steps);

}  // namespace kfp
