#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "kfp/dilator.hpp"

namespace kfp {

// The initial Kruskal fixed point of a coded dilator as a term system. Terms
// are interned: a handle identifies a term uniquely up to structural
// equality, children are stored deduplicated in rank order. The rank is the
// structural total order (height, length, grammar string) that also fixes
// the subset enumerations inside the term universe.
class TermSystem {
 public:
  using Term = int;

  explicit TermSystem(CodedDilator d);

  const CodedDilator& dilator() const { return d_; }

  // Builds a term from a children set and a trace token; children are
  // deduplicated and the induced order on them must canonicalize to the
  // token's shape, otherwise OrderError.
  Term mk_term(const std::vector<Term>& children, int token);

  // The fixed-point order: the underlying W-elements compare over the union
  // of the children sets, or s is below some child of t.
  bool leq(Term s, Term t);

  int height(Term t) const { return nodes_[t].height; }
  int length(Term t) const { return nodes_[t].length; }
  int token_of(Term t) const { return nodes_[t].token; }
  const std::vector<Term>& children_of(Term t) const { return nodes_[t].children; }
  const std::string& to_string(Term t) const { return nodes_[t].serial; }

  // Grammar: term := "(" token-id ":" term* ")". Children may appear in any
  // order on input; output is always in rank order.
  Term parse(const std::string& text);

  bool rank_less(Term a, Term b) const;

  struct Enumeration {
    std::vector<Term> terms;  // rank order
    bool truncated = false;
  };
  // All terms of height <= max_height, truncated at max_count.
  Enumeration enumerate(int max_height, int max_count);

  // The induced order on a set of terms (labels follow the given vector).
  FinPoset induced_order(const std::vector<Term>& terms);

  int term_count() const { return static_cast<int>(nodes_.size()); }

 private:
  struct Node {
    int token;
    std::vector<Term> children;
    int height, length;
    std::string serial;
  };

  CodedDilator d_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, Term> intern_;
  std::unordered_map<uint64_t, bool> leq_memo_;
};

}  // namespace kfp
