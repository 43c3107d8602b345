#pragma once

#include <string>
#include <vector>

#include "kfp/errors.hpp"

namespace kfp {

// A term of an iterated omega^X order. Level 1 denotes omega, level 2
// omega^omega, level 3 omega^(omega^omega). Entries of a level-L term are
// level-(L-1) terms in non-increasing order; level-0 terms are the unique
// point of the one-element order, so a level-1 term is just a tally and we
// read it as the natural number it has entries.
class OrdTerm {
 public:
  static constexpr int kMaxLevel = 3;

  static OrdTerm atom();          // level 0
  static OrdTerm nat(int n);      // level 1
  static OrdTerm zero(int level); // empty term of the given level

  OrdTerm(int level, std::vector<OrdTerm> entries);

  int level() const { return level_; }
  const std::vector<OrdTerm>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  int as_nat() const;  // level-1 terms only

  bool operator==(const OrdTerm& o) const;

 private:
  OrdTerm() = default;
  int level_ = 0;
  std::vector<OrdTerm> entries_;
};

// -1, 0, +1. Levels must agree.
int ord_cmp(const OrdTerm& s, const OrdTerm& t);

// Lexicographic order on non-increasing sequences; a proper prefix precedes
// its extensions, which makes omega^1 order-isomorphic to omega.
bool ord_leq(const OrdTerm& s, const OrdTerm& t);

// Level 1 terms print as naturals; higher levels as "[e0 e1 ...]".
std::string ord_to_string(const OrdTerm& t);
OrdTerm ord_parse(const std::string& text, int level);

// All level-`level` terms with every nested entry value <= max_entry and
// every sequence length <= max_len, sorted ascending under ord_leq.
std::vector<OrdTerm> enumerate_ord_terms(int level, int max_entry, int max_len);

}  // namespace kfp
