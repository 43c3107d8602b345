#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kfp/errors.hpp"

namespace kfp {

// Finite partial order on {0,...,size-1}. Rows are bit vectors of up-sets:
// bit j of row i is set iff i <= j.
class FinPoset {
 public:
  static constexpr int kMaxSize = 1024;

  FinPoset() = default;
  explicit FinPoset(int size);  // discrete order (reflexive pairs only)

  static FinPoset chain(int n);
  static FinPoset antichain(int n);
  // Builds from the non-reflexive related pairs and validates the axioms.
  static FinPoset from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return size_; }
  bool leq(int i, int j) const {
    return (data_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
  }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool incomparable(int i, int j) const { return !leq(i, j) && !leq(j, i); }

  void set_leq(int i, int j);  // raw edit; caller re-validates

  // up-set of j contained in up-set of i (the transitivity condition when i <= j)
  bool up_set_subset(int j, int i) const;
  // smallest k with j <= k but not i <= k, or -1
  int first_up_not_in(int j, int i) const;

  bool is_partial_order() const;
  void require_partial_order(const std::string& what = "relation") const;

  // Pairs (i,j) with i < j in the order and i != j, row-major.
  std::vector<std::pair<int, int>> strict_pairs() const;

  // Total-order key used for dedup, caching and canonical comparisons.
  std::string key() const;

  bool operator==(const FinPoset& o) const { return size_ == o.size_ && data_ == o.data_; }
  bool operator!=(const FinPoset& o) const { return !(*this == o); }

 private:
  int size_ = 0;
  int words_ = 0;
  std::vector<uint64_t> data_;
};

// A relabeling f of p: element i of p becomes f(i). Result.leq(f(i),f(j)) = p.leq(i,j).
FinPoset relabel(const FinPoset& p, const std::vector<int>& f);

// Disjoint sum; parts flagged reversed contribute their inverse order;
// cross-part elements are incomparable. Element k of part p gets index
// offset(p) + k with offsets accumulating part sizes.
FinPoset sum_order(const std::vector<FinPoset>& parts, const std::vector<bool>& reversed_flags = {});

// Componentwise product; pair (x,y) gets index x * b.size() + y.
FinPoset product_order(const FinPoset& a, const FinPoset& b);

// A monotone-or-not total function between two fixed finite orders.
struct OrderMap {
  FinPoset domain;
  FinPoset codomain;
  std::vector<int> values;

  int operator()(int x) const { return values[x]; }
  bool operator==(const OrderMap& o) const {
    return domain == o.domain && codomain == o.codomain && values == o.values;
  }
};

OrderMap identity_map(const FinPoset& p);
OrderMap compose(const OrderMap& g, const OrderMap& f);  // g after f
OrderMap inverse_of_bijection(const OrderMap& f);        // raw inverse; may not be a morphism

enum class MapClass { none, quasi_embedding, embedding };

// quasi-embedding: f(x) <= f(x') implies x <= x' (order-reflecting).
// embedding: additionally x <= x' implies f(x) <= f(x').
MapClass morphism_checks(const OrderMap& f);
bool is_quasi_embedding(const OrderMap& f);
bool is_embedding(const OrderMap& f);
bool is_bijective(const OrderMap& f);

// true iff f(x) <= g(x) in the shared codomain for all x. Throws on mismatch.
bool pointwise_leq(const OrderMap& f, const OrderMap& g);

// Canonical representative of an isomorphism class. The canonical labeling
// minimizes, over all relabelings, the bit string
//   leq(0,0), leq(1,0), ..., leq(k-1,0), leq(0,1), ...
// (columns of leq in order, i.e. down-sets of 0,1,...), ties broken by the
// lexicographically least permutation. Minimal elements get small labels.
struct CanonicalPoset {
  FinPoset poset;

  int size() const { return poset.size(); }
  std::string key() const { return poset.key(); }
  bool operator==(const CanonicalPoset& o) const { return poset == o.poset; }
  bool operator!=(const CanonicalPoset& o) const { return !(poset == o.poset); }
};

struct Canonicalization {
  CanonicalPoset canon;
  OrderMap iso;  // p -> canon.poset
};

Canonicalization canonical_form(const FinPoset& p);
bool is_canonical(const FinPoset& p);

// All order-automorphisms of p, as permutation vectors, lexicographically sorted.
const std::vector<std::vector<int>>& automorphisms(const FinPoset& p);

// The deterministic enumeration of a finite suborder: |a| in canonical form
// together with en : |a| -> host, the isomorphism onto a that minimizes the
// tuple (en(0), en(1), ...) of host indices lexicographically.
struct SubsetEnum {
  FinPoset host;
  std::vector<int> members;  // sorted host indices
  CanonicalPoset shape;
  OrderMap en;  // shape.poset -> host, range = members
};

SubsetEnum induced_suborder(const FinPoset& host, const std::vector<int>& members);

// Enumeration bound for exhaustive searches (design default 6); the
// environment variable KFP_SIZE_CAP or set_size_cap_override adjust it
// process-wide.
int default_size_cap();
void set_size_cap_override(int cap);  // cap <= 0 restores the default

// All maps p -> q of the requested kind, values-lexicographic order.
std::vector<OrderMap> enumerate_maps(const FinPoset& p, const FinPoset& q, MapClass kind,
                                     int size_cap = -1);

// Higman sequence order over x: s <= t iff a strictly increasing index map f
// exists with s[i] <= t[f(i)] for all i.
bool higman_leq(const std::vector<int>& s, const std::vector<int>& t, const FinPoset& x);

// All canonical posets with exactly `size` elements, sorted by key.
const std::vector<CanonicalPoset>& canonical_posets(int size);

// All labeled partial orders on {0,...,size-1}, deterministic order.
std::vector<FinPoset> all_labeled_posets(int size);

// JSON poset format: {"size": k, "leq": [[i,j],...]} with reflexive pairs
// implicit; the loader validates the axioms and rejects otherwise.
FinPoset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const FinPoset& p);
FinPoset load_poset_file(const std::string& path);

// Accepts a file path or an inline spec "chain:N" / "antichain:N" / "empty".
FinPoset resolve_poset(const std::string& spec);

std::vector<int> mask_to_set(uint64_t mask);
uint64_t set_to_mask(const std::vector<int>& set);

}  // namespace kfp
