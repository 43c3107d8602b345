#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kfp/poset.hpp"

namespace kfp {

// One trace element (c, rho): the canonical shape c together with an opaque
// identifier for the full-support element rho over c.
struct TraceToken {
  CanonicalPoset shape;
  std::string id;
};

// A normal-form element of W(host): its support and its trace token. The
// token's shape always equals the canonical form of the induced order on the
// support, and the element denotes W(en_a)(rho).
struct DilElem {
  std::vector<int> support;  // sorted host indices
  int token = -1;

  bool operator==(const DilElem& o) const { return support == o.support && token == o.token; }
};

class Backing;

// A coded finite PO-dilator: trace, the action of bijective quasi-embeddings
// between canonical shapes on trace tokens, and the covering-pair comparison
// table. Everything else (the order of W(X) for arbitrary finite X, the
// functor on quasi-embeddings) is derived by normal-form transport.
class CodedDilator {
 public:
  CodedDilator() = default;
  CodedDilator(int n_max, std::vector<TraceToken> trace, std::shared_ptr<const Backing> backing);

  int n_max() const { return n_max_; }
  const std::vector<TraceToken>& trace() const { return trace_; }
  const TraceToken& token(int i) const { return trace_[i]; }
  int token_index(const std::string& id) const;  // -1 if absent
  std::vector<int> tokens_with_shape(const CanonicalPoset& shape) const;

  // Action of a bijective quasi-embedding q between canonical shapes.
  int action(const OrderMap& q, int token) const;

  // Table entry for a covering pair over canonical d: the element with
  // support s and token sigma against the element with support t and token
  // tau, where s, t cover d (s and t are sorted subsets of d with union d).
  bool table(const CanonicalPoset& d, const std::vector<int>& s, int sigma,
             const std::vector<int>& t, int tau) const;

  const Backing& backing() const { return *backing_; }

 private:
  int n_max_ = 0;
  std::vector<TraceToken> trace_;
  std::shared_ptr<const Backing> backing_;
};

// Backing store for action and table queries. Materialized for small coded
// data, lazy for derived dilators such as the prime transform.
class Backing {
 public:
  virtual ~Backing() = default;
  virtual int action(const CodedDilator& d, const OrderMap& q, int token) const = 0;
  virtual bool table(const CodedDilator& d, const CanonicalPoset& c, const std::vector<int>& s,
                     int sigma, const std::vector<int>& t, int tau) const = 0;
};

// ---- normal-form transport ---------------------------------------------

// Restriction of two elements of W(host) to the canonical form of the union
// of their supports, with tokens transported along the connecting
// automorphisms. s and t cover c by construction.
struct UnionForm {
  CanonicalPoset c;
  OrderMap en;  // c -> host, range = union of supports
  std::vector<int> s, t;
  int sigma = -1, tau = -1;
};

UnionForm restrict_to_union(const CodedDilator& d, const FinPoset& host, const DilElem& x,
                            const DilElem& y);

// The order of W(host).
bool leq_W(const CodedDilator& d, const FinPoset& host, const DilElem& x, const DilElem& y);

// Functor action W(f) for a quasi-embedding f out of the host of x.
DilElem apply_map(const CodedDilator& d, const OrderMap& f, const DilElem& x);

// W(host) as a finite order: all normal-form elements, ordered by leq_W.
// Elements are listed by (support mask ascending, token index).
struct EvalOrder {
  FinPoset host;
  std::vector<DilElem> elems;
  FinPoset order;

  int index_of(const DilElem& e) const;
};

EvalOrder eval_order(const CodedDilator& d, const FinPoset& host, int size_cap = -1);

// ---- validation and classification ---------------------------------------

struct ValidateOptions {
  // Per-clause poset-size caps; the effective bound of each clause is the
  // minimum of the sound bound (a function of n_max) and the cap here.
  int action_cap = 3;        // sound bound n_max
  int table_cap = 4;         // sound bound 2*n_max (reflexivity, antisymmetry, equivariance, normality)
  int transitivity_cap = 5;  // sound bound 3*n_max
  int embedding_cap = 3;     // sound bound 2*n_max
  // Work guards: hosts whose evaluated order would exceed these element
  // counts are skipped by the respective clause.
  int transitivity_elem_budget = 600;
  int embedding_elem_budget = 64;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  int bound = 0;  // effective poset-size bound used
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  // The PO-dilator axioms alone; normality is reported but is a
  // classification, not an axiom.
  bool axioms_pass() const;
  std::string to_text() const;
};

ValidationReport validate(const CodedDilator& d, const ValidateOptions& opts = {});

bool is_normal(const CodedDilator& d, int size_cap = 4);
bool is_unary(const CodedDilator& d);

struct MonotoneOptions {
  int domain_cap = 3;    // spec bound n_max
  int codomain_cap = 4;  // spec bound 2*n_max
};

struct MonotonicityWitness {
  CanonicalPoset c;
  int token = -1;
  FinPoset y;
  OrderMap f, g;  // quasi-embeddings c -> y with f <= g but W(f)(tok) not<= W(g)(tok)
};

struct MonotonicityResult {
  bool monotone = true;
  std::optional<MonotonicityWitness> witness;
};

MonotonicityResult is_monotone(const CodedDilator& d, const MonotoneOptions& opts = {});

// For unary finite-trace dilators monotonicity decides preservation of well
// partial orders; throws on non-unary input.
bool unary_wpo_decision(const CodedDilator& d, const MonotoneOptions& opts = {});

// ---- direct semantics and materialization ---------------------------------

// Direct semantics of a finite PO-dilator on arbitrary finite hosts. Elements
// are encoded as small int vectors whose meaning is fixed by the
// implementation. Used to materialize built-in dilators and rigged test
// dilators into coded form.
class ConcreteDilator {
 public:
  virtual ~ConcreteDilator() = default;
  virtual std::vector<std::vector<int>> elements(const FinPoset& host) const = 0;
  virtual bool leq(const FinPoset& host, const std::vector<int>& a,
                   const std::vector<int>& b) const = 0;
  virtual std::vector<int> support(const FinPoset& host, const std::vector<int>& a) const = 0;
  virtual std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const = 0;
  virtual std::string token_id(const CanonicalPoset& shape, const std::vector<int>& a) const = 0;
};

CodedDilator materialize(const ConcreteDilator& sem, int n_max);

// ---- explicit coded data and JSON ------------------------------------------

struct DilatorData {
  int n_max = 0;
  std::vector<TraceToken> trace;
  struct ActionEntry {
    OrderMap q;
    int from = -1, to = -1;
  };
  std::vector<ActionEntry> action;
  struct TableEntry {
    CanonicalPoset d;
    std::vector<int> s;
    int sigma = -1;
    std::vector<int> t;
    int tau = -1;
    bool leq = false;
  };
  std::vector<TableEntry> table;
};

// Structural checks (canonical shapes, key well-formedness, action totality)
// throw StructuralError; semantic axioms are checked by validate().
CodedDilator make_coded_dilator(const DilatorData& data);

CodedDilator dilator_from_json_text(const std::string& text);
std::string dilator_to_json_text(const CodedDilator& d);  // materialized dilators only
CodedDilator load_dilator_file(const std::string& path);

// ---- built-in constructors --------------------------------------------------

// W(X) = sequences over X of length < n, Higman order.
struct SeqDilator {
  CodedDilator dil;
  int bound = 0;
  int token_of(const CanonicalPoset& shape, const std::vector<int>& entries) const;
  const std::vector<int>& entries_of(int token) const;

  std::shared_ptr<const std::vector<std::vector<int>>> payloads;
};
SeqDilator seq_dilator(int n);

// W(X) = X^n, componentwise order.
struct ProdDilator {
  CodedDilator dil;
  int arity = 0;
  int token_of(const CanonicalPoset& shape, const std::vector<int>& entries) const;
  const std::vector<int>& entries_of(int token) const;

  std::shared_ptr<const std::vector<std::vector<int>>> payloads;
};
ProdDilator product_dilator(int n);

// W(X) = 1 + Z*X: an isolated point plus pairs ordered componentwise.
struct WzDilator {
  CodedDilator dil;
  FinPoset z;
  int one_token = -1;
  std::vector<int> pair_token;  // per z element
  int z_of(int token) const;    // -1 for the isolated point
};
WzDilator wz_dilator(const FinPoset& z);

// Unary dilators from order data: tokens with empty or one-point shapes.
// rel[i][j] states when token_i placed at x is <= token_j placed at y;
// reflexive comparisons are implied and need not be listed.
struct UnarySpec {
  struct TokenSpec {
    std::string id;
    bool point = false;  // false: empty shape
  };
  struct Rel {
    bool at_empty = false;       // both empty shapes
    bool empty_vs_point = false; // empty-shape element below point element
    bool point_vs_empty = false;
    bool same_point = false;     // both at the same host point
    bool below = false;          // x strictly below y
    bool above = false;          // x strictly above y
    bool at_incomparable = false;
  };
  std::vector<TokenSpec> tokens;
  std::vector<std::vector<Rel>> rel;
};
CodedDilator unary_dilator(const UnarySpec& spec);

// W'(X) = {star, plus} + {<x,y,sigma> : x != y}, the two new points isolated
// and triples ordered componentwise. n_max grows by 2.
struct PrimeDilator {
  CodedDilator dil;
  CodedDilator base;
  int star_token = -1, plus_token = -1;

  struct TripleInfo {
    int x = -1, y = -1;  // shape positions
    DilElem inner;       // element of W(shape) of the base dilator
  };
  // Empty optional for star/plus.
  const std::optional<TripleInfo>& info(int token) const;
  int triple_token(const CanonicalPoset& shape, int x, int y, const DilElem& inner) const;

  std::shared_ptr<const std::vector<std::optional<TripleInfo>>> infos;
};
PrimeDilator prime_transform(const CodedDilator& d, int shape_cap = -1);

// Resolves "seq:N", "prod:N", "wz:<poset-spec>", "prime:<spec>" or a file path.
CodedDilator resolve_dilator(const std::string& spec);

// ---- the product quasi-embedding (tuple coordinates) ------------------------

// Target order for prod_embed: trace tokens as an antichain, then the host.
FinPoset prod_embed_target(const CodedDilator& d, const FinPoset& host);

// g(sigma) as n_max+1 indices into prod_embed_target: the support enumerated
// through en, padded with the element's trace tag.
std::vector<int> prod_embed(const CodedDilator& d, const FinPoset& host, const DilElem& x);

// ---- element grammar ---------------------------------------------------------

// "<token-id>@{i,j,...}"
std::string elem_to_string(const CodedDilator& d, const DilElem& e);
DilElem elem_parse(const CodedDilator& d, const std::string& text);

}  // namespace kfp
