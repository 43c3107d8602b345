#include "kfp/bridges.hpp"

#include <algorithm>

namespace kfp {

TermSystem::Term tree_to_fixpoint(const SeqDilator& sd, TermSystem& ts, const LabeledTree& t) {
  if (t.label != 0) throw OrderError("tree_to_fixpoint: tree must be unlabeled (label 0)");
  if (static_cast<int>(t.children.size()) >= sd.bound)
    throw OrderError("tree_to_fixpoint: branching degree exceeds the sequence bound");
  std::vector<TermSystem::Term> images;
  for (const auto& c : t.children) images.push_back(tree_to_fixpoint(sd, ts, c));

  // the W-element is the sequence of images; its support is the image set
  std::vector<TermSystem::Term> kids = images;
  std::sort(kids.begin(), kids.end());
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  std::sort(kids.begin(), kids.end(),
            [&](TermSystem::Term a, TermSystem::Term b) { return ts.rank_less(a, b); });
  FinPoset induced = ts.induced_order(kids);
  SubsetEnum se = induced_suborder(induced, [&] {
    std::vector<int> all(kids.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return all;
  }());
  // token entries: position of each image under en within the canonical shape
  std::vector<int> inv(kids.size());
  for (int p = 0; p < se.shape.size(); ++p) inv[se.en.values[p]] = p;
  std::vector<int> entries;
  for (auto img : images) {
    int at = static_cast<int>(std::find(kids.begin(), kids.end(), img) - kids.begin());
    entries.push_back(inv[at]);
  }
  int token = sd.token_of(se.shape, entries);
  if (token < 0) throw StructuralError("tree_to_fixpoint: sequence token missing");
  return ts.mk_term(kids, token);
}

LabeledTree delabel(int m, int n, const LabeledTree& t) {
  if (m >= n) throw OrderError("delabel: m < n required");
  if (!tree_in_universe(t, m, n)) throw OrderError("delabel: tree not in the (m,n) universe");
  LabeledTree gadget_cache;  // computed per label below
  LabeledTree out;
  out.label = 0;
  for (const auto& c : t.children) out.children.push_back(delabel(m, n, c));
  LabeledTree pad = label_gadget(m, t.label);
  while (static_cast<int>(out.children.size()) < n) out.children.push_back(pad);
  return out;
}

FixToTree default_injection(const CodedDilator& d) {
  FixToTree inj;
  inj.label_count = static_cast<int>(d.trace().size());
  inj.e.resize(d.trace().size());
  for (size_t i = 0; i < d.trace().size(); ++i) inj.e[i] = static_cast<int>(i);
  inj.branch_bound = d.n_max() + 1;
  return inj;
}

LabeledTree fixpoint_to_tree(TermSystem& ts, const FixToTree& inj, TermSystem::Term t) {
  const CodedDilator& d = ts.dilator();
  if (inj.e.size() != d.trace().size()) throw OrderError("fixpoint_to_tree: e not total");
  std::vector<bool> seen(inj.label_count, false);
  for (int v : inj.e) {
    if (v < 0 || v >= inj.label_count || seen[v]) throw OrderError("fixpoint_to_tree: e not injective");
    seen[v] = true;
  }
  for (const auto& tok : d.trace())
    if (tok.shape.size() >= inj.branch_bound)
      throw OrderError("fixpoint_to_tree: branch bound too small for a token shape");

  auto rec = [&](auto&& self, TermSystem::Term cur) -> LabeledTree {
    LabeledTree out;
    out.label = inj.e[ts.token_of(cur)];
    const auto& kids = ts.children_of(cur);
    FinPoset induced = ts.induced_order(kids);
    std::vector<int> all(kids.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    SubsetEnum se = induced_suborder(induced, all);
    for (int i = 0; i < se.shape.size(); ++i)
      out.children.push_back(self(self, kids[se.en.values[i]]));
    return out;
  };
  return rec(rec, t);
}

UnarySeqCodomain unary_seq_codomain(const CodedDilator& d) {
  if (!is_unary(d)) throw OrderError("unary_seq_codomain: dilator is not unary");
  UnarySeqCodomain out;
  out.w0 = eval_order(d, FinPoset(0));
  out.w1 = eval_order(d, FinPoset(1));
  out.y = sum_order({out.w0.order, out.w1.order});
  return out;
}

std::vector<int> unary_to_seq(TermSystem& ts, const UnarySeqCodomain& y, TermSystem::Term t) {
  const CodedDilator& d = ts.dilator();
  if (!is_unary(d)) throw OrderError("unary_to_seq: dilator is not unary");
  std::vector<int> out;
  TermSystem::Term cur = t;
  while (true) {
    const auto& kids = ts.children_of(cur);
    if (kids.empty()) {
      int idx = y.w0.index_of(DilElem{{}, ts.token_of(cur)});
      if (idx < 0) throw StructuralError("unary_to_seq: leaf element missing in W(0)");
      out.push_back(idx);
      return out;
    }
    int idx = y.w1.index_of(DilElem{{0}, ts.token_of(cur)});
    if (idx < 0) throw StructuralError("unary_to_seq: element missing in W(1)");
    out.push_back(static_cast<int>(y.w0.elems.size()) + idx);
    cur = kids[0];
  }
}

TermSystem::Term prime_star_term(const PrimeDilator& pd, TermSystem& prime_ts) {
  return prime_ts.mk_term({}, pd.star_token);
}

TermSystem::Term prime_plus_term(const PrimeDilator& pd, TermSystem& prime_ts) {
  return prime_ts.mk_term({}, pd.plus_token);
}

ToPrime to_prime(TermSystem& base_ts, const PrimeDilator& pd, TermSystem& prime_ts,
                 TermSystem::Term t) {
  TermSystem::Term star = prime_star_term(pd, prime_ts);
  TermSystem::Term plus = prime_plus_term(pd, prime_ts);

  bool defaulted = false;
  auto rec = [&](auto&& self, TermSystem::Term cur) -> TermSystem::Term {
    const auto& kids = base_ts.children_of(cur);
    std::vector<TermSystem::Term> images;
    for (auto k : kids) images.push_back(self(self, k));

    // children of the image: {star, plus} plus the recursive images
    std::vector<TermSystem::Term> prime_kids{star, plus};
    for (auto img : images) prime_kids.push_back(img);
    std::sort(prime_kids.begin(), prime_kids.end());
    prime_kids.erase(std::unique(prime_kids.begin(), prime_kids.end()), prime_kids.end());
    std::sort(prime_kids.begin(), prime_kids.end(),
              [&](TermSystem::Term a, TermSystem::Term b) { return prime_ts.rank_less(a, b); });

    FinPoset induced = prime_ts.induced_order(prime_kids);
    std::vector<int> all(prime_kids.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    SubsetEnum se = induced_suborder(induced, all);
    std::vector<int> inv(prime_kids.size());
    for (int p = 0; p < se.shape.size(); ++p) inv[se.en.values[p]] = p;
    auto pos_of = [&](TermSystem::Term x) {
      int at = static_cast<int>(std::find(prime_kids.begin(), prime_kids.end(), x) -
                                prime_kids.begin());
      return inv[at];
    };

    // q : |a| -> shape, the map j o en_a in shape coordinates
    const auto& base_kids = base_ts.children_of(cur);
    FinPoset base_induced = base_ts.induced_order(base_kids);
    std::vector<int> base_all(base_kids.size());
    for (size_t i = 0; i < base_all.size(); ++i) base_all[i] = static_cast<int>(i);
    SubsetEnum base_se = induced_suborder(base_induced, base_all);
    std::vector<int> qv(base_se.shape.size());
    for (int u = 0; u < base_se.shape.size(); ++u)
      qv[u] = pos_of(images[base_se.en.values[u]]);
    OrderMap q{base_se.shape.poset, se.shape.poset, qv};
    if (!is_quasi_embedding(q)) {
      defaulted = true;  // the hypothetical branch; never taken on validated inputs
      return star;
    }

    DilElem full{[&] {
      std::vector<int> v(base_se.shape.size());
      for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
      return v;
    }(), base_ts.token_of(cur)};
    DilElem inner = apply_map(pd.base, q, full);
    int token = pd.triple_token(se.shape, pos_of(star), pos_of(plus), inner);
    if (token < 0) throw StructuralError("to_prime: triple token missing");
    return prime_ts.mk_term(prime_kids, token);
  };
  TermSystem::Term image = rec(rec, t);
  return ToPrime{image, defaulted};
}

std::vector<int> wz_term_to_seq(const WzDilator& wd, TermSystem& ts, TermSystem::Term t) {
  std::vector<int> out;
  TermSystem::Term cur = t;
  while (true) {
    if (ts.token_of(cur) == wd.one_token) return out;
    int z = wd.z_of(ts.token_of(cur));
    if (z < 0) throw StructuralError("wz_term_to_seq: unexpected token");
    out.push_back(z);
    cur = ts.children_of(cur)[0];
  }
}

TermSystem::Term wz_seq_to_term(const WzDilator& wd, TermSystem& ts, const std::vector<int>& seq) {
  TermSystem::Term cur = ts.mk_term({}, wd.one_token);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it < 0 || *it >= static_cast<int>(wd.pair_token.size()))
      throw OrderError("wz_seq_to_term: entry out of range");
    cur = ts.mk_term({cur}, wd.pair_token[*it]);
  }
  return cur;
}

}  // namespace kfp
