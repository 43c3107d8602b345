#include "kfp/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "kfp/bridges.hpp"
#include "kfp/corpus.hpp"
#include "kfp/falsify.hpp"
#include "kfp/fixpoint.hpp"
#include "kfp/ordterm.hpp"
#include "kfp/trees.hpp"

namespace kfp {

SizeProfile SizeProfile::named(const std::string& name) {
  SizeProfile p;
  p.name = name;
  if (name == "default") return p;
  if (name == "tiny") {
    p.tree_vertices = 4;
    p.tree_law_vertices = 4;
    p.gadget_heights = 2;
    p.gadget_labels = 3;
    p.canon_size = 4;
    p.morphism_size = 3;
    p.higman_len = 3;
    p.term_height = 2;
    p.wz_height = 2;
    p.unary_height = 3;
    p.tree_fix_vertices = 4;
    p.delabel_vertices = 3;
    p.antichain_max = 3;
    p.ladder_k = 3;
    p.transitivity_cap = 3;
    p.table_cap = 3;
    return p;
  }
  if (name == "thorough") {
    p.morphism_size = 5;
    p.func_size = 3;
    p.transitivity_cap = 6;
    p.table_cap = 4;
    p.embedding_cap = 4;
    p.term_height = 3;
    p.antichain_max = 6;
    return p;
  }
  throw OrderError("unknown profile: " + name);
}

namespace {

struct Check {
  bool pass = true;
  std::string details;
  long long cases = 0;

  void fail(const std::string& msg) {
    if (pass) {
      pass = false;
      details = msg;
    }
  }
  void count() { ++cases; }
};

std::string done(const Check& c) {
  if (!c.pass) return c.details;
  std::string out = std::to_string(c.cases) + " cases";
  if (!c.details.empty()) out += "; " + c.details;
  return out;
}

SuiteHooks with_defaults(SuiteHooks hooks) {
  if (!hooks.higman)
    hooks.higman = [](const std::vector<int>& s, const std::vector<int>& t, const FinPoset& x) {
      return higman_leq(s, t, x);
    };
  return hooks;
}

ValidateOptions validate_opts(const SizeProfile& p) {
  ValidateOptions v;
  v.action_cap = p.action_cap;
  v.table_cap = p.table_cap;
  v.transitivity_cap = p.transitivity_cap;
  v.embedding_cap = p.embedding_cap;
  return v;
}

MonotoneOptions monotone_opts(const SizeProfile& p) {
  return MonotoneOptions{p.monotone_domain_cap, p.monotone_codomain_cap};
}

std::vector<FinPoset> small_hosts(int max_size) {
  std::vector<FinPoset> out;
  for (int sz = 0; sz <= max_size; ++sz)
    for (const auto& p : all_labeled_posets(sz)) out.push_back(p);
  return out;
}

// ---- criterion 1 ------------------------------------------------------------

Check tree_oracle_equivalence(const SizeProfile& p) {
  Check c;
  auto trees = enumerate_trees(p.tree_labels, p.tree_branch, p.tree_vertices);
  for (const auto& s : trees)
    for (const auto& t : trees) {
      bool rec = tree_leq(s, t);
      bool map = tree_leq_oracle(s, t, p.tree_vertices + 2);
      c.count();
      if (rec != map) {
        c.fail("disagreement on " + tree_to_string(s) + " vs " + tree_to_string(t) +
               ": recursive=" + std::to_string(rec) + " oracle=" + std::to_string(map));
        return c;
      }
    }
  return c;
}

// ---- criterion 2 ------------------------------------------------------------

Check dilator_semantics_agreement(const SizeProfile& p, const SuiteHooks& hooks) {
  Check c;
  Corpus corpus = make_corpus();
  auto hosts = small_hosts(p.host_size);
  auto run = [&](const CodedDilator& d, const std::string& name, auto&& direct) {
    for (const auto& host : hosts) {
      EvalOrder ev = eval_order(d, host, std::max(p.host_size, 1));
      for (size_t i = 0; i < ev.elems.size(); ++i)
        for (size_t j = 0; j < ev.elems.size(); ++j) {
          bool coded = ev.order.leq(static_cast<int>(i), static_cast<int>(j));
          bool oracle = direct(host, ev.elems[i], ev.elems[j]);
          c.count();
          if (coded != oracle) {
            c.fail(name + " over " + poset_to_json_text(host) + ": " +
                   elem_to_string(d, ev.elems[i]) + " vs " + elem_to_string(d, ev.elems[j]) +
                   " coded=" + std::to_string(coded) + " direct=" + std::to_string(oracle));
            return false;
          }
        }
    }
    return true;
  };

  auto seq_direct = [&](const SeqDilator& sd) {
    return [&, sd](const FinPoset& host, const DilElem& a, const DilElem& b) {
      return hooks.higman(seq_concrete(sd, host, a), seq_concrete(sd, host, b), host);
    };
  };
  auto prod_direct = [&](const ProdDilator& pd) {
    return [&, pd](const FinPoset& host, const DilElem& a, const DilElem& b) {
      auto xa = prod_concrete(pd, host, a);
      auto xb = prod_concrete(pd, host, b);
      for (size_t i = 0; i < xa.size(); ++i)
        if (!host.leq(xa[i], xb[i])) return false;
      return true;
    };
  };
  auto wz_direct = [&](const WzDilator& wd) {
    return [&, wd](const FinPoset& host, const DilElem& a, const DilElem& b) {
      auto xa = wz_concrete(wd, host, a);
      auto xb = wz_concrete(wd, host, b);
      if (xa.empty() || xb.empty()) return xa.empty() && xb.empty();
      return wd.z.leq(xa[0], xb[0]) && host.leq(xa[1], xb[1]);
    };
  };

  if (!run(corpus.seq2.dil, "seq:2", seq_direct(corpus.seq2))) return c;
  if (!run(corpus.seq3.dil, "seq:3", seq_direct(corpus.seq3))) return c;
  if (!run(corpus.prod1.dil, "prod:1", prod_direct(corpus.prod1))) return c;
  if (!run(corpus.prod2.dil, "prod:2", prod_direct(corpus.prod2))) return c;
  if (!run(corpus.wz1.dil, "wz:1", wz_direct(corpus.wz1))) return c;
  if (!run(corpus.wz2a.dil, "wz:antichain2", wz_direct(corpus.wz2a))) return c;
  return c;
}

// ---- criterion 3 ------------------------------------------------------------

Check term_order_laws(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  std::vector<std::pair<std::string, CodedDilator>> dils = {
      {"seq:2", corpus.seq2.dil}, {"seq:3", corpus.seq3.dil},   {"prod:1", corpus.prod1.dil},
      {"prod:2", corpus.prod2.dil}, {"wz:1", corpus.wz1.dil},   {"wz:antichain2", corpus.wz2a.dil}};
  for (auto& [name, dil] : dils) {
    TermSystem ts(dil);
    auto en = ts.enumerate(p.term_height, p.term_count);
    if (en.truncated) {
      c.fail(name + ": enumeration truncated, raise term_count");
      return c;
    }
    int n = static_cast<int>(en.terms.size());
    FinPoset order(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i == j || ts.leq(en.terms[i], en.terms[j])) order.set_leq(i, j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        c.count();
        if (i != j && order.leq(i, j) && order.leq(j, i)) {
          c.fail(name + ": antisymmetry fails at " + ts.to_string(en.terms[i]) + " / " +
                 ts.to_string(en.terms[j]));
          return c;
        }
        if (order.leq(i, j)) {
          int k = order.first_up_not_in(j, i);
          if (k >= 0) {
            c.fail(name + ": transitivity fails at " + ts.to_string(en.terms[i]) + " <= " +
                   ts.to_string(en.terms[j]) + " <= " + ts.to_string(en.terms[k]));
            return c;
          }
        }
      }
  }
  return c;
}

// ---- criterion 4 ------------------------------------------------------------

std::vector<std::vector<int>> sequences_over(int alphabet, int max_len) {
  std::vector<std::vector<int>> out{{}};
  size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (int z = 0; z < alphabet; ++z) {
        auto s = out[i];
        s.push_back(z);
        out.push_back(std::move(s));
      }
    start = end;
  }
  return out;
}

Check wz_higman_isomorphism(const SizeProfile& p) {
  Check c;
  std::vector<FinPoset> zs = {FinPoset(0), FinPoset(1), FinPoset::antichain(2),
                              FinPoset::chain(2)};
  for (const auto& z : zs) {
    WzDilator wd = wz_dilator(z);
    TermSystem ts(wd.dil);
    auto en = ts.enumerate(p.wz_height, p.term_count);
    auto seqs = sequences_over(z.size(), p.wz_height);
    if (en.terms.size() != seqs.size()) {
      c.fail("cardinality mismatch for |z|=" + std::to_string(z.size()) + ": " +
             std::to_string(en.terms.size()) + " terms vs " + std::to_string(seqs.size()) +
             " sequences");
      return c;
    }
    // bijection via round trips
    std::set<std::vector<int>> images;
    for (auto t : en.terms) {
      auto seq = wz_term_to_seq(wd, ts, t);
      if (static_cast<int>(seq.size()) != ts.height(t)) {
        c.fail("length/height mismatch");
        return c;
      }
      images.insert(seq);
      if (wz_seq_to_term(wd, ts, seq) != t) {
        c.fail("round trip differs for " + ts.to_string(t));
        return c;
      }
    }
    if (images.size() != en.terms.size()) {
      c.fail("term-to-sequence map is not injective");
      return c;
    }
    for (auto s : en.terms)
      for (auto t : en.terms) {
        c.count();
        bool term_side = ts.leq(s, t);
        bool seq_side = higman_leq(wz_term_to_seq(wd, ts, s), wz_term_to_seq(wd, ts, t), z);
        if (term_side != seq_side) {
          c.fail("order disagreement at " + ts.to_string(s) + " vs " + ts.to_string(t));
          return c;
        }
      }
  }
  return c;
}

// ---- criterion 5 ------------------------------------------------------------

Check bridge_reflection(const SizeProfile& p) {
  Check c;
  // tree_to_fixpoint over seq:3; preservation is only measured, not asserted
  long long preservation_misses = 0;
  {
    SeqDilator sd = seq_dilator(3);
    TermSystem ts(sd.dil);
    auto trees = enumerate_trees(1, 3, p.tree_fix_vertices);
    std::vector<TermSystem::Term> img;
    for (const auto& t : trees) img.push_back(tree_to_fixpoint(sd, ts, t));
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = 0; j < trees.size(); ++j) {
        c.count();
        bool image_le = ts.leq(img[i], img[j]);
        bool source_le = tree_leq(trees[i], trees[j]);
        if (image_le && !source_le) {
          c.fail("tree_to_fixpoint does not reflect at " + tree_to_string(trees[i]) + " vs " +
                 tree_to_string(trees[j]));
          return c;
        }
        if (source_le && !image_le) ++preservation_misses;
      }
  }
  // delabel(2, 3)
  {
    auto trees = enumerate_trees(2, 3, p.delabel_vertices);
    std::vector<LabeledTree> img;
    for (const auto& t : trees) img.push_back(delabel(2, 3, t));
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = 0; j < trees.size(); ++j) {
        c.count();
        if (tree_leq(img[i], img[j]) && !tree_leq(trees[i], trees[j])) {
          c.fail("delabel does not reflect at " + tree_to_string(trees[i]) + " vs " +
                 tree_to_string(trees[j]));
          return c;
        }
      }
    LabeledTree n0 = tree_parse("0*()"), n1 = tree_parse("1*()");
    if (tree_leq(delabel(2, 3, n0), delabel(2, 3, n1)) ||
        tree_leq(delabel(2, 3, n1), delabel(2, 3, n0))) {
      c.fail("delabel images of distinct single labels are comparable");
      return c;
    }
  }
  // fixpoint_to_tree over seq:2
  {
    SeqDilator sd = seq_dilator(2);
    TermSystem ts(sd.dil);
    auto en = ts.enumerate(p.term_height, p.term_count);
    FixToTree inj = default_injection(sd.dil);
    std::vector<LabeledTree> img;
    for (auto t : en.terms) img.push_back(fixpoint_to_tree(ts, inj, t));
    for (size_t i = 0; i < en.terms.size(); ++i)
      for (size_t j = 0; j < en.terms.size(); ++j) {
        c.count();
        if (tree_leq(img[i], img[j]) && !ts.leq(en.terms[i], en.terms[j])) {
          c.fail("fixpoint_to_tree does not reflect at " + ts.to_string(en.terms[i]) + " vs " +
                 ts.to_string(en.terms[j]));
          return c;
        }
      }
    // composite with tree_to_fixpoint preserves vertex count on unary trees
    for (const auto& t : enumerate_trees(1, 2, p.delabel_vertices)) {
      auto term = tree_to_fixpoint(sd, ts, t);
      if (fixpoint_to_tree(ts, inj, term).vertex_count() != t.vertex_count()) {
        c.fail("composite changes vertex count on " + tree_to_string(t));
        return c;
      }
    }
  }
  // unary_to_seq over wz:1
  {
    WzDilator wd = wz_dilator(FinPoset(1));
    TermSystem ts(wd.dil);
    auto en = ts.enumerate(p.unary_height, p.term_count);
    UnarySeqCodomain y = unary_seq_codomain(wd.dil);
    std::vector<std::vector<int>> img;
    for (auto t : en.terms) {
      auto seq = unary_to_seq(ts, y, t);
      if (static_cast<int>(seq.size()) != ts.length(t)) {
        c.fail("unary_to_seq length differs from term length");
        return c;
      }
      img.push_back(seq);
    }
    for (size_t i = 0; i < en.terms.size(); ++i)
      for (size_t j = 0; j < en.terms.size(); ++j) {
        c.count();
        if (higman_leq(img[i], img[j], y.y) && !ts.leq(en.terms[i], en.terms[j])) {
          c.fail("unary_to_seq does not reflect at " + ts.to_string(en.terms[i]) + " vs " +
                 ts.to_string(en.terms[j]));
          return c;
        }
      }
  }
  // to_prime over prod:1 (empty term universe) and seq:2
  {
    std::vector<CodedDilator> bases = {product_dilator(1).dil, seq_dilator(2).dil};
    for (const auto& base : bases) {
      PrimeDilator pd = prime_transform(base);
      TermSystem base_ts(base);
      TermSystem prime_ts(pd.dil);
      TermSystem::Term star = prime_star_term(pd, prime_ts);
      TermSystem::Term plus = prime_plus_term(pd, prime_ts);
      if (prime_ts.leq(star, plus) || prime_ts.leq(plus, star)) {
        c.fail("star and plus are comparable in the prime fixed point");
        return c;
      }
      auto en = base_ts.enumerate(2, p.term_count);
      std::vector<TermSystem::Term> img;
      for (auto t : en.terms) {
        ToPrime r = to_prime(base_ts, pd, prime_ts, t);
        if (r.defaulted) {
          c.fail("to_prime took the default branch on " + base_ts.to_string(t));
          return c;
        }
        if (base_ts.children_of(t).empty()) {
          const auto& kids = prime_ts.children_of(r.term);
          if (kids.size() != 2 || (kids[0] != star && kids[1] != star) ||
              (kids[0] != plus && kids[1] != plus)) {
            c.fail("leaf image support is not {star, plus}");
            return c;
          }
        }
        img.push_back(r.term);
      }
      for (size_t i = 0; i < en.terms.size(); ++i)
        for (size_t j = 0; j < en.terms.size(); ++j) {
          c.count();
          if (prime_ts.leq(img[i], img[j]) && !base_ts.leq(en.terms[i], en.terms[j])) {
            c.fail("to_prime does not reflect at " + base_ts.to_string(en.terms[i]) + " vs " +
                   base_ts.to_string(en.terms[j]));
            return c;
          }
        }
    }
  }
  // prod_embed over prod:2 on the 2-chain
  {
    ProdDilator pd = product_dilator(2);
    FinPoset host = FinPoset::chain(2);
    EvalOrder ev = eval_order(pd.dil, host);
    FinPoset target = prod_embed_target(pd.dil, host);
    std::vector<std::vector<int>> img;
    for (const auto& e : ev.elems) img.push_back(prod_embed(pd.dil, host, e));
    for (size_t i = 0; i < ev.elems.size(); ++i)
      for (size_t j = 0; j < ev.elems.size(); ++j) {
        bool coord = true;
        for (size_t k = 0; k < img[i].size(); ++k)
          if (!target.leq(img[i][k], img[j][k])) coord = false;
        c.count();
        if (coord && !ev.order.leq(static_cast<int>(i), static_cast<int>(j))) {
          c.fail("prod_embed does not reflect at " + elem_to_string(pd.dil, ev.elems[i]) +
                 " vs " + elem_to_string(pd.dil, ev.elems[j]));
          return c;
        }
      }
  }
  if (c.pass)
    c.details = "tree_to_fixpoint preservation misses: " + std::to_string(preservation_misses);
  return c;
}

Check tree_order_laws(const SizeProfile& p) {
  Check c;
  auto trees = enumerate_trees(p.tree_labels, p.tree_branch, p.tree_law_vertices);
  size_t n = trees.size();
  FinPoset order(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (tree_leq(trees[i], trees[j])) order.set_leq(static_cast<int>(i), static_cast<int>(j));
  for (size_t i = 0; i < n; ++i) {
    if (!order.leq(static_cast<int>(i), static_cast<int>(i))) {
      c.fail("embedding is not reflexive at " + tree_to_string(trees[i]));
      return c;
    }
    for (size_t j = 0; j < n; ++j) {
      c.count();
      if (i != j && order.leq(static_cast<int>(i), static_cast<int>(j)) &&
          order.leq(static_cast<int>(j), static_cast<int>(i))) {
        c.fail("mutual embedding between distinct trees " + tree_to_string(trees[i]) + " / " +
               tree_to_string(trees[j]));
        return c;
      }
      if (order.leq(static_cast<int>(i), static_cast<int>(j))) {
        int k = order.first_up_not_in(static_cast<int>(j), static_cast<int>(i));
        if (k >= 0) {
          c.fail("embedding is not transitive at " + tree_to_string(trees[i]) + " / " +
                 tree_to_string(trees[j]) + " / " + tree_to_string(trees[k]));
          return c;
        }
      }
    }
  }
  return c;
}

// ---- criterion 6 ------------------------------------------------------------

Check tree_gadget_laws(const SizeProfile& p) {
  Check c;
  int b = p.gadget_heights;
  for (int k = 1; k <= b; ++k)
    for (int l = 1; l <= b; ++l)
      for (int i = 1; i <= b; ++i)
        for (int j = 0; j <= b; ++j) {
          c.count();
          if (tree_leq(full_tree(k, i), full_tree(l, j)) && !(i <= j && k <= l)) {
            c.fail("monotone law fails at full_tree(" + std::to_string(k) + "," +
                   std::to_string(i) + ") embeds into full_tree(" + std::to_string(l) + "," +
                   std::to_string(j) + ")");
            return c;
          }
        }
  for (int m = 1; m <= p.gadget_labels; ++m)
    for (int l = 0; l < m; ++l)
      for (int l2 = 0; l2 < m; ++l2) {
        if (l == l2) continue;
        c.count();
        if (tree_leq(label_gadget(m, l), label_gadget(m, l2))) {
          c.fail("gadgets comparable at m=" + std::to_string(m) + " l=" + std::to_string(l) +
                 " l'=" + std::to_string(l2));
          return c;
        }
      }
  return c;
}

// ---- criterion 7 ------------------------------------------------------------

Check two_point_antichain_invariant(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  struct Case {
    std::string name;
    CodedDilator dil;
    std::string token_id;
  };
  std::vector<Case> cases = {{"prod:2", corpus.prod2.dil, "x01_a2"},
                             {"seq:3", corpus.seq3.dil, "s01_a2"}};
  for (const auto& cs : cases) {
    int tok = cs.dil.token_index(cs.token_id);
    if (tok < 0) {
      c.fail(cs.name + ": token " + cs.token_id + " missing");
      return c;
    }
    for (int len = 2; len <= p.antichain_max; ++len) {
      AntichainResult r = two_point_antichain(cs.dil, tok, len);
      if (!r.antichain) {
        c.fail(cs.name + " L=" + std::to_string(len) + ": construction is not an antichain");
        return c;
      }
      // independent pairwise re-check
      for (int i = 0; i < len; ++i)
        for (int j = 0; j < len; ++j) {
          if (i == j) continue;
          c.count();
          if (leq_W(cs.dil, r.host, r.elems[i], r.elems[j])) {
            c.fail(cs.name + " L=" + std::to_string(len) + ": re-check found a comparable pair");
            return c;
          }
        }
    }
  }
  // normality is necessary: the first-coordinate dilator reports a witness
  CodedDilator fc = first_coordinate_dilator();
  int tok = fc.token_index("f01_a2");
  if (tok < 0) {
    c.fail("first-coordinate dilator: token f01_a2 missing");
    return c;
  }
  AntichainResult r = two_point_antichain(fc, tok, 3);
  if (r.antichain || !r.comparable) {
    c.fail("non-normal dilator unexpectedly produced an antichain");
    return c;
  }
  if (!leq_W(fc, r.host, r.elems[r.comparable->first], r.elems[r.comparable->second])) {
    c.fail("reported comparability witness does not verify");
    return c;
  }
  c.count();
  return c;
}

// ---- criterion 8 ------------------------------------------------------------

Check ladder_contrapositive(const SizeProfile& p) {
  Check c;
  std::vector<std::pair<std::string, CodedDilator>> rigged = {
      {"reversed-identity", reversed_identity_dilator()},
      {"two-copy-reversed", two_copy_reversed_dilator()},
      {"first-coordinate", first_coordinate_dilator()},
      {"reversed-pair", reversed_pair_dilator()}};
  MonotoneOptions mo = monotone_opts(p);
  for (auto& [name, d] : rigged) {
    MonotonicityResult mono = is_monotone(d, mo);
    if (mono.monotone || !mono.witness) {
      c.fail(name + ": expected a monotonicity violation");
      return c;
    }
    LadderResult lr = ladder_bad_sequence(d, *mono.witness, p.ladder_k);
    if (!lr.bad) {
      c.fail(name + ": ladder sequence is not bad");
      return c;
    }
    for (int k = 0; k < p.ladder_k; ++k)
      for (int l = k + 1; l < p.ladder_k; ++l) {
        c.count();
        if (leq_W(d, lr.host, lr.elems[k], lr.elems[l])) {
          c.fail(name + ": badness re-check failed");
          return c;
        }
      }
  }
  // a genuine monotone dilator offers no witness, and a fabricated one errors
  CodedDilator seq2 = seq_dilator(2).dil;
  if (!is_monotone(seq2, mo).monotone) {
    c.fail("seq:2 reported non-monotone");
    return c;
  }
  MonotonicityWitness fake;
  fake.c = CanonicalPoset{FinPoset(1)};
  fake.token = seq2.tokens_with_shape(fake.c)[0];
  fake.y = FinPoset(1);
  fake.f = identity_map(FinPoset(1));
  fake.g = identity_map(FinPoset(1));
  bool threw = false;
  try {
    ladder_bad_sequence(seq2, fake, 3);
  } catch (const OrderError&) {
    threw = true;
  }
  if (!threw) {
    c.fail("ladder accepted a non-violating witness");
    return c;
  }
  c.count();
  return c;
}

// ---- criterion 9 ------------------------------------------------------------

Check prime_transform_validation(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  std::vector<std::pair<std::string, CodedDilator>> dils = {
      {"seq:2", corpus.seq2.dil}, {"seq:3", corpus.seq3.dil},   {"prod:1", corpus.prod1.dil},
      {"prod:2", corpus.prod2.dil}, {"wz:1", corpus.wz1.dil},   {"wz:antichain2", corpus.wz2a.dil}};
  for (auto& [name, d] : dils) {
    if (!is_monotone(d, monotone_opts(p)).monotone) {
      c.fail(name + ": base dilator not monotone");
      return c;
    }
    PrimeDilator pd = prime_transform(d);
    ValidationReport rep = validate(pd.dil, validate_opts(p));
    if (!rep.all_pass()) {
      c.fail("prime:" + name + " fails validation:\n" + rep.to_text());
      return c;
    }
    if (!is_normal(pd.dil, p.table_cap)) {
      c.fail("prime:" + name + " is not normal");
      return c;
    }
    if (!is_monotone(pd.dil, monotone_opts(p)).monotone) {
      c.fail("prime:" + name + " is not monotone");
      return c;
    }
    EvalOrder ev = eval_order(pd.dil, FinPoset(1));
    if (ev.elems.size() != 2) {
      c.fail("prime:" + name + ": W'(1) has " + std::to_string(ev.elems.size()) + " elements");
      return c;
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        c.count();
        if (ev.order.leq(i, j) != (i == j)) {
          c.fail("prime:" + name + ": W'(1) elements are not isolated");
          return c;
        }
      }
  }
  return c;
}

// ---- criterion 10 -----------------------------------------------------------

Check empty_shape_degeneracy(const SizeProfile& p) {
  Check c;
  CodedDilator d = constant_chain2_dilator();
  TermSystem ts(d);
  auto en = ts.enumerate(p.term_height, p.term_count);
  for (auto t : en.terms)
    if (ts.height(t) != 0) {
      c.fail("a term of positive height exists");
      return c;
    }
  EvalOrder w0 = eval_order(d, FinPoset(0));
  if (en.terms.size() != w0.elems.size()) {
    c.fail("term count differs from |W(0)|");
    return c;
  }
  // terms are o(empty, token); match them to W(0) elements by token
  for (size_t i = 0; i < en.terms.size(); ++i)
    for (size_t j = 0; j < en.terms.size(); ++j) {
      int a = w0.index_of(DilElem{{}, ts.token_of(en.terms[i])});
      int b = w0.index_of(DilElem{{}, ts.token_of(en.terms[j])});
      c.count();
      if (ts.leq(en.terms[i], en.terms[j]) != w0.order.leq(a, b)) {
        c.fail("term order differs from W(0)");
        return c;
      }
    }
  return c;
}

// ---- criterion 11 -----------------------------------------------------------

// longest bad subsequence by exhaustive recursion (independent of bad_search)
int longest_bad(const FinPoset& stream) {
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int j = from; j < stream.size(); ++j) {
      bool ok = true;
      for (int i : chosen)
        if (stream.leq(i, j)) ok = false;
      if (!ok) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

Check unary_wpo_invariant(const SizeProfile& p) {
  Check c;
  std::vector<std::pair<std::string, CodedDilator>> positive = {
      {"wz:1", wz_dilator(FinPoset(1)).dil},
      {"wz:antichain2", wz_dilator(FinPoset::antichain(2)).dil},
      {"ladder-unary", ladder_unary_dilator()}};
  MonotoneOptions mo = monotone_opts(p);
  for (auto& [name, d] : positive) {
    if (!unary_wpo_decision(d, mo)) {
      c.fail(name + ": expected a positive decision");
      return c;
    }
    for (const auto& host : {FinPoset::chain(2), FinPoset::chain(3), FinPoset::antichain(2)}) {
      EvalOrder ev = eval_order(d, host);
      int longest = longest_bad(ev.order);
      BadSearchResult none = bad_search_eval(d, ev, longest + 1);
      c.count();
      if (none.status != BadSearchResult::Status::none) {
        c.fail(name + ": expected none above the longest bad length");
        return c;
      }
      if (longest >= 2) {
        BadSearchResult found = bad_search_eval(d, ev, longest);
        if (found.status != BadSearchResult::Status::found) {
          c.fail(name + ": expected a witness at the longest bad length");
          return c;
        }
      }
    }
  }
  if (unary_wpo_decision(reversed_identity_dilator(), mo)) {
    c.fail("reversed-identity: expected a negative decision");
    return c;
  }
  c.count();
  // constant dilators decide positively: nothing to compare beyond identity
  if (!unary_wpo_decision(constant_chain2_dilator(), mo)) {
    c.fail("constant dilator: expected a positive decision");
    return c;
  }
  return c;
}

// ---- criterion 12 -----------------------------------------------------------

Check ordinal_comparison(const SizeProfile& p) {
  Check c;
  auto terms = enumerate_ord_terms(2, p.ord_entry, p.ord_len);
  size_t n = terms.size();
  std::vector<std::vector<int>> cmp(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) cmp[i][j] = ord_cmp(terms[i], terms[j]);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      c.count();
      if (cmp[i][j] != -cmp[j][i]) {
        c.fail("comparison is not antisymmetric in sign");
        return c;
      }
      if ((i == j) != (cmp[i][j] == 0)) {
        c.fail("equality disagrees with identity at " + ord_to_string(terms[i]) + " vs " +
               ord_to_string(terms[j]));
        return c;
      }
      for (size_t k = 0; k < n; ++k)
        if (cmp[i][j] <= 0 && cmp[j][k] <= 0 && cmp[i][k] > 0) {
          c.fail("transitivity fails");
          return c;
        }
    }
  // descent sanity: never longer than the budget, strictly descending
  struct Probe {
    OrdTerm from;
    int steps;
  };
  std::vector<Probe> probes = {{OrdTerm::nat(3), 5},
                               {ord_parse("[1]", 2), 4},
                               {ord_parse("[2 1]", 2), 6},
                               {ord_parse("[[1]]", 3), 6},
                               {OrdTerm::zero(2), 4}};
  for (const auto& pr : probes) {
    auto chain = descent_search(pr.from, pr.steps);
    c.count();
    if (static_cast<int>(chain.size()) > pr.steps) {
      c.fail("descent longer than its budget");
      return c;
    }
    const OrdTerm* prev = &pr.from;
    for (const auto& t : chain) {
      if (ord_cmp(t, *prev) >= 0) {
        c.fail("descent chain is not strictly decreasing");
        return c;
      }
      prev = &t;
    }
    if (pr.from.is_zero() && !chain.empty()) {
      c.fail("descent below the minimum");
      return c;
    }
  }
  return c;
}

// ---- module invariants beyond the acceptance list ----------------------------

std::vector<FinPoset> natural_posets(int size) {
  std::vector<FinPoset> out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) pairs.emplace_back(i, j);
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    FinPoset p(size);
    for (size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) p.set_leq(pairs[b].first, pairs[b].second);
    if (p.is_partial_order()) out.push_back(p);
  }
  return out;
}

Check canonical_class_function(const SizeProfile& p) {
  Check c;
  for (int sz = 0; sz <= p.canon_size; ++sz) {
    std::vector<int> perm(sz);
    for (const auto& poset : natural_posets(sz)) {
      Canonicalization base = canonical_form(poset);
      if (!(canonical_form(base.canon.poset).canon == base.canon)) {
        c.fail("canonicalization is not idempotent");
        return c;
      }
      if (morphism_checks(base.iso) != MapClass::embedding) {
        c.fail("canonical iso is not an order isomorphism");
        return c;
      }
      std::iota(perm.begin(), perm.end(), 0);
      do {
        c.count();
        if (!(canonical_form(relabel(poset, perm)).canon == base.canon)) {
          c.fail("canonical form depends on labeling at size " + std::to_string(sz));
          return c;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return c;
}

Check morphism_classification(const SizeProfile& p) {
  Check c;
  for (int sa = 0; sa <= p.morphism_size; ++sa)
    for (const auto& a : canonical_posets(sa))
      for (int sb = 0; sb <= p.morphism_size; ++sb)
        for (const auto& b : canonical_posets(sb)) {
          for (const auto& f : enumerate_maps(a.poset, b.poset, MapClass::none,
                                              std::max(p.morphism_size, 1))) {
            MapClass cls = morphism_checks(f);
            c.count();
            if (cls != MapClass::none) {
              std::vector<int> vals = f.values;
              std::sort(vals.begin(), vals.end());
              if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
                c.fail("a non-injective quasi-embedding exists");
                return c;
              }
            }
            if (cls == MapClass::embedding && !is_quasi_embedding(f)) {
              c.fail("an embedding failed the quasi-embedding test");
              return c;
            }
          }
        }
  // the two bijections forgetting a chain are quasi-embeddings; none go back
  FinPoset chain2 = FinPoset::chain(2), anti2 = FinPoset::antichain(2);
  if (enumerate_maps(chain2, anti2, MapClass::quasi_embedding).size() != 2 ||
      !enumerate_maps(anti2, chain2, MapClass::quasi_embedding).empty()) {
    c.fail("chain/antichain quasi-embedding counts are wrong");
    return c;
  }
  if (!enumerate_maps(chain2, anti2, MapClass::embedding).empty()) {
    c.fail("an embedding of the chain into the antichain exists");
    return c;
  }
  return c;
}

Check higman_order_laws(const SizeProfile& p) {
  Check c;
  for (int sz = 1; sz <= p.higman_base; ++sz) {
    for (const auto& base : canonical_posets(sz)) {
      auto seqs = sequences_over(sz, p.higman_len);
      int n = static_cast<int>(seqs.size());
      FinPoset order(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (higman_leq(seqs[i], seqs[j], base.poset)) order.set_leq(i, j);
      for (int i = 0; i < n; ++i) {
        if (!order.leq(i, i)) {
          c.fail("higman_leq is not reflexive");
          return c;
        }
        for (int j = 0; j < n; ++j) {
          c.count();
          if (order.leq(i, j) && order.first_up_not_in(j, i) >= 0) {
            c.fail("higman_leq is not transitive");
            return c;
          }
        }
      }
    }
  }
  // singleton sequences over a chain coincide with the chain
  for (int n = 1; n <= 4; ++n) {
    FinPoset chain = FinPoset::chain(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (higman_leq({i}, {j}, chain) != chain.leq(i, j)) {
          c.fail("singleton sequences disagree with the chain order");
          return c;
        }
  }
  return c;
}

Check dilator_functoriality(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  std::vector<std::pair<std::string, CodedDilator>> dils = {
      {"seq:3", corpus.seq3.dil}, {"prod:2", corpus.prod2.dil}, {"wz:antichain2", corpus.wz2a.dil}};
  for (auto& [name, d] : dils) {
    for (int sa = 0; sa <= 2; ++sa)
      for (const auto& a : canonical_posets(sa)) {
        EvalOrder ea = eval_order(d, a.poset, std::max(p.func_size, 1));
        if (ea.elems.empty()) continue;
        for (const auto& e : ea.elems) {
          DilElem same = apply_map(d, identity_map(a.poset), e);
          if (!(same == e)) {
            c.fail(name + ": identity action moves an element");
            return c;
          }
        }
        for (int sb = 0; sb <= p.func_size; ++sb)
          for (const auto& b : canonical_posets(sb))
            for (const auto& f : enumerate_maps(a.poset, b.poset, MapClass::quasi_embedding,
                                                std::max(p.func_size, 1))) {
              // naturality of supports
              for (const auto& e : ea.elems) {
                DilElem im = apply_map(d, f, e);
                std::vector<int> expect;
                for (int x : e.support) expect.push_back(f.values[x]);
                std::sort(expect.begin(), expect.end());
                if (im.support != expect) {
                  c.fail(name + ": support naturality fails");
                  return c;
                }
              }
              for (int sc = 0; sc <= p.func_size; ++sc)
                for (const auto& cc : canonical_posets(sc))
                  for (const auto& g : enumerate_maps(b.poset, cc.poset,
                                                      MapClass::quasi_embedding,
                                                      std::max(p.func_size, 1))) {
                    OrderMap gf = compose(g, f);
                    for (const auto& e : ea.elems) {
                      c.count();
                      if (!(apply_map(d, gf, e) == apply_map(d, g, apply_map(d, f, e)))) {
                        c.fail(name + ": composition law fails");
                        return c;
                      }
                    }
                  }
            }
      }
  }
  return c;
}

Check dilator_axioms(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  struct Expect {
    std::string name;
    CodedDilator dil;
    bool normal, monotone, unary;
  };
  std::vector<Expect> all = {
      {"seq:2", corpus.seq2.dil, true, true, true},
      {"seq:3", corpus.seq3.dil, true, true, false},
      {"prod:1", corpus.prod1.dil, true, true, true},
      {"prod:2", corpus.prod2.dil, true, true, false},
      {"wz:1", corpus.wz1.dil, true, true, true},
      {"wz:antichain2", corpus.wz2a.dil, true, true, true},
      {"reversed-identity", reversed_identity_dilator(), false, false, true},
      {"two-copy-reversed", two_copy_reversed_dilator(), false, false, true},
      {"first-coordinate", first_coordinate_dilator(), false, false, false},
      {"reversed-pair", reversed_pair_dilator(), false, false, false},
      {"ladder-unary", ladder_unary_dilator(), true, true, true},
      {"constant-chain2", constant_chain2_dilator(), true, true, true}};
  for (auto& e : all) {
    ValidationReport rep = validate(e.dil, validate_opts(p));
    c.count();
    if (!rep.axioms_pass()) {
      c.fail(e.name + " fails the order axioms:\n" + rep.to_text());
      return c;
    }
    if (is_normal(e.dil, p.table_cap) != e.normal) {
      c.fail(e.name + ": normality flag differs");
      return c;
    }
    if (is_monotone(e.dil, monotone_opts(p)).monotone != e.monotone) {
      c.fail(e.name + ": monotonicity flag differs");
      return c;
    }
    if (is_unary(e.dil) != e.unary) {
      c.fail(e.name + ": unarity flag differs");
      return c;
    }
  }
  return c;
}

Check monotone_pointwise_consequence(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  std::vector<std::pair<std::string, CodedDilator>> dils = {
      {"seq:3", corpus.seq3.dil}, {"prod:2", corpus.prod2.dil}, {"wz:antichain2", corpus.wz2a.dil}};
  for (auto& [name, d] : dils) {
    for (int sa = 0; sa <= 2; ++sa)
      for (const auto& a : canonical_posets(sa)) {
        EvalOrder ea = eval_order(d, a.poset, std::max(p.func_size, 1));
        if (ea.elems.empty()) continue;
        for (int sb = 0; sb <= p.func_size; ++sb)
          for (const auto& b : canonical_posets(sb)) {
            auto qes = enumerate_maps(a.poset, b.poset, MapClass::quasi_embedding,
                                      std::max(p.func_size, 1));
            for (const auto& f : qes)
              for (const auto& g : qes) {
                if (!pointwise_leq(f, g)) continue;
                for (const auto& e : ea.elems) {
                  c.count();
                  if (!leq_W(d, b.poset, apply_map(d, f, e), apply_map(d, g, e))) {
                    c.fail(name + ": pointwise consequence fails on " + elem_to_string(d, e));
                    return c;
                  }
                }
              }
          }
      }
  }
  return c;
}

Check term_structure_laws(const SizeProfile& p) {
  Check c;
  Corpus corpus = make_corpus();
  std::vector<std::pair<std::string, CodedDilator>> dils = {
      {"seq:2", corpus.seq2.dil}, {"seq:3", corpus.seq3.dil},
      {"wz:1", corpus.wz1.dil},   {"wz:antichain2", corpus.wz2a.dil}};
  for (auto& [name, dil] : dils) {
    TermSystem ts(dil);
    auto en = ts.enumerate(p.term_height, p.term_count);
    for (auto t : en.terms) {
      c.count();
      if (!(ts.height(t) < ts.length(t))) {
        c.fail(name + ": height not below length at " + ts.to_string(t));
        return c;
      }
      for (auto k : ts.children_of(t))
        if (!(ts.height(k) < ts.height(t))) {
          c.fail(name + ": child height not smaller at " + ts.to_string(t));
          return c;
        }
      // grammar round trip
      if (ts.parse(ts.to_string(t)) != t) {
        c.fail(name + ": grammar round trip differs at " + ts.to_string(t));
        return c;
      }
    }
    for (auto s : en.terms)
      for (auto t : en.terms)
        if (s != t && ts.leq(s, t) && ts.leq(t, s)) {
          c.fail(name + ": mutual order between distinct terms");
          return c;
        }
  }
  return c;
}

Check bridge_injectivity(const SizeProfile& p) {
  Check c;
  {
    SeqDilator sd = seq_dilator(3);
    TermSystem ts(sd.dil);
    std::set<TermSystem::Term> img;
    auto trees = enumerate_trees(1, 3, p.tree_fix_vertices);
    for (const auto& t : trees) img.insert(tree_to_fixpoint(sd, ts, t));
    c.count();
    if (img.size() != trees.size()) {
      c.fail("tree_to_fixpoint is not injective");
      return c;
    }
  }
  {
    auto trees = enumerate_trees(2, 3, p.delabel_vertices);
    std::set<std::string> img;
    for (const auto& t : trees) img.insert(tree_to_string(delabel(2, 3, t)));
    c.count();
    if (img.size() != trees.size()) {
      c.fail("delabel is not injective");
      return c;
    }
  }
  {
    SeqDilator sd = seq_dilator(2);
    TermSystem ts(sd.dil);
    auto en = ts.enumerate(p.term_height, p.term_count);
    FixToTree inj = default_injection(sd.dil);
    std::set<std::string> img;
    for (auto t : en.terms) img.insert(tree_to_string(fixpoint_to_tree(ts, inj, t)));
    c.count();
    if (img.size() != en.terms.size()) {
      c.fail("fixpoint_to_tree is not injective");
      return c;
    }
  }
  {
    WzDilator wd = wz_dilator(FinPoset(1));
    TermSystem ts(wd.dil);
    UnarySeqCodomain y = unary_seq_codomain(wd.dil);
    auto en = ts.enumerate(p.unary_height, p.term_count);
    std::set<std::vector<int>> img;
    for (auto t : en.terms) img.insert(unary_to_seq(ts, y, t));
    c.count();
    if (img.size() != en.terms.size()) {
      c.fail("unary_to_seq is not injective");
      return c;
    }
  }
  {
    SeqDilator sd = seq_dilator(2);
    PrimeDilator pd = prime_transform(sd.dil);
    TermSystem base_ts(sd.dil), prime_ts(pd.dil);
    auto en = base_ts.enumerate(2, p.term_count);
    std::set<TermSystem::Term> img;
    for (auto t : en.terms) img.insert(to_prime(base_ts, pd, prime_ts, t).term);
    c.count();
    if (img.size() != en.terms.size()) {
      c.fail("to_prime is not injective");
      return c;
    }
  }
  return c;
}

Check bad_search_semantics(const SizeProfile&) {
  Check c;
  // an ascending enumeration of a chain has no bad pair at all
  for (int len = 2; len <= 4; ++len) {
    c.count();
    if (bad_search(FinPoset::chain(5), len).status != BadSearchResult::Status::none) {
      c.fail("chain(5) produced a bad subsequence");
      return c;
    }
  }
  BadSearchResult anti = bad_search(FinPoset::antichain(4), 4);
  c.count();
  if (anti.status != BadSearchResult::Status::found || anti.indices != std::vector<int>{0, 1, 2, 3}) {
    c.fail("antichain(4) did not yield its four elements");
    return c;
  }
  ProdDilator pd = product_dilator(2);
  EvalOrder ev = eval_order(pd.dil, FinPoset::antichain(2));
  BadSearchResult pair = bad_search_eval(pd.dil, ev, 2);
  c.count();
  if (pair.status != BadSearchResult::Status::found) {
    c.fail("prod:2 over the antichain has no bad pair");
    return c;
  }
  BadSearchResult starved = bad_search(FinPoset::antichain(6), 6, -1, 2);
  c.count();
  if (starved.status != BadSearchResult::Status::inconclusive) {
    c.fail("budget exhaustion did not report inconclusive");
    return c;
  }
  return c;
}

// ---- registry -----------------------------------------------------------------

using Runner = std::function<Check(const SizeProfile&, const SuiteHooks&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"tree-oracle-equivalence", [](const SizeProfile& p, const SuiteHooks&) { return tree_oracle_equivalence(p); }},
      {"dilator-semantics-agreement", [](const SizeProfile& p, const SuiteHooks& h) { return dilator_semantics_agreement(p, h); }},
      {"term-order-laws", [](const SizeProfile& p, const SuiteHooks&) { return term_order_laws(p); }},
      {"wz-higman-isomorphism", [](const SizeProfile& p, const SuiteHooks&) { return wz_higman_isomorphism(p); }},
      {"bridge-reflection", [](const SizeProfile& p, const SuiteHooks&) { return bridge_reflection(p); }},
      {"tree-gadget-laws", [](const SizeProfile& p, const SuiteHooks&) { return tree_gadget_laws(p); }},
      {"tree-order-laws", [](const SizeProfile& p, const SuiteHooks&) { return tree_order_laws(p); }},
      {"two-point-antichain", [](const SizeProfile& p, const SuiteHooks&) { return two_point_antichain_invariant(p); }},
      {"ladder-contrapositive", [](const SizeProfile& p, const SuiteHooks&) { return ladder_contrapositive(p); }},
      {"prime-transform-validation", [](const SizeProfile& p, const SuiteHooks&) { return prime_transform_validation(p); }},
      {"empty-shape-degeneracy", [](const SizeProfile& p, const SuiteHooks&) { return empty_shape_degeneracy(p); }},
      {"unary-wpo-decision", [](const SizeProfile& p, const SuiteHooks&) { return unary_wpo_invariant(p); }},
      {"ordinal-comparison", [](const SizeProfile& p, const SuiteHooks&) { return ordinal_comparison(p); }},
      {"canonical-class-function", [](const SizeProfile& p, const SuiteHooks&) { return canonical_class_function(p); }},
      {"morphism-classification", [](const SizeProfile& p, const SuiteHooks&) { return morphism_classification(p); }},
      {"higman-order-laws", [](const SizeProfile& p, const SuiteHooks&) { return higman_order_laws(p); }},
      {"dilator-functoriality", [](const SizeProfile& p, const SuiteHooks&) { return dilator_functoriality(p); }},
      {"dilator-axioms", [](const SizeProfile& p, const SuiteHooks&) { return dilator_axioms(p); }},
      {"monotone-pointwise-consequence", [](const SizeProfile& p, const SuiteHooks&) { return monotone_pointwise_consequence(p); }},
      {"term-structure-laws", [](const SizeProfile& p, const SuiteHooks&) { return term_structure_laws(p); }},
      {"bridge-injectivity", [](const SizeProfile& p, const SuiteHooks&) { return bridge_injectivity(p); }},
      {"bad-search-semantics", [](const SizeProfile& p, const SuiteHooks&) { return bad_search_semantics(p); }},
  };
  return table;
}

std::string bound_desc(const std::string& name, const SizeProfile& p) {
  if (name == "tree-oracle-equivalence")
    return "vertices<=" + std::to_string(p.tree_vertices) + " m<=" + std::to_string(p.tree_labels) +
           " n<=" + std::to_string(p.tree_branch);
  if (name == "dilator-semantics-agreement") return "hosts<=" + std::to_string(p.host_size);
  if (name == "term-order-laws") return "height<=" + std::to_string(p.term_height);
  if (name == "wz-higman-isomorphism")
    return "height<=" + std::to_string(p.wz_height) + " |z|<=2";
  if (name == "bridge-reflection") return "per-bridge bounds";
  if (name == "tree-gadget-laws")
    return "heights<=" + std::to_string(p.gadget_heights) + " m<=" + std::to_string(p.gadget_labels);
  if (name == "tree-order-laws") return "vertices<=" + std::to_string(p.tree_law_vertices);
  if (name == "two-point-antichain") return "L=2.." + std::to_string(p.antichain_max);
  if (name == "ladder-contrapositive") return "K=" + std::to_string(p.ladder_k);
  if (name == "prime-transform-validation")
    return "validate caps " + std::to_string(p.transitivity_cap);
  if (name == "empty-shape-degeneracy") return "height<=" + std::to_string(p.term_height);
  if (name == "unary-wpo-decision") return "hosts<=3";
  if (name == "ordinal-comparison")
    return "entries<=" + std::to_string(p.ord_entry) + " length<=" + std::to_string(p.ord_len);
  if (name == "canonical-class-function") return "size<=" + std::to_string(p.canon_size);
  if (name == "morphism-classification") return "size<=" + std::to_string(p.morphism_size);
  if (name == "higman-order-laws")
    return "length<=" + std::to_string(p.higman_len) + " base<=" + std::to_string(p.higman_base);
  if (name == "dilator-functoriality") return "posets<=" + std::to_string(p.func_size);
  if (name == "dilator-axioms") return "validate caps";
  if (name == "monotone-pointwise-consequence") return "posets<=" + std::to_string(p.func_size);
  if (name == "term-structure-laws") return "height<=" + std::to_string(p.term_height);
  if (name == "bridge-injectivity") return "per-bridge bounds";
  if (name == "bad-search-semantics") return "fixed streams";
  return "";
}

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& acceptance_invariants() {
  static const std::vector<std::string> names = {
      "tree-oracle-equivalence",    "dilator-semantics-agreement",
      "term-order-laws",            "wz-higman-isomorphism",
      "bridge-reflection",          "tree-gadget-laws",
      "two-point-antichain",          "ladder-contrapositive",
      "prime-transform-validation", "empty-shape-degeneracy",
      "unary-wpo-decision",         "ordinal-comparison"};
  return names;
}

InvariantResult run_invariant(const std::string& name, const SizeProfile& profile,
                              const SuiteHooks& hooks) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    auto begin = std::chrono::steady_clock::now();
    Check c = fn(profile, with_defaults(hooks));
    auto end = std::chrono::steady_clock::now();
    InvariantResult r;
    r.name = name;
    r.bound = bound_desc(name, profile);
    r.pass = c.pass;
    r.details = done(c);
    r.seconds = std::chrono::duration<double>(end - begin).count();
    return r;
  }
  throw OrderError("unknown invariant: " + name);
}

std::vector<InvariantResult> run_suite(const SizeProfile& profile, const SuiteHooks& hooks) {
  std::vector<InvariantResult> out;
  for (const auto& name : invariant_names()) out.push_back(run_invariant(name, profile, hooks));
  return out;
}

}  // namespace kfp
