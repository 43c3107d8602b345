#include "kfp/dilator.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace kfp {

namespace {

std::string map_key(const OrderMap& q) {
  std::string k = q.domain.key() + "|" + q.codomain.key() + "|";
  for (int v : q.values) k.push_back(static_cast<char>('0' + v));
  return k;
}

std::string action_key(const OrderMap& q, int token) {
  return map_key(q) + "#" + std::to_string(token);
}

std::string table_key(const CanonicalPoset& d, uint64_t s, int sigma, uint64_t t, int tau) {
  return d.key() + ":" + std::to_string(s) + "." + std::to_string(sigma) + ":" +
         std::to_string(t) + "." + std::to_string(tau);
}

std::string set_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string poset_to_string(const FinPoset& p) {
  std::string out = std::to_string(p.size()) + "|";
  bool first = true;
  for (auto [i, j] : p.strict_pairs()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i) + "<" + std::to_string(j);
  }
  return out;
}

}  // namespace

// ---- core ------------------------------------------------------------------

CodedDilator::CodedDilator(int n_max, std::vector<TraceToken> trace,
                           std::shared_ptr<const Backing> backing)
    : n_max_(n_max), trace_(std::move(trace)), backing_(std::move(backing)) {}

int CodedDilator::token_index(const std::string& id) const {
  for (size_t i = 0; i < trace_.size(); ++i)
    if (trace_[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> CodedDilator::tokens_with_shape(const CanonicalPoset& shape) const {
  std::vector<int> out;
  for (size_t i = 0; i < trace_.size(); ++i)
    if (trace_[i].shape == shape) out.push_back(static_cast<int>(i));
  return out;
}

int CodedDilator::action(const OrderMap& q, int token) const {
  return backing_->action(*this, q, token);
}

bool CodedDilator::table(const CanonicalPoset& d, const std::vector<int>& s, int sigma,
                         const std::vector<int>& t, int tau) const {
  return backing_->table(*this, d, s, sigma, t, tau);
}

namespace {

class MaterializedBacking : public Backing {
 public:
  DilatorData data;  // retained for serialization
  std::unordered_map<std::string, int> action_map;
  std::unordered_set<std::string> true_entries;

  int action(const CodedDilator&, const OrderMap& q, int token) const override {
    auto it = action_map.find(action_key(q, token));
    if (it == action_map.end()) throw StructuralError("dilator action entry missing");
    return it->second;
  }

  bool table(const CodedDilator&, const CanonicalPoset& d, const std::vector<int>& s, int sigma,
             const std::vector<int>& t, int tau) const override {
    return true_entries.count(table_key(d, set_to_mask(s), sigma, set_to_mask(t), tau)) > 0;
  }
};

}  // namespace

CodedDilator make_coded_dilator(const DilatorData& data) {
  if (data.n_max < 0) throw StructuralError("n_max must be nonnegative");
  std::unordered_set<std::string> ids;
  for (const auto& tok : data.trace) {
    if (tok.id.empty() || tok.id.find_first_of(" :()@{}") != std::string::npos)
      throw StructuralError("bad token id: \"" + tok.id + "\"");
    if (!ids.insert(tok.id).second) throw StructuralError("duplicate token id: " + tok.id);
    if (!is_canonical(tok.shape.poset)) throw StructuralError("token shape not canonical: " + tok.id);
    if (tok.shape.size() > data.n_max) throw StructuralError("token shape exceeds n_max: " + tok.id);
  }

  auto backing = std::make_shared<MaterializedBacking>();
  backing->data = data;
  int ntok = static_cast<int>(data.trace.size());

  for (const auto& e : data.action) {
    if (e.from < 0 || e.from >= ntok || e.to < 0 || e.to >= ntok)
      throw StructuralError("action entry references unknown token");
    if (!is_canonical(e.q.domain) || !is_canonical(e.q.codomain))
      throw StructuralError("action map endpoints must be canonical");
    if (!is_bijective(e.q) || !is_quasi_embedding(e.q))
      throw StructuralError("action map is not a bijective quasi-embedding");
    if (!(data.trace[e.from].shape.poset == e.q.domain) ||
        !(data.trace[e.to].shape.poset == e.q.codomain))
      throw StructuralError("action entry shape mismatch");
    auto [it, fresh] = backing->action_map.emplace(action_key(e.q, e.from), e.to);
    if (!fresh && it->second != e.to) throw StructuralError("conflicting action entries");
  }

  // Totality: every bijective quasi-embedding between canonical shapes of
  // size <= n_max must act on every token of the domain shape.
  for (int sz = 0; sz <= data.n_max; ++sz) {
    for (const auto& c1 : canonical_posets(sz)) {
      std::vector<int> toks;
      for (int i = 0; i < ntok; ++i)
        if (data.trace[i].shape == c1) toks.push_back(i);
      if (toks.empty()) continue;
      for (const auto& c2 : canonical_posets(sz)) {
        for (const auto& q : enumerate_maps(c1.poset, c2.poset, MapClass::quasi_embedding,
                                            std::max(sz, 1))) {
          if (!is_bijective(q)) continue;
          for (int tok : toks)
            if (!backing->action_map.count(action_key(q, tok)))
              throw StructuralError("omitted action entry for token " + data.trace[tok].id);
        }
      }
    }
  }

  for (const auto& e : data.table) {
    if (e.sigma < 0 || e.sigma >= ntok || e.tau < 0 || e.tau >= ntok)
      throw StructuralError("table entry references unknown token");
    if (!is_canonical(e.d.poset)) throw StructuralError("table key poset not canonical");
    if (e.d.size() > 2 * data.n_max) throw StructuralError("table key poset exceeds 2*n_max");
    std::vector<int> s = e.s, t = e.t;
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    for (int v : s)
      if (v < 0 || v >= e.d.size()) throw StructuralError("table key subset out of range");
    for (int v : t)
      if (v < 0 || v >= e.d.size()) throw StructuralError("table key subset out of range");
    if ((set_to_mask(s) | set_to_mask(t)) != (e.d.size() == 0 ? 0 : (uint64_t{1} << e.d.size()) - 1))
      throw StructuralError("table key is not a covering pair");
    if (!(induced_suborder(e.d.poset, s).shape == data.trace[e.sigma].shape) ||
        !(induced_suborder(e.d.poset, t).shape == data.trace[e.tau].shape))
      throw StructuralError("table key shape mismatch");
    if (e.leq)
      backing->true_entries.insert(table_key(e.d, set_to_mask(s), e.sigma, set_to_mask(t), e.tau));
  }

  return CodedDilator(data.n_max, data.trace, backing);
}

// ---- normal-form transport ---------------------------------------------------

namespace {

// Connecting automorphism: h maps |s| (s a subset of c) to |a| (a a subset of
// the host) along en_s, the bijection e restricted to s, and en_a^-1.
// Returns action(h^-1)(token), the token in coordinates of c's subset s.
int transported_token(const CodedDilator& d, const FinPoset& host, const std::vector<int>& a,
                      int token, const SubsetEnum& u_en, const std::vector<int>& s) {
  SubsetEnum sub_s = induced_suborder(u_en.shape.poset, s);
  SubsetEnum sub_a = induced_suborder(host, a);
  if (!(sub_s.shape == sub_a.shape)) throw StructuralError("transport: shape mismatch");
  int k = sub_s.shape.size();
  // h : |s| -> |a|,  h = en_a^-1 ( en_u ( en_s(.) ) )
  std::vector<int> h(k);
  std::vector<int> inv_a(host.size(), -1);
  for (int p = 0; p < k; ++p) inv_a[sub_a.en.values[p]] = p;
  for (int ucan = 0; ucan < k; ++ucan) {
    int in_c = sub_s.en.values[ucan];
    int in_host = u_en.en.values[in_c];
    h[ucan] = inv_a[in_host];
  }
  OrderMap hmap{sub_s.shape.poset, sub_a.shape.poset, h};
  OrderMap hinv = inverse_of_bijection(hmap);
  return d.action(hinv, token);
}

}  // namespace

UnionForm restrict_to_union(const CodedDilator& d, const FinPoset& host, const DilElem& x,
                            const DilElem& y) {
  std::vector<int> u = x.support;
  u.insert(u.end(), y.support.begin(), y.support.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (static_cast<int>(u.size()) > 2 * d.n_max())
    throw ResourceError("restrict_to_union: union exceeds 2*n_max");

  SubsetEnum ue = induced_suborder(host, u);
  std::vector<int> inv(host.size(), -1);
  for (int p = 0; p < static_cast<int>(u.size()); ++p) inv[ue.en.values[p]] = p;

  UnionForm out;
  out.c = ue.shape;
  out.en = ue.en;
  for (int m : x.support) out.s.push_back(inv[m]);
  for (int m : y.support) out.t.push_back(inv[m]);
  std::sort(out.s.begin(), out.s.end());
  std::sort(out.t.begin(), out.t.end());
  out.sigma = transported_token(d, host, x.support, x.token, ue, out.s);
  out.tau = transported_token(d, host, y.support, y.token, ue, out.t);
  return out;
}

bool leq_W(const CodedDilator& d, const FinPoset& host, const DilElem& x, const DilElem& y) {
  UnionForm u = restrict_to_union(d, host, x, y);
  return d.table(u.c, u.s, u.sigma, u.t, u.tau);
}

DilElem apply_map(const CodedDilator& d, const OrderMap& f, const DilElem& x) {
  if (!is_quasi_embedding(f)) throw OrderError("apply_map: not a quasi-embedding");
  SubsetEnum sub_a = induced_suborder(f.domain, x.support);
  std::vector<int> b;
  for (int m : x.support) b.push_back(f.values[m]);
  std::sort(b.begin(), b.end());
  SubsetEnum sub_b = induced_suborder(f.codomain, b);
  int k = sub_a.shape.size();
  std::vector<int> inv_b(f.codomain.size(), -1);
  for (int p = 0; p < k; ++p) inv_b[sub_b.en.values[p]] = p;
  std::vector<int> qv(k);
  for (int u = 0; u < k; ++u) qv[u] = inv_b[f.values[sub_a.en.values[u]]];
  OrderMap q{sub_a.shape.poset, sub_b.shape.poset, qv};
  return DilElem{b, d.action(q, x.token)};
}

int EvalOrder::index_of(const DilElem& e) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == e) return static_cast<int>(i);
  return -1;
}

EvalOrder eval_order(const CodedDilator& d, const FinPoset& host, int size_cap) {
  if (size_cap < 0) size_cap = default_size_cap();
  if (host.size() > size_cap || host.size() > 24)
    throw ResourceError("eval_order: host exceeds bound");
  EvalOrder out;
  out.host = host;
  for (uint64_t mask = 0; mask < (uint64_t{1} << host.size()); ++mask) {
    std::vector<int> a = mask_to_set(mask);
    if (static_cast<int>(a.size()) > d.n_max()) continue;
    SubsetEnum se = induced_suborder(host, a);
    for (int tok : d.tokens_with_shape(se.shape)) out.elems.push_back(DilElem{a, tok});
  }
  int n = static_cast<int>(out.elems.size());
  if (n > FinPoset::kMaxSize) throw ResourceError("eval_order: too many elements");
  FinPoset order(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || leq_W(d, host, out.elems[i], out.elems[j])) order.set_leq(i, j);
  out.order = order;
  return out;
}

// ---- validation ---------------------------------------------------------------

namespace {

struct CoveringConfig {
  std::vector<int> s, t;
  int sigma, tau;
};

// All table keys over d: covering subset pairs with shape-matched tokens.
std::vector<CoveringConfig> covering_configs(const CodedDilator& d, const CanonicalPoset& c) {
  std::vector<CoveringConfig> out;
  int n = c.size();
  uint64_t full = n == 0 ? 0 : (uint64_t{1} << n) - 1;
  for (uint64_t smask = 0; smask <= full; ++smask) {
    if (static_cast<int>(std::popcount(smask)) > d.n_max()) continue;
    std::vector<int> s = mask_to_set(smask);
    auto stoks = d.tokens_with_shape(induced_suborder(c.poset, s).shape);
    if (stoks.empty()) continue;
    for (uint64_t tmask = 0; tmask <= full; ++tmask) {
      if ((smask | tmask) != full) continue;
      if (static_cast<int>(std::popcount(tmask)) > d.n_max()) continue;
      std::vector<int> t = mask_to_set(tmask);
      auto ttoks = d.tokens_with_shape(induced_suborder(c.poset, t).shape);
      for (int sig : stoks)
        for (int tau : ttoks) out.push_back(CoveringConfig{s, t, sig, tau});
    }
    if (n == 0) break;
  }
  return out;
}

std::vector<OrderMap> bijective_quasi_embeddings(const FinPoset& a, const FinPoset& b) {
  std::vector<OrderMap> out;
  if (a.size() != b.size()) return out;
  for (auto& q : enumerate_maps(a, b, MapClass::quasi_embedding, std::max(a.size(), 1)))
    if (is_bijective(q)) out.push_back(std::move(q));
  return out;
}

std::string elem_desc(const CodedDilator& d, const DilElem& e) {
  return d.token(e.token).id + "@" + set_to_string(e.support);
}

CheckResult check_action_functoriality(const CodedDilator& d, int bound) {
  CheckResult r{"action-functoriality", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c1 : canonical_posets(sz)) {
      auto toks = d.tokens_with_shape(c1);
      if (toks.empty()) continue;
      for (int tok : toks)
        if (d.action(identity_map(c1.poset), tok) != tok) {
          r.pass = false;
          r.witness = "identity moves token " + d.token(tok).id;
          return r;
        }
      for (const auto& c2 : canonical_posets(sz)) {
        for (const auto& q : bijective_quasi_embeddings(c1.poset, c2.poset)) {
          for (const auto& c3 : canonical_posets(sz)) {
            for (const auto& q2 : bijective_quasi_embeddings(c2.poset, c3.poset)) {
              OrderMap qq = compose(q2, q);
              for (int tok : toks)
                if (d.action(qq, tok) != d.action(q2, d.action(q, tok))) {
                  r.pass = false;
                  r.witness = "composition disagrees on token " + d.token(tok).id;
                  return r;
                }
            }
          }
        }
      }
    }
  }
  return r;
}

CheckResult check_action_reflection(const CodedDilator& d, int bound) {
  CheckResult r{"action-quasi-reflection", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c1 : canonical_posets(sz)) {
      EvalOrder e1 = eval_order(d, c1.poset, std::max(sz, 1));
      if (e1.elems.empty()) continue;
      for (const auto& c2 : canonical_posets(sz)) {
        for (const auto& q : bijective_quasi_embeddings(c1.poset, c2.poset)) {
          std::vector<DilElem> img;
          for (const auto& e : e1.elems) img.push_back(apply_map(d, q, e));
          for (size_t i = 0; i < img.size(); ++i)
            for (size_t j = 0; j < img.size(); ++j)
              if (leq_W(d, c2.poset, img[i], img[j]) && !e1.order.leq(static_cast<int>(i), static_cast<int>(j))) {
                r.pass = false;
                r.witness = "W(q) fails to reflect at " + elem_desc(d, e1.elems[i]) + " vs " +
                            elem_desc(d, e1.elems[j]);
                return r;
              }
        }
      }
    }
  }
  return r;
}

CheckResult check_equivariance(const CodedDilator& d, int bound) {
  CheckResult r{"table-equivariance", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      auto configs = covering_configs(d, c);
      if (configs.empty()) continue;
      for (const auto& g : automorphisms(c.poset)) {
        for (const auto& cfg : configs) {
          auto transport = [&](const std::vector<int>& sub, int tok) {
            std::vector<int> gsub;
            for (int v : sub) gsub.push_back(g[v]);
            std::sort(gsub.begin(), gsub.end());
            SubsetEnum before = induced_suborder(c.poset, sub);
            SubsetEnum after = induced_suborder(c.poset, gsub);
            int k = before.shape.size();
            std::vector<int> inv(c.size(), -1);
            for (int p = 0; p < k; ++p) inv[after.en.values[p]] = p;
            std::vector<int> hv(k);
            for (int u = 0; u < k; ++u) hv[u] = inv[g[before.en.values[u]]];
            OrderMap h{before.shape.poset, after.shape.poset, hv};
            return std::make_pair(gsub, d.action(h, tok));
          };
          auto [gs, gsigma] = transport(cfg.s, cfg.sigma);
          auto [gt, gtau] = transport(cfg.t, cfg.tau);
          if (d.table(c, cfg.s, cfg.sigma, cfg.t, cfg.tau) != d.table(c, gs, gsigma, gt, gtau)) {
            r.pass = false;
            r.witness = "automorphism changes entry at d=" + poset_to_string(c.poset) + " s=" +
                        set_to_string(cfg.s) + " sigma=" + d.token(cfg.sigma).id;
            return r;
          }
        }
      }
    }
  }
  return r;
}

CheckResult check_reflexivity(const CodedDilator& d, int bound) {
  CheckResult r{"reflexivity", true, bound, ""};
  for (int sz = 0; sz <= std::min(bound, d.n_max()); ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      std::vector<int> full(sz);
      std::iota(full.begin(), full.end(), 0);
      for (int tok : d.tokens_with_shape(c))
        if (!d.table(c, full, tok, full, tok)) {
          r.pass = false;
          r.witness = "missing reflexive entry for " + d.token(tok).id + " over " +
                      poset_to_string(c.poset);
          return r;
        }
    }
  }
  return r;
}

CheckResult check_antisymmetry(const CodedDilator& d, int bound) {
  CheckResult r{"antisymmetry", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      for (const auto& cfg : covering_configs(d, c)) {
        if (cfg.s == cfg.t && cfg.sigma == cfg.tau) continue;
        if (d.table(c, cfg.s, cfg.sigma, cfg.t, cfg.tau) &&
            d.table(c, cfg.t, cfg.tau, cfg.s, cfg.sigma)) {
          r.pass = false;
          r.witness = "mutual entries at d=" + poset_to_string(c.poset) + " " +
                      d.token(cfg.sigma).id + "@" + set_to_string(cfg.s) + " / " +
                      d.token(cfg.tau).id + "@" + set_to_string(cfg.t);
          return r;
        }
      }
    }
  }
  return r;
}

int eval_order_size(const CodedDilator& d, const FinPoset& host) {
  int total = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << host.size()); ++mask) {
    std::vector<int> a = mask_to_set(mask);
    if (static_cast<int>(a.size()) > d.n_max()) continue;
    total += static_cast<int>(d.tokens_with_shape(induced_suborder(host, a).shape).size());
  }
  return total;
}

CheckResult check_transitivity(const CodedDilator& d, int bound, int elem_budget) {
  CheckResult r{"transitivity", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      if (eval_order_size(d, c.poset) > elem_budget) continue;
      EvalOrder e = eval_order(d, c.poset, std::max(sz, 1));
      int n = static_cast<int>(e.elems.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (!e.order.leq(i, j)) continue;
          int k = e.order.first_up_not_in(j, i);
          if (k >= 0) {
            r.pass = false;
            r.witness = "over " + poset_to_string(c.poset) + ": " + elem_desc(d, e.elems[i]) +
                        " <= " + elem_desc(d, e.elems[j]) + " <= " + elem_desc(d, e.elems[k]) +
                        " but first <= third fails";
            return r;
          }
        }
    }
  }
  return r;
}

CheckResult check_embedding_preservation(const CodedDilator& d, int bound, int elem_budget) {
  CheckResult r{"embedding-preservation", true, bound, ""};
  for (int sa = 0; sa <= bound; ++sa) {
    for (const auto& ca : canonical_posets(sa)) {
      if (eval_order_size(d, ca.poset) > elem_budget) continue;
      EvalOrder ea = eval_order(d, ca.poset, std::max(sa, 1));
      if (ea.elems.empty()) continue;
      for (int sb = sa; sb <= bound; ++sb) {
        for (const auto& cb : canonical_posets(sb)) {
          for (const auto& f : enumerate_maps(ca.poset, cb.poset, MapClass::embedding,
                                              std::max(bound, 1))) {
            std::vector<DilElem> img;
            for (const auto& e : ea.elems) img.push_back(apply_map(d, f, e));
            int n = static_cast<int>(ea.elems.size());
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) {
                bool src = ea.order.leq(i, j);
                bool dst = leq_W(d, cb.poset, img[i], img[j]);
                if (src != dst) {
                  r.pass = false;
                  r.witness = std::string("W(f) fails to ") + (src ? "preserve" : "reflect") +
                              " at " + elem_desc(d, ea.elems[i]) + " vs " +
                              elem_desc(d, ea.elems[j]) + " along f into " +
                              poset_to_string(cb.poset);
                  return r;
                }
              }
          }
        }
      }
    }
  }
  return r;
}

CheckResult check_normality(const CodedDilator& d, int bound) {
  CheckResult r{"normality", true, bound, ""};
  for (int sz = 0; sz <= bound; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      for (const auto& cfg : covering_configs(d, c)) {
        if (!d.table(c, cfg.s, cfg.sigma, cfg.t, cfg.tau)) continue;
        for (int x : cfg.s) {
          bool dominated = false;
          for (int x2 : cfg.t)
            if (c.poset.leq(x, x2)) dominated = true;
          if (!dominated) {
            r.pass = false;
            r.witness = "true entry with undominated support point " + std::to_string(x) +
                        " at d=" + poset_to_string(c.poset) + " " + d.token(cfg.sigma).id + "@" +
                        set_to_string(cfg.s) + " <= " + d.token(cfg.tau).id + "@" +
                        set_to_string(cfg.t);
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool ValidationReport::axioms_pass() const {
  for (const auto& c : checks)
    if (c.name != "normality" && !c.pass) return false;
  return true;
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.name + ": " + (c.pass ? "pass" : "FAIL") + " (bound " + std::to_string(c.bound) + ")";
    if (!c.pass && !c.witness.empty()) out += "\n  witness: " + c.witness;
    out += "\n";
  }
  return out;
}

ValidationReport validate(const CodedDilator& d, const ValidateOptions& opts) {
  ValidationReport rep;
  int action_bound = std::min(d.n_max(), opts.action_cap);
  int table_bound = std::min(2 * d.n_max(), opts.table_cap);
  int trans_bound = std::min(3 * d.n_max(), opts.transitivity_cap);
  int embed_bound = std::min(2 * d.n_max(), opts.embedding_cap);
  rep.checks.push_back(check_action_functoriality(d, action_bound));
  rep.checks.push_back(check_action_reflection(d, action_bound));
  rep.checks.push_back(check_equivariance(d, table_bound));
  rep.checks.push_back(check_reflexivity(d, table_bound));
  rep.checks.push_back(check_antisymmetry(d, table_bound));
  rep.checks.push_back(check_transitivity(d, trans_bound, opts.transitivity_elem_budget));
  rep.checks.push_back(check_embedding_preservation(d, embed_bound, opts.embedding_elem_budget));
  rep.checks.push_back(check_normality(d, table_bound));
  return rep;
}

bool is_normal(const CodedDilator& d, int size_cap) {
  return check_normality(d, std::min(2 * d.n_max(), size_cap)).pass;
}

bool is_unary(const CodedDilator& d) {
  for (const auto& tok : d.trace())
    if (tok.shape.size() > 1) return false;
  return true;
}

MonotonicityResult is_monotone(const CodedDilator& d, const MonotoneOptions& opts) {
  int dom_bound = std::min(d.n_max(), opts.domain_cap);
  int cod_bound = std::min(2 * d.n_max(), opts.codomain_cap);
  for (int sz = 0; sz <= dom_bound; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      auto toks = d.tokens_with_shape(c);
      if (toks.empty()) continue;
      std::vector<int> full(sz);
      std::iota(full.begin(), full.end(), 0);
      for (int ysz = 0; ysz <= cod_bound; ++ysz) {
        for (const auto& y : canonical_posets(ysz)) {
          auto qes = enumerate_maps(c.poset, y.poset, MapClass::quasi_embedding,
                                    std::max(cod_bound, 1));
          for (const auto& f : qes)
            for (const auto& g : qes) {
              if (!pointwise_leq(f, g)) continue;
              for (int tok : toks) {
                DilElem e{full, tok};
                if (!leq_W(d, y.poset, apply_map(d, f, e), apply_map(d, g, e))) {
                  MonotonicityWitness w{c, tok, y.poset, f, g};
                  return MonotonicityResult{false, w};
                }
              }
            }
        }
      }
    }
  }
  return MonotonicityResult{true, std::nullopt};
}

bool unary_wpo_decision(const CodedDilator& d, const MonotoneOptions& opts) {
  if (!is_unary(d)) throw OrderError("unary_wpo_decision: dilator is not unary");
  return is_monotone(d, opts).monotone;
}

// ---- materialization -----------------------------------------------------------

CodedDilator materialize(const ConcreteDilator& sem, int n_max) {
  if (2 * n_max > std::max(default_size_cap(), 6))
    throw ResourceError("materialize: covering-pair table exceeds the size cap");
  DilatorData data;
  data.n_max = n_max;
  std::map<std::pair<std::string, std::vector<int>>, int> lookup;  // (shape key, payload)
  std::vector<std::vector<int>> payloads;
  for (int sz = 0; sz <= n_max; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      for (const auto& elem : sem.elements(c.poset)) {
        std::vector<int> supp = sem.support(c.poset, elem);
        if (static_cast<int>(supp.size()) != sz) continue;
        int idx = static_cast<int>(data.trace.size());
        data.trace.push_back(TraceToken{c, sem.token_id(c, elem)});
        lookup.emplace(std::make_pair(c.key(), elem), idx);
        payloads.push_back(elem);
      }
    }
  }
  auto find_token = [&](const CanonicalPoset& c, const std::vector<int>& elem) {
    auto it = lookup.find(std::make_pair(c.key(), elem));
    if (it == lookup.end()) throw StructuralError("materialize: image token missing");
    return it->second;
  };

  for (int sz = 0; sz <= n_max; ++sz) {
    for (const auto& c1 : canonical_posets(sz)) {
      std::vector<int> toks;
      for (size_t i = 0; i < data.trace.size(); ++i)
        if (data.trace[i].shape == c1) toks.push_back(static_cast<int>(i));
      if (toks.empty()) continue;
      for (const auto& c2 : canonical_posets(sz)) {
        for (auto& q : enumerate_maps(c1.poset, c2.poset, MapClass::quasi_embedding,
                                      std::max(sz, 1))) {
          if (!is_bijective(q)) continue;
          for (int tok : toks) {
            std::vector<int> image = sem.rename(q, payloads[tok]);
            data.action.push_back(DilatorData::ActionEntry{q, tok, find_token(c2, image)});
          }
        }
      }
    }
  }

  for (int sz = 0; sz <= 2 * n_max; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      uint64_t full = sz == 0 ? 0 : (uint64_t{1} << sz) - 1;
      for (uint64_t smask = 0; smask <= full; ++smask) {
        if (static_cast<int>(std::popcount(smask)) > n_max) continue;
        std::vector<int> s = mask_to_set(smask);
        SubsetEnum se = induced_suborder(c.poset, s);
        std::vector<int> stoks;
        for (size_t i = 0; i < data.trace.size(); ++i)
          if (data.trace[i].shape == se.shape) stoks.push_back(static_cast<int>(i));
        if (stoks.empty()) continue;
        std::vector<std::vector<int>> s_realized;
        for (int tok : stoks) s_realized.push_back(sem.rename(se.en, payloads[tok]));
        for (uint64_t tmask = 0; tmask <= full; ++tmask) {
          if ((smask | tmask) != full) continue;
          if (static_cast<int>(std::popcount(tmask)) > n_max) continue;
          std::vector<int> t = mask_to_set(tmask);
          SubsetEnum te = induced_suborder(c.poset, t);
          std::vector<int> ttoks;
          for (size_t i = 0; i < data.trace.size(); ++i)
            if (data.trace[i].shape == te.shape) ttoks.push_back(static_cast<int>(i));
          for (size_t a = 0; a < stoks.size(); ++a)
            for (size_t b = 0; b < ttoks.size(); ++b) {
              std::vector<int> t_realized = sem.rename(te.en, payloads[ttoks[b]]);
              if (sem.leq(c.poset, s_realized[a], t_realized))
                data.table.push_back(
                    DilatorData::TableEntry{c, s, stoks[a], t, ttoks[b], true});
            }
        }
        if (sz == 0) break;
      }
    }
  }
  return make_coded_dilator(data);
}

// ---- built-ins -------------------------------------------------------------------

namespace {

std::string shape_tag(const CanonicalPoset& c) {
  if (c.size() < 2) return "";
  if (c.size() == 2) return c.poset.leq(0, 1) ? "c2" : "a2";
  const auto& all = canonical_posets(c.size());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == c) return "p" + std::to_string(c.size()) + "i" + std::to_string(i);
  throw StructuralError("shape_tag: not canonical");
}

std::string digits(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += std::to_string(x);
  return out;
}

class SeqSem : public ConcreteDilator {
 public:
  explicit SeqSem(int bound) : bound_(bound) {}

  std::vector<std::vector<int>> elements(const FinPoset& host) const override {
    std::vector<std::vector<int>> out{{}};
    size_t start = 0;
    for (int len = 1; len < bound_; ++len) {
      size_t end = out.size();
      for (size_t i = start; i < end; ++i)
        for (int x = 0; x < host.size(); ++x) {
          auto seq = out[i];
          seq.push_back(x);
          out.push_back(std::move(seq));
        }
      start = end;
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  bool leq(const FinPoset& host, const std::vector<int>& a, const std::vector<int>& b) const override {
    return higman_leq(a, b, host);
  }

  std::vector<int> support(const FinPoset&, const std::vector<int>& a) const override {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const override {
    std::vector<int> out;
    for (int x : a) out.push_back(f.values[x]);
    return out;
  }

  std::string token_id(const CanonicalPoset& shape, const std::vector<int>& a) const override {
    if (a.empty()) return "empty";
    std::string tag = shape_tag(shape);
    return "s" + digits(a) + (tag.empty() ? "" : "_" + tag);
  }

 private:
  int bound_;
};

class ProdSem : public ConcreteDilator {
 public:
  explicit ProdSem(int arity) : arity_(arity) {}

  std::vector<std::vector<int>> elements(const FinPoset& host) const override {
    std::vector<std::vector<int>> out;
    if (host.size() == 0) return out;
    std::vector<int> cur(arity_, 0);
    while (true) {
      out.push_back(cur);
      int i = arity_ - 1;
      while (i >= 0 && cur[i] == host.size() - 1) cur[i--] = 0;
      if (i < 0) break;
      ++cur[i];
    }
    return out;
  }

  bool leq(const FinPoset& host, const std::vector<int>& a, const std::vector<int>& b) const override {
    for (int i = 0; i < arity_; ++i)
      if (!host.leq(a[i], b[i])) return false;
    return true;
  }

  std::vector<int> support(const FinPoset&, const std::vector<int>& a) const override {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const override {
    std::vector<int> out;
    for (int x : a) out.push_back(f.values[x]);
    return out;
  }

  std::string token_id(const CanonicalPoset& shape, const std::vector<int>& a) const override {
    std::string tag = shape_tag(shape);
    return "x" + digits(a) + (tag.empty() ? "" : "_" + tag);
  }

 private:
  int arity_;
};

// Encoding: {0} is the isolated point of 1 + Z*X, {1, z, x} the pair (z, x).
class WzSem : public ConcreteDilator {
 public:
  explicit WzSem(FinPoset z) : z_(std::move(z)) {}

  std::vector<std::vector<int>> elements(const FinPoset& host) const override {
    std::vector<std::vector<int>> out{{0}};
    for (int z = 0; z < z_.size(); ++z)
      for (int x = 0; x < host.size(); ++x) out.push_back({1, z, x});
    return out;
  }

  bool leq(const FinPoset& host, const std::vector<int>& a, const std::vector<int>& b) const override {
    if (a[0] != b[0]) return false;
    if (a[0] == 0) return true;
    return z_.leq(a[1], b[1]) && host.leq(a[2], b[2]);
  }

  std::vector<int> support(const FinPoset&, const std::vector<int>& a) const override {
    if (a[0] == 0) return {};
    return {a[2]};
  }

  std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const override {
    if (a[0] == 0) return a;
    return {1, a[1], f.values[a[2]]};
  }

  std::string token_id(const CanonicalPoset&, const std::vector<int>& a) const override {
    if (a[0] == 0) return "one";
    return "z" + std::to_string(a[1]);
  }

 private:
  FinPoset z_;
};

CodedDilator materialize_with_payloads(const ConcreteDilator& sem, int n_max,
                                       std::vector<std::vector<int>>& payloads_out) {
  CodedDilator d = materialize(sem, n_max);
  payloads_out.clear();
  for (int sz = 0; sz <= n_max; ++sz)
    for (const auto& c : canonical_posets(sz))
      for (const auto& elem : sem.elements(c.poset))
        if (static_cast<int>(sem.support(c.poset, elem).size()) == sz) payloads_out.push_back(elem);
  return d;
}

}  // namespace

SeqDilator seq_dilator(int n) {
  if (n < 1) throw OrderError("seq_dilator: need n >= 1");
  SeqSem sem(n);
  auto payloads = std::make_shared<std::vector<std::vector<int>>>();
  CodedDilator d = materialize_with_payloads(sem, n - 1, *payloads);
  return SeqDilator{std::move(d), n, payloads};
}

int SeqDilator::token_of(const CanonicalPoset& shape, const std::vector<int>& entries) const {
  for (size_t i = 0; i < payloads->size(); ++i)
    if (dil.token(static_cast<int>(i)).shape == shape && (*payloads)[i] == entries)
      return static_cast<int>(i);
  return -1;
}

const std::vector<int>& SeqDilator::entries_of(int token) const { return (*payloads)[token]; }

ProdDilator product_dilator(int n) {
  if (n < 1) throw OrderError("product_dilator: need n >= 1");
  ProdSem sem(n);
  auto payloads = std::make_shared<std::vector<std::vector<int>>>();
  CodedDilator d = materialize_with_payloads(sem, n, *payloads);
  return ProdDilator{std::move(d), n, payloads};
}

int ProdDilator::token_of(const CanonicalPoset& shape, const std::vector<int>& entries) const {
  for (size_t i = 0; i < payloads->size(); ++i)
    if (dil.token(static_cast<int>(i)).shape == shape && (*payloads)[i] == entries)
      return static_cast<int>(i);
  return -1;
}

const std::vector<int>& ProdDilator::entries_of(int token) const { return (*payloads)[token]; }

WzDilator wz_dilator(const FinPoset& z) {
  z.require_partial_order("Z");
  WzSem sem(z);
  std::vector<std::vector<int>> payloads;
  CodedDilator d = materialize_with_payloads(sem, 1, payloads);
  WzDilator out{std::move(d), z, -1, std::vector<int>(z.size(), -1)};
  for (size_t i = 0; i < payloads.size(); ++i) {
    if (payloads[i][0] == 0)
      out.one_token = static_cast<int>(i);
    else
      out.pair_token[payloads[i][1]] = static_cast<int>(i);
  }
  return out;
}

int WzDilator::z_of(int token) const {
  for (size_t z = 0; z < pair_token.size(); ++z)
    if (pair_token[z] == token) return static_cast<int>(z);
  return -1;
}

CodedDilator unary_dilator(const UnarySpec& spec) {
  DilatorData data;
  int n = static_cast<int>(spec.tokens.size());
  if (static_cast<int>(spec.rel.size()) != n)
    throw StructuralError("unary_dilator: rel matrix size mismatch");
  bool any_point = false;
  for (const auto& t : spec.tokens) any_point = any_point || t.point;
  data.n_max = any_point ? 1 : 0;

  CanonicalPoset empty{FinPoset(0)};
  CanonicalPoset point{FinPoset(1)};
  for (const auto& t : spec.tokens)
    data.trace.push_back(TraceToken{t.point ? point : empty, t.id});

  for (int i = 0; i < n; ++i) {
    const auto& shape = data.trace[i].shape;
    data.action.push_back(DilatorData::ActionEntry{identity_map(shape.poset), i, i});
  }

  auto rel = [&](int i, int j) {
    UnarySpec::Rel r = spec.rel[i][j];
    if (i == j) {
      r.at_empty = true;
      r.same_point = true;
    }
    return r;
  };
  CanonicalPoset chain2{FinPoset::chain(2)};
  CanonicalPoset anti2{FinPoset::antichain(2)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      UnarySpec::Rel r = rel(i, j);
      bool pi = spec.tokens[i].point, pj = spec.tokens[j].point;
      auto add = [&](const CanonicalPoset& d, std::vector<int> s, std::vector<int> t, bool v) {
        if (v) data.table.push_back(DilatorData::TableEntry{d, std::move(s), i, std::move(t), j, true});
      };
      if (!pi && !pj) add(empty, {}, {}, r.at_empty);
      if (!pi && pj) add(point, {}, {0}, r.empty_vs_point);
      if (pi && !pj) add(point, {0}, {}, r.point_vs_empty);
      if (pi && pj) {
        add(point, {0}, {0}, r.same_point);
        add(chain2, {0}, {1}, r.below);
        add(chain2, {1}, {0}, r.above);
        add(anti2, {0}, {1}, r.at_incomparable);
        add(anti2, {1}, {0}, r.at_incomparable);
      }
    }
  return make_coded_dilator(data);
}

// ---- prime transform -----------------------------------------------------------

namespace {

std::string prime_triple_key(const CanonicalPoset& shape, int x, int y, const DilElem& inner) {
  return shape.key() + "/" + std::to_string(x) + "," + std::to_string(y) + "/" +
         std::to_string(set_to_mask(inner.support)) + "." + std::to_string(inner.token);
}

class PrimeBacking : public Backing {
 public:
  CodedDilator base;
  std::shared_ptr<const std::vector<std::optional<PrimeDilator::TripleInfo>>> infos;
  std::unordered_map<std::string, int> lookup;
  int star = -1, plus = -1;
  mutable std::mutex memo_mutex;
  mutable std::unordered_map<std::string, bool> table_memo;
  mutable std::unordered_map<std::string, int> action_memo;

  int action(const CodedDilator&, const OrderMap& q, int token) const override {
    const auto& inf = (*infos)[token];
    if (!inf.has_value()) return token;  // star/plus: only the empty identity applies
    std::string key = action_key(q, token);
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = action_memo.find(key);
      if (it != action_memo.end()) return it->second;
    }
    DilElem inner2 = apply_map(base, q, inf->inner);
    auto it = lookup.find(prime_triple_key(CanonicalPoset{q.codomain}, q.values[inf->x],
                                           q.values[inf->y], inner2));
    if (it == lookup.end()) throw StructuralError("prime action: image token missing");
    std::lock_guard<std::mutex> lock(memo_mutex);
    action_memo.emplace(std::move(key), it->second);
    return it->second;
  }

  bool table(const CodedDilator&, const CanonicalPoset& c, const std::vector<int>& s, int sigma,
             const std::vector<int>& t, int tau) const override {
    const auto& si = (*infos)[sigma];
    const auto& ti = (*infos)[tau];
    if (!si.has_value() || !ti.has_value()) return sigma == tau && c.size() == 0;
    std::string key = table_key(c, set_to_mask(s), sigma, set_to_mask(t), tau);
    {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = table_memo.find(key);
      if (it != table_memo.end()) return it->second;
    }
    SubsetEnum se = induced_suborder(c.poset, s);
    SubsetEnum te = induced_suborder(c.poset, t);
    int u1 = se.en.values[si->x], v1 = se.en.values[si->y];
    int u2 = te.en.values[ti->x], v2 = te.en.values[ti->y];
    bool result = c.poset.leq(u1, u2) && c.poset.leq(v1, v2);
    if (result) {
      DilElem a = apply_map(base, se.en, si->inner);
      DilElem b = apply_map(base, te.en, ti->inner);
      result = leq_W(base, c.poset, a, b);
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    table_memo.emplace(std::move(key), result);
    return result;
  }
};

}  // namespace

PrimeDilator prime_transform(const CodedDilator& d, int shape_cap) {
  if (shape_cap < 0) shape_cap = default_size_cap();
  int n_max = d.n_max() + 2;
  if (n_max > shape_cap) throw ResourceError("prime_transform: shape bound exceeded");

  std::vector<TraceToken> trace;
  auto infos = std::make_shared<std::vector<std::optional<PrimeDilator::TripleInfo>>>();
  auto backing = std::make_shared<PrimeBacking>();
  backing->base = d;

  trace.push_back(TraceToken{CanonicalPoset{FinPoset(0)}, "star"});
  infos->push_back(std::nullopt);
  trace.push_back(TraceToken{CanonicalPoset{FinPoset(0)}, "plus"});
  infos->push_back(std::nullopt);
  backing->star = 0;
  backing->plus = 1;

  for (int sz = 2; sz <= n_max; ++sz) {
    for (const auto& c : canonical_posets(sz)) {
      uint64_t full = (uint64_t{1} << sz) - 1;
      for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y) {
          if (x == y) continue;
          uint64_t xy = (uint64_t{1} << x) | (uint64_t{1} << y);
          for (uint64_t amask = 0; amask <= full; ++amask) {
            if ((xy | amask) != full) continue;
            std::vector<int> a = mask_to_set(amask);
            if (static_cast<int>(a.size()) > d.n_max()) continue;
            SubsetEnum se = induced_suborder(c.poset, a);
            for (int tok : d.tokens_with_shape(se.shape)) {
              DilElem inner{a, tok};
              int idx = static_cast<int>(trace.size());
              std::string id = "q" + std::to_string(x) + std::to_string(y) + "." + digits(a) +
                               "." + d.token(tok).id;
              trace.push_back(TraceToken{c, id});
              infos->push_back(PrimeDilator::TripleInfo{x, y, inner});
              backing->lookup.emplace(prime_triple_key(c, x, y, inner), idx);
            }
          }
        }
    }
  }
  backing->infos = infos;
  CodedDilator out(n_max, trace, backing);
  return PrimeDilator{std::move(out), d, 0, 1, infos};
}

const std::optional<PrimeDilator::TripleInfo>& PrimeDilator::info(int token) const {
  return (*infos)[token];
}

int PrimeDilator::triple_token(const CanonicalPoset& shape, int x, int y,
                               const DilElem& inner) const {
  const auto* backing = dynamic_cast<const PrimeBacking*>(&dil.backing());
  auto it = backing->lookup.find(prime_triple_key(shape, x, y, inner));
  return it == backing->lookup.end() ? -1 : it->second;
}

// ---- JSON -----------------------------------------------------------------------

namespace {

nlohmann::json poset_json(const FinPoset& p) {
  nlohmann::json j;
  j["size"] = p.size();
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [i, k] : p.strict_pairs()) pairs.push_back({i, k});
  j["leq"] = pairs;
  return j;
}

FinPoset poset_from_json(const nlohmann::json& j) { return poset_from_json_text(j.dump()); }

}  // namespace

CodedDilator dilator_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("dilator json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_max") || !j.contains("trace"))
    throw StructuralError("dilator json: need \"n_max\" and \"trace\"");
  try {
  DilatorData data;
  data.n_max = j["n_max"].get<int>();
  std::unordered_map<std::string, int> by_id;
  for (const auto& t : j["trace"]) {
    if (!t.contains("id") || !t.contains("shape"))
      throw StructuralError("dilator json: trace entries need id and shape");
    FinPoset shape = poset_from_json(t["shape"]);
    if (!is_canonical(shape))
      throw StructuralError("dilator json: token shape not canonical: " + t["id"].get<std::string>());
    by_id.emplace(t["id"].get<std::string>(), static_cast<int>(data.trace.size()));
    data.trace.push_back(TraceToken{CanonicalPoset{shape}, t["id"].get<std::string>()});
  }
  auto resolve = [&](const nlohmann::json& v, const char* what) {
    auto it = by_id.find(v.get<std::string>());
    if (it == by_id.end())
      throw StructuralError(std::string("dilator json: unknown token in ") + what + ": " +
                            v.get<std::string>());
    return it->second;
  };
  if (j.contains("action"))
    for (const auto& e : j["action"]) {
      if (!e.contains("q") || !e.contains("from") || !e.contains("to"))
        throw StructuralError("dilator json: action entries need q, from, to");
      const auto& q = e["q"];
      if (!q.contains("dom") || !q.contains("cod") || !q.contains("values"))
        throw StructuralError("dilator json: q needs dom, cod, values");
      OrderMap m{poset_from_json(q["dom"]), poset_from_json(q["cod"]),
                 q["values"].get<std::vector<int>>()};
      data.action.push_back(
          DilatorData::ActionEntry{std::move(m), resolve(e["from"], "action"), resolve(e["to"], "action")});
    }
  if (j.contains("table"))
    for (const auto& e : j["table"]) {
      if (!e.contains("d") || !e.contains("s") || !e.contains("sigma") || !e.contains("t") ||
          !e.contains("tau"))
        throw StructuralError("dilator json: table entries need d, s, sigma, t, tau");
      DilatorData::TableEntry te;
      te.d = CanonicalPoset{poset_from_json(e["d"])};
      te.s = e["s"].get<std::vector<int>>();
      te.t = e["t"].get<std::vector<int>>();
      te.sigma = resolve(e["sigma"], "table");
      te.tau = resolve(e["tau"], "table");
      te.leq = e.value("leq", false);
      data.table.push_back(std::move(te));
    }
  return make_coded_dilator(data);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("dilator json: ") + e.what());
  }
}

std::string dilator_to_json_text(const CodedDilator& d) {
  const auto* mat = dynamic_cast<const MaterializedBacking*>(&d.backing());
  if (!mat) throw StructuralError("dilator_to_json_text: dilator is not materialized");
  const DilatorData& data = mat->data;
  nlohmann::json j;
  j["n_max"] = data.n_max;
  j["trace"] = nlohmann::json::array();
  for (const auto& t : data.trace)
    j["trace"].push_back({{"id", t.id}, {"shape", poset_json(t.shape.poset)}});
  j["action"] = nlohmann::json::array();
  for (const auto& e : data.action)
    j["action"].push_back({{"q",
                            {{"dom", poset_json(e.q.domain)},
                             {"cod", poset_json(e.q.codomain)},
                             {"values", e.q.values}}},
                           {"from", data.trace[e.from].id},
                           {"to", data.trace[e.to].id}});
  j["table"] = nlohmann::json::array();
  for (const auto& e : data.table)
    if (e.leq)
      j["table"].push_back({{"d", poset_json(e.d.poset)},
                            {"s", e.s},
                            {"sigma", data.trace[e.sigma].id},
                            {"t", e.t},
                            {"tau", data.trace[e.tau].id},
                            {"leq", true}});
  return j.dump(2);
}

CodedDilator load_dilator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open dilator file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return dilator_from_json_text(ss.str());
}

CodedDilator resolve_dilator(const std::string& spec) {
  auto rest = [&](const char* prefix) -> std::optional<std::string> {
    std::string p(prefix);
    if (spec.rfind(p, 0) == 0) return spec.substr(p.size());
    return std::nullopt;
  };
  if (auto r = rest("seq:")) return seq_dilator(std::stoi(*r)).dil;
  if (auto r = rest("prod:")) return product_dilator(std::stoi(*r)).dil;
  if (auto r = rest("wz:")) return wz_dilator(resolve_poset(*r)).dil;
  if (auto r = rest("prime:")) return prime_transform(resolve_dilator(*r)).dil;
  return load_dilator_file(spec);
}

// ---- product embedding ------------------------------------------------------------

FinPoset prod_embed_target(const CodedDilator& d, const FinPoset& host) {
  return sum_order({FinPoset::antichain(static_cast<int>(d.trace().size())), host});
}

std::vector<int> prod_embed(const CodedDilator& d, const FinPoset& host, const DilElem& x) {
  int ntok = static_cast<int>(d.trace().size());
  SubsetEnum se = induced_suborder(host, x.support);
  std::vector<int> out(d.n_max() + 1, ntok);  // placeholder
  for (int i = 0; i <= d.n_max(); ++i) {
    if (i < se.shape.size())
      out[i] = ntok + se.en.values[i];
    else
      out[i] = x.token;
  }
  return out;
}

// ---- element grammar ---------------------------------------------------------------

std::string elem_to_string(const CodedDilator& d, const DilElem& e) {
  return d.token(e.token).id + "@" + set_to_string(e.support);
}

DilElem elem_parse(const CodedDilator& d, const std::string& text) {
  size_t at = text.find('@');
  if (at == std::string::npos) throw ParseError("element: expected \"id@{...}\"");
  std::string id = text.substr(0, at);
  int tok = d.token_index(id);
  if (tok < 0) throw ParseError("element: unknown token " + id);
  std::string setpart = text.substr(at + 1);
  if (setpart.size() < 2 || setpart.front() != '{' || setpart.back() != '}')
    throw ParseError("element: expected \"{i,j,...}\"");
  std::vector<int> supp;
  std::string body = setpart.substr(1, setpart.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) supp.push_back(std::stoi(item));
  std::sort(supp.begin(), supp.end());
  return DilElem{supp, tok};
}

}  // namespace kfp
