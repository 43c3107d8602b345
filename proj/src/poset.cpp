#include "kfp/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace kfp {

FinPoset::FinPoset(int size) : size_(size), words_((size + 63) / 64) {
  if (size < 0 || size > kMaxSize) throw ResourceError("poset size out of range");
  data_.assign(static_cast<size_t>(size) * words_, 0);
  for (int i = 0; i < size; ++i) set_leq(i, i);
}

FinPoset FinPoset::chain(int n) {
  FinPoset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.set_leq(i, j);
  return p;
}

FinPoset FinPoset::antichain(int n) { return FinPoset(n); }

FinPoset FinPoset::from_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
  FinPoset p(size);
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= size || j >= size) throw OrderError("pair index out of range");
    p.set_leq(i, j);
  }
  p.require_partial_order();
  return p;
}

void FinPoset::set_leq(int i, int j) {
  data_[static_cast<size_t>(i) * words_ + j / 64] |= uint64_t{1} << (j % 64);
}

bool FinPoset::up_set_subset(int j, int i) const {
  const uint64_t* rj = &data_[static_cast<size_t>(j) * words_];
  const uint64_t* ri = &data_[static_cast<size_t>(i) * words_];
  for (int w = 0; w < words_; ++w)
    if (rj[w] & ~ri[w]) return false;
  return true;
}

int FinPoset::first_up_not_in(int j, int i) const {
  const uint64_t* rj = &data_[static_cast<size_t>(j) * words_];
  const uint64_t* ri = &data_[static_cast<size_t>(i) * words_];
  for (int w = 0; w < words_; ++w) {
    uint64_t diff = rj[w] & ~ri[w];
    if (diff) return w * 64 + std::countr_zero(diff);
  }
  return -1;
}

bool FinPoset::is_partial_order() const {
  for (int i = 0; i < size_; ++i) {
    if (!leq(i, i)) return false;
    for (int j = 0; j < size_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (leq(i, j) && !up_set_subset(j, i)) return false;
    }
  }
  return true;
}

void FinPoset::require_partial_order(const std::string& what) const {
  if (!is_partial_order()) throw OrderError(what + " is not a partial order");
}

std::vector<std::pair<int, int>> FinPoset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

std::string FinPoset::key() const {
  std::string k = std::to_string(size_) + ";";
  k.reserve(k.size() + data_.size() * 8);
  for (uint64_t w : data_)
    for (int b = 0; b < 8; ++b) k.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  return k;
}

FinPoset relabel(const FinPoset& p, const std::vector<int>& f) {
  FinPoset q(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) q.set_leq(f[i], f[j]);
  return q;
}

FinPoset sum_order(const std::vector<FinPoset>& parts, const std::vector<bool>& reversed_flags) {
  int total = 0;
  for (const auto& p : parts) total += p.size();
  FinPoset out(total);
  int off = 0;
  for (size_t k = 0; k < parts.size(); ++k) {
    const FinPoset& p = parts[k];
    bool rev = k < reversed_flags.size() && reversed_flags[k];
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.leq(i, j)) {
          if (rev)
            out.set_leq(off + j, off + i);
          else
            out.set_leq(off + i, off + j);
        }
    off += p.size();
  }
  return out;
}

FinPoset product_order(const FinPoset& a, const FinPoset& b) {
  FinPoset out(a.size() * b.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      for (int x2 = 0; x2 < a.size(); ++x2)
        for (int y2 = 0; y2 < b.size(); ++y2)
          if (a.leq(x, x2) && b.leq(y, y2)) out.set_leq(x * b.size() + y, x2 * b.size() + y2);
  return out;
}

OrderMap identity_map(const FinPoset& p) {
  OrderMap f{p, p, std::vector<int>(p.size())};
  std::iota(f.values.begin(), f.values.end(), 0);
  return f;
}

OrderMap compose(const OrderMap& g, const OrderMap& f) {
  if (!(f.codomain == g.domain)) throw OrderError("compose: domain mismatch");
  OrderMap h{f.domain, g.codomain, std::vector<int>(f.values.size())};
  for (size_t i = 0; i < f.values.size(); ++i) h.values[i] = g.values[f.values[i]];
  return h;
}

OrderMap inverse_of_bijection(const OrderMap& f) {
  if (!is_bijective(f)) throw OrderError("inverse: map is not bijective");
  OrderMap h{f.codomain, f.domain, std::vector<int>(f.values.size())};
  for (size_t i = 0; i < f.values.size(); ++i) h.values[f.values[i]] = static_cast<int>(i);
  return h;
}

bool is_bijective(const OrderMap& f) {
  if (f.domain.size() != f.codomain.size()) return false;
  std::vector<bool> hit(f.codomain.size(), false);
  for (int v : f.values) {
    if (v < 0 || v >= f.codomain.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_quasi_embedding(const OrderMap& f) {
  for (int x = 0; x < f.domain.size(); ++x)
    for (int y = 0; y < f.domain.size(); ++y)
      if (f.codomain.leq(f.values[x], f.values[y]) && !f.domain.leq(x, y)) return false;
  return true;
}

bool is_embedding(const OrderMap& f) {
  if (!is_quasi_embedding(f)) return false;
  for (int x = 0; x < f.domain.size(); ++x)
    for (int y = 0; y < f.domain.size(); ++y)
      if (f.domain.leq(x, y) && !f.codomain.leq(f.values[x], f.values[y])) return false;
  return true;
}

MapClass morphism_checks(const OrderMap& f) {
  if (static_cast<int>(f.values.size()) != f.domain.size()) throw OrderError("map not total");
  for (int v : f.values)
    if (v < 0 || v >= f.codomain.size()) throw OrderError("map value out of range");
  if (!is_quasi_embedding(f)) return MapClass::none;
  return is_embedding(f) ? MapClass::embedding : MapClass::quasi_embedding;
}

bool pointwise_leq(const OrderMap& f, const OrderMap& g) {
  if (!(f.domain == g.domain) || !(f.codomain == g.codomain))
    throw OrderError("pointwise_leq: mismatched domains");
  for (int x = 0; x < f.domain.size(); ++x)
    if (!f.codomain.leq(f.values[x], g.values[x])) return false;
  return true;
}

namespace {

// Column-major bit string of the relabeled order; the canonical key.
std::vector<char> colmajor_bits(const FinPoset& p, const std::vector<int>& perm) {
  // canon element u corresponds to original perm[u]
  int n = p.size();
  std::vector<char> bits(n * n);
  int pos = 0;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) bits[pos++] = p.leq(perm[u], perm[v]) ? 1 : 0;
  return bits;
}

struct CanonCacheEntry {
  CanonicalPoset canon;
  OrderMap iso;
};

}  // namespace

Canonicalization canonical_form(const FinPoset& p) {
  static thread_local std::unordered_map<std::string, CanonCacheEntry> cache;
  auto it = cache.find(p.key());
  if (it != cache.end()) return {it->second.canon, it->second.iso};

  int n = p.size();
  if (n > 10) throw ResourceError("canonical_form: poset too large");
  std::vector<int> perm(n), best(n);
  std::iota(perm.begin(), perm.end(), 0);
  best = perm;
  std::vector<char> best_bits = colmajor_bits(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<char> bits = colmajor_bits(p, perm);
    if (bits < best_bits) {
      best_bits = bits;
      best = perm;
    }
  }
  FinPoset canon(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p.leq(best[u], best[v])) canon.set_leq(u, v);
  OrderMap iso{p, canon, std::vector<int>(n)};
  for (int u = 0; u < n; ++u) iso.values[best[u]] = u;
  Canonicalization result{CanonicalPoset{canon}, iso};
  cache.emplace(p.key(), CanonCacheEntry{result.canon, result.iso});
  return result;
}

bool is_canonical(const FinPoset& p) { return canonical_form(p).canon.poset == p; }

const std::vector<std::vector<int>>& automorphisms(const FinPoset& p) {
  static thread_local std::unordered_map<std::string, std::vector<std::vector<int>>> cache;
  auto it = cache.find(p.key());
  if (it != cache.end()) return it->second;
  int n = p.size();
  std::vector<std::vector<int>> autos;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (p.leq(i, j) != p.leq(perm[i], perm[j])) ok = false;
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(p.key(), std::move(autos)).first->second;
}

SubsetEnum induced_suborder(const FinPoset& host, const std::vector<int>& members) {
  std::vector<int> a = members;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (int m : a)
    if (m < 0 || m >= host.size()) throw OrderError("subset member out of range");

  static thread_local std::unordered_map<std::string, SubsetEnum> cache;
  std::string cache_key = host.key() + "/";
  for (int m : a) cache_key.push_back(static_cast<char>(m + 1));
  auto hit = cache.find(cache_key);
  if (hit != cache.end()) return hit->second;

  int k = static_cast<int>(a.size());
  FinPoset induced(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (host.leq(a[i], a[j])) induced.set_leq(i, j);

  Canonicalization c = canonical_form(induced);
  // base en0 : canon -> host; all isomorphisms are en0 composed with an
  // automorphism of the canonical shape. Minimize (en(0), en(1), ...).
  std::vector<int> inv(k);  // canon label -> position in a
  for (int i = 0; i < k; ++i) inv[c.iso.values[i]] = i;
  std::vector<int> best;
  for (const auto& g : automorphisms(c.canon.poset)) {
    std::vector<int> cand(k);
    for (int u = 0; u < k; ++u) cand[u] = a[inv[g[u]]];
    if (best.empty() || cand < best) best = cand;
  }
  if (k == 0) best = {};
  OrderMap en{c.canon.poset, host, best};
  SubsetEnum out{host, a, c.canon, en};
  cache.emplace(std::move(cache_key), out);
  return out;
}

namespace {
int g_size_cap_override = 0;
}

int default_size_cap() {
  if (g_size_cap_override > 0) return g_size_cap_override;
  static const int cap = [] {
    if (const char* env = std::getenv("KFP_SIZE_CAP")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 6;
  }();
  return cap;
}

void set_size_cap_override(int cap) { g_size_cap_override = cap > 0 ? cap : 0; }

std::vector<OrderMap> enumerate_maps(const FinPoset& p, const FinPoset& q, MapClass kind,
                                     int size_cap) {
  if (size_cap < 0) size_cap = default_size_cap();
  if (p.size() > size_cap || q.size() > size_cap)
    throw ResourceError("enumerate_maps: poset exceeds enumeration bound");
  std::vector<OrderMap> out;
  if (p.size() == 0) {
    out.push_back(OrderMap{p, q, {}});
    return out;
  }
  if (q.size() == 0) return out;
  std::vector<int> values(p.size(), 0);
  while (true) {
    OrderMap f{p, q, values};
    bool take = false;
    switch (kind) {
      case MapClass::none: take = true; break;
      case MapClass::quasi_embedding: take = is_quasi_embedding(f); break;
      case MapClass::embedding: take = is_embedding(f); break;
    }
    if (take) out.push_back(std::move(f));
    int i = p.size() - 1;
    while (i >= 0 && values[i] == q.size() - 1) values[i--] = 0;
    if (i < 0) break;
    ++values[i];
  }
  return out;
}

bool higman_leq(const std::vector<int>& s, const std::vector<int>& t, const FinPoset& x) {
  size_t js = s.size(), jt = t.size();
  if (js > jt) return false;
  // dp[i] = least j such that s[0..i) embeds into t[0..j); greedy fails for
  // partial orders, so run the full table.
  std::vector<std::vector<char>> can(js + 1, std::vector<char>(jt + 1, 0));
  for (size_t j = 0; j <= jt; ++j) can[js][j] = 1;
  for (size_t i = js; i-- > 0;)
    for (size_t j = jt; j-- > 0;) {
      can[i][j] = (x.leq(s[i], t[j]) && can[i + 1][j + 1]) || can[i][j + 1];
    }
  return can[0][0];
}

const std::vector<CanonicalPoset>& canonical_posets(int size) {
  static thread_local std::unordered_map<int, std::vector<CanonicalPoset>> cache;
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  if (size > 8) throw ResourceError("canonical_posets: size too large");

  std::vector<CanonicalPoset> out;
  std::unordered_map<std::string, bool> seen;
  int npairs = size * (size - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) pairs.emplace_back(i, j);
  // Naturally labeled posets: the strict order points upward in {0,...,n-1},
  // so every isomorphism class appears.
  for (uint64_t mask = 0; mask < (uint64_t{1} << npairs); ++mask) {
    FinPoset p(size);
    for (int b = 0; b < npairs; ++b)
      if ((mask >> b) & 1) p.set_leq(pairs[b].first, pairs[b].second);
    if (!p.is_partial_order()) continue;
    Canonicalization c = canonical_form(p);
    std::string k = c.canon.key();
    if (!seen.emplace(k, true).second) continue;
    out.push_back(c.canon);
  }
  std::sort(out.begin(), out.end(),
            [](const CanonicalPoset& a, const CanonicalPoset& b) { return a.key() < b.key(); });
  return cache.emplace(size, std::move(out)).first->second;
}

std::vector<FinPoset> all_labeled_posets(int size) {
  if (size > 4) throw ResourceError("all_labeled_posets: size too large");
  std::vector<FinPoset> out;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i != j) pairs.emplace_back(i, j);
  int npairs = static_cast<int>(pairs.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << npairs); ++mask) {
    FinPoset p(size);
    for (int b = 0; b < npairs; ++b)
      if ((mask >> b) & 1) p.set_leq(pairs[b].first, pairs[b].second);
    if (p.is_partial_order()) out.push_back(p);
  }
  return out;
}

FinPoset poset_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("poset json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer())
    throw StructuralError("poset json: missing integer \"size\"");
  int size = j["size"].get<int>();
  if (size < 0 || size > FinPoset::kMaxSize) throw StructuralError("poset json: size out of range");
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw StructuralError("poset json: \"leq\" must be an array");
    for (const auto& e : j["leq"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw StructuralError("poset json: leq entries must be [i,j]");
      pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  try {
    return FinPoset::from_pairs(size, pairs);
  } catch (const OrderError& e) {
    throw StructuralError(std::string("poset json: ") + e.what());
  }
}

std::string poset_to_json_text(const FinPoset& p) {
  nlohmann::json j;
  j["size"] = p.size();
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [i, k] : p.strict_pairs()) pairs.push_back({i, k});
  j["leq"] = pairs;
  return j.dump();
}

FinPoset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open poset file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return poset_from_json_text(ss.str());
}

FinPoset resolve_poset(const std::string& spec) {
  if (spec == "empty") return FinPoset(0);
  auto prefixed = [&](const std::string& p) {
    return spec.rfind(p, 0) == 0 ? std::optional<int>(std::atoi(spec.c_str() + p.size()))
                                 : std::nullopt;
  };
  if (auto n = prefixed("chain:")) return FinPoset::chain(*n);
  if (auto n = prefixed("antichain:")) return FinPoset::antichain(*n);
  return load_poset_file(spec);
}

std::vector<int> mask_to_set(uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1) out.push_back(i);
  return out;
}

uint64_t set_to_mask(const std::vector<int>& set) {
  uint64_t m = 0;
  for (int i : set) m |= uint64_t{1} << i;
  return m;
}

}  // namespace kfp
