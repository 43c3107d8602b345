#include "kfp/falsify.hpp"

#include <algorithm>
#include <numeric>

namespace kfp {

namespace {

struct SearchState {
  const FinPoset& stream;
  int target;
  int width;
  long long budget;
  long long visited = 0;
  bool exhausted = true;
  std::vector<int> chosen;

  bool extend(int from) {
    if (static_cast<int>(chosen.size()) == target) return true;
    for (int j = from; j < width; ++j) {
      if (++visited > budget) {
        exhausted = false;
        return false;
      }
      bool ok = true;
      for (int i : chosen)
        if (stream.leq(i, j)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(j);
      if (extend(j + 1)) return true;
      chosen.pop_back();
      if (!exhausted) return false;
    }
    return false;
  }
};

}  // namespace

BadSearchResult bad_search(const FinPoset& stream, int length_bound, int width_bound,
                           long long budget) {
  if (length_bound < 2) throw OrderError("bad_search: length bound must be at least 2");
  int width = width_bound < 0 ? stream.size() : std::min(width_bound, stream.size());
  SearchState st{stream, length_bound, width, budget, 0, true, {}};
  BadSearchResult out;
  if (st.extend(0)) {
    out.status = BadSearchResult::Status::found;
    out.indices = st.chosen;
  } else {
    out.status = st.exhausted ? BadSearchResult::Status::none
                              : BadSearchResult::Status::inconclusive;
  }
  out.nodes_visited = st.visited;
  return out;
}

BadSearchResult bad_search_eval(const CodedDilator& d, const EvalOrder& eval, int length_bound,
                                long long budget) {
  BadSearchResult r = bad_search(eval.order, length_bound, -1, budget);
  if (r.status == BadSearchResult::Status::found) {
    // independent second pass through leq_W
    for (size_t a = 0; a < r.indices.size(); ++a)
      for (size_t b = a + 1; b < r.indices.size(); ++b)
        if (leq_W(d, eval.host, eval.elems[r.indices[a]], eval.elems[r.indices[b]]))
          throw StructuralError("bad_search_eval: witness failed re-verification");
  }
  return r;
}

AntichainResult two_point_antichain(const CodedDilator& d, int token, int chain_len) {
  if (token < 0 || token >= static_cast<int>(d.trace().size()))
    throw OrderError("two_point_antichain: unknown token");
  const CanonicalPoset& shape = d.token(token).shape;
  if (shape.size() < 2)
    throw OrderError("two_point_antichain: token support has fewer than two points");
  if (chain_len < 1) throw OrderError("two_point_antichain: chain length must be positive");

  int rest = shape.size() - 2;
  FinPoset y = sum_order({FinPoset::chain(chain_len), FinPoset::chain(chain_len),
                          FinPoset::antichain(rest)},
                         {false, true, false});
  AntichainResult out;
  out.host = y;
  std::vector<int> full(shape.size());
  std::iota(full.begin(), full.end(), 0);
  for (int z = 0; z < chain_len; ++z) {
    // x0 = shape point 0 -> (0, z); x1 = shape point 1 -> (1, z); rest discrete
    std::vector<int> fv(shape.size());
    fv[0] = z;
    fv[1] = chain_len + z;
    for (int x = 2; x < shape.size(); ++x) fv[x] = 2 * chain_len + (x - 2);
    OrderMap fz{shape.poset, y, fv};
    out.elems.push_back(apply_map(d, fz, DilElem{full, token}));
  }
  out.antichain = true;
  for (int i = 0; i < chain_len && out.antichain; ++i)
    for (int j = 0; j < chain_len; ++j) {
      if (i == j) continue;
      if (leq_W(d, y, out.elems[i], out.elems[j])) {
        out.antichain = false;
        out.comparable = std::make_pair(i, j);
        break;
      }
    }
  return out;
}

namespace {

// Y x 2 with the lexicographic order: (y,i) < (y',j) iff y < y', and
// (y,0) < (y,1). Pair (y,i) gets index 2*y + i.
FinPoset lex_two(const FinPoset& y) {
  FinPoset out(2 * y.size());
  for (int a = 0; a < y.size(); ++a)
    for (int b = 0; b < y.size(); ++b) {
      if (a == b) {
        out.set_leq(2 * a, 2 * a + 1);
      } else if (y.less(a, b)) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) out.set_leq(2 * a + i, 2 * b + j);
      }
    }
  return out;
}

bool values_overlap_off_diagonal(const OrderMap& f, const OrderMap& g) {
  for (int x = 0; x < f.domain.size(); ++x)
    for (int x2 = 0; x2 < g.domain.size(); ++x2)
      if (x != x2 && f.values[x] == g.values[x2]) return true;
  return false;
}

// Restricts the pair to the union of their ranges (the (A2) step).
void restrict_to_ranges(OrderMap& f, OrderMap& g) {
  std::vector<int> range = f.values;
  range.insert(range.end(), g.values.begin(), g.values.end());
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  std::vector<int> pos(f.codomain.size(), -1);
  for (size_t p = 0; p < range.size(); ++p) pos[range[p]] = static_cast<int>(p);
  FinPoset y0(static_cast<int>(range.size()));
  for (size_t a = 0; a < range.size(); ++a)
    for (size_t b = 0; b < range.size(); ++b)
      if (f.codomain.leq(range[a], range[b])) y0.set_leq(static_cast<int>(a), static_cast<int>(b));
  for (auto* m : {&f, &g}) {
    for (int& v : m->values) v = pos[v];
    m->codomain = y0;
  }
}

}  // namespace

LadderResult ladder_bad_sequence(const CodedDilator& d, const MonotonicityWitness& w, int K) {
  if (K < 1) throw OrderError("ladder_bad_sequence: K must be positive");
  int n = w.c.size();
  std::vector<int> full(n);
  std::iota(full.begin(), full.end(), 0);
  DilElem sigma{full, w.token};

  OrderMap f = w.f, g = w.g;
  if (!is_quasi_embedding(f) || !is_quasi_embedding(g) || !pointwise_leq(f, g))
    throw OrderError("ladder_bad_sequence: witness maps are not a pointwise-dominated pair");
  if (leq_W(d, f.codomain, apply_map(d, f, sigma), apply_map(d, g, sigma)))
    throw OrderError("ladder_bad_sequence: witness is not a monotonicity violation");

  if (values_overlap_off_diagonal(f, g)) {
    // pass to Y x 2 where the overlap disappears, keeping a violating pair
    FinPoset y2 = lex_two(f.codomain);
    auto lift = [&](const OrderMap& m, auto bit) {
      OrderMap out{m.domain, y2, std::vector<int>(m.values.size())};
      for (size_t x = 0; x < m.values.size(); ++x) out.values[x] = 2 * m.values[x] + bit(x);
      return out;
    };
    OrderMap iota_f = lift(f, [](int) { return 0; });
    OrderMap iota_g = lift(g, [](int) { return 0; });
    OrderMap f_plus = lift(f, [&](int x) { return f.values[x] == g.values[x] ? 0 : 1; });
    DilElem a = apply_map(d, iota_f, sigma);
    DilElem b = apply_map(d, f_plus, sigma);
    DilElem c = apply_map(d, iota_g, sigma);
    if (!leq_W(d, y2, a, b)) {
      f = iota_f;
      g = f_plus;
    } else if (!leq_W(d, y2, b, c)) {
      f = f_plus;
      g = iota_g;
    } else {
      throw StructuralError("ladder_bad_sequence: lexicographic split lost the violation");
    }
    if (values_overlap_off_diagonal(f, g))
      throw StructuralError("ladder_bad_sequence: overlap persists after the split");
  }
  restrict_to_ranges(f, g);

  LadderResult out;
  out.host = product_order(FinPoset::antichain(n), FinPoset::chain(K));
  for (int k = 0; k < K; ++k) {
    std::vector<int> hv(n);
    for (int i = 0; i < n; ++i)
      hv[i] = i * K + (f.values[i] == g.values[i] ? 0 : k);
    OrderMap hk{w.c.poset, out.host, hv};
    out.elems.push_back(apply_map(d, hk, sigma));
  }
  out.bad = true;
  for (int k = 0; k < K && out.bad; ++k)
    for (int l = k + 1; l < K; ++l)
      if (leq_W(d, out.host, out.elems[k], out.elems[l])) {
        out.bad = false;
        out.violation = std::make_pair(k, l);
        break;
      }
  return out;
}

namespace {

std::optional<OrdTerm> predecessor(const OrdTerm& t, int width) {
  if (t.level() == 0 || t.is_zero()) return std::nullopt;
  std::vector<OrdTerm> entries = t.entries();
  OrdTerm last = entries.back();
  entries.pop_back();
  if (auto p = predecessor(last, width)) {
    int pad = std::max(1, width - static_cast<int>(entries.size()));
    for (int i = 0; i < pad; ++i) entries.push_back(*p);
  }
  return OrdTerm(t.level(), std::move(entries));
}

}  // namespace

std::vector<OrdTerm> descent_search(const OrdTerm& from, int steps) {
  if (steps < 0) throw OrderError("descent_search: steps must be nonnegative");
  std::vector<OrdTerm> chain;
  OrdTerm cur = from;
  int width = steps + static_cast<int>(from.entries().size()) + 1;
  while (static_cast<int>(chain.size()) < steps) {
    auto next = predecessor(cur, width);
    if (!next) break;
    chain.push_back(*next);
    cur = *next;
  }
  return chain;
}

}  // namespace kfp
