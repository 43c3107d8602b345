#include "kfp/corpus.hpp"

#include <algorithm>

namespace kfp {

Corpus make_corpus() {
  return Corpus{seq_dilator(2),       seq_dilator(3),          product_dilator(1),
                product_dilator(2),   wz_dilator(FinPoset(1)), wz_dilator(FinPoset::antichain(2))};
}

CodedDilator reversed_identity_dilator() {
  UnarySpec spec;
  spec.tokens = {{"u", true}};
  spec.rel = {{UnarySpec::Rel{}}};
  spec.rel[0][0].above = true;
  return unary_dilator(spec);
}

CodedDilator two_copy_reversed_dilator() {
  UnarySpec spec;
  spec.tokens = {{"u", true}, {"v", true}};
  spec.rel.assign(2, std::vector<UnarySpec::Rel>(2));
  spec.rel[0][0].below = true;
  spec.rel[1][1].above = true;
  return unary_dilator(spec);
}

namespace {

class FirstCoordSem : public ConcreteDilator {
 public:
  std::vector<std::vector<int>> elements(const FinPoset& host) const override {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < host.size(); ++a)
      for (int b = 0; b < host.size(); ++b) out.push_back({a, b});
    return out;
  }
  bool leq(const FinPoset& host, const std::vector<int>& a, const std::vector<int>& b) const override {
    return a == b || host.less(a[0], b[0]);
  }
  std::vector<int> support(const FinPoset&, const std::vector<int>& a) const override {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const override {
    return {f.values[a[0]], f.values[a[1]]};
  }
  std::string token_id(const CanonicalPoset& shape, const std::vector<int>& a) const override {
    std::string tag;
    if (shape.size() == 2) tag = shape.poset.leq(0, 1) ? "_c2" : "_a2";
    return "f" + std::to_string(a[0]) + std::to_string(a[1]) + tag;
  }
};

}  // namespace

CodedDilator first_coordinate_dilator() {
  FirstCoordSem sem;
  return materialize(sem, 2);
}

namespace {

class ReversedPairSem : public ConcreteDilator {
 public:
  std::vector<std::vector<int>> elements(const FinPoset& host) const override {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < host.size(); ++a)
      for (int b = 0; b < host.size(); ++b) out.push_back({a, b});
    return out;
  }
  bool leq(const FinPoset& host, const std::vector<int>& a, const std::vector<int>& b) const override {
    return host.leq(a[0], b[0]) && host.leq(b[1], a[1]);
  }
  std::vector<int> support(const FinPoset&, const std::vector<int>& a) const override {
    std::vector<int> s = a;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  std::vector<int> rename(const OrderMap& f, const std::vector<int>& a) const override {
    return {f.values[a[0]], f.values[a[1]]};
  }
  std::string token_id(const CanonicalPoset& shape, const std::vector<int>& a) const override {
    std::string tag;
    if (shape.size() == 2) tag = shape.poset.leq(0, 1) ? "_c2" : "_a2";
    return "r" + std::to_string(a[0]) + std::to_string(a[1]) + tag;
  }
};

}  // namespace

CodedDilator reversed_pair_dilator() {
  ReversedPairSem sem;
  return materialize(sem, 2);
}

CodedDilator ladder_unary_dilator() {
  UnarySpec spec;
  spec.tokens = {{"n", false}, {"c0", true}, {"c1", true}};
  spec.rel.assign(3, std::vector<UnarySpec::Rel>(3));
  spec.rel[1][1].below = true;
  spec.rel[2][2].below = true;
  spec.rel[1][2].same_point = true;
  spec.rel[1][2].below = true;
  return unary_dilator(spec);
}

CodedDilator constant_chain2_dilator() {
  UnarySpec spec;
  spec.tokens = {{"p", false}, {"q", false}};
  spec.rel.assign(2, std::vector<UnarySpec::Rel>(2));
  spec.rel[0][1].at_empty = true;
  return unary_dilator(spec);
}

std::vector<int> seq_concrete(const SeqDilator& sd, const FinPoset& host, const DilElem& e) {
  SubsetEnum se = induced_suborder(host, e.support);
  std::vector<int> out;
  for (int d : sd.entries_of(e.token)) out.push_back(se.en.values[d]);
  return out;
}

std::vector<int> prod_concrete(const ProdDilator& pd, const FinPoset& host, const DilElem& e) {
  SubsetEnum se = induced_suborder(host, e.support);
  std::vector<int> out;
  for (int d : pd.entries_of(e.token)) out.push_back(se.en.values[d]);
  return out;
}

std::vector<int> wz_concrete(const WzDilator& wd, const FinPoset& host, const DilElem& e) {
  if (e.token == wd.one_token) return {};
  int z = wd.z_of(e.token);
  if (z < 0) throw StructuralError("wz_concrete: unexpected token");
  SubsetEnum se = induced_suborder(host, e.support);
  return {z, se.en.values[0]};
}

}  // namespace kfp
