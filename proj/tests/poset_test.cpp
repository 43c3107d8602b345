#include "kfp/poset.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"

using namespace kfp;

namespace {

// brute-force minimum over all relabelings, written independently of
// canonical_form: collect every relabeled poset and take the least key
FinPoset brute_canonical(const FinPoset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  FinPoset best = p;
  std::string best_key;
  bool first = true;
  do {
    FinPoset q = relabel(p, perm);
    // column-major bit string
    std::string key;
    for (int v = 0; v < q.size(); ++v)
      for (int u = 0; u < q.size(); ++u) key.push_back(q.leq(u, v) ? '1' : '0');
    if (first || key < best_key) {
      first = false;
      best_key = key;
      best = q;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("partial order validation") {
  CHECK(FinPoset::chain(3).is_partial_order());
  CHECK(FinPoset::antichain(4).is_partial_order());
  CHECK_THROWS_AS(FinPoset::from_pairs(2, {{0, 1}, {1, 0}}), OrderError);   // antisymmetry
  CHECK_THROWS_AS(FinPoset::from_pairs(3, {{0, 1}, {1, 2}}), OrderError);   // transitivity
  CHECK_NOTHROW(FinPoset::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("canonical form matches the stated examples") {
  // 2-element poset with 1<=0 canonicalizes to the 2-chain with 0<=1
  FinPoset rev = FinPoset::from_pairs(2, {{1, 0}});
  Canonicalization c = canonical_form(rev);
  CHECK(c.canon.poset == FinPoset::chain(2));
  CHECK(c.iso.values == std::vector<int>{1, 0});

  // a 3-element antichain is its own canonical form
  Canonicalization a = canonical_form(FinPoset::antichain(3));
  CHECK(a.canon.poset == FinPoset::antichain(3));
  CHECK(a.iso.values == std::vector<int>{0, 1, 2});

  // the V poset and its relabeling canonicalize identically
  FinPoset v1 = FinPoset::from_pairs(3, {{0, 2}, {1, 2}});
  FinPoset v2 = FinPoset::from_pairs(3, {{1, 0}, {2, 0}});
  CHECK(canonical_form(v1).canon == canonical_form(v2).canon);
  CHECK(canonical_form(v1).canon.poset == v1);  // bottoms first
}

TEST_CASE("canonical form is a class function (brute-force oracle)") {
  for (int sz = 0; sz <= 4; ++sz) {
    for (const auto& p : all_labeled_posets(sz)) {
      FinPoset expect = brute_canonical(p);
      CHECK(canonical_form(p).canon.poset == expect);
      CHECK(is_canonical(expect));
    }
  }
}

TEST_CASE("induced suborder") {
  SUBCASE("empty subset") {
    SubsetEnum se = induced_suborder(FinPoset::chain(3), {});
    CHECK(se.shape.size() == 0);
    CHECK(se.en.values.empty());
  }
  SUBCASE("two comparable points of a chain") {
    SubsetEnum se = induced_suborder(FinPoset::chain(3), {0, 2});
    CHECK(se.shape.poset == FinPoset::chain(2));
    CHECK(se.en.values == std::vector<int>{0, 2});
  }
  SUBCASE("antichain tie-break picks the least host tuple") {
    SubsetEnum se = induced_suborder(FinPoset::antichain(2), {0, 1});
    CHECK(se.shape.poset == FinPoset::antichain(2));
    CHECK(se.en.values == std::vector<int>{0, 1});
  }
  SUBCASE("en is minimal among all isomorphisms") {
    // V poset, subset of both bottoms plus top
    FinPoset v = FinPoset::from_pairs(3, {{1, 0}, {2, 0}});
    SubsetEnum se = induced_suborder(v, {0, 1, 2});
    CHECK(morphism_checks(se.en) == MapClass::embedding);
    for (const auto& g : automorphisms(se.shape.poset)) {
      std::vector<int> cand(3);
      for (int u = 0; u < 3; ++u) cand[u] = se.en.values[g[u]];
      CHECK(se.en.values <= cand);
    }
  }
  SUBCASE("subset out of range") {
    CHECK_THROWS_AS(induced_suborder(FinPoset::chain(2), {0, 5}), OrderError);
  }
}

TEST_CASE("morphism classification") {
  FinPoset chain2 = FinPoset::chain(2), anti2 = FinPoset::antichain(2);
  CHECK(morphism_checks(identity_map(chain2)) == MapClass::embedding);
  // constant map on the antichain fails reflection on its equal images
  CHECK(morphism_checks(OrderMap{anti2, anti2, {0, 0}}) == MapClass::none);
  // forgetting the chain order reflects but does not preserve
  CHECK(morphism_checks(OrderMap{chain2, anti2, {0, 1}}) == MapClass::quasi_embedding);
  // while the antichain cannot map into the chain at all
  CHECK(enumerate_maps(anti2, chain2, MapClass::quasi_embedding).empty());
  CHECK(enumerate_maps(chain2, anti2, MapClass::quasi_embedding).size() == 2);
  CHECK(enumerate_maps(chain2, anti2, MapClass::embedding).empty());
  CHECK(enumerate_maps(FinPoset(1), FinPoset::chain(3), MapClass::embedding).size() == 3);
}

TEST_CASE("quasi-embeddings are injective up to size 4") {
  for (int sa = 0; sa <= 4; ++sa)
    for (const auto& a : canonical_posets(sa))
      for (int sb = 0; sb <= 4; ++sb)
        for (const auto& b : canonical_posets(sb))
          for (const auto& f : enumerate_maps(a.poset, b.poset, MapClass::quasi_embedding, 4)) {
            std::vector<int> v = f.values;
            std::sort(v.begin(), v.end());
            CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
          }
}

TEST_CASE("pointwise comparison of maps") {
  FinPoset chain3 = FinPoset::chain(3);
  OrderMap f{FinPoset::antichain(2), chain3, {0, 1}};
  OrderMap g{FinPoset::antichain(2), chain3, {1, 2}};
  CHECK(pointwise_leq(f, f));
  CHECK(pointwise_leq(f, g));
  CHECK(!pointwise_leq(g, f));
  OrderMap h{FinPoset::antichain(2), FinPoset::antichain(3), {0, 1}};
  OrderMap k{FinPoset::antichain(2), FinPoset::antichain(3), {1, 2}};
  CHECK(!pointwise_leq(h, k));
  CHECK_THROWS_AS(pointwise_leq(f, h), OrderError);
}

TEST_CASE("higman order") {
  FinPoset anti2 = FinPoset::antichain(2);
  CHECK(higman_leq({}, {0, 1, 0}, anti2));
  CHECK(!higman_leq({0, 1}, {1, 0}, anti2));
  CHECK(higman_leq({0, 1}, {0, 0, 1}, anti2));
  FinPoset chain2 = FinPoset::chain(2);
  CHECK(higman_leq({0}, {1}, chain2));
  CHECK(!higman_leq({1}, {0}, chain2));
}

TEST_CASE("sum and product constructions") {
  SUBCASE("single part is an isomorphic copy") {
    FinPoset s = sum_order({FinPoset::chain(3)});
    CHECK(s == FinPoset::chain(3));
  }
  SUBCASE("chain plus reversed chain") {
    FinPoset s = sum_order({FinPoset::chain(2), FinPoset::chain(2)}, {false, true});
    CHECK(s.leq(0, 1));
    CHECK(s.leq(3, 2));
    CHECK(!s.leq(2, 3));
    CHECK(s.incomparable(0, 2));
  }
  SUBCASE("the Y shape: chain + reversed chain + antichain") {
    FinPoset y = sum_order({FinPoset::chain(3), FinPoset::chain(3), FinPoset::antichain(2)},
                           {false, true, false});
    CHECK(y.size() == 8);
    int comparable = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (i != j && y.leq(i, j)) ++comparable;
    CHECK(comparable == 6);  // three strict pairs in each chain copy
    CHECK(y.leq(0, 2));
    CHECK(y.leq(5, 3));
    CHECK(y.incomparable(6, 7));
    CHECK(y.incomparable(0, 3));
  }
  SUBCASE("product order") {
    FinPoset p = product_order(FinPoset::antichain(2), FinPoset::chain(2));
    CHECK(p.leq(0, 1));
    CHECK(p.leq(2, 3));
    CHECK(p.incomparable(0, 2));
    CHECK(p.incomparable(1, 2));
  }
}

TEST_CASE("poset json round trip and validation") {
  FinPoset v = FinPoset::from_pairs(3, {{0, 2}, {1, 2}});
  FinPoset back = poset_from_json_text(poset_to_json_text(v));
  CHECK(back == v);
  CHECK_THROWS_AS(poset_from_json_text("{\"size\": 2, \"leq\": [[0,1],[1,0]]}"), StructuralError);
  CHECK_THROWS_AS(poset_from_json_text("not json"), StructuralError);
  CHECK_THROWS_AS(poset_from_json_text("{\"size\": 3, \"leq\": [[0,1],[1,2]]}"), StructuralError);
}

TEST_CASE("canonical poset enumeration counts") {
  CHECK(canonical_posets(0).size() == 1);
  CHECK(canonical_posets(1).size() == 1);
  CHECK(canonical_posets(2).size() == 2);
  CHECK(canonical_posets(3).size() == 5);
  CHECK(canonical_posets(4).size() == 16);
  CHECK(canonical_posets(5).size() == 63);
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(
      enumerate_maps(FinPoset::chain(7), FinPoset::chain(7), MapClass::none, 6),
      ResourceError);
}
