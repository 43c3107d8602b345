#include "kfp/dilator.hpp"

#include <numeric>
#include <thread>
#include <tuple>

#include "doctest.h"
#include "json.hpp"
#include "kfp/corpus.hpp"

using namespace kfp;

namespace {

DilElem full_elem(const CodedDilator& d, const CanonicalPoset& shape, int token) {
  std::vector<int> full(shape.size());
  std::iota(full.begin(), full.end(), 0);
  (void)d;
  return DilElem{full, token};
}

}  // namespace

TEST_CASE("built-in traces") {
  Corpus c = make_corpus();
  CHECK(c.seq2.dil.trace().size() == 2);  // <> and <0>
  CHECK(c.seq2.dil.token_index("empty") == 0);
  CHECK(c.seq2.dil.token_index("s0") == 1);
  CHECK(c.seq3.dil.trace().size() == 7);
  CHECK(c.prod1.dil.trace().size() == 1);
  CHECK(c.prod2.dil.trace().size() == 5);
  CHECK(c.wz1.dil.trace().size() == 2);
  CHECK(c.wz2a.dil.trace().size() == 3);  // the isolated point plus one token per z
  CHECK(c.wz2a.one_token >= 0);
  CHECK(c.wz2a.pair_token.size() == 2);
}

TEST_CASE("eval_order cardinalities") {
  Corpus c = make_corpus();
  CHECK(eval_order(c.prod1.dil, FinPoset(1)).elems.size() == 1);
  CHECK(eval_order(c.seq2.dil, FinPoset(1)).elems.size() == 2);
  CHECK(eval_order(c.seq3.dil, FinPoset(1)).elems.size() == 3);   // <>, <x>, <x,x>
  CHECK(eval_order(c.prod2.dil, FinPoset::chain(2)).elems.size() == 4);
  CHECK(eval_order(c.wz2a.dil, FinPoset::chain(2)).elems.size() == 5);
  CHECK_THROWS_AS(eval_order(c.seq2.dil, FinPoset::chain(12)), ResourceError);
}

TEST_CASE("restrict_to_union transport") {
  Corpus c = make_corpus();
  FinPoset chain2 = FinPoset::chain(2);

  SUBCASE("an element against itself restricts to the full shape") {
    DilElem x{{0, 1}, c.prod2.dil.token_index("x01_c2")};
    UnionForm u = restrict_to_union(c.prod2.dil, chain2, x, x);
    CHECK(u.c.poset == chain2);
    CHECK(u.s == std::vector<int>{0, 1});
    CHECK(u.t == u.s);
    CHECK(u.sigma == x.token);
    CHECK(u.tau == x.token);
  }
  SUBCASE("disjoint singletons in a 2-chain") {
    int s0 = c.seq3.dil.token_index("s0");
    UnionForm u = restrict_to_union(c.seq3.dil, chain2, DilElem{{0}, s0}, DilElem{{1}, s0});
    CHECK(u.c.poset == chain2);
    CHECK(u.s == std::vector<int>{0});
    CHECK(u.t == std::vector<int>{1});
  }
  SUBCASE("full-support tokens over the antichain keep full support") {
    FinPoset anti2 = FinPoset::antichain(2);
    DilElem x{{0, 1}, c.prod2.dil.token_index("x01_a2")};
    DilElem y{{0, 1}, c.prod2.dil.token_index("x10_a2")};
    UnionForm u = restrict_to_union(c.prod2.dil, anti2, x, y);
    CHECK(u.c.poset == anti2);
    CHECK(u.s == std::vector<int>{0, 1});
    CHECK(u.t == std::vector<int>{0, 1});
    CHECK(c.prod2.dil.token(u.sigma).shape.poset == anti2);
    CHECK(c.prod2.dil.token(u.tau).shape.poset == anti2);
  }
  SUBCASE("union bound trips on oversized supports") {
    int tok = c.seq2.dil.token_index("s0");
    FinPoset host = FinPoset::antichain(4);
    CHECK_THROWS_AS(
        restrict_to_union(c.seq2.dil, host, DilElem{{0, 1}, tok}, DilElem{{2, 3}, tok}),
        ResourceError);
  }
}

TEST_CASE("leq_W examples") {
  Corpus c = make_corpus();
  FinPoset chain2 = FinPoset::chain(2);
  FinPoset anti2 = FinPoset::antichain(2);
  int s0 = c.seq3.dil.token_index("s0");
  CHECK(leq_W(c.seq3.dil, chain2, DilElem{{0}, s0}, DilElem{{0}, s0}));  // reflexive
  CHECK(leq_W(c.seq3.dil, chain2, DilElem{{0}, s0}, DilElem{{1}, s0}));  // <bottom> <= <top>
  CHECK(!leq_W(c.seq3.dil, chain2, DilElem{{1}, s0}, DilElem{{0}, s0}));
  DilElem ab{{0, 1}, c.prod2.dil.token_index("x01_a2")};
  DilElem ba{{0, 1}, c.prod2.dil.token_index("x10_a2")};
  CHECK(!leq_W(c.prod2.dil, anti2, ab, ba));
  CHECK(!leq_W(c.prod2.dil, anti2, ba, ab));
}

TEST_CASE("apply_map") {
  Corpus c = make_corpus();
  FinPoset chain2 = FinPoset::chain(2);
  FinPoset anti2 = FinPoset::antichain(2);
  DilElem x{{0, 1}, c.prod2.dil.token_index("x01_c2")};

  SUBCASE("identity leaves elements unchanged") {
    CHECK(apply_map(c.prod2.dil, identity_map(chain2), x) == x);
  }
  SUBCASE("forgetting the chain order transports the token to the antichain shape") {
    OrderMap forget{chain2, anti2, {0, 1}};
    DilElem y = apply_map(c.prod2.dil, forget, x);
    CHECK(y.support == std::vector<int>{0, 1});
    CHECK(c.prod2.dil.token(y.token).shape.poset == anti2);
    CHECK(prod_concrete(c.prod2, anti2, y) == prod_concrete(c.prod2, chain2, x));
  }
  SUBCASE("maps that do not reflect are rejected") {
    OrderMap bad{anti2, chain2, {0, 1}};
    DilElem a{{0, 1}, c.prod2.dil.token_index("x01_a2")};
    CHECK_THROWS_AS(apply_map(c.prod2.dil, bad, a), OrderError);
  }
  SUBCASE("empty support is untouched") {
    DilElem e{{}, c.seq2.dil.token_index("empty")};
    OrderMap into{FinPoset(1), chain2, {1}};
    DilElem y = apply_map(c.seq2.dil, into, e);
    CHECK(y.support.empty());
    CHECK(y.token == e.token);
  }
}

TEST_CASE("validation of built-ins") {
  Corpus c = make_corpus();
  for (const CodedDilator* d : {&c.seq2.dil, &c.prod2.dil, &c.wz2a.dil}) {
    ValidationReport rep = validate(*d);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("a flipped table entry breaks transitivity with a witness") {
  // rebuild seq:3 as explicit data, then drop the entry that puts <bottom>
  // below <bottom,top> over the 2-chain
  SeqDilator sd = seq_dilator(3);
  std::string json = dilator_to_json_text(sd.dil);
  CodedDilator reloaded = dilator_from_json_text(json);
  CHECK(validate(reloaded).all_pass());

  nlohmann::json j = nlohmann::json::parse(json);
  nlohmann::json table = nlohmann::json::array();
  bool removed = false;
  for (auto& e : j["table"]) {
    bool is_target = e["d"]["size"] == 2 && e["d"]["leq"].size() == 1 &&
                     e["s"] == nlohmann::json::array({0}) && e["sigma"] == "s0" &&
                     e["t"] == nlohmann::json::array({0, 1}) && e["tau"] == "s01_c2";
    if (is_target && !removed) {
      removed = true;
      continue;
    }
    table.push_back(e);
  }
  REQUIRE(removed);
  j["table"] = table;
  CodedDilator rigged = dilator_from_json_text(j.dump());
  ValidationReport rep = validate(rigged);
  CHECK(!rep.all_pass());
  bool transitivity_failed = false;
  for (const auto& ch : rep.checks)
    if (ch.name == "transitivity" && !ch.pass && !ch.witness.empty()) transitivity_failed = true;
  CHECK(transitivity_failed);
}

TEST_CASE("classification flags") {
  Corpus c = make_corpus();
  CHECK(is_normal(c.seq3.dil));
  CHECK(is_monotone(c.prod2.dil).monotone);
  CHECK(is_monotone(c.seq3.dil).monotone);
  CHECK(is_unary(c.seq2.dil));
  CHECK(is_unary(c.wz2a.dil));
  CHECK(!is_unary(c.prod2.dil));
  CHECK(!is_unary(c.seq3.dil));
  CHECK(is_normal(constant_chain2_dilator()));  // vacuously beyond its own chain

  CodedDilator rev = reversed_identity_dilator();
  CHECK(!is_normal(rev));
  MonotonicityResult mono = is_monotone(rev);
  CHECK(!mono.monotone);
  REQUIRE(mono.witness.has_value());
  CHECK(unary_wpo_decision(rev) == false);
  CHECK(unary_wpo_decision(wz_dilator(FinPoset(1)).dil) == true);
  CHECK(unary_wpo_decision(constant_chain2_dilator()) == true);
  CHECK_THROWS_AS(unary_wpo_decision(c.prod2.dil), OrderError);
}

TEST_CASE("prime transform") {
  ProdDilator prod1 = product_dilator(1);
  PrimeDilator pd = prime_transform(prod1.dil);
  CHECK(pd.dil.n_max() == 3);
  CHECK(pd.dil.token(pd.star_token).id == "star");
  CHECK(pd.dil.token(pd.plus_token).id == "plus");

  EvalOrder one = eval_order(pd.dil, FinPoset(1));
  REQUIRE(one.elems.size() == 2);
  CHECK(one.order.leq(0, 0));
  CHECK(!one.order.leq(0, 1));
  CHECK(!one.order.leq(1, 0));

  ValidationReport rep = validate(pd.dil);
  CHECK(rep.all_pass());
  CHECK(is_normal(pd.dil));

  // resource bound
  CHECK_THROWS_AS(prime_transform(pd.dil, 4), ResourceError);
}

TEST_CASE("prod_embed coordinates") {
  Corpus c = make_corpus();
  FinPoset chain2 = FinPoset::chain(2);

  SUBCASE("empty support pads every coordinate with the trace tag") {
    DilElem e{{}, c.seq2.dil.token_index("empty")};
    auto coords = prod_embed(c.seq2.dil, chain2, e);
    REQUIRE(coords.size() == 2);  // n_max + 1
    for (int v : coords) CHECK(v == e.token);
  }
  SUBCASE("full support lists the support then the tag") {
    DilElem x{{0, 1}, c.prod2.dil.token_index("x01_c2")};
    auto coords = prod_embed(c.prod2.dil, chain2, x);
    int ntok = static_cast<int>(c.prod2.dil.trace().size());
    REQUIRE(coords.size() == 3);
    CHECK(coords[0] == ntok + 0);
    CHECK(coords[1] == ntok + 1);
    CHECK(coords[2] == x.token);
  }
  SUBCASE("componentwise domination reflects leq_W") {
    EvalOrder ev = eval_order(c.prod2.dil, chain2);
    FinPoset target = prod_embed_target(c.prod2.dil, chain2);
    for (size_t i = 0; i < ev.elems.size(); ++i)
      for (size_t j = 0; j < ev.elems.size(); ++j) {
        auto a = prod_embed(c.prod2.dil, chain2, ev.elems[i]);
        auto b = prod_embed(c.prod2.dil, chain2, ev.elems[j]);
        bool dom = true;
        for (size_t k = 0; k < a.size(); ++k)
          if (!target.leq(a[k], b[k])) dom = false;
        if (dom) CHECK(ev.order.leq(static_cast<int>(i), static_cast<int>(j)));
      }
  }
}

TEST_CASE("coded data structural errors") {
  DilatorData data;
  data.n_max = 1;
  data.trace.push_back(TraceToken{CanonicalPoset{FinPoset(1)}, "u"});
  SUBCASE("missing action entry") {
    CHECK_THROWS_AS(make_coded_dilator(data), StructuralError);
  }
  data.action.push_back(DilatorData::ActionEntry{identity_map(FinPoset(1)), 0, 0});
  SUBCASE("valid minimal dilator") { CHECK_NOTHROW(make_coded_dilator(data)); }
  SUBCASE("duplicate token id") {
    data.trace.push_back(TraceToken{CanonicalPoset{FinPoset(1)}, "u"});
    CHECK_THROWS_AS(make_coded_dilator(data), StructuralError);
  }
  SUBCASE("non-canonical table key") {
    DilatorData::TableEntry e;
    e.d = CanonicalPoset{FinPoset::from_pairs(2, {{1, 0}})};
    e.s = {0};
    e.sigma = 0;
    e.t = {1};
    e.tau = 0;
    e.leq = true;
    data.table.push_back(e);
    CHECK_THROWS_AS(make_coded_dilator(data), StructuralError);
  }
  SUBCASE("non-covering table key") {
    DilatorData::TableEntry e;
    e.d = CanonicalPoset{FinPoset::antichain(2)};
    e.s = {0};
    e.sigma = 0;
    e.t = {0};
    e.tau = 0;
    e.leq = true;
    data.table.push_back(e);
    CHECK_THROWS_AS(make_coded_dilator(data), StructuralError);
  }
}

TEST_CASE("dilator json round trip") {
  WzDilator wd = wz_dilator(FinPoset::antichain(2));
  CodedDilator back = dilator_from_json_text(dilator_to_json_text(wd.dil));
  CHECK(back.trace().size() == wd.dil.trace().size());
  FinPoset chain2 = FinPoset::chain(2);
  EvalOrder a = eval_order(wd.dil, chain2);
  EvalOrder b = eval_order(back, chain2);
  REQUIRE(a.elems.size() == b.elems.size());
  for (size_t i = 0; i < a.elems.size(); ++i)
    for (size_t j = 0; j < a.elems.size(); ++j)
      CHECK(a.order.leq(static_cast<int>(i), static_cast<int>(j)) ==
            b.order.leq(static_cast<int>(i), static_cast<int>(j)));
}

TEST_CASE("element grammar") {
  Corpus c = make_corpus();
  DilElem x{{0, 1}, c.prod2.dil.token_index("x01_c2")};
  std::string s = elem_to_string(c.prod2.dil, x);
  CHECK(s == "x01_c2@{0,1}");
  CHECK(elem_parse(c.prod2.dil, s) == x);
  CHECK_THROWS_AS(elem_parse(c.prod2.dil, "nosuch@{0}"), ParseError);
}

TEST_CASE("oracle agreement extends to 4-element hosts") {
  Corpus c = make_corpus();
  for (const auto& host : all_labeled_posets(4)) {
    EvalOrder seq = eval_order(c.seq3.dil, host);
    for (size_t i = 0; i < seq.elems.size(); ++i)
      for (size_t j = 0; j < seq.elems.size(); ++j)
        CHECK(seq.order.leq(static_cast<int>(i), static_cast<int>(j)) ==
              higman_leq(seq_concrete(c.seq3, host, seq.elems[i]),
                         seq_concrete(c.seq3, host, seq.elems[j]), host));
  }
}

TEST_CASE("prime order agrees with the componentwise reading") {
  ProdDilator base = product_dilator(1);
  PrimeDilator pd = prime_transform(base.dil);
  for (int sz = 0; sz <= 3; ++sz) {
    for (const auto& host : all_labeled_posets(sz)) {
      EvalOrder ev = eval_order(pd.dil, host);
      auto realize = [&](const DilElem& e) {
        // (x, y, inner) placed into the host along the subset enumeration
        const auto& info = pd.info(e.token);
        SubsetEnum se = induced_suborder(host, e.support);
        DilElem inner = apply_map(base.dil, se.en, info->inner);
        return std::tuple<int, int, int>(se.en.values[info->x], se.en.values[info->y],
                                         prod_concrete(base, host, inner)[0]);
      };
      for (size_t i = 0; i < ev.elems.size(); ++i)
        for (size_t j = 0; j < ev.elems.size(); ++j) {
          bool coded = ev.order.leq(static_cast<int>(i), static_cast<int>(j));
          const auto& a = pd.info(ev.elems[i].token);
          const auto& b = pd.info(ev.elems[j].token);
          bool direct;
          if (!a.has_value() || !b.has_value()) {
            direct = ev.elems[i].token == ev.elems[j].token;
          } else {
            auto [x1, y1, s1] = realize(ev.elems[i]);
            auto [x2, y2, s2] = realize(ev.elems[j]);
            direct = host.leq(x1, x2) && host.leq(y1, y2) && host.leq(s1, s2);
          }
          CHECK(coded == direct);
        }
    }
  }
}

TEST_CASE("concurrent use of a shared dilator") {
  PrimeDilator pd = prime_transform(seq_dilator(2).dil);
  FinPoset host = FinPoset::chain(3);
  EvalOrder reference = eval_order(pd.dil, host);
  std::vector<std::thread> workers;
  std::vector<int> mismatches(4, 0);
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      EvalOrder mine = eval_order(pd.dil, host);
      for (size_t i = 0; i < mine.elems.size(); ++i)
        for (size_t j = 0; j < mine.elems.size(); ++j)
          if (mine.order.leq(static_cast<int>(i), static_cast<int>(j)) !=
              reference.order.leq(static_cast<int>(i), static_cast<int>(j)))
            ++mismatches[w];
    });
  for (auto& t : workers) t.join();
  for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("resolve_dilator specs") {
  CHECK(resolve_dilator("seq:2").trace().size() == 2);
  CHECK(resolve_dilator("prod:2").trace().size() == 5);
  CHECK(resolve_dilator("wz:chain:2").trace().size() == 3);
  CHECK(resolve_dilator("prime:prod:1").token_index("star") == 0);
  CHECK_THROWS_AS(resolve_dilator("/nonexistent/file.json"), StructuralError);
}
