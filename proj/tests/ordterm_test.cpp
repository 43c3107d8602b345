#include "kfp/ordterm.hpp"

#include "doctest.h"

using namespace kfp;

TEST_CASE("ord term construction") {
  CHECK(OrdTerm::nat(3).as_nat() == 3);
  CHECK(OrdTerm::zero(2).is_zero());
  CHECK_NOTHROW(OrdTerm(2, {OrdTerm::nat(2), OrdTerm::nat(2), OrdTerm::nat(0)}));
  CHECK_THROWS_AS(OrdTerm(2, {OrdTerm::nat(1), OrdTerm::nat(2)}), OrderError);  // increasing
  CHECK_THROWS_AS(OrdTerm(2, {OrdTerm::atom()}), OrderError);                   // wrong level
}

TEST_CASE("ord comparison examples") {
  // the empty sequence is the minimum
  for (int n = 0; n <= 3; ++n) CHECK(ord_leq(OrdTerm::zero(1), OrdTerm::nat(n)));
  CHECK(ord_leq(OrdTerm::zero(2), ord_parse("[3 2]", 2)));

  // lexicographic with the prefix rule
  CHECK(ord_cmp(ord_parse("[2 0 0]", 2), ord_parse("[2 1]", 2)) < 0);
  CHECK(ord_cmp(ord_parse("[1 1]", 2), ord_parse("[2]", 2)) < 0);
  CHECK(ord_cmp(ord_parse("[2]", 2), ord_parse("[2 0]", 2)) < 0);  // proper prefix
  CHECK(ord_cmp(ord_parse("[2 1]", 2), ord_parse("[2 1]", 2)) == 0);

  // level-1 terms order as naturals
  CHECK(ord_cmp(OrdTerm::nat(2), OrdTerm::nat(5)) < 0);
  CHECK_THROWS_AS(ord_cmp(OrdTerm::nat(1), OrdTerm::zero(2)), OrderError);
}

TEST_CASE("level 3 comparison") {
  OrdTerm a = ord_parse("[[1] [1]]", 3);
  OrdTerm b = ord_parse("[[2]]", 3);
  CHECK(ord_cmp(a, b) < 0);
  CHECK(ord_cmp(b, a) > 0);
}

TEST_CASE("ord parse and print round trip") {
  for (const char* text : {"[3 1 0]", "[]", "[2 2]"}) {
    OrdTerm t = ord_parse(text, 2);
    CHECK(ord_to_string(t) == text);
  }
  CHECK(ord_to_string(ord_parse("7", 1)) == "7");
  CHECK_THROWS_AS(ord_parse("[1 2]", 2), ParseError);
  CHECK_THROWS_AS(ord_parse("[1", 2), ParseError);
}

TEST_CASE("enumeration is sorted and duplicate-free") {
  auto terms = enumerate_ord_terms(2, 3, 3);
  CHECK(terms.size() == 35);  // non-increasing sequences over {0..3} of length <= 3
  for (size_t i = 0; i + 1 < terms.size(); ++i) CHECK(ord_cmp(terms[i], terms[i + 1]) < 0);
}
