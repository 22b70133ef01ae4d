#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgroup/element.hpp"
#include "pgroup/presentation.hpp"
#include "support/fixtures.hpp"
#include "support/naive_oracle.hpp"

using namespace pgroup;

namespace {

ExpVec ev(std::initializer_list<int> xs) {
  ExpVec v;
  for (int x : xs) v.push_back(uint8_t(x));
  return v;
}

}  // namespace

TEST_CASE("parse the order-81 example presentation") {
  PcPresentation j = fixtures::j_group();
  CHECK(j.prime() == 3);
  CHECK(j.ngens() == 4);
  CHECK(j.power_rhs(1) == Word{{4, 1}});
  CHECK(j.power_rhs(2) == Word{{4, 2}});
  CHECK(j.power_rhs(3).empty());
  CHECK(j.comm_rhs(2, 1) == Word{{3, 1}});
  CHECK(j.comm_rhs(3, 1) == Word{{4, 1}});
  CHECK(j.comm_trivial(4, 3));
  CHECK(j.order() == 81);
}

TEST_CASE("parse the cyclic group of order 3") {
  PcPresentation c3 = fixtures::parse("p 3\nngens 1\npower 1 :\n");
  CHECK(c3.prime() == 3);
  CHECK(c3.ngens() == 1);
  CHECK(c3.order() == 3);
}

TEST_CASE("parse errors carry line/column and reject bad input") {
  CHECK_THROWS_AS(fixtures::parse("p 3\nngens 2\ncomm 2 1 : 1^1\n"), ParseError);  // not weighted
  CHECK_THROWS_AS(fixtures::parse("p 3\nngens 2\npower 1 : 2^3\n"), ParseError);   // exponent range
  CHECK_THROWS_AS(fixtures::parse("p 4\nngens 1\n"), ParseError);                  // prime not prime
  CHECK_THROWS_AS(fixtures::parse("p 3\nngens 2\npower 1 : 2^1 2^1\n"), ParseError);  // not increasing
  CHECK_THROWS_AS(fixtures::parse("p 3\nngens 2\nfoo 1\n"), ParseError);
  try {
    fixtures::parse("p 3\nngens 2\ncomm 2 1 : 1^1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialization round-trips byte-identically") {
  PcPresentation j = fixtures::j_group();
  std::string s = j.serialize();
  PcPresentation again = PcPresentation::parse(s);
  CHECK(again == j);
  CHECK(again.serialize() == s);
}

TEST_CASE("consistency of the example group and an abelian group") {
  CHECK(check_consistency(fixtures::j_group()).consistent);
  PcPresentation ab = fixtures::parse("p 3\nngens 3\n");  // elementary abelian 3^3
  CHECK(check_consistency(ab).consistent);
  CHECK(check_consistency(ab).failures.empty());
}

TEST_CASE("consistency of the example group with [a3,a1] made trivial") {
  // Dropping that relation leaves a central <a3,a4>, which still closes into
  // a consistent class-2 group of order 81 (frozen from the letter-rewriting
  // oracle; re-verified against it here).
  PcPresentation mut = fixtures::parse(
      "p 3\nngens 4\npower 1 : 4^1\npower 2 : 4^2\ncomm 2 1 : 3^1\n");
  CHECK(check_consistency(mut).consistent == true);
  CHECK(oracle::multiplication_table_is_group(mut) == true);
}

TEST_CASE("consistency checker agrees with the multiplication-table probe on mutations") {
  std::vector<std::string> texts = {
      "p 3\nngens 4\npower 1 : 4^1\npower 2 : 4^2\ncomm 2 1 : 3^1\ncomm 3 1 : 4^1\n",  // J
      "p 3\nngens 4\npower 1 : 4^1\npower 2 : 4^2\ncomm 2 1 : 3^1\n",
      "p 3\nngens 4\npower 1 : 4^1\npower 2 : 4^2\ncomm 2 1 : 4^1\ncomm 3 1 : 4^1\n",
      "p 3\nngens 4\npower 1 : 3^1\npower 2 : 4^2\ncomm 2 1 : 3^1\ncomm 3 1 : 4^1\n",
      "p 3\nngens 4\npower 1 : 3^1 4^1\ncomm 2 1 : 3^1\ncomm 4 2 : \n",
      "p 2\nngens 3\npower 2 : 3^1\ncomm 2 1 : 3^1\n",
  };
  for (const std::string& t : texts) {
    PcPresentation pc = fixtures::parse(t);
    CAPTURE(t);
    CHECK(check_consistency(pc).consistent == oracle::multiplication_table_is_group(pc));
  }
}

TEST_CASE("products in the example group") {
  PcPresentation j = fixtures::j_group();
  Element a1 = Element::generator(j, 1), a2 = Element::generator(j, 2);
  // a2 * a1 = a1 a2 [a2,a1] = a1 a2 a3
  CHECK((a2 * a1).exponents() == ev({1, 1, 1, 0}));
  // identity is neutral
  Element id = Element::identity(j);
  CHECK((a2 * id) == a2);
  CHECK((id * a2) == a2);
  // a1^3 = a4
  CHECK((a1 * a1 * a1).exponents() == ev({0, 0, 0, 1}));
  // ambient mismatch
  PcPresentation c3 = fixtures::parse("p 3\nngens 1\n");
  CHECK_THROWS_AS(a1 * Element::generator(c3, 1), std::invalid_argument);
}

TEST_CASE("inverse, power, commutator, conjugate") {
  PcPresentation j = fixtures::j_group();
  Element a1 = Element::generator(j, 1), a2 = Element::generator(j, 2);
  Element a3 = Element::generator(j, 3);
  CHECK(commutator(a2, a1) == a3);
  CHECK(Element::identity(j).inverse() == Element::identity(j));
  CHECK(a2.pow(3).exponents() == ev({0, 0, 0, 2}));
  CHECK((a1 * a1.inverse()) == Element::identity(j));
  CHECK((a2 * a1) == a1 * a2 * commutator(a2, a1));
  CHECK(conjugate(a2, a1) == a1.inverse() * a2 * a1);
  CHECK(a1.pow(-1) == a1.inverse());
}

TEST_CASE("element orders in the example group") {
  PcPresentation j = fixtures::j_group();
  CHECK(Element::generator(j, 1).order() == 9);
  CHECK(Element::generator(j, 3).order() == 3);
  CHECK(Element::identity(j).order() == 1);
}

TEST_CASE("enumeration yields each normal form once, in lexicographic order") {
  PcPresentation j = fixtures::j_group();
  std::vector<ExpVec> all;
  enumerate_elements(j, 1 << 20, [&](const ExpVec& v) { all.push_back(v); });
  CHECK(all.size() == 81);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());

  PcPresentation c3 = fixtures::parse("p 3\nngens 1\n");
  size_t count = 0;
  enumerate_elements(c3, 10, [&](const ExpVec&) { ++count; });
  CHECK(count == 3);

  auto es = fixtures::get("extraspecial-3-exp3");
  count = 0;
  enumerate_elements(*es, 100, [&](const ExpVec&) { ++count; });
  CHECK(count == 27);

  CHECK_THROWS_AS(enumerate_elements(j, 80, [](const ExpVec&) {}), CapExceeded);
}

TEST_CASE("collection agrees with the letter-rewriting oracle, exhaustively") {
  std::vector<PcpPtr> groups = {
      std::make_shared<PcPresentation>(fixtures::j_group()),
      fixtures::get("extraspecial-3-exp9"),
      fixtures::get("dihedral-8"),
      fixtures::get("quaternion-16"),
      fixtures::get("cyclic-3-3"),
      fixtures::get("semidihedral-16"),
  };
  for (const PcpPtr& pc : groups) {
    Collector col(*pc);
    std::vector<ExpVec> elems;
    enumerate_elements(*pc, 100, [&](const ExpVec& v) { elems.push_back(v); });
    for (const ExpVec& x : elems)
      for (const ExpVec& y : elems) {
        CHECK(col.multiply(x, y) == oracle::multiply(*pc, x, y));
      }
    for (const ExpVec& x : elems) CHECK(col.inverse(x) == oracle::inverse(*pc, x));
  }
}

TEST_CASE("associativity, exhaustively at order 81") {
  PcPresentation j = fixtures::j_group();
  Collector col(j);
  std::vector<ExpVec> elems;
  enumerate_elements(j, 100, [&](const ExpVec& v) { elems.push_back(v); });
  for (const ExpVec& x : elems)
    for (const ExpVec& y : elems) {
      ExpVec xy = col.multiply(x, y);
      for (const ExpVec& z : elems) {
        if (col.multiply(xy, z) != col.multiply(x, col.multiply(y, z))) {
          FAIL("associativity violated");
        }
      }
    }
  CHECK(true);
}

TEST_CASE("power and order invariants") {
  PcPresentation j = fixtures::j_group();
  Collector col(j);
  enumerate_elements(j, 100, [&](const ExpVec& x) {
    CHECK(vec_depth(col.power(x, 81)) == 5);  // x^(p^n) = 1
    uint64_t o = col.element_order(x);
    CHECK(81 % o == 0);
    CHECK(vec_depth(col.power(x, (long long)(o))) == 5);
  });
}
