#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pgroup/isomorphism.hpp"
#include "pgroup/quotient.hpp"
#include "support/fixtures.hpp"

using namespace pgroup;

namespace {

const uint64_t kCap = 59049;

ExpVec gen(const PcPresentation& pc, int i) {
  ExpVec v(pc.ngens(), 0);
  v[i - 1] = 1;
  return v;
}

}  // namespace

TEST_CASE("quotients of the example group") {
  PcPresentation j = fixtures::j_group();

  QuotientMap q1 = quotient(j, omega(j, 1, kCap));
  CHECK(q1.target().order() == 9);

  QuotientMap q2 = quotient(j, agemo(j, 1, kCap));
  CHECK(q2.target().order() == 27);
  CHECK(exponent(q2.target(), kCap) == 3);  // G/U1 is 2-generator of exponent 3
  CHECK(is_isomorphic(q2.target(), *fixtures::get("B23"), kCap));

  QuotientMap q3 = quotient(j, span(j, {}));
  CHECK(q3.target().order() == 81);
  CHECK(is_isomorphic(q3.target(), j, kCap));

  CHECK_THROWS_AS(quotient(j, span(j, {gen(j, 2)})), std::invalid_argument);  // not normal
}

TEST_CASE("projection is a homomorphism (exhaustive at order 81)") {
  PcPresentation j = fixtures::j_group();
  QuotientMap q = quotient(j, omega(j, 1, kCap));
  Collector cj(j);
  Collector ct(q.target());
  std::vector<ExpVec> elems;
  enumerate_elements(j, kCap, [&](const ExpVec& v) { elems.push_back(v); });
  for (const ExpVec& x : elems)
    for (const ExpVec& y : elems) {
      if (ct.multiply(q.project(x), q.project(y)) != q.project(cj.multiply(x, y)))
        FAIL("projection not multiplicative at ", Element(j, x).str(), " * ", Element(j, y).str());
    }
  CHECK(true);
}

TEST_CASE("kernel of the projection is exactly the kernel subgroup") {
  PcPresentation j = fixtures::j_group();
  Subgroup n = omega(j, 1, kCap);
  QuotientMap q = quotient(j, n);
  uint64_t kernel_count = 0;
  enumerate_elements(j, kCap, [&](const ExpVec& x) {
    bool proj_trivial = vec_depth(q.project(x)) > q.target().ngens();
    if (proj_trivial) ++kernel_count;
    CHECK(proj_trivial == n.contains(x));
  });
  CHECK(kernel_count == n.order());
}

TEST_CASE("agemo commutes with quotients") {
  // agemo_n(G/N) is the image of agemo_n(G) N
  PcPresentation j = fixtures::j_group();
  Subgroup n = span(j, {gen(j, 4)});
  QuotientMap q = quotient(j, n);
  Subgroup lhs = agemo(q.target(), 1, kCap);
  Subgroup ag = agemo(j, 1, kCap);
  std::vector<ExpVec> img;
  for (const ExpVec& r : ag.igs()) img.push_back(q.project(r));
  for (const ExpVec& r : n.igs()) img.push_back(q.project(r));
  CHECK(lhs == span(q.target(), img));
}

TEST_CASE("isomorphism: maximal subgroups of the example group") {
  PcPresentation j = fixtures::j_group();
  auto c3xc9 = fixtures::get("abelian-3-2.1");
  auto sd27 = fixtures::get("extraspecial-3-exp9");  // <x,y | x^3, y^9, [x,y]=y^3>
  int abelian_count = 0, twisted_count = 0;
  for (const Subgroup& m : maximal_subgroups(j)) {
    PcPresentation mp = subgroup_presentation(m);
    bool ab = is_isomorphic(mp, *c3xc9, kCap);
    bool tw = is_isomorphic(mp, *sd27, kCap);
    CHECK(ab != tw);
    abelian_count += ab;
    twisted_count += tw;
  }
  CHECK(abelian_count == 1);
  CHECK(twisted_count == 3);
}

TEST_CASE("isomorphism distinguishes groups with equal orders") {
  CHECK(!is_isomorphic(*fixtures::get("cyclic-3-2"), *fixtures::get("abelian-3-1.1"), kCap));
  CHECK(!is_isomorphic(*fixtures::get("B23"), *fixtures::get("extraspecial-3-exp9"), kCap));
  CHECK(!is_isomorphic(*fixtures::get("dihedral-8"), *fixtures::get("quaternion-8"), kCap));
  CHECK(!is_isomorphic(*fixtures::get("dihedral-16"), *fixtures::get("semidihedral-16"), kCap));
  CHECK(is_isomorphic(*fixtures::get("B23"), *fixtures::get("extraspecial-3-exp3"), kCap));
}

TEST_CASE("isomorphism is reflexive and symmetric on a mixed list") {
  std::vector<PcpPtr> groups = {
      std::make_shared<PcPresentation>(fixtures::j_group()),
      fixtures::get("B23"),
      fixtures::get("extraspecial-3-exp9"),
      fixtures::get("abelian-3-2.1"),
      fixtures::get("dihedral-16"),
      fixtures::get("semidihedral-16"),
      fixtures::get("quaternion-16"),
      fixtures::get("abelian-2-2.1.1"),
  };
  for (size_t a = 0; a < groups.size(); ++a) {
    CHECK(is_isomorphic(*groups[a], *groups[a], kCap));
    for (size_t b = a + 1; b < groups.size(); ++b) {
      CHECK(is_isomorphic(*groups[a], *groups[b], kCap) ==
            is_isomorphic(*groups[b], *groups[a], kCap));
    }
  }
}

TEST_CASE("isomorphism respects relabelled presentations") {
  // J with its two central generators constructed in a different basis:
  // swap the roles by using a4' = a4^2.
  PcPresentation j = fixtures::j_group();
  PcPresentation j2 = fixtures::parse(
      "p 3\nngens 4\npower 1 : 4^2\npower 2 : 4^1\ncomm 2 1 : 3^1\ncomm 3 1 : 4^2\n");
  REQUIRE(check_consistency(j2).consistent);
  CHECK(is_isomorphic(j, j2, kCap));
}

TEST_CASE("fingerprints separate the order-16 2-groups") {
  std::vector<PcpPtr> groups = {
      fixtures::get("dihedral-16"),
      fixtures::get("semidihedral-16"),
      fixtures::get("quaternion-16"),
      fixtures::get("cyclic-2-4"),
      fixtures::get("abelian-2-3.1"),
      fixtures::get("abelian-2-2.2"),
      fixtures::get("abelian-2-2.1.1"),
      fixtures::get("abelian-2-1.1.1.1"),
  };
  std::set<std::string> keys;
  for (const PcpPtr& g : groups) keys.insert(fingerprint(*g, kCap).key());
  CHECK(keys.size() == groups.size());
}

TEST_CASE("Fitting bound on pairs of normal subgroups") {
  PcPresentation j = fixtures::j_group();
  auto cls = [&](const Subgroup& s) {
    if (s.is_trivial()) return 0;
    PcPresentation sp = subgroup_presentation(s);
    return nilpotency_class(sp);
  };
  std::vector<Subgroup> normals;
  for (const Subgroup& m : maximal_subgroups(j)) normals.push_back(m);
  normals.push_back(omega(j, 1, kCap));
  normals.push_back(agemo(j, 1, kCap));
  normals.push_back(derived_subgroup(j));
  for (const Subgroup& a : normals)
    for (const Subgroup& b : normals) {
      std::vector<ExpVec> gens = a.igs();
      gens.insert(gens.end(), b.igs().begin(), b.igs().end());
      Subgroup prod = span(j, gens);
      CHECK(cls(prod) <= cls(a) + cls(b));
    }
}
