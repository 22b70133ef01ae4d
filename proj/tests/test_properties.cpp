#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgroup/isomorphism.hpp"
#include "pgroup/properties.hpp"
#include "support/fixtures.hpp"

using namespace pgroup;

namespace {

const uint64_t kCap = 59049;
Caps caps() { return Caps{}; }

}  // namespace

TEST_CASE("powerful: maximal subgroups of the example group, Q8, abelian") {
  PcPresentation j = fixtures::j_group();
  for (const Subgroup& m : maximal_subgroups(j)) CHECK(is_powerful(m, kCap));
  CHECK(!is_powerful(j, kCap));  // [J,J] has order 9, agemo_1 order 3
  CHECK(!is_powerful(*fixtures::get("quaternion-8"), kCap));
  CHECK(!is_powerful(*fixtures::get("dihedral-8"), kCap));
  CHECK(is_powerful(*fixtures::get("abelian-3-2.1"), kCap));
  CHECK(is_powerful(*fixtures::get("abelian-2-2.1"), kCap));
  CHECK(is_powerful(*fixtures::get("extraspecial-3-exp9"), kCap));
}

TEST_CASE("potent: delegation for p <= 3, gamma_{p-1} for p >= 5") {
  CHECK(!is_potent(fixtures::j_group(), kCap));
  // class-2 5-group: gamma_4 = 1
  CHECK(is_potent(*fixtures::get("extraspecial-5-exp5"), kCap));
  CHECK(!is_powerful(*fixtures::get("extraspecial-5-exp5"), kCap));  // U1 trivial, [G,G] not
  // powerful 5-group is potent
  auto es25 = fixtures::get("extraspecial-5-exp25");
  CHECK(is_powerful(*es25, kCap));
  CHECK(is_potent(*es25, kCap));
}

TEST_CASE("regular: exponent-p and class < p groups; the example group is not") {
  CHECK(is_regular(*fixtures::get("B23"), caps()) == TriState::True);
  CHECK(is_regular(*fixtures::get("extraspecial-3-exp9"), caps()) == TriState::True);  // class 2 < 3
  CHECK(is_regular(*fixtures::get("abelian-3-2.1"), caps()) == TriState::True);
  CHECK(is_regular(fixtures::j_group(), caps()) == TriState::False);
  CHECK(is_regular(*fixtures::get("dihedral-8"), caps()) == TriState::False);
  Caps tiny = caps();
  tiny.pair_cap = 10;
  CHECK(is_regular(fixtures::j_group(), tiny) == TriState::Skipped);
}

TEST_CASE("M_i levels") {
  PcPresentation j = fixtures::j_group();
  CHECK(is_Mi(j, 1, kCap));
  CHECK(is_Mi(j, 2, kCap));  // subgroups of order 9 are abelian
  CHECK(is_Mi(*fixtures::get("abelian-3-1.1.1"), 1, kCap));
  CHECK(is_Mi(*fixtures::get("abelian-3-1.1.1"), 2, kCap));
  CHECK(!is_Mi(*fixtures::get("dihedral-16"), 1, kCap));  // D8 maximal subgroup
}

TEST_CASE("the three power-structure conditions on the example group") {
  PcPresentation j = fixtures::j_group();
  EnumeratedGroup e(j, kCap);
  CHECK(!cond_index(e, 1));
  CHECK(agemo(j, 1, kCap).order() * omega(j, 1, kCap).order() == 27);  // 27 != 81
  for (int i = 1; i <= 2; ++i) {
    CHECK(cond_power(e, i));
    CHECK(cond_omega(e, i));
  }
  CHECK(cond_index(e, 2));
  CHECK(!regular_power_structure(j, kCap));

  for (const char* name : {"abelian-3-2.1", "abelian-2-3.1", "cyclic-5-2"}) {
    auto g = fixtures::get(name);
    CHECK(regular_power_structure(*g, kCap));
  }
}

TEST_CASE("P1/P2 on small groups") {
  CHECK(is_P2(*fixtures::get("B23"), caps()) == TriState::True);  // class 2, p odd
  CHECK(is_P1(*fixtures::get("B23"), caps()) == TriState::True);
  CHECK(is_P1(*fixtures::get("cyclic-3-1"), caps()) == TriState::True);
  CHECK(is_P2(*fixtures::get("cyclic-3-1"), caps()) == TriState::True);
  CHECK(is_P2(*fixtures::get("extraspecial-3-exp9"), caps()) == TriState::True);
  Caps tiny = caps();
  tiny.section_cap = 9;
  CHECK(is_P1(fixtures::j_group(), tiny) == TriState::Skipped);
}

TEST_CASE("P2 implies P1 on a small sweep") {
  for (const char* name :
       {"B23", "extraspecial-3-exp9", "abelian-3-2.1", "cyclic-3-3", "abelian-5-1.1"}) {
    auto g = fixtures::get(name);
    if (is_P2(*g, caps()) == TriState::True) CHECK(is_P1(*g, caps()) == TriState::True);
  }
}

TEST_CASE("Hall power congruence") {
  CHECK(hall_congruence_check(*fixtures::get("abelian-3-2.1"), 1, caps()));
  CHECK(hall_congruence_check(*fixtures::get("abelian-3-2.1"), 2, caps()));
  CHECK(hall_congruence_check(fixtures::j_group(), 1, caps()));
  CHECK(hall_congruence_check(*fixtures::get("extraspecial-3-exp9"), 1, caps()));
  CHECK(hall_congruence_check(*fixtures::get("dihedral-16"), 1, caps()));
  CHECK(hall_congruence_check(fixtures::j_group(), 2, caps()));
}

TEST_CASE("Wilson omega identity in quotients") {
  PcPresentation j = fixtures::j_group();
  CHECK(wilson_omega_check(j, 1, 1, kCap));  // exp(J)=9 so Omega_2(J)=J
  auto ab = fixtures::get("abelian-3-2.1");
  for (int m = 1; m <= 2; ++m)
    for (int k = 1; k <= 2; ++k) CHECK(wilson_omega_check(*ab, m, k, kCap));
  CHECK(wilson_omega_check(*fixtures::get("extraspecial-3-exp9"), 1, 1, kCap));
}

TEST_CASE("agemo ratio dichotomy for maximal subgroups") {
  PcPresentation j = fixtures::j_group();
  for (const Subgroup& m : maximal_subgroups(j)) CHECK(agemo_ratio_check(j, m, kCap));
  auto ab = fixtures::get("abelian-3-2.1");
  for (const Subgroup& m : maximal_subgroups(*ab)) CHECK(agemo_ratio_check(*ab, m, kCap));
}

TEST_CASE("M_1 consequences on the example group") {
  PcPresentation j = fixtures::j_group();
  EnumeratedGroup e(j, kCap);
  // exp Omega_i <= p^i
  for (int i = 1; i <= 2; ++i) {
    Subgroup om = omega(j, i, kCap);
    uint64_t bound = 1;
    for (int t = 0; t < i; ++t) bound *= 3;
    CHECK(exponent_of(om, kCap) <= bound);
  }
  // agemo_1 of an M_1 group is powerful
  Subgroup ag = agemo(j, 1, kCap);
  CHECK(is_powerful(ag, kCap));
}

TEST_CASE("powerful group identities (odd p)") {
  // [agemo_k(G), G] <= agemo_{k+1}(G); gamma_k <= agemo_{k-1};
  // agemo_j(agemo_k) = agemo_{j+k}; agemo_1 = <generator p-th powers>
  for (const char* name : {"extraspecial-3-exp9", "abelian-3-2.1", "cyclic-3-3",
                           "extraspecial-5-exp25"}) {
    auto g = fixtures::get(name);
    REQUIRE(is_powerful(*g, kCap));
    int e = 0;
    for (uint64_t o = exponent(*g, kCap); o > 1; o /= uint64_t(g->prime())) ++e;
    Subgroup whole = whole_group(*g);
    for (int k = 0; k <= e; ++k) {
      Subgroup ak = k == 0 ? whole : agemo(*g, k, kCap);
      Subgroup bracket = commutator_subgroup(ak, whole);
      CHECK(agemo(*g, k + 1, kCap).contains(bracket));
    }
    auto series = lower_central_series(*g);
    for (size_t k = 2; k <= series.size(); ++k)
      CHECK(agemo(*g, int(k) - 1, kCap).contains(series[k - 1]));
    for (int kk = 1; kk + 1 <= e; ++kk) {
      Subgroup inner = agemo(*g, kk, kCap);
      CHECK(agemo_of(inner, 1, kCap) == agemo(*g, kk + 1, kCap));
    }
    // Prop: U1(G) = <a_1^p, ..., a_r^p> for powerful G
    Collector col(*g);
    std::vector<ExpVec> pows;
    for (int i = 1; i <= g->ngens(); ++i) pows.push_back(col.power(col.generator(i), g->prime()));
    CHECK(span(*g, pows) == agemo(*g, 1, kCap));
  }
}

TEST_CASE("powerful implies potent; class < p implies regular (instances)") {
  for (const char* name : {"abelian-3-2.1", "extraspecial-3-exp9", "extraspecial-5-exp25",
                           "cyclic-7-2", "abelian-7-1.1"}) {
    auto g = fixtures::get(name);
    if (is_powerful(*g, kCap)) CHECK(is_potent(*g, kCap));
    if (nilpotency_class(*g) < g->prime()) CHECK(is_regular(*g, caps()) == TriState::True);
  }
}

TEST_CASE("full property report for the example group") {
  PropertyReport r = build_report("builtin:J", fixtures::j_group(), caps(), 2);
  CHECK(r.prime == 3);
  CHECK(r.order_exp == 4);
  CHECK(r.d == 2);
  CHECK(r.nilpotency_class == 3);
  CHECK(r.exponent_exp == 2);
  CHECK(!r.powerful);
  CHECK(!r.potent);
  CHECK(r.regular == TriState::False);
  CHECK(r.m_levels.at(1));
  CHECK(r.m_levels.at(2));
  REQUIRE(r.conditions.size() == 2);
  CHECK(r.conditions[0].power);
  CHECK(r.conditions[0].omega);
  CHECK(!r.conditions[0].index);
  CHECK(r.conditions[1].index);
  CHECK(r.p2 == TriState::True);  // exp 9, d = 2 M_1 group is a P_2 group
  std::string json = r.json_line();
  CHECK(json.find("\"cond_index\":false") != std::string::npos);
  CHECK(PropertyReport::csv_header().rfind("id,", 0) == 0);
}
