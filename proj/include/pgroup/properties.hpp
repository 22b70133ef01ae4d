#pragma once

#include <map>
#include <string>

#include "pgroup/enumeration.hpp"
#include "pgroup/quotient.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

enum class TriState { True, False, Skipped };
std::string to_string(TriState t);

/// Cost limits shared by the predicate layer. The tri-state predicates go to
/// Skipped instead of blowing past a cap; everything else throws CapExceeded.
struct Caps {
  uint64_t enum_cap = 59049;     // 3^10: full-enumeration bound
  uint64_t iso_cap = 243;        // 3^5: isomorphism search bound
  uint64_t section_cap = 243;    // 3^5: P1/P2 section sweep bound
  uint64_t pair_cap = 243;       // exhaustive (a,b) sweeps up to this order
  uint64_t sample_pairs = 20000; // sampled pairs beyond pair_cap
  uint64_t seed = 20260801;
};

/// [H,H] <= agemo_1(H), with agemo_2 in place of agemo_1 when p = 2.
bool is_powerful(const Subgroup& h, uint64_t enum_cap);
bool is_powerful(const PcPresentation& g, uint64_t enum_cap);

/// gamma_{p-1}(H) <= agemo_1(H) for p >= 5; coincides with powerful for
/// p in {2, 3}.
bool is_potent(const Subgroup& h, uint64_t enum_cap);
bool is_potent(const PcPresentation& g, uint64_t enum_cap);

/// Hall regularity via the n = 1 criterion: for all a, b,
/// (ab)^p lies in a^p b^p * agemo_1([T,T]) with T = <a,b>. Exhaustive for
/// |G| <= pair_cap, Skipped above it.
TriState is_regular(const PcPresentation& g, const Caps& caps);

/// Every subgroup of index p^i is powerful (early exit on a witness).
bool is_Mi(const PcPresentation& g, int i, uint64_t enum_cap);

/// Condition (1): the p^i-th powers already form the subgroup agemo_i.
bool cond_power(EnumeratedGroup& e, int i);
/// Condition (2): the elements of order <= p^i already form omega_i.
bool cond_omega(EnumeratedGroup& e, int i);
/// Condition (3): |G : agemo_i| = |omega_i|.
bool cond_index(EnumeratedGroup& e, int i);
bool cond_power(const PcPresentation& g, int i, uint64_t enum_cap);
bool cond_omega(const PcPresentation& g, int i, uint64_t enum_cap);
bool cond_index(const PcPresentation& g, int i, uint64_t enum_cap);
/// All three conditions at every level 1 <= i <= e (p^e the exponent).
bool regular_power_structure(const PcPresentation& g, uint64_t enum_cap);

/// P1/P2: condition (1)/(2) at i = 1 for G and all its sections H/N.
TriState is_P1(const PcPresentation& g, const Caps& caps);
TriState is_P2(const PcPresentation& g, const Caps& caps);

/// (xy)^{p^n} = x^{p^n} y^{p^n} modulo
/// agemo_n(gamma_2(T)) agemo_{n-1}(gamma_p(T)) ... gamma_{p^n}(T), T = <x,y>.
/// Exhaustive for |G| <= pair_cap, deterministic sampling beyond.
bool hall_congruence_check(const PcPresentation& g, int n, const Caps& caps);

/// Omega_k(G/Omega_m(G)) = Omega_{m+k}(G)/Omega_m(G) (expects G to satisfy
/// condition (2) at all levels).
bool wilson_omega_check(const PcPresentation& g, int m, int k, uint64_t enum_cap);

/// |agemo_1(G)| is |agemo_1(M)| or p * |agemo_1(M)| for a maximal M.
bool agemo_ratio_check(const PcPresentation& g, const Subgroup& maximal, uint64_t enum_cap);

struct ConditionTriple {
  int level = 0;
  bool power = false;
  bool omega = false;
  bool index = false;
};

/// The evaluated predicate/invariant bundle for one group.
struct PropertyReport {
  std::string id;
  int prime = 0;
  int order_exp = 0;
  int d = 0;
  int nilpotency_class = 0;
  int exponent_exp = 0;
  bool powerful = false;
  bool potent = false;
  TriState regular = TriState::Skipped;
  std::map<int, bool> m_levels;
  std::vector<ConditionTriple> conditions;
  TriState p1 = TriState::Skipped;
  TriState p2 = TriState::Skipped;
  double wall_ms = 0.0;

  std::string json_line() const;
  static std::string csv_header();
  std::string csv_line() const;
};

/// Evaluates the full bundle. m_levels are computed for 1 <= i <= max_m_level.
PropertyReport build_report(const std::string& id, const PcPresentation& g, const Caps& caps,
                            int max_m_level = 2);

}  // namespace pgroup
