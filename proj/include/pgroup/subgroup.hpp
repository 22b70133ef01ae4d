#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/element.hpp"
#include "pgroup/presentation.hpp"

namespace pgroup {

/// A subgroup of a fixed ambient pc group, stored as a canonical induced
/// generating sequence: rows with strictly increasing leading depth, leading
/// exponent 1, and zero entries at the leading depths of the other rows.
/// Equal subgroups compare byte-identical, so sets of subgroups can be
/// deduplicated on the key() string.
class Subgroup {
 public:
  explicit Subgroup(const PcPresentation& pc);  // trivial subgroup

  const PcPresentation& ambient() const { return *pc_; }
  const std::vector<ExpVec>& igs() const { return rows_; }
  int rank() const { return int(rows_.size()); }
  uint64_t order() const;
  bool is_trivial() const { return rows_.empty(); }
  bool is_whole_group() const { return int(rows_.size()) == pc_->ngens(); }

  bool contains(const ExpVec& x) const;
  bool contains(const Element& x) const;
  bool contains(const Subgroup& other) const;

  /// Byte key of the canonical IGS; equal subgroups have equal keys.
  std::string key() const;

  /// Exponents (e_1..e_m) with x = r_1^{e_1} ... r_m^{e_m}, or nullopt when
  /// x is not a member.
  std::optional<std::vector<int>> express(const ExpVec& x) const;

  /// All p^rank elements, as exponent vectors (no particular order).
  std::vector<ExpVec> elements(uint64_t cap) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.pc_ == b.pc_ && a.rows_ == b.rows_;
  }

  friend Subgroup span(const PcPresentation& pc, const std::vector<ExpVec>& gens);

 private:
  // Sifts x through the rows; returns the (possibly nonzero) remainder.
  ExpVec sift(Collector& col, ExpVec x) const;
  // Inserts the sifted remainder (nonzero) keeping rows sorted by depth.
  void insert_row(Collector& col, ExpVec r);
  void canonicalize(Collector& col);

  const PcPresentation* pc_;
  std::vector<ExpVec> rows_;  // sorted by increasing leading depth
};

/// Smallest subgroup containing the given elements (IGS sifting closure).
Subgroup span(const PcPresentation& pc, const std::vector<ExpVec>& gens);
Subgroup span(const std::vector<Element>& gens, const PcPresentation& pc);
Subgroup whole_group(const PcPresentation& pc);

bool is_normal(const Subgroup& h);
Subgroup normal_closure(const PcPresentation& pc, const std::vector<ExpVec>& gens);

/// Subgroup generated by all [h,k], h in H, k in K, closed under conjugation
/// by the generators of H and K.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

Subgroup derived_subgroup(const PcPresentation& pc);
/// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; the list stops at the trivial term.
std::vector<Subgroup> lower_central_series(const PcPresentation& pc);
int nilpotency_class(const PcPresentation& pc);

Subgroup center(const PcPresentation& pc, uint64_t cap);
Subgroup frattini(const PcPresentation& pc);
Subgroup frattini(const Subgroup& h);
int minimal_generators(const PcPresentation& pc);  // d(G)
int minimal_generators(const Subgroup& h);

uint64_t exponent(const PcPresentation& pc, uint64_t cap);
uint64_t exponent_of(const Subgroup& h, uint64_t cap);

/// Raw sets before closure: order_set = elements of order <= p^k,
/// power_set = p^k-th powers.
std::vector<ExpVec> order_set(const PcPresentation& pc, int k, uint64_t cap);
std::vector<ExpVec> power_set(const PcPresentation& pc, int k, uint64_t cap);

Subgroup omega(const PcPresentation& pc, int k, uint64_t cap);
Subgroup agemo(const PcPresentation& pc, int k, uint64_t cap);
Subgroup omega_of(const Subgroup& h, int k, uint64_t cap);
Subgroup agemo_of(const Subgroup& h, int k, uint64_t cap);

/// The (p^d - 1)/(p - 1) index-p subgroups of h, via hyperplanes of h/Phi(h).
std::vector<Subgroup> maximal_subgroups(const Subgroup& h);
std::vector<Subgroup> maximal_subgroups(const PcPresentation& pc);

/// All subgroups of index p^i, by i-fold maximal descent with canonical-IGS
/// dedup. index_exp = 0 returns {G}.
std::vector<Subgroup> low_index_subgroups(const PcPresentation& pc, int index_exp);

/// All subgroups of h whose index in h is p^i.
std::vector<Subgroup> low_index_subgroups(const Subgroup& h, int index_exp);

/// Pc presentation of h on its IGS rows. Valid because powers and mutual
/// commutators of rows always have strictly larger leading depth.
PcPresentation subgroup_presentation(const Subgroup& h);

}  // namespace pgroup
