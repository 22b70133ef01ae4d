#pragma once

#include <cstdint>
#include <vector>

#include "pgroup/subgroup.hpp"

namespace pgroup {

/// Dense bitset over element ranks; the set-closure representation.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(uint64_t universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

  bool test(uint64_t r) const { return (bits_[r >> 6] >> (r & 63)) & 1; }
  bool insert(uint64_t r) {
    uint64_t& w = bits_[r >> 6];
    uint64_t m = uint64_t(1) << (r & 63);
    if (w & m) return false;
    w |= m;
    ++count_;
    return true;
  }
  uint64_t count() const { return count_; }
  uint64_t universe() const { return n_; }
  std::vector<uint64_t> members() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  uint64_t n_ = 0;
  uint64_t count_ = 0;
  std::vector<uint64_t> bits_;
};

/// Fully enumerated group: rank <-> exponent-vector tables, element orders,
/// p-th power map. The backbone of the brute-force oracles and of the
/// whole-group predicates. Construction costs O(|G|) collections.
class EnumeratedGroup {
 public:
  EnumeratedGroup(const PcPresentation& pc, uint64_t cap);

  const PcPresentation& presentation() const { return *pc_; }
  uint64_t size() const { return size_; }
  int prime() const { return pc_->prime(); }

  const ExpVec& vec(uint64_t r) const { return vecs_[r]; }
  uint64_t rank(const ExpVec& v) const { return vec_rank(v, pc_->prime()); }

  uint64_t mul(uint64_t a, uint64_t b);
  uint64_t inv(uint64_t a);
  uint64_t pth_power(uint64_t a) const { return pow_p_[a]; }
  /// Order exponent: k with o(x) = p^k.
  int order_exp(uint64_t a) const { return order_exp_[a]; }
  uint64_t max_order() const;

  /// x^(p^k) via the cached p-th power map.
  uint64_t power_pk(uint64_t a, int k) const;

  /// Ranks of the raw sets before subgroup closure.
  ElementSet order_set(int k) const;   // o(x) <= p^k
  ElementSet power_set(int k) const;   // { x^(p^k) }

  ElementSet set_of(const Subgroup& h) const;

  /// Set-closure span: BFS products, independent of the IGS sifting route.
  ElementSet closure(const std::vector<uint64_t>& gens);

 private:
  const PcPresentation* pc_;
  Collector col_;
  uint64_t size_;
  std::vector<ExpVec> vecs_;
  std::vector<uint64_t> pow_p_;
  std::vector<uint8_t> order_exp_;
};

}  // namespace pgroup
