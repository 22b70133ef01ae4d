#include "pgroup/enumeration.hpp"

#include <deque>

namespace pgroup {

std::vector<uint64_t> ElementSet::members() const {
  std::vector<uint64_t> out;
  out.reserve(count_);
  for (uint64_t r = 0; r < n_; ++r)
    if (test(r)) out.push_back(r);
  return out;
}

EnumeratedGroup::EnumeratedGroup(const PcPresentation& pc, uint64_t cap)
    : pc_(&pc), col_(pc), size_(0) {
  uint64_t total = 1;
  for (int i = 0; i < pc.ngens(); ++i) {
    if (total > cap / uint64_t(pc.prime()))
      throw CapExceeded("enumeration cap exceeded for group of order p^" +
                        std::to_string(pc.ngens()));
    total *= uint64_t(pc.prime());
  }
  size_ = total;
  vecs_.reserve(size_);
  enumerate_elements(pc, cap, [&](const ExpVec& v) { vecs_.push_back(v); });

  pow_p_.resize(size_);
  for (uint64_t r = 0; r < size_; ++r) pow_p_[r] = rank(col_.power(vecs_[r], pc.prime()));

  order_exp_.assign(size_, 0);
  for (uint64_t r = 0; r < size_; ++r) {
    int k = 0;
    uint64_t z = r;
    while (z != 0) {
      z = pow_p_[z];
      ++k;
    }
    order_exp_[r] = uint8_t(k);
  }
}

uint64_t EnumeratedGroup::mul(uint64_t a, uint64_t b) {
  return rank(col_.multiply(vecs_[a], vecs_[b]));
}

uint64_t EnumeratedGroup::inv(uint64_t a) { return rank(col_.inverse(vecs_[a])); }

uint64_t EnumeratedGroup::max_order() const {
  int k = 0;
  for (uint64_t r = 0; r < size_; ++r) k = std::max(k, int(order_exp_[r]));
  uint64_t o = 1;
  while (k-- > 0) o *= uint64_t(pc_->prime());
  return o;
}

uint64_t EnumeratedGroup::power_pk(uint64_t a, int k) const {
  while (k-- > 0) a = pow_p_[a];
  return a;
}

ElementSet EnumeratedGroup::order_set(int k) const {
  ElementSet s(size_);
  for (uint64_t r = 0; r < size_; ++r)
    if (order_exp_[r] <= k) s.insert(r);
  return s;
}

ElementSet EnumeratedGroup::power_set(int k) const {
  ElementSet s(size_);
  for (uint64_t r = 0; r < size_; ++r) s.insert(power_pk(r, k));
  return s;
}

ElementSet EnumeratedGroup::set_of(const Subgroup& h) const {
  ElementSet s(size_);
  for (const ExpVec& v : h.elements(size_)) s.insert(vec_rank(v, pc_->prime()));
  return s;
}

ElementSet EnumeratedGroup::closure(const std::vector<uint64_t>& gens) {
  ElementSet s(size_);
  std::deque<uint64_t> work;
  s.insert(0);
  work.push_back(0);
  for (uint64_t g : gens)
    if (s.insert(g)) work.push_back(g);
  while (!work.empty()) {
    uint64_t x = work.front();
    work.pop_front();
    for (uint64_t g : gens) {
      uint64_t y = mul(x, g);
      if (s.insert(y)) work.push_back(y);
      y = mul(g, x);
      if (s.insert(y)) work.push_back(y);
    }
  }
  return s;
}

}  // namespace pgroup
