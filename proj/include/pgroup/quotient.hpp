#pragma once

#include "pgroup/subgroup.hpp"

namespace pgroup {

/// A quotient G/N presented as a pc group of its own. The projection maps
/// normal forms of G onto normal forms of the target; it is a surjective
/// homomorphism with kernel N.
class QuotientMap {
 public:
  QuotientMap(const PcPresentation& source, Subgroup kernel);

  const PcPresentation& source() const { return *src_; }
  const Subgroup& kernel() const { return kernel_; }
  const PcPresentation& target() const { return *target_; }
  PcpPtr target_ptr() const { return target_; }

  ExpVec project(const ExpVec& x) const;
  Element project(const Element& x) const;

 private:
  const PcPresentation* src_;
  Subgroup kernel_;
  PcpPtr target_;
  std::vector<int> free_depths_;  // source depths carried by the quotient gens
};

/// Builds G/N. Throws std::invalid_argument when N is not normal, and
/// std::logic_error if the derived presentation fails the consistency test
/// (which would indicate an internal error, not bad input).
QuotientMap quotient(const PcPresentation& g, const Subgroup& n);

}  // namespace pgroup
