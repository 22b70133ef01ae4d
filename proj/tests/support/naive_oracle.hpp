#pragma once

#include <vector>

#include "pgroup/presentation.hpp"

// Brute-force reference arithmetic, deliberately independent of the
// production collector: words are flat letter strings (exponent 1 per entry)
// and every rewrite rescans from the start and applies exactly one defining
// relation at the leftmost violation.
namespace oracle {

pgroup::ExpVec normalize(const pgroup::PcPresentation& pc, std::vector<int> letters);

std::vector<int> letters_of(const pgroup::ExpVec& v);

pgroup::ExpVec multiply(const pgroup::PcPresentation& pc, const pgroup::ExpVec& u,
                        const pgroup::ExpVec& v);

/// x^(p^n - 1); equals the inverse once the presentation is consistent.
pgroup::ExpVec inverse(const pgroup::PcPresentation& pc, const pgroup::ExpVec& u);

/// Consistency probe: builds the full x * y table over the p^n normal forms
/// and reports whether it is a group table, i.e. the left-translation rows
/// are pairwise distinct AND the operation associates on every triple.
/// (Distinct rows alone do not suffice: an inconsistent presentation can
/// still have injective left translations on formal normal forms.)
bool multiplication_table_is_group(const pgroup::PcPresentation& pc);

}  // namespace oracle
