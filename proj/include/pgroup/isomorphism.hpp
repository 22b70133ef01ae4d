#pragma once

#include "pgroup/enumeration.hpp"
#include "pgroup/subgroup.hpp"

namespace pgroup {

/// Invariant fingerprint used to prune isomorphism tests and to bucket
/// groups. Cheap relative to a backtracking search; equal fingerprints do
/// not imply isomorphism (except for abelian groups).
struct GroupFingerprint {
  int prime = 0;
  int order_exp = 0;
  bool abelian = false;
  int d = 0;
  int nilpotency_class = 0;
  int exponent_exp = 0;
  std::vector<uint64_t> order_histogram;  // count of elements of order p^k, k = 0..
  int derived_rank = 0;
  int center_rank = 0;
  std::vector<int> agemo_ranks;  // rank of agemo(G,k) for k = 1..exponent_exp
  uint64_t conjugacy_classes = 0;

  std::string key() const;
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const PcPresentation& pc, uint64_t cap);

/// Exact isomorphism test for |G| = |H| within cap: backtracking over images
/// of the pc generators (mapped in decreasing index order so every relation
/// touches only already-chosen images), pruned by element orders and the
/// tail subgroup sizes. Abelian pairs short-circuit on the agemo rank chain.
bool is_isomorphic(const PcPresentation& g, const PcPresentation& h, uint64_t cap);

}  // namespace pgroup
