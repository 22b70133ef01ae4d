#pragma once

#include "pgroup/corpus.hpp"
#include "pgroup/properties.hpp"

namespace pgroup {

struct Violation {
  std::string group_id;
  std::string predicate;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  uint64_t groups_checked = 0;
  std::vector<Violation> violations;
  bool skipped = false;
  std::vector<std::string> missing;  // fixtures/catalog slices that were absent
  std::vector<std::string> notes;    // e.g. the flagged Theorem C exception
  double wall_ms = 0.0;
  uint64_t seed = 0;

  bool passed() const { return !skipped && violations.empty(); }
  std::string summary_line() const;
  std::string json_line() const;
};

/// A | B | C | uniqueness-81 | exp9-unique | exp27-none | p2-remark |
/// m2-remark | oracle | annotations
std::vector<std::string> suite_names();

/// Runs one suite over the corpus. Corpus entries are processed in parallel
/// (jobs threads); aggregation is order-independent and results are
/// deterministic for a fixed corpus, caps and seed.
SuiteResult run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus,
                      const Caps& caps, int jobs = 1);

}  // namespace pgroup
