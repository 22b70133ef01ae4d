#include "pgroup/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pgroup/isomorphism.hpp"

namespace pgroup {

namespace {

// Published classification sizes for groups of order 3^n; used to refuse to
// run uniqueness sweeps against an incomplete catalog slice.
const uint64_t kThreeGroupCounts[7] = {1, 1, 2, 5, 15, 67, 504};

int exponent_exp_of(EnumeratedGroup& e) {
  int k = 0;
  for (uint64_t r = 0; r < e.size(); ++r) k = std::max(k, e.order_exp(r));
  return k;
}

// Runs fn(i) over [0, n) on `jobs` threads.
void parallel_for(uint64_t n, int jobs, const std::function<void(uint64_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n <= 1) {
    for (uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr eptr;
  std::mutex emx;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (;;) {
        uint64_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(emx);
          if (!eptr) eptr = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (eptr) std::rethrow_exception(eptr);
}

struct SuiteRun {
  SuiteResult result;
  std::mutex mx;

  void violation(const std::string& id, const std::string& pred, const std::string& witness) {
    std::lock_guard<std::mutex> lock(mx);
    result.violations.push_back({id, pred, witness});
  }
  void note(const std::string& n) {
    std::lock_guard<std::mutex> lock(mx);
    result.notes.push_back(n);
  }
  void checked() {
    std::lock_guard<std::mutex> lock(mx);
    ++result.groups_checked;
  }
};

bool corpus_has_full_3slice(const std::vector<CorpusEntry>& corpus, int max_exp,
                            std::vector<std::string>& missing) {
  for (int n = 1; n <= max_exp; ++n) {
    uint64_t count = 0;
    for (const CorpusEntry& e : corpus)
      if (e.pc->prime() == 3 && e.pc->ngens() == n) ++count;
    if (count != kThreeGroupCounts[n])
      missing.push_back("order 3^" + std::to_string(n) + ": have " + std::to_string(count) +
                        " of " + std::to_string(kThreeGroupCounts[n]) + " groups");
  }
  return missing.empty();
}

const CorpusEntry* find_stem(const std::vector<CorpusEntry>& corpus, const std::string& stem) {
  for (const CorpusEntry& e : corpus)
    if (e.stem() == stem) return &e;
  return nullptr;
}

void suite_theorem_a(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                     int jobs) {
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    if (g.prime() == 2) return;
    run.checked();
    // The implication is vacuous whenever the conclusion holds, so the
    // expensive hypothesis is only enumerated for non-potent groups.
    if (is_potent(g, caps.enum_cap)) return;
    for (int i = 1; i <= g.prime() - 3; ++i)
      if (is_Mi(g, i, caps.enum_cap))
        run.violation(entry.id, "theorem-A", "M_" + std::to_string(i) + " but not potent");
  });
}

void suite_theorem_b(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                     int jobs) {
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    run.checked();
    if (is_powerful(g, caps.enum_cap)) return;
    int d = minimal_generators(g);
    for (int i = 1; i <= d - 2; ++i)
      if (is_Mi(g, i, caps.enum_cap))
        run.violation(entry.id, "theorem-B",
                      "M_" + std::to_string(i) + " with d=" + std::to_string(d) +
                          " but not powerful");
  });
}

void suite_theorem_c(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                     int jobs) {
  PcpPtr j = builtin("J").pc;
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    if (g.prime() == 2) return;
    if (!is_Mi(g, 1, caps.enum_cap)) return;
    run.checked();
    EnumeratedGroup e(g, caps.enum_cap);
    int ee = exponent_exp_of(e);
    bool exempt = g.prime() == 3 && g.ngens() == 4 &&
                  is_isomorphic(g, *j, std::max<uint64_t>(caps.iso_cap, 81));
    if (exempt) run.note(entry.id + " is the allowed maximal-class exception");
    for (int i = 1; i <= ee; ++i) {
      if (!cond_power(e, i))
        run.violation(entry.id, "theorem-C/cond1", "fails at i=" + std::to_string(i));
      if (!cond_omega(e, i))
        run.violation(entry.id, "theorem-C/cond2", "fails at i=" + std::to_string(i));
      if (!exempt && !cond_index(e, i))
        run.violation(entry.id, "theorem-C/cond3", "fails at i=" + std::to_string(i));
    }
    if (exempt && cond_index(e, 1))
      run.violation(entry.id, "theorem-C/exception",
                    "flagged as the order-81 exception but satisfies condition (3) at i=1");
  });
}

void suite_uniqueness_81(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                         int jobs) {
  std::vector<const CorpusEntry*> slice;
  for (const CorpusEntry& e : corpus)
    if (e.pc->prime() == 3 && e.pc->ngens() == 4) slice.push_back(&e);
  if (slice.size() != kThreeGroupCounts[4]) {
    run.result.skipped = true;
    run.result.missing.push_back("order-81 catalog: have " + std::to_string(slice.size()) +
                                 " of " + std::to_string(kThreeGroupCounts[4]) + " groups");
    return;
  }
  std::vector<std::string> witnesses;
  std::mutex wmx;
  parallel_for(slice.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = *slice[idx];
    run.checked();
    if (nilpotency_class(*entry.pc) == 3 && is_Mi(*entry.pc, 1, caps.enum_cap)) {
      std::lock_guard<std::mutex> lock(wmx);
      witnesses.push_back(entry.stem());
    }
  });
  std::sort(witnesses.begin(), witnesses.end());
  for (const std::string& w : witnesses) run.note("M_1 maximal-class witness: " + w);
  if (witnesses.size() != 1)
    run.violation("corpus", "uniqueness-81",
                  "expected exactly one M_1 maximal-class group of order 81, found " +
                      std::to_string(witnesses.size()));
}

void suite_exp9_unique(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                       int jobs) {
  if (!corpus_has_full_3slice(corpus, 6, run.result.missing)) {
    run.result.skipped = true;
    return;
  }
  PcpPtr j = builtin("J").pc;
  std::vector<std::string> violators;
  std::mutex vmx;
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    if (g.prime() != 3) return;
    EnumeratedGroup e(g, caps.enum_cap);
    if (exponent_exp_of(e) != 2) return;  // exponent 9 slice
    if (minimal_generators(g) != 2) return;
    if (!is_Mi(g, 1, caps.enum_cap)) return;
    run.checked();
    uint64_t om = omega(g, 1, caps.enum_cap).order();
    uint64_t ag = agemo(g, 1, caps.enum_cap).order();
    if (om * ag != e.size()) {
      std::lock_guard<std::mutex> lock(vmx);
      violators.push_back(entry.stem());
    }
  });
  std::sort(violators.begin(), violators.end());
  if (violators.size() != 1) {
    run.violation("corpus", "exp9-unique",
                  "expected exactly one violator of |G|=|U1||O1|, found " +
                      std::to_string(violators.size()));
    return;
  }
  const CorpusEntry* w = find_stem(corpus, violators.front());
  if (!is_isomorphic(*w->pc, *j, std::max<uint64_t>(caps.iso_cap, 81)))
    run.violation(w->id, "exp9-unique", "the unique violator is not isomorphic to J");
  else
    run.note("unique 2-generator exponent-9 violator: " + violators.front());
}

void suite_exp27_none(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                      int jobs) {
  if (!corpus_has_full_3slice(corpus, 6, run.result.missing)) {
    run.result.skipped = true;
    return;
  }
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    if (g.prime() != 3 || g.ngens() > 6) return;
    EnumeratedGroup e(g, caps.enum_cap);
    if (exponent_exp_of(e) != 3) return;  // exponent 27 slice
    if (minimal_generators(g) != 2) return;
    if (!is_Mi(g, 1, caps.enum_cap)) return;
    run.checked();
    uint64_t om = omega(g, 1, caps.enum_cap).order();
    uint64_t ag = agemo(g, 1, caps.enum_cap).order();
    if (om * ag != e.size())
      run.violation(entry.id, "exp27-none",
                    "|U1|*|O1| = " + std::to_string(ag * om) + " != " + std::to_string(e.size()));
  });
}

void suite_p2_remark(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps) {
  const CorpusEntry* f = find_stem(corpus, "64-31");
  if (!f) {
    run.result.skipped = true;
    run.result.missing.push_back("fixture 64-31");
    return;
  }
  run.checked();
  EnumeratedGroup e(*f->pc, caps.enum_cap);
  if (cond_power(e, 1)) run.violation(f->id, "p2-remark", "condition (1) unexpectedly holds at i=1");
  if (cond_omega(e, 1)) run.violation(f->id, "p2-remark", "condition (2) unexpectedly holds at i=1");
  if (cond_index(e, 1)) run.violation(f->id, "p2-remark", "condition (3) unexpectedly holds at i=1");
}

void suite_m2_remark(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                     int jobs) {
  std::vector<std::string> stems{"81-7",    "2187-83", "2187-84", "2187-85",
                                 "2187-90", "2187-91", "2187-92"};
  std::vector<const CorpusEntry*> fixtures;
  for (const std::string& s : stems) {
    const CorpusEntry* f = find_stem(corpus, s);
    if (!f)
      run.result.missing.push_back("fixture " + s);
    else
      fixtures.push_back(f);
  }
  if (!run.result.missing.empty()) {
    run.result.skipped = true;
    return;
  }
  parallel_for(fixtures.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = *fixtures[idx];
    run.checked();
    const PcPresentation& g = *entry.pc;
    if (!is_Mi(g, 2, caps.enum_cap)) run.violation(entry.id, "m2-remark", "not an M_2 group");
    EnumeratedGroup e(g, caps.enum_cap);
    int ee = exponent_exp_of(e);
    auto fails_somewhere = [&](bool (*cond)(EnumeratedGroup&, int)) {
      for (int i = 1; i <= ee; ++i)
        if (!cond(e, i)) return true;
      return false;
    };
    if (entry.stem() == "81-7") {
      if (!fails_somewhere(&cond_omega))
        run.violation(entry.id, "m2-remark", "condition (2) unexpectedly holds at every level");
    } else {
      if (!fails_somewhere(&cond_power))
        run.violation(entry.id, "m2-remark", "condition (1) unexpectedly holds at every level");
      if (!fails_somewhere(&cond_index))
        run.violation(entry.id, "m2-remark", "condition (3) unexpectedly holds at every level");
    }
  });
}

void suite_oracle(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                  int jobs) {
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    const PcPresentation& g = *entry.pc;
    if (g.order() > 729) return;  // the <= 3^6 oracle slice
    run.checked();
    EnumeratedGroup e(g, caps.enum_cap);

    // Random generator sets: IGS span vs set closure.
    std::mt19937_64 rng(caps.seed ^ std::hash<std::string>{}(entry.id));
    std::uniform_int_distribution<uint64_t> dist(0, e.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<uint64_t> gens;
      for (int t = 0; t < 1 + trial % 3; ++t) gens.push_back(dist(rng));
      std::vector<ExpVec> gvecs;
      for (uint64_t r : gens) gvecs.push_back(e.vec(r));
      Subgroup s = span(g, gvecs);
      ElementSet via_igs = e.set_of(s);
      ElementSet via_closure = e.closure(gens);
      if (!(via_igs == via_closure))
        run.violation(entry.id, "oracle/span", "IGS span and set closure differ");
    }

    // omega/agemo at every level vs closures of the raw sets.
    int ee = exponent_exp_of(e);
    for (int k = 1; k <= ee; ++k) {
      ElementSet raw_orders = e.order_set(k);
      ElementSet raw_powers = e.power_set(k);
      std::vector<ExpVec> ogens, pgens;
      for (uint64_t r : raw_orders.members()) ogens.push_back(e.vec(r));
      for (uint64_t r : raw_powers.members()) pgens.push_back(e.vec(r));
      if (!(e.set_of(span(g, ogens)) == e.closure(raw_orders.members())))
        run.violation(entry.id, "oracle/omega", "level " + std::to_string(k));
      if (!(e.set_of(span(g, pgens)) == e.closure(raw_powers.members())))
        run.violation(entry.id, "oracle/agemo", "level " + std::to_string(k));
    }

    // Derived subgroup: IGS route vs closure of all pairwise commutators.
    std::vector<uint64_t> inv(e.size());
    for (uint64_t r = 0; r < e.size(); ++r) inv[r] = e.inv(r);
    ElementSet comms(e.size());
    for (uint64_t a = 0; a < e.size(); ++a)
      for (uint64_t b = a + 1; b < e.size(); ++b)
        comms.insert(e.mul(e.mul(inv[a], inv[b]), e.mul(a, b)));
    if (!(e.set_of(derived_subgroup(g)) == e.closure(comms.members())))
      run.violation(entry.id, "oracle/derived", "IGS derived subgroup and commutator closure differ");
  });
}

void suite_annotations(SuiteRun& run, const std::vector<CorpusEntry>& corpus, const Caps& caps,
                       int jobs) {
  parallel_for(corpus.size(), jobs, [&](uint64_t idx) {
    const CorpusEntry& entry = corpus[idx];
    if (entry.expected.empty()) return;
    run.checked();
    const PcPresentation& g = *entry.pc;
    for (const auto& [key, want] : entry.expected) {
      std::string got;
      if (key == "order_exp") got = std::to_string(g.ngens());
      else if (key == "prime") got = std::to_string(g.prime());
      else if (key == "class") got = std::to_string(nilpotency_class(g));
      else if (key == "d") got = std::to_string(minimal_generators(g));
      else if (key == "exponent_exp") {
        EnumeratedGroup e(g, caps.enum_cap);
        got = std::to_string(exponent_exp_of(e));
      } else if (key == "is_powerful") got = is_powerful(g, caps.enum_cap) ? "true" : "false";
      else if (key == "is_potent") got = is_potent(g, caps.enum_cap) ? "true" : "false";
      else if (key == "is_m1") got = is_Mi(g, 1, caps.enum_cap) ? "true" : "false";
      else if (key == "is_m2") got = is_Mi(g, 2, caps.enum_cap) ? "true" : "false";
      else if (key == "cond_power_1") got = cond_power(g, 1, caps.enum_cap) ? "true" : "false";
      else if (key == "cond_omega_1") got = cond_omega(g, 1, caps.enum_cap) ? "true" : "false";
      else if (key == "cond_index_1") got = cond_index(g, 1, caps.enum_cap) ? "true" : "false";
      else {
        run.violation(entry.id, "annotations", "unknown annotation key '" + key + "'");
        continue;
      }
      if (got != want)
        run.violation(entry.id, "annotations", key + ": expected " + want + ", got " + got);
    }
  });
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"A",          "B",         "C",         "uniqueness-81", "exp9-unique",
          "exp27-none", "p2-remark", "m2-remark", "oracle",        "annotations"};
}

SuiteResult run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus,
                      const Caps& caps, int jobs) {
  auto start = std::chrono::steady_clock::now();
  SuiteRun run;
  run.result.suite = suite;
  run.result.seed = caps.seed;

  if (suite == "A") suite_theorem_a(run, corpus, caps, jobs);
  else if (suite == "B") suite_theorem_b(run, corpus, caps, jobs);
  else if (suite == "C") suite_theorem_c(run, corpus, caps, jobs);
  else if (suite == "uniqueness-81") suite_uniqueness_81(run, corpus, caps, jobs);
  else if (suite == "exp9-unique") suite_exp9_unique(run, corpus, caps, jobs);
  else if (suite == "exp27-none") suite_exp27_none(run, corpus, caps, jobs);
  else if (suite == "p2-remark") suite_p2_remark(run, corpus, caps);
  else if (suite == "m2-remark") suite_m2_remark(run, corpus, caps, jobs);
  else if (suite == "oracle") suite_oracle(run, corpus, caps, jobs);
  else if (suite == "annotations") suite_annotations(run, corpus, caps, jobs);
  else throw std::invalid_argument("unknown suite: " + suite);

  std::sort(run.result.violations.begin(), run.result.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.group_id, a.predicate, a.witness) <
                     std::tie(b.group_id, b.predicate, b.witness);
            });
  std::sort(run.result.notes.begin(), run.result.notes.end());
  run.result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run.result;
}

std::string SuiteResult::summary_line() const {
  std::ostringstream os;
  os << "suite " << suite << ": ";
  if (skipped) {
    os << "SKIPPED (missing: ";
    for (size_t i = 0; i < missing.size(); ++i) os << (i ? "; " : "") << missing[i];
    os << ")";
  } else if (violations.empty()) {
    os << "PASS";
  } else {
    os << "FAIL (" << violations.size() << " violation(s))";
  }
  os << " [" << groups_checked << " group(s), " << int(wall_ms) << " ms, seed " << seed << "]";
  return os.str();
}

std::string SuiteResult::json_line() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["groups_checked"] = groups_checked;
  j["skipped"] = skipped;
  j["missing"] = missing;
  j["notes"] = notes;
  j["wall_ms"] = wall_ms;
  j["seed"] = seed;
  nlohmann::json v = nlohmann::json::array();
  for (const Violation& x : violations)
    v.push_back({{"group", x.group_id}, {"predicate", x.predicate}, {"witness", x.witness}});
  j["violations"] = v;
  return j.dump();
}

}  // namespace pgroup
