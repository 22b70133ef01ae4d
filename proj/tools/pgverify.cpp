// Verification CLI: evaluates the power-structure predicates for single
// groups and runs the theorem suites over a corpus of pc presentations.
//
// Exit codes: 0 all requested suites pass, 1 violations, 2 skipped because
// of missing fixtures, 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pgroup/corpus.hpp"
#include "pgroup/properties.hpp"
#include "pgroup/suites.hpp"

namespace {

std::string render(const pgroup::PropertyReport& r) {
  std::ostringstream os;
  os << r.id << ": order " << r.prime << "^" << r.order_exp << ", d = " << r.d << ", class = "
     << r.nilpotency_class << ", exponent " << r.prime << "^" << r.exponent_exp << "\n";
  os << "  powerful = " << (r.powerful ? "true" : "false")
     << ", potent = " << (r.potent ? "true" : "false") << ", regular = " << to_string(r.regular)
     << "\n";
  for (const auto& [i, v] : r.m_levels)
    os << "  M_" << i << " = " << (v ? "true" : "false") << "\n";
  for (const auto& c : r.conditions)
    os << "  i=" << c.level << ": cond_power = " << (c.power ? "true" : "false")
       << ", cond_omega = " << (c.omega ? "true" : "false")
       << ", cond_index = " << (c.index ? "true" : "false") << "\n";
  os << "  P1 = " << to_string(r.p1) << ", P2 = " << to_string(r.p2) << "  [" << int(r.wall_ms)
     << " ms]";
  return os.str();
}

int report_group(const pgroup::CorpusEntry& entry, const pgroup::Caps& caps, int max_m,
                 bool as_json, const std::string& csv_path) {
  pgroup::PropertyReport r = pgroup::build_report(entry.id, *entry.pc, caps, max_m);
  std::cout << (as_json ? r.json_line() : render(r)) << "\n";
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::app);
    if (out.tellp() == 0) out << pgroup::PropertyReport::csv_header() << "\n";
    out << r.csv_line() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite p-group power-structure verifier"};
  app.require_subcommand(1);

  pgroup::Caps caps;
  int jobs = 1;
  int max_m = 2;
  app.add_option("--enum-cap", caps.enum_cap, "full-enumeration bound (elements)");
  app.add_option("--iso-cap", caps.iso_cap, "isomorphism search bound (group order)");
  app.add_option("--section-cap", caps.section_cap, "P1/P2 section sweep bound (group order)");
  app.add_option("--pair-cap", caps.pair_cap, "exhaustive pair sweep bound (group order)");
  app.add_option("--sample-pairs", caps.sample_pairs, "sampled pairs beyond the pair cap");
  app.add_option("--seed", caps.seed, "seed for sampled sweeps (recorded in output)");
  app.add_option("--jobs", jobs, "worker threads for corpus sweeps");
  app.add_option("--max-m", max_m, "largest i for the M_i levels in reports");

  std::string file, name, corpus_dir, suite, out_path, csv_path;
  bool as_json = false;

  CLI::App* check = app.add_subcommand("check", "evaluate one .pcp file");
  check->add_option("file", file, "PCP-format presentation file")->required();
  check->add_flag("--json", as_json, "emit a JSON record instead of text");
  check->add_option("--csv", csv_path, "append a CSV projection to this file");

  CLI::App* info = app.add_subcommand("info", "evaluate a built-in group");
  info->add_option("name", name, "built-in name (e.g. J, B23, dihedral-8)")->required();
  info->add_flag("--json", as_json, "emit a JSON record instead of text");
  info->add_option("--csv", csv_path, "append a CSV projection to this file");

  CLI::App* verify = app.add_subcommand("verify", "run a theorem suite over a corpus");
  verify->add_option("suite", suite, "A|B|C|uniqueness-81|exp9-unique|exp27-none|p2-remark|"
                                     "m2-remark|oracle|annotations|all")
      ->required();
  verify->add_option("--corpus", corpus_dir, "catalog directory of .pcp files")->required();
  verify->add_option("--out", out_path, "write JSON suite records to this file");

  CLI::App* oracle = app.add_subcommand("oracle", "IGS-vs-set-closure equivalence sweep");
  oracle->add_option("--corpus", corpus_dir, "catalog directory of .pcp files")->required();
  oracle->add_option("--out", out_path, "write JSON suite records to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open " + file);
      std::stringstream buf;
      buf << in.rdbuf();
      pgroup::CorpusEntry entry;
      entry.id = "file:" + file;
      entry.pc = std::make_shared<pgroup::PcPresentation>(pgroup::PcPresentation::parse(buf.str()));
      pgroup::ConsistencyReport rep = pgroup::check_consistency(*entry.pc);
      if (!rep.consistent) {
        std::cerr << "inconsistent presentation:\n";
        for (const std::string& f : rep.failures) std::cerr << "  " << f << "\n";
        return 1;
      }
      return report_group(entry, caps, max_m, as_json, csv_path);
    }

    if (info->parsed()) {
      return report_group(pgroup::builtin(name), caps, max_m, as_json, csv_path);
    }

    // verify / oracle
    if (oracle->parsed()) suite = "oracle";
    std::vector<pgroup::CorpusEntry> corpus = pgroup::load_catalog(corpus_dir);
    std::vector<std::string> suites;
    if (suite == "all")
      suites = pgroup::suite_names();
    else
      suites.push_back(suite);

    std::ofstream out;
    if (!out_path.empty()) {
      out.open(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
    }

    bool any_fail = false, any_skip = false;
    for (const std::string& s : suites) {
      pgroup::SuiteResult r = pgroup::run_suite(s, corpus, caps, jobs);
      std::cout << r.summary_line() << "\n";
      for (const std::string& n : r.notes) std::cout << "  note: " << n << "\n";
      for (const auto& v : r.violations)
        std::cout << "  violation: " << v.group_id << " " << v.predicate << ": " << v.witness
                  << "\n";
      if (out) out << r.json_line() << "\n";
      any_fail = any_fail || !r.skipped && !r.violations.empty();
      any_skip = any_skip || r.skipped;
    }
    if (any_fail) return 1;
    if (any_skip) return 2;
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
}
