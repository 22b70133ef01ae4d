#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/presentation.hpp"

namespace pgroup {

/// One group in a corpus: an identifier, its presentation, and optional
/// expected property annotations (from the catalog manifest) used for
/// regression checks.
struct CorpusEntry {
  std::string id;  // "catalog:81-10", "builtin:J", ...
  PcpPtr pc;
  std::map<std::string, std::string> expected;

  /// The bare name: "81-10" for "catalog:81-10".
  std::string stem() const;
};

/// Built-in constructors. Recognized names:
///   J                          the order-81 example group
///   B23                        free 2-generator exponent-3 group (order 27)
///   cyclic-<p>-<k>             C_{p^k}
///   abelian-<p>-<e1>.<e2>...   direct product of C_{p^ei}
///   extraspecial-<p>-exp<p>    extraspecial p^{1+2} of exponent p (p odd)
///   extraspecial-<p>-exp<p^2>  extraspecial p^{1+2} of exponent p^2 (p odd)
///   dihedral-<2^k>             k >= 3
///   quaternion-<2^k>           k >= 3
///   semidihedral-<2^k>         k >= 4
/// Every built-in passes the consistency test (asserted at construction).
CorpusEntry builtin(const std::string& name);
std::vector<std::string> builtin_names();  // representative list for --help

/// Loads a catalog directory: every *.pcp file (id = file stem), plus an
/// optional manifest.txt with lines "<id> key=value ...". All files must
/// parse, pass the consistency test, and every manifest id must have a file;
/// otherwise the whole load fails (all-or-nothing).
std::vector<CorpusEntry> load_catalog(const std::string& dir);

/// Writes entry.pc to <dir>/<stem>.pcp in canonical form.
void save_entry(const CorpusEntry& entry, const std::string& dir);

}  // namespace pgroup
