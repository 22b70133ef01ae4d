#include "pgroup/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace pgroup {

std::string CorpusEntry::stem() const {
  size_t c = id.find(':');
  return c == std::string::npos ? id : id.substr(c + 1);
}

namespace {

PcPresentation make_j() {
  std::vector<Word> power{{{4, 1}}, {{4, 2}}, {}, {}};
  std::vector<std::vector<Word>> comm(4);
  comm[1] = {{{3, 1}}};          // [a2,a1] = a3
  comm[2] = {{{4, 1}}, {}};      // [a3,a1] = a4
  comm[3] = {{}, {}, {}};
  return PcPresentation(3, 4, std::move(power), std::move(comm));
}

PcPresentation make_abelian(int p, const std::vector<int>& exps) {
  int n = 0;
  for (int e : exps) {
    if (e < 1) throw std::invalid_argument("abelian factor exponent must be >= 1");
    n += e;
  }
  std::vector<Word> power(n);
  std::vector<std::vector<Word>> comm(n);
  for (int j = 0; j < n; ++j) comm[j].resize(std::max(0, j));
  int base = 0;
  for (int e : exps) {
    for (int i = 1; i < e; ++i) power[base + i - 1] = {{base + i + 1, 1}};
    base += e;
  }
  return PcPresentation(p, n, std::move(power), std::move(comm));
}

PcPresentation make_extraspecial(int p, bool exponent_p) {
  if (p == 2) throw std::invalid_argument("extraspecial built-ins require odd p");
  std::vector<Word> power(3);
  if (!exponent_p) power[1] = {{3, 1}};  // a2^p = a3
  std::vector<std::vector<Word>> comm(3);
  comm[1] = {{{3, exponent_p ? 1 : p - 1}}};  // [a2,a1]
  comm[2] = {{}, {}};
  return PcPresentation(p, 3, std::move(power), std::move(comm));
}

// Pc generators: a1 = s, a2 = r, a_i = r^(2^(i-2)) for i >= 3.
// kind: 0 dihedral, 1 quaternion, 2 semidihedral.
PcPresentation make_two_group(int k, int kind) {
  if (k < 3 || (kind == 2 && k < 4))
    throw std::invalid_argument("2-group order too small for this family");
  int n = k;
  std::vector<Word> power(n);
  std::vector<std::vector<Word>> comm(n);
  for (int j = 0; j < n; ++j) comm[j].resize(std::max(0, j));
  if (kind == 1) power[0] = {{n, 1}};  // s^2 = r^(2^(k-2))
  for (int i = 2; i < n; ++i) power[i - 1] = {{i + 1, 1}};
  // [a_i, a1] = a_{i+1} ... a_k (the inverse of r^(2^(i-1)) in the 2-chain);
  // the semidihedral twist shortens the relation for i = 2 by one factor.
  for (int i = 2; i < n; ++i) {
    int last = (kind == 2 && i == 2) ? n - 1 : n;
    Word w;
    for (int t = i + 1; t <= last; ++t) w.push_back({t, 1});
    comm[i - 1][0] = std::move(w);
  }
  return PcPresentation(2, n, std::move(power), std::move(comm));
}

std::vector<int> parse_dotted(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '.')) out.push_back(std::stoi(part));
  if (out.empty()) throw std::invalid_argument("empty exponent list");
  return out;
}

int log2_exact(long long v) {
  int k = 0;
  while (v > 1 && v % 2 == 0) {
    v /= 2;
    ++k;
  }
  if (v != 1) throw std::invalid_argument("order must be a power of 2");
  return k;
}

}  // namespace

CorpusEntry builtin(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '-')) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty built-in name");

  std::optional<PcPresentation> pc;
  const std::string& kind = parts[0];
  if (kind == "J" && parts.size() == 1) {
    pc = make_j();
  } else if (kind == "B23" && parts.size() == 1) {
    pc = make_extraspecial(3, true);
  } else if (kind == "cyclic" && parts.size() == 3) {
    pc = make_abelian(std::stoi(parts[1]), std::vector<int>{std::stoi(parts[2])});
  } else if (kind == "abelian" && parts.size() == 3) {
    pc = make_abelian(std::stoi(parts[1]), parse_dotted(parts[2]));
  } else if (kind == "extraspecial" && parts.size() == 3) {
    int p = std::stoi(parts[1]);
    if (parts[2].rfind("exp", 0) != 0) throw std::invalid_argument("bad extraspecial name: " + name);
    long long m = std::stoll(parts[2].substr(3));
    if (m == p)
      pc = make_extraspecial(p, true);
    else if (m == (long long)(p) * p)
      pc = make_extraspecial(p, false);
    else
      throw std::invalid_argument("extraspecial exponent must be p or p^2");
  } else if (kind == "dihedral" && parts.size() == 2) {
    pc = make_two_group(log2_exact(std::stoll(parts[1])), 0);
  } else if (kind == "quaternion" && parts.size() == 2) {
    pc = make_two_group(log2_exact(std::stoll(parts[1])), 1);
  } else if (kind == "semidihedral" && parts.size() == 2) {
    pc = make_two_group(log2_exact(std::stoll(parts[1])), 2);
  } else {
    throw std::invalid_argument("unknown built-in: " + name);
  }

  ConsistencyReport rep = check_consistency(*pc);
  if (!rep.consistent)
    throw std::logic_error("built-in '" + name + "' failed the consistency test: " + rep.failures.front());
  CorpusEntry e;
  e.id = "builtin:" + name;
  e.pc = std::make_shared<PcPresentation>(std::move(*pc));
  return e;
}

std::vector<std::string> builtin_names() {
  return {"J",
          "B23",
          "cyclic-<p>-<k>",
          "abelian-<p>-<e1>.<e2>...",
          "extraspecial-<p>-exp<p or p^2>",
          "dihedral-<2^k>",
          "quaternion-<2^k>",
          "semidihedral-<2^k>"};
}

std::vector<CorpusEntry> load_catalog(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".pcp") files.push_back(de.path().string());
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusEntry> entries;
  std::vector<std::string> problems;
  for (const std::string& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto pc = std::make_shared<PcPresentation>(PcPresentation::parse(buf.str()));
      ConsistencyReport rep = check_consistency(*pc);
      if (!rep.consistent) {
        problems.push_back(f + ": inconsistent presentation (" + rep.failures.front() + ")");
        continue;
      }
      CorpusEntry e;
      e.id = "catalog:" + fs::path(f).stem().string();
      e.pc = std::move(pc);
      entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      problems.push_back(f + ": " + ex.what());
    }
  }

  fs::path manifest = fs::path(dir) / "manifest.txt";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (size_t h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string id;
      if (!(ls >> id)) continue;
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&](const CorpusEntry& e) { return e.stem() == id; });
      if (it == entries.end()) {
        problems.push_back(manifest.string() + ":" + std::to_string(lineno) +
                           ": manifest id '" + id + "' has no catalog file");
        continue;
      }
      std::string kv;
      while (ls >> kv) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          problems.push_back(manifest.string() + ":" + std::to_string(lineno) +
                             ": expected key=value, got '" + kv + "'");
          continue;
        }
        it->expected[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
    }
  }

  if (!problems.empty()) {
    std::string msg = "catalog load failed (" + std::to_string(problems.size()) + " problem(s)):";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw std::runtime_error(msg);
  }
  return entries;
}

void save_entry(const CorpusEntry& entry, const std::string& dir) {
  fs::create_directories(dir);
  fs::path file = fs::path(dir) / (entry.stem() + ".pcp");
  std::ofstream out(file.string());
  out << entry.pc->serialize();
  if (!out) throw std::runtime_error("failed to write " + file.string());
}

}  // namespace pgroup
