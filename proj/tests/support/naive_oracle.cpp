#include "support/naive_oracle.hpp"

#include <map>
#include <set>

#include "pgroup/element.hpp"

namespace oracle {

using pgroup::ExpVec;
using pgroup::PcPresentation;
using pgroup::Syllable;

ExpVec normalize(const PcPresentation& pc, std::vector<int> letters) {
  const int p = pc.prime();
  bool rewrote = true;
  while (rewrote) {
    rewrote = false;
    for (size_t i = 0; i < letters.size(); ++i) {
      // run of equal letters starting at i
      size_t run = 1;
      while (i + run < letters.size() && letters[i + run] == letters[i]) ++run;
      if (run >= size_t(p)) {
        // a_g^p -> power word
        std::vector<int> next(letters.begin(), letters.begin() + i);
        for (const Syllable& s : pc.power_rhs(letters[i]))
          for (int t = 0; t < s.exp; ++t) next.push_back(s.gen);
        next.insert(next.end(), letters.begin() + i + p, letters.end());
        letters = std::move(next);
        rewrote = true;
        break;
      }
      size_t j = i + run;
      if (j < letters.size() && letters[j] < letters[i]) {
        // descent at (j-1, j): a_h a_g -> a_g a_h [a_h, a_g]
        int h = letters[j - 1], g = letters[j];
        std::vector<int> next(letters.begin(), letters.begin() + (j - 1));
        next.push_back(g);
        next.push_back(h);
        for (const Syllable& s : pc.comm_rhs(h, g))
          for (int t = 0; t < s.exp; ++t) next.push_back(s.gen);
        next.insert(next.end(), letters.begin() + j + 1, letters.end());
        letters = std::move(next);
        rewrote = true;
        break;
      }
      i += run - 1;
    }
  }
  ExpVec v(pc.ngens(), 0);
  for (int g : letters) ++v[g - 1];
  return v;
}

std::vector<int> letters_of(const ExpVec& v) {
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    for (int t = 0; t < v[i]; ++t) out.push_back(int(i) + 1);
  return out;
}

ExpVec multiply(const PcPresentation& pc, const ExpVec& u, const ExpVec& v) {
  std::vector<int> letters = letters_of(u);
  std::vector<int> tail = letters_of(v);
  letters.insert(letters.end(), tail.begin(), tail.end());
  return normalize(pc, letters);
}

ExpVec inverse(const PcPresentation& pc, const ExpVec& u) {
  uint64_t e = 1;
  for (int i = 0; i < pc.ngens(); ++i) e *= uint64_t(pc.prime());
  ExpVec r(pc.ngens(), 0);
  for (uint64_t t = 0; t + 1 < e; ++t) r = multiply(pc, r, u);
  return r;
}

bool multiplication_table_is_group(const PcPresentation& pc) {
  std::vector<ExpVec> elems;
  pgroup::enumerate_elements(pc, 1 << 20, [&](const ExpVec& v) { elems.push_back(v); });
  const size_t n = elems.size();
  std::map<ExpVec, size_t> index;
  for (size_t i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) table[x][y] = index.at(multiply(pc, elems[x], elems[y]));
  std::set<std::vector<size_t>> rows(table.begin(), table.end());
  if (rows.size() != n) return false;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (size_t z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]]) return false;
  return true;
}

}  // namespace oracle
