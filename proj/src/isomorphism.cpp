#include "pgroup/isomorphism.hpp"

#include <algorithm>
#include <sstream>

namespace pgroup {

std::string GroupFingerprint::key() const {
  std::ostringstream os;
  os << prime << '^' << order_exp << '|' << abelian << '|' << d << '|' << nilpotency_class << '|'
     << exponent_exp << '|' << derived_rank << '|' << center_rank << '|' << conjugacy_classes << '|';
  for (uint64_t c : order_histogram) os << c << ',';
  os << '|';
  for (int r : agemo_ranks) os << r << ',';
  return os.str();
}

GroupFingerprint fingerprint(const PcPresentation& pc, uint64_t cap) {
  GroupFingerprint f;
  f.prime = pc.prime();
  f.order_exp = pc.ngens();

  f.abelian = true;
  for (int j = 2; j <= pc.ngens() && f.abelian; ++j)
    for (int i = 1; i < j; ++i)
      if (!pc.comm_trivial(j, i)) {
        f.abelian = false;
        break;
      }

  EnumeratedGroup e(pc, cap);
  f.exponent_exp = 0;
  for (uint64_t r = 0; r < e.size(); ++r) f.exponent_exp = std::max(f.exponent_exp, e.order_exp(r));
  f.order_histogram.assign(f.exponent_exp + 1, 0);
  for (uint64_t r = 0; r < e.size(); ++r) ++f.order_histogram[e.order_exp(r)];

  f.d = minimal_generators(pc);
  f.nilpotency_class = nilpotency_class(pc);
  f.derived_rank = derived_subgroup(pc).rank();
  f.center_rank = center(pc, cap).rank();
  for (int k = 1; k <= f.exponent_exp; ++k) f.agemo_ranks.push_back(agemo(pc, k, cap).rank());

  // Conjugation orbit count.
  std::vector<bool> seen(e.size(), false);
  std::vector<uint64_t> stack;
  std::vector<uint64_t> gens, gen_invs;
  Collector col(pc);
  for (int i = 1; i <= pc.ngens(); ++i) {
    gens.push_back(e.rank(col.generator(i)));
    gen_invs.push_back(e.inv(gens.back()));
  }
  for (uint64_t r = 0; r < e.size(); ++r) {
    if (seen[r]) continue;
    ++f.conjugacy_classes;
    seen[r] = true;
    stack.assign(1, r);
    while (!stack.empty()) {
      uint64_t x = stack.back();
      stack.pop_back();
      for (size_t i = 0; i < gens.size(); ++i) {
        uint64_t y = e.mul(e.mul(gen_invs[i], x), gens[i]);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return f;
}

namespace {

struct IsoSearch {
  const PcPresentation& g;
  const PcPresentation& h;
  Collector hcol;
  std::vector<std::vector<ExpVec>> candidates_by_order;  // index: order exponent
  std::vector<int> gen_order_exp;                        // order exponent of a_i in g
  std::vector<ExpVec> images;                            // images[i-1], valid for i > level

  explicit IsoSearch(const PcPresentation& gg, const PcPresentation& hh) : g(gg), h(hh), hcol(hh) {}

  ExpVec eval(const Word& w) {
    ExpVec r(h.ngens(), 0);
    for (const Syllable& s : w) r = hcol.multiply(r, hcol.power(images[s.gen - 1], s.exp));
    return r;
  }

  bool extend(int i, const Subgroup& tail_span) {
    if (i == 0) return true;
    for (const ExpVec& cand : candidates_by_order[gen_order_exp[i - 1]]) {
      if (tail_span.contains(cand)) continue;
      images[i - 1] = cand;
      // power relation: x_i^p = image of power_rhs(i)
      if (hcol.power(cand, g.prime()) != eval(g.power_rhs(i))) continue;
      // commutator relations with the already-mapped higher generators
      bool ok = true;
      for (int k = i + 1; k <= g.ngens() && ok; ++k)
        ok = hcol.commutator(images[k - 1], cand) == eval(g.comm_rhs(k, i));
      if (!ok) continue;
      std::vector<ExpVec> gens = tail_span.igs();
      gens.push_back(cand);
      Subgroup next = span(h, gens);
      // In G the tail <a_i,...,a_n> has order exactly p^(n-i+1); an embedding
      // must preserve that, which prunes most branches.
      if (next.rank() != g.ngens() - i + 1) continue;
      if (extend(i - 1, next)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const PcPresentation& g, const PcPresentation& h, uint64_t cap) {
  if (g.prime() != h.prime() || g.ngens() != h.ngens()) return false;
  GroupFingerprint fg = fingerprint(g, cap);
  GroupFingerprint fh = fingerprint(h, cap);
  if (!(fg == fh)) return false;
  // The agemo rank chain pins the cyclic decomposition of an abelian group.
  if (fg.abelian) return true;

  EnumeratedGroup eh(h, cap);
  IsoSearch search(g, h);
  search.candidates_by_order.assign(size_t(fh.exponent_exp) + 1, {});
  for (uint64_t r = 0; r < eh.size(); ++r)
    search.candidates_by_order[eh.order_exp(r)].push_back(eh.vec(r));
  search.gen_order_exp.resize(g.ngens());
  Collector gcol(g);
  for (int i = 1; i <= g.ngens(); ++i) {
    uint64_t o = gcol.element_order(gcol.generator(i));
    int k = 0;
    while (o > 1) {
      o /= uint64_t(g.prime());
      ++k;
    }
    search.gen_order_exp[i - 1] = k;
  }
  search.images.assign(g.ngens(), ExpVec(h.ngens(), 0));
  return search.extend(g.ngens(), Subgroup(h));
}

}  // namespace pgroup
