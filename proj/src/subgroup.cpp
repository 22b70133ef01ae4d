#include "pgroup/subgroup.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <unordered_set>

namespace pgroup {

namespace {

int inverse_mod(int a, int p) {
  a %= p;
  for (int k = 1; k < p; ++k)
    if (k * a % p == 1) return k;
  throw std::logic_error("no inverse mod p");
}

uint64_t pow_u64(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

Subgroup::Subgroup(const PcPresentation& pc) : pc_(&pc) {}

uint64_t Subgroup::order() const { return pow_u64(uint64_t(pc_->prime()), rank()); }

ExpVec Subgroup::sift(Collector& col, ExpVec x) const {
  const int p = pc_->prime();
  size_t ri = 0;
  int d = vec_depth(x);
  while (d <= pc_->ngens()) {
    while (ri < rows_.size() && vec_depth(rows_[ri]) < d) ++ri;
    if (ri == rows_.size() || vec_depth(rows_[ri]) != d) return x;
    // row has leading exponent 1; row^(p-e) * x clears coordinate d
    x = col.multiply(col.power(rows_[ri], p - int(x[d - 1])), x);
    d = vec_depth(x);
  }
  return x;
}

bool Subgroup::contains(const ExpVec& x) const {
  Collector col(*pc_);
  return vec_depth(sift(col, x)) > pc_->ngens();
}

bool Subgroup::contains(const Element& x) const {
  if (&x.ambient() != pc_) throw std::invalid_argument("element from a different ambient group");
  return contains(x.exponents());
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.pc_ != pc_) throw std::invalid_argument("subgroup of a different ambient group");
  for (const ExpVec& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

void Subgroup::insert_row(Collector& col, ExpVec r) {
  const int p = pc_->prime();
  int d = vec_depth(r);
  if (r[d - 1] != 1) r = col.power(r, inverse_mod(int(r[d - 1]), p));
  auto it = std::upper_bound(rows_.begin(), rows_.end(), d,
                             [](int depth, const ExpVec& row) { return depth < vec_depth(row); });
  rows_.insert(it, std::move(r));
}

void Subgroup::canonicalize(Collector& col) {
  const int p = pc_->prime();
  // Deepest rows first; clear each row's entries at the other rows' depths.
  for (int i = int(rows_.size()) - 1; i >= 0; --i) {
    for (size_t j = i + 1; j < rows_.size(); ++j) {
      int dj = vec_depth(rows_[j]);
      int e = rows_[i][dj - 1];
      if (e) rows_[i] = col.multiply(rows_[i], col.power(rows_[j], p - e));
    }
  }
}

std::optional<std::vector<int>> Subgroup::express(const ExpVec& x) const {
  Collector col(*pc_);
  std::vector<int> exps(rows_.size(), 0);
  ExpVec z = x;
  size_t ri = 0;
  int d = vec_depth(z);
  while (d <= pc_->ngens()) {
    while (ri < rows_.size() && vec_depth(rows_[ri]) < d) ++ri;
    if (ri == rows_.size() || vec_depth(rows_[ri]) != d) return std::nullopt;
    exps[ri] = int(z[d - 1]);
    // Unlike the membership sift, the true inverse power is needed here so
    // that x = prod rows^exps holds exactly (rows need not have order p).
    z = col.multiply(col.power(rows_[ri], -exps[ri]), z);
    d = vec_depth(z);
  }
  return exps;
}

std::string Subgroup::key() const {
  std::string k;
  k.reserve(rows_.size() * pc_->ngens() + 1);
  k.push_back(char(rows_.size()));
  for (const ExpVec& r : rows_) k.append(reinterpret_cast<const char*>(r.data()), r.size());
  return k;
}

std::vector<ExpVec> Subgroup::elements(uint64_t cap) const {
  if (order() > cap)
    throw CapExceeded("subgroup enumeration cap exceeded (order " + std::to_string(order()) + ")");
  Collector col(*pc_);
  std::vector<ExpVec> out{ExpVec(pc_->ngens(), 0)};
  out.reserve(order());
  for (int i = rank() - 1; i >= 0; --i) {
    std::vector<ExpVec> next;
    next.reserve(out.size() * pc_->prime());
    ExpVec rp(pc_->ngens(), 0);
    for (int e = 0; e < pc_->prime(); ++e) {
      for (const ExpVec& t : out) next.push_back(col.multiply(rp, t));
      if (e + 1 < pc_->prime()) rp = col.multiply(rp, rows_[i]);
    }
    out = std::move(next);
  }
  return out;
}

Subgroup span(const PcPresentation& pc, const std::vector<ExpVec>& gens) {
  Subgroup s(pc);
  Collector col(pc);
  std::deque<ExpVec> work(gens.begin(), gens.end());
  while (!work.empty()) {
    ExpVec x = std::move(work.front());
    work.pop_front();
    ExpVec r = s.sift(col, std::move(x));
    if (vec_depth(r) > pc.ngens()) continue;
    // Close under power and commutators with the existing rows.
    work.push_back(col.power(r, pc.prime()));
    for (const ExpVec& row : s.rows_) {
      work.push_back(col.commutator(r, row));
      work.push_back(col.commutator(row, r));
    }
    s.insert_row(col, std::move(r));
  }
  s.canonicalize(col);
  return s;
}

Subgroup span(const std::vector<Element>& gens, const PcPresentation& pc) {
  std::vector<ExpVec> vs;
  vs.reserve(gens.size());
  for (const Element& g : gens) {
    if (&g.ambient() != &pc) throw std::invalid_argument("element from a different ambient group");
    vs.push_back(g.exponents());
  }
  return span(pc, vs);
}

Subgroup whole_group(const PcPresentation& pc) {
  std::vector<ExpVec> gens;
  for (int i = 1; i <= pc.ngens(); ++i) {
    ExpVec v(pc.ngens(), 0);
    v[i - 1] = 1;
    gens.push_back(std::move(v));
  }
  return span(pc, gens);
}

bool is_normal(const Subgroup& h) {
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  for (const ExpVec& r : h.igs())
    for (int i = 1; i <= pc.ngens(); ++i) {
      if (!h.contains(col.conjugate(r, col.generator(i)))) return false;
    }
  return true;
}

Subgroup normal_closure(const PcPresentation& pc, const std::vector<ExpVec>& gens) {
  Collector col(pc);
  Subgroup s = span(pc, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExpVec> extra;
    for (const ExpVec& r : s.igs())
      for (int i = 1; i <= pc.ngens(); ++i) {
        ExpVec c = col.conjugate(r, col.generator(i));
        if (!s.contains(c)) extra.push_back(std::move(c));
      }
    if (!extra.empty()) {
      std::vector<ExpVec> all = s.igs();
      all.insert(all.end(), extra.begin(), extra.end());
      s = span(pc, all);
      grew = true;
    }
  }
  return s;
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  if (&h.ambient() != &k.ambient()) throw std::invalid_argument("subgroups of different ambients");
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  std::vector<ExpVec> gens;
  for (const ExpVec& a : h.igs())
    for (const ExpVec& b : k.igs()) gens.push_back(col.commutator(a, b));
  Subgroup s = span(pc, gens);
  // Close under conjugation by the generators of <H, K>.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExpVec> extra;
    for (const ExpVec& r : s.igs()) {
      for (const ExpVec& g : h.igs()) {
        ExpVec c = col.conjugate(r, g);
        if (!s.contains(c)) extra.push_back(std::move(c));
      }
      for (const ExpVec& g : k.igs()) {
        ExpVec c = col.conjugate(r, g);
        if (!s.contains(c)) extra.push_back(std::move(c));
      }
    }
    if (!extra.empty()) {
      std::vector<ExpVec> all = s.igs();
      all.insert(all.end(), extra.begin(), extra.end());
      s = span(pc, all);
      grew = true;
    }
  }
  return s;
}

Subgroup derived_subgroup(const PcPresentation& pc) {
  Subgroup g = whole_group(pc);
  return commutator_subgroup(g, g);
}

std::vector<Subgroup> lower_central_series(const PcPresentation& pc) {
  std::vector<Subgroup> series{whole_group(pc)};
  Subgroup g = series.front();
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), g);
    if (next.rank() == series.back().rank())
      throw std::logic_error("lower central series does not descend (inconsistent presentation?)");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const PcPresentation& pc) {
  return int(lower_central_series(pc).size()) - 1;
}

Subgroup center(const PcPresentation& pc, uint64_t cap) {
  Collector col(pc);
  std::vector<ExpVec> central;
  std::vector<ExpVec> gens;
  for (int i = 1; i <= pc.ngens(); ++i) gens.push_back(col.generator(i));
  enumerate_elements(pc, cap, [&](const ExpVec& x) {
    for (const ExpVec& g : gens)
      if (vec_depth(col.commutator(x, g)) <= pc.ngens()) return;
    central.push_back(x);
  });
  return span(pc, central);
}

Subgroup frattini(const PcPresentation& pc) {
  Collector col(pc);
  std::vector<ExpVec> gens;
  for (int i = 1; i <= pc.ngens(); ++i) gens.push_back(col.power(col.generator(i), pc.prime()));
  for (int j = 2; j <= pc.ngens(); ++j)
    for (int i = 1; i < j; ++i)
      gens.push_back(col.commutator(col.generator(j), col.generator(i)));
  return normal_closure(pc, gens);
}

Subgroup frattini(const Subgroup& h) {
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  std::vector<ExpVec> gens;
  for (const ExpVec& r : h.igs()) gens.push_back(col.power(r, pc.prime()));
  for (const ExpVec& a : h.igs())
    for (const ExpVec& b : h.igs()) gens.push_back(col.commutator(a, b));
  Subgroup s = span(pc, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExpVec> extra;
    for (const ExpVec& r : s.igs())
      for (const ExpVec& g : h.igs()) {
        ExpVec c = col.conjugate(r, g);
        if (!s.contains(c)) extra.push_back(std::move(c));
      }
    if (!extra.empty()) {
      std::vector<ExpVec> all = s.igs();
      all.insert(all.end(), extra.begin(), extra.end());
      s = span(pc, all);
      grew = true;
    }
  }
  return s;
}

int minimal_generators(const PcPresentation& pc) {
  return pc.ngens() - frattini(pc).rank();
}

int minimal_generators(const Subgroup& h) { return h.rank() - frattini(h).rank(); }

uint64_t exponent(const PcPresentation& pc, uint64_t cap) {
  Collector col(pc);
  uint64_t e = 1;
  enumerate_elements(pc, cap, [&](const ExpVec& x) { e = std::max(e, col.element_order(x)); });
  return e;
}

uint64_t exponent_of(const Subgroup& h, uint64_t cap) {
  Collector col(h.ambient());
  uint64_t e = 1;
  for (const ExpVec& x : h.elements(cap)) e = std::max(e, col.element_order(x));
  return e;
}

std::vector<ExpVec> order_set(const PcPresentation& pc, int k, uint64_t cap) {
  Collector col(pc);
  std::vector<ExpVec> out;
  enumerate_elements(pc, cap, [&](const ExpVec& x) {
    ExpVec z = x;
    for (int t = 0; t < k && vec_depth(z) <= pc.ngens(); ++t) z = col.power(z, pc.prime());
    if (vec_depth(z) > pc.ngens()) out.push_back(x);
  });
  return out;
}

std::vector<ExpVec> power_set(const PcPresentation& pc, int k, uint64_t cap) {
  Collector col(pc);
  std::vector<ExpVec> out;
  std::unordered_set<uint64_t> seen;
  enumerate_elements(pc, cap, [&](const ExpVec& x) {
    ExpVec z = x;
    for (int t = 0; t < k; ++t) z = col.power(z, pc.prime());
    if (seen.insert(vec_rank(z, pc.prime())).second) out.push_back(z);
  });
  return out;
}

Subgroup omega(const PcPresentation& pc, int k, uint64_t cap) {
  return span(pc, order_set(pc, k, cap));
}

Subgroup agemo(const PcPresentation& pc, int k, uint64_t cap) {
  return span(pc, power_set(pc, k, cap));
}

Subgroup omega_of(const Subgroup& h, int k, uint64_t cap) {
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  std::vector<ExpVec> gens;
  for (const ExpVec& x : h.elements(cap)) {
    ExpVec z = x;
    for (int t = 0; t < k && vec_depth(z) <= pc.ngens(); ++t) z = col.power(z, pc.prime());
    if (vec_depth(z) > pc.ngens()) gens.push_back(x);
  }
  return span(pc, gens);
}

Subgroup agemo_of(const Subgroup& h, int k, uint64_t cap) {
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  std::vector<ExpVec> gens;
  for (const ExpVec& x : h.elements(cap)) {
    ExpVec z = x;
    for (int t = 0; t < k; ++t) z = col.power(z, pc.prime());
    gens.push_back(z);
  }
  return span(pc, gens);
}

std::vector<Subgroup> maximal_subgroups(const Subgroup& h) {
  const PcPresentation& pc = h.ambient();
  const int p = pc.prime();
  if (h.is_trivial()) throw std::invalid_argument("trivial subgroup has no maximal subgroups");
  Subgroup phi = frattini(h);
  // Rows of h that are independent modulo phi form a basis of h/phi.
  std::vector<ExpVec> basis;
  Subgroup s = phi;
  for (const ExpVec& r : h.igs()) {
    if (!s.contains(r)) {
      basis.push_back(r);
      std::vector<ExpVec> all = phi.igs();
      all.insert(all.end(), basis.begin(), basis.end());
      s = span(pc, all);
    }
  }
  const int d = int(basis.size());
  Collector col(pc);
  std::vector<Subgroup> out;
  std::unordered_set<std::string> seen;
  // Normalized normal vectors v (first nonzero entry 1) of hyperplanes in F_p^d.
  std::vector<int> v(d, 0);
  auto next_vec = [&]() {
    for (int i = d - 1; i >= 0; --i) {
      if (++v[i] < p) return true;
      v[i] = 0;
    }
    return false;
  };
  while (next_vec()) {
    int pivot = 0;
    while (pivot < d && v[pivot] == 0) ++pivot;
    if (v[pivot] != 1) continue;  // not normalized
    std::vector<ExpVec> gens = phi.igs();
    for (int t = 0; t < d; ++t) {
      if (t == pivot) continue;
      // kernel basis vector e_t - v_t e_pivot
      ExpVec lift = basis[t];
      if (v[t]) lift = col.multiply(lift, col.power(basis[pivot], p - v[t]));
      gens.push_back(std::move(lift));
    }
    Subgroup m = span(pc, gens);
    if (m.order() * uint64_t(p) != h.order())
      throw std::logic_error("maximal subgroup has wrong index");
    if (seen.insert(m.key()).second) out.push_back(std::move(m));
  }
  if (uint64_t(out.size()) != (pow_u64(uint64_t(p), d) - 1) / uint64_t(p - 1))
    throw std::logic_error("unexpected maximal subgroup count");
  return out;
}

std::vector<Subgroup> maximal_subgroups(const PcPresentation& pc) {
  return maximal_subgroups(whole_group(pc));
}

std::vector<Subgroup> low_index_subgroups(const Subgroup& h, int index_exp) {
  std::vector<Subgroup> level{h};
  for (int step = 0; step < index_exp; ++step) {
    std::vector<Subgroup> next;
    std::unordered_set<std::string> seen;
    for (const Subgroup& s : level) {
      if (s.is_trivial()) continue;
      for (Subgroup& m : maximal_subgroups(s))
        if (seen.insert(m.key()).second) next.push_back(std::move(m));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Subgroup> low_index_subgroups(const PcPresentation& pc, int index_exp) {
  return low_index_subgroups(whole_group(pc), index_exp);
}

PcPresentation subgroup_presentation(const Subgroup& h) {
  const PcPresentation& pc = h.ambient();
  Collector col(pc);
  const int m = h.rank();
  auto express_word = [&](const ExpVec& x) {
    auto exps = h.express(x);
    if (!exps) throw std::logic_error("subgroup relation value escapes the subgroup");
    Word w;
    for (int t = 0; t < m; ++t)
      if ((*exps)[t]) w.push_back({t + 1, (*exps)[t]});
    return w;
  };
  std::vector<Word> power(m);
  std::vector<std::vector<Word>> comm(m);
  for (int j = 0; j < m; ++j) comm[j].resize(std::max(0, j));
  for (int t = 0; t < m; ++t) {
    power[t] = express_word(col.power(h.igs()[t], pc.prime()));
    for (int s = 0; s < t; ++s)
      comm[t][s] = express_word(col.commutator(h.igs()[t], h.igs()[s]));
  }
  PcPresentation sub(pc.prime(), m, std::move(power), std::move(comm));
  ConsistencyReport rep = check_consistency(sub);
  if (!rep.consistent)
    throw std::logic_error("subgroup presentation failed the consistency test: " +
                           rep.failures.front());
  return sub;
}

}  // namespace pgroup
