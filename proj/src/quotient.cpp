#include "pgroup/quotient.hpp"

#include <algorithm>

namespace pgroup {

namespace {

// Coset representative with zero coordinates at the kernel's leading depths.
ExpVec reduce_mod(const PcPresentation& pc, const Subgroup& n, Collector& col, ExpVec x) {
  const int p = pc.prime();
  for (const ExpVec& row : n.igs()) {
    int d = vec_depth(row);
    if (x[d - 1]) x = col.multiply(col.power(row, p - int(x[d - 1])), x);
  }
  return x;
}

}  // namespace

QuotientMap::QuotientMap(const PcPresentation& source, Subgroup kernel)
    : src_(&source), kernel_(std::move(kernel)) {
  if (&kernel_.ambient() != src_) throw std::invalid_argument("kernel has a different ambient group");
  if (!is_normal(kernel_)) throw std::invalid_argument("kernel subgroup is not normal");

  const int n = src_->ngens();
  const int p = src_->prime();
  std::vector<bool> is_kernel_depth(n + 1, false);
  for (const ExpVec& r : kernel_.igs()) is_kernel_depth[vec_depth(r)] = true;
  for (int d = 1; d <= n; ++d)
    if (!is_kernel_depth[d]) free_depths_.push_back(d);

  const int q = int(free_depths_.size());
  std::vector<int> pos(n + 1, 0);  // source depth -> quotient generator index
  for (int t = 0; t < q; ++t) pos[free_depths_[t]] = t + 1;

  Collector col(*src_);
  auto to_quotient_word = [&](const ExpVec& rep) {
    Word w;
    for (int d = 1; d <= n; ++d)
      if (rep[d - 1]) {
        if (!pos[d]) throw std::logic_error("coset representative not reduced");
        w.push_back({pos[d], int(rep[d - 1])});
      }
    return w;
  };

  std::vector<Word> power(q);
  std::vector<std::vector<Word>> comm(q);
  for (int j = 0; j < q; ++j) comm[j].resize(std::max(0, j));
  for (int t = 0; t < q; ++t) {
    ExpVec g = col.generator(free_depths_[t]);
    power[t] = to_quotient_word(reduce_mod(*src_, kernel_, col, col.power(g, p)));
    for (int s = 0; s < t; ++s) {
      ExpVec h = col.generator(free_depths_[s]);
      comm[t][s] = to_quotient_word(reduce_mod(*src_, kernel_, col, col.commutator(g, h)));
    }
  }

  target_ = std::make_shared<PcPresentation>(p, q, std::move(power), std::move(comm));
  ConsistencyReport rep = check_consistency(*target_);
  if (!rep.consistent)
    throw std::logic_error("quotient presentation failed the consistency test: " + rep.failures.front());
}

ExpVec QuotientMap::project(const ExpVec& x) const {
  Collector col(*src_);
  ExpVec rep = reduce_mod(*src_, kernel_, col, x);
  ExpVec out(free_depths_.size(), 0);
  for (size_t t = 0; t < free_depths_.size(); ++t) out[t] = rep[free_depths_[t] - 1];
  return out;
}

Element QuotientMap::project(const Element& x) const {
  if (&x.ambient() != src_) throw std::invalid_argument("element from a different ambient group");
  return Element(*target_, project(x.exponents()));
}

QuotientMap quotient(const PcPresentation& g, const Subgroup& n) { return QuotientMap(g, n); }

}  // namespace pgroup
