#include "pgroup/element.hpp"

#include <sstream>

namespace pgroup {

ExpVec Collector::generator(int i) const {
  ExpVec v(pc_->ngens(), 0);
  v.at(i - 1) = 1;
  return v;
}

void Collector::push_word(const Word& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) stack_.push_back(*it);
}

// Collection from the left. acc_ holds the collected normal-form prefix,
// stack_ the remaining word (top = leftmost). Each step pops one syllable
// a_g^e and either merges it into acc_ or applies a single defining relation
// at the junction. Termination is the classical property of weighted
// presentations: rewrites only create generators of strictly larger index.
void Collector::run() {
  const int p = pc_->prime();
  while (!stack_.empty()) {
    Syllable s = stack_.back();
    stack_.pop_back();
    if (s.exp == 0) continue;
    const int g = s.gen;

    int h = 0;  // largest index with a nonzero collected exponent
    for (int i = pc_->ngens(); i >= 1; --i)
      if (acc_[i - 1]) {
        h = i;
        break;
      }

    if (h <= g) {
      int total = acc_[g - 1] + s.exp;
      acc_[g - 1] = uint8_t(total % p);
      for (int q = total / p; q > 0; --q) push_word(pc_->power_rhs(g));
      continue;
    }

    if (pc_->comm_trivial(h, g)) {
      // a_h^f and a_g^e commute; re-queue both with a_g in front.
      stack_.push_back({h, int(acc_[h - 1])});
      stack_.push_back(s);
      acc_[h - 1] = 0;
      continue;
    }

    // One letter swap at the junction: a_h a_g -> a_g a_h [a_h, a_g].
    acc_[h - 1] -= 1;
    if (s.exp > 1) stack_.push_back({g, s.exp - 1});
    push_word(pc_->comm_rhs(h, g));
    stack_.push_back({h, 1});
    stack_.push_back({g, 1});
  }
}

ExpVec Collector::multiply(const ExpVec& u, const ExpVec& v) {
  stack_.clear();
  for (int i = pc_->ngens(); i >= 1; --i)
    if (v[i - 1]) stack_.push_back({i, int(v[i - 1])});
  if (&u != &acc_) acc_ = u;
  run();
  return acc_;
}

ExpVec Collector::collect_word(const Word& w) {
  stack_.clear();
  push_word(w);
  acc_.assign(pc_->ngens(), 0);
  run();
  return acc_;
}

ExpVec Collector::inverse(const ExpVec& u) {
  const int p = pc_->prime();
  ExpVec inv(pc_->ngens(), 0);
  ExpVec z = u;
  int d = vec_depth(z);
  while (d <= pc_->ngens()) {
    // Right-multiplying by a_d^(p-e) clears the leading coordinate; the
    // coordinate map on elements of depth >= d is additive there.
    Word step{{d, p - int(z[d - 1])}};
    stack_.clear();
    push_word(step);
    acc_ = z;
    run();
    z = acc_;
    stack_.clear();
    push_word(step);
    acc_ = inv;
    run();
    inv = acc_;
    d = vec_depth(z);
  }
  return inv;
}

ExpVec Collector::power(const ExpVec& u, long long k) {
  ExpVec base = u;
  if (k < 0) {
    base = inverse(base);
    k = -k;
  }
  ExpVec r(pc_->ngens(), 0);
  unsigned long long e = (unsigned long long)(k);
  while (e) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

ExpVec Collector::commutator(const ExpVec& u, const ExpVec& v) {
  ExpVec iu = inverse(u);
  ExpVec iv = inverse(v);
  return multiply(multiply(iu, iv), multiply(u, v));
}

ExpVec Collector::conjugate(const ExpVec& u, const ExpVec& v) {
  return multiply(multiply(inverse(v), u), v);
}

uint64_t Collector::element_order(const ExpVec& u) {
  uint64_t ord = 1;
  ExpVec z = u;
  while (vec_depth(z) <= pc_->ngens()) {
    z = power(z, pc_->prime());
    ord *= uint64_t(pc_->prime());
  }
  return ord;
}

int vec_depth(const ExpVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return int(i) + 1;
  return int(v.size()) + 1;
}

uint64_t vec_rank(const ExpVec& v, int p) {
  uint64_t r = 0;
  for (uint8_t e : v) r = r * uint64_t(p) + e;
  return r;
}

ExpVec vec_unrank(uint64_t r, int p, int n) {
  ExpVec v(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = uint8_t(r % uint64_t(p));
    r /= uint64_t(p);
  }
  return v;
}

void enumerate_elements(const PcPresentation& pc, uint64_t cap,
                        const std::function<void(const ExpVec&)>& fn) {
  uint64_t total = 1;
  for (int i = 0; i < pc.ngens(); ++i) {
    if (total > cap / uint64_t(pc.prime()))
      throw CapExceeded("enumeration cap exceeded: group order p^" + std::to_string(pc.ngens()) +
                        " > " + std::to_string(cap));
    total *= uint64_t(pc.prime());
  }
  ExpVec v(pc.ngens(), 0);
  for (uint64_t r = 0; r < total; ++r) {
    fn(v);
    // odometer, least significant digit last: yields lexicographic order
    for (int i = pc.ngens() - 1; i >= 0; --i) {
      if (++v[i] < pc.prime()) break;
      v[i] = 0;
    }
  }
}

Element::Element(const PcPresentation& pc, ExpVec v) : pc_(&pc), v_(std::move(v)) {
  if (int(v_.size()) != pc.ngens()) throw std::invalid_argument("exponent vector length mismatch");
  for (uint8_t e : v_)
    if (e >= pc.prime()) throw std::invalid_argument("exponent out of range");
}

Element Element::identity(const PcPresentation& pc) { return Element(pc, ExpVec(pc.ngens(), 0)); }

Element Element::generator(const PcPresentation& pc, int i) {
  ExpVec v(pc.ngens(), 0);
  v.at(i - 1) = 1;
  return Element(pc, std::move(v));
}

Element Element::from_word(const PcPresentation& pc, const Word& w) {
  Collector col(pc);
  return Element(pc, col.collect_word(w));
}

bool Element::is_identity() const { return vec_depth(v_) > pc_->ngens(); }

int Element::depth() const { return vec_depth(v_); }

void Element::check_ambient(const Element& other) const {
  if (pc_ != other.pc_) throw std::invalid_argument("elements have different ambient groups");
}

Element Element::operator*(const Element& rhs) const {
  check_ambient(rhs);
  Collector col(*pc_);
  return Element(*pc_, col.multiply(v_, rhs.v_));
}

Element Element::inverse() const {
  Collector col(*pc_);
  return Element(*pc_, col.inverse(v_));
}

Element Element::pow(long long k) const {
  Collector col(*pc_);
  return Element(*pc_, col.power(v_, k));
}

uint64_t Element::order() const {
  Collector col(*pc_);
  return col.element_order(v_);
}

Element commutator(const Element& x, const Element& y) {
  x.check_ambient(y);
  Collector col(x.ambient());
  return Element(x.ambient(), col.commutator(x.v_, y.v_));
}

Element conjugate(const Element& x, const Element& y) {
  x.check_ambient(y);
  Collector col(x.ambient());
  return Element(x.ambient(), col.conjugate(x.v_, y.v_));
}

bool operator==(const Element& a, const Element& b) { return a.pc_ == b.pc_ && a.v_ == b.v_; }

std::string Element::str() const {
  if (is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= pc_->ngens(); ++i) {
    if (!v_[i - 1]) continue;
    if (!first) os << ' ';
    first = false;
    os << 'a' << i;
    if (v_[i - 1] > 1) os << '^' << int(v_[i - 1]);
  }
  return os.str();
}

}  // namespace pgroup
