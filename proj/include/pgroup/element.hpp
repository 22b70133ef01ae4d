#pragma once

#include <cstdint>
#include <functional>

#include "pgroup/presentation.hpp"

namespace pgroup {

/// Collection-from-the-left kernel. Holds reusable scratch buffers so that
/// enumeration-heavy callers do not allocate per product.
class Collector {
 public:
  explicit Collector(const PcPresentation& pc) : pc_(&pc) {}

  const PcPresentation& presentation() const { return *pc_; }

  /// Normal form of u * v.
  ExpVec multiply(const ExpVec& u, const ExpVec& v);
  /// Normal form of the word w (syllables in any order, any exponents >= 0).
  ExpVec collect_word(const Word& w);
  ExpVec inverse(const ExpVec& u);
  /// u^k for any integer k (negative allowed).
  ExpVec power(const ExpVec& u, long long k);
  /// [u, v] = u^-1 v^-1 u v.
  ExpVec commutator(const ExpVec& u, const ExpVec& v);
  /// v^-1 u v.
  ExpVec conjugate(const ExpVec& u, const ExpVec& v);
  /// Least p^k with u^(p^k) = 1.
  uint64_t element_order(const ExpVec& u);

  ExpVec identity() const { return ExpVec(pc_->ngens(), 0); }
  ExpVec generator(int i) const;

 private:
  void push_word(const Word& w);
  void run();

  const PcPresentation* pc_;
  std::vector<Syllable> stack_;
  std::vector<uint8_t> acc_;
};

/// A group element in normal form, bound to its ambient presentation.
/// Immutable; all operations return new elements and require matching
/// ambients (std::invalid_argument otherwise).
class Element {
 public:
  Element(const PcPresentation& pc, ExpVec v);
  static Element identity(const PcPresentation& pc);
  static Element generator(const PcPresentation& pc, int i);
  /// Builds the normal form of an arbitrary word in the generators.
  static Element from_word(const PcPresentation& pc, const Word& w);

  const PcPresentation& ambient() const { return *pc_; }
  const ExpVec& exponents() const { return v_; }
  bool is_identity() const;
  int depth() const;  // index of first nonzero exponent, ngens+1 if identity

  Element operator*(const Element& rhs) const;
  Element inverse() const;
  Element pow(long long k) const;
  uint64_t order() const;

  friend Element commutator(const Element& x, const Element& y);
  friend Element conjugate(const Element& x, const Element& y);

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string str() const;  // e.g. "a1 a2^2" or "1"

 private:
  void check_ambient(const Element& other) const;
  const PcPresentation* pc_;
  ExpVec v_;
};

/// Index of the first nonzero entry (1-based); n+1 for the identity.
int vec_depth(const ExpVec& v);

/// Lexicographic rank of a normal form, e_1 most significant digit.
uint64_t vec_rank(const ExpVec& v, int p);
ExpVec vec_unrank(uint64_t r, int p, int n);

/// Calls fn for each of the p^n normal forms in lexicographic order.
/// Throws CapExceeded when p^n > cap.
void enumerate_elements(const PcPresentation& pc, uint64_t cap,
                        const std::function<void(const ExpVec&)>& fn);

}  // namespace pgroup
