#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgroup {

/// One syllable g^e of a word in the pc generators. Generators are 1-based.
struct Syllable {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A normal word: syllables with strictly increasing generator indices and
/// exponents in [1, p-1]. The empty word is the identity.
using Word = std::vector<Syllable>;

/// Dense exponent vector of length ngens, entries in [0, p-1].
using ExpVec = std::vector<uint8_t>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Raised when an operation would enumerate past the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A weighted power-commutator presentation of a finite p-group.
///
/// Generators a_1..a_n all have relative order p. Relations:
///   a_i^p       = power_rhs(i)   (a word in generators of index > i)
///   [a_j, a_i]  = comm_rhs(j,i)  (j > i; a word in generators of index > j)
/// with the commutator convention [x,y] = x^-1 y^-1 x y, so that
/// a_j a_i = a_i a_j [a_j, a_i].
///
/// Construction validates the weighted shape and reduces exponents mod p;
/// it does not run the consistency test (see check_consistency). ngens = 0
/// (the trivial group) is allowed so quotients by the whole group stay
/// representable; the text format itself requires ngens >= 1.
class PcPresentation {
 public:
  PcPresentation(int prime, int ngens, std::vector<Word> power_rhs,
                 std::vector<std::vector<Word>> comm_rhs);

  int prime() const { return p_; }
  int ngens() const { return n_; }

  /// Right-hand side of a_i^p, 1 <= i <= n.
  const Word& power_rhs(int i) const { return power_[i - 1]; }
  /// Right-hand side of [a_j, a_i], j > i.
  const Word& comm_rhs(int j, int i) const { return comm_[tri(j, i)]; }
  bool comm_trivial(int j, int i) const { return comm_[tri(j, i)].empty(); }

  /// Group order as p^n; throws CapExceeded if it does not fit in 64 bits.
  uint64_t order() const;

  /// Parse the PCP text format. Line-oriented, '#' starts a comment:
  ///   p 3
  ///   ngens 4
  ///   power 1 : 4^1
  ///   comm 2 1 : 3^1
  /// Omitted comm lines mean a trivial commutator, an omitted RHS the
  /// identity. RHS atoms g^e need strictly increasing g and 0 <= e < p.
  static PcPresentation parse(const std::string& text);

  /// Canonical serialization; parse(serialize()) round-trips byte-identically.
  std::string serialize() const;

  friend bool operator==(const PcPresentation&, const PcPresentation&);

 private:
  size_t tri(int j, int i) const { return size_t(j - 2) * (j - 1) / 2 + (i - 1); }
  void validate_word(const Word& w, int min_gen, const char* what) const;

  int p_ = 0;
  int n_ = 0;
  std::vector<Word> power_;  // power_[i-1] for generator i
  std::vector<Word> comm_;   // triangular, comm_[tri(j,i)] for j > i
};

using PcpPtr = std::shared_ptr<const PcPresentation>;

struct ConsistencyReport {
  bool consistent = true;
  std::vector<std::string> failures;  // one line per failed test word
};

/// Evaluate the standard consistency test words under collection:
///   a_k(a_j a_i) = (a_k a_j)a_i          k > j > i
///   a_j^p a_i    = a_j^{p-1}(a_j a_i)    j > i
///   a_j(a_i^p)   = (a_j a_i)a_i^{p-1}    j > i
///   a_i^p a_i    = a_i a_i^p
/// The presentation defines a group of order p^n exactly when all hold.
ConsistencyReport check_consistency(const PcPresentation& pc);

ExpVec word_to_vec(const PcPresentation& pc, const Word& w);
Word vec_to_word(const ExpVec& v);

}  // namespace pgroup
