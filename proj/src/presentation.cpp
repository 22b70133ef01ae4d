#include "pgroup/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pgroup/element.hpp"

namespace pgroup {

ParseError::ParseError(std::string msg, int line, int col)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + std::move(msg)),
      line_(line),
      col_(col) {}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PcPresentation::PcPresentation(int prime, int ngens, std::vector<Word> power_rhs,
                               std::vector<std::vector<Word>> comm_rhs)
    : p_(prime), n_(ngens) {
  if (!is_prime(p_)) throw std::invalid_argument("prime not prime: " + std::to_string(p_));
  if (n_ < 0) throw std::invalid_argument("ngens must be >= 0");
  if (int(power_rhs.size()) != n_) throw std::invalid_argument("power_rhs size mismatch");
  if (int(comm_rhs.size()) != n_) throw std::invalid_argument("comm_rhs size mismatch");

  power_.resize(n_);
  comm_.resize(size_t(n_) * (n_ - 1) / 2);
  for (int i = 1; i <= n_; ++i) {
    Word w = std::move(power_rhs[i - 1]);
    validate_word(w, i + 1, "power relation");
    power_[i - 1] = std::move(w);
  }
  for (int j = 1; j <= n_; ++j) {
    if (int(comm_rhs[j - 1].size()) != (j - 1))
      throw std::invalid_argument("comm_rhs row size mismatch at row " + std::to_string(j));
    for (int i = 1; i < j; ++i) {
      Word w = std::move(comm_rhs[j - 1][i - 1]);
      validate_word(w, j + 1, "commutator relation");
      comm_[tri(j, i)] = std::move(w);
    }
  }
}

void PcPresentation::validate_word(const Word& w, int min_gen, const char* what) const {
  int prev = 0;
  for (const Syllable& s : w) {
    if (s.gen < 1 || s.gen > n_)
      throw std::invalid_argument(std::string(what) + ": generator out of range");
    if (s.gen < min_gen)
      throw std::invalid_argument(std::string(what) + ": not weighted (generator " +
                                  std::to_string(s.gen) + " below " + std::to_string(min_gen) + ")");
    if (s.gen <= prev)
      throw std::invalid_argument(std::string(what) + ": generators not strictly increasing");
    if (s.exp < 1 || s.exp >= p_)
      throw std::invalid_argument(std::string(what) + ": exponent out of range");
    prev = s.gen;
  }
}

uint64_t PcPresentation::order() const {
  uint64_t o = 1;
  for (int i = 0; i < n_; ++i) {
    if (o > UINT64_MAX / uint64_t(p_)) throw CapExceeded("group order exceeds 64 bits");
    o *= uint64_t(p_);
  }
  return o;
}

bool operator==(const PcPresentation& a, const PcPresentation& b) {
  return a.p_ == b.p_ && a.n_ == b.n_ && a.power_ == b.power_ && a.comm_ == b.comm_;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1;
  int col = 1;
};

// Tokenized line: keyword plus fields, comments stripped.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::vector<int> cols;  // 1-based start column per token
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (size_t h = raw.find('#'); h != std::string::npos) raw.erase(h);
    Line l;
    l.number = number;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      l.tokens.push_back(raw.substr(i, j - i));
      l.cols.push_back(int(i) + 1);
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

int parse_int(const std::string& tok, const Line& l, int ti) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", l.number, l.cols[ti]);
  }
  if (used != tok.size())
    throw ParseError("expected integer, got '" + tok + "'", l.number, l.cols[ti]);
  return v;
}

// RHS tokens: atoms g^e with strictly increasing g.
Word parse_rhs(const Line& l, size_t first_tok, int p, int ngens) {
  Word w;
  int prev = 0;
  for (size_t ti = first_tok; ti < l.tokens.size(); ++ti) {
    const std::string& tok = l.tokens[ti];
    size_t caret = tok.find('^');
    if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
      throw ParseError("expected atom g^e, got '" + tok + "'", l.number, l.cols[ti]);
    int g = 0, e = 0;
    try {
      size_t used = 0;
      g = std::stoi(tok.substr(0, caret), &used);
      if (used != caret) throw std::invalid_argument("");
      std::string etok = tok.substr(caret + 1);
      e = std::stoi(etok, &used);
      if (used != etok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("expected atom g^e, got '" + tok + "'", l.number, l.cols[ti]);
    }
    if (g < 1 || g > ngens)
      throw ParseError("generator index " + std::to_string(g) + " out of range", l.number, l.cols[ti]);
    if (g <= prev)
      throw ParseError("generators must be strictly increasing", l.number, l.cols[ti]);
    if (e < 0 || e >= p)
      throw ParseError("exponent out of range [0," + std::to_string(p - 1) + "]", l.number,
                       l.cols[ti]);
    if (e > 0) w.push_back({g, e});
    prev = g;
  }
  return w;
}

}  // namespace

PcPresentation PcPresentation::parse(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  size_t li = 0;
  auto expect_keyword = [&](const char* kw) -> const Line& {
    if (li >= lines.size()) throw ParseError(std::string("expected '") + kw + "'", 0, 0);
    const Line& l = lines[li];
    if (l.tokens[0] != kw)
      throw ParseError(std::string("expected '") + kw + "', got '" + l.tokens[0] + "'", l.number,
                       l.cols[0]);
    return l;
  };

  const Line& pl = expect_keyword("p");
  if (pl.tokens.size() != 2) throw ParseError("expected 'p <prime>'", pl.number, pl.cols[0]);
  int p = parse_int(pl.tokens[1], pl, 1);
  if (!is_prime(p)) throw ParseError("prime not prime: " + std::to_string(p), pl.number, pl.cols[1]);
  ++li;

  const Line& nl = expect_keyword("ngens");
  if (nl.tokens.size() != 2) throw ParseError("expected 'ngens <n>'", nl.number, nl.cols[0]);
  int n = parse_int(nl.tokens[1], nl, 1);
  if (n < 1) throw ParseError("ngens must be >= 1", nl.number, nl.cols[1]);
  ++li;

  std::vector<Word> power(n);
  std::vector<std::vector<Word>> comm(n);
  for (int j = 0; j < n; ++j) comm[j].resize(std::max(0, j));
  std::vector<bool> power_seen(n, false);
  std::vector<std::vector<bool>> comm_seen(n);
  for (int j = 0; j < n; ++j) comm_seen[j].assign(std::max(0, j), false);

  for (; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& kw = l.tokens[0];
    if (kw == "power") {
      if (l.tokens.size() < 3 || l.tokens[2] != ":")
        throw ParseError("expected 'power <i> : <rhs>'", l.number, l.cols[0]);
      int i = parse_int(l.tokens[1], l, 1);
      if (i < 1 || i > n) throw ParseError("generator index out of range", l.number, l.cols[1]);
      if (power_seen[i - 1]) throw ParseError("duplicate power relation", l.number, l.cols[0]);
      power_seen[i - 1] = true;
      Word w = parse_rhs(l, 3, p, n);
      if (!w.empty() && w.front().gen <= i)
        throw ParseError("relation not weighted: rhs of power " + std::to_string(i) +
                             " must involve only generators > " + std::to_string(i),
                         l.number, l.cols[3]);
      power[i - 1] = std::move(w);
    } else if (kw == "comm") {
      if (l.tokens.size() < 4 || l.tokens[3] != ":")
        throw ParseError("expected 'comm <j> <i> : <rhs>'", l.number, l.cols[0]);
      int j = parse_int(l.tokens[1], l, 1);
      int i = parse_int(l.tokens[2], l, 2);
      if (j < 1 || j > n || i < 1 || i > n)
        throw ParseError("generator index out of range", l.number, l.cols[1]);
      if (j <= i) throw ParseError("comm j i requires j > i", l.number, l.cols[1]);
      if (comm_seen[j - 1][i - 1]) throw ParseError("duplicate comm relation", l.number, l.cols[0]);
      comm_seen[j - 1][i - 1] = true;
      Word w = parse_rhs(l, 4, p, n);
      if (!w.empty() && w.front().gen <= j)
        throw ParseError("relation not weighted: rhs of comm " + std::to_string(j) + " " +
                             std::to_string(i) + " must involve only generators > " +
                             std::to_string(j),
                         l.number, l.cols[4]);
      comm[j - 1][i - 1] = std::move(w);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", l.number, l.cols[0]);
    }
  }

  return PcPresentation(p, n, std::move(power), std::move(comm));
}

std::string PcPresentation::serialize() const {
  std::ostringstream out;
  auto emit_word = [&](const Word& w) {
    for (size_t k = 0; k < w.size(); ++k)
      out << (k ? " " : " ") << w[k].gen << '^' << w[k].exp;
  };
  out << "p " << p_ << '\n';
  out << "ngens " << n_ << '\n';
  for (int i = 1; i <= n_; ++i) {
    out << "power " << i << " :";
    emit_word(power_rhs(i));
    out << '\n';
  }
  for (int j = 2; j <= n_; ++j)
    for (int i = 1; i < j; ++i) {
      if (comm_trivial(j, i)) continue;
      out << "comm " << j << ' ' << i << " :";
      emit_word(comm_rhs(j, i));
      out << '\n';
    }
  return out.str();
}

ExpVec word_to_vec(const PcPresentation& pc, const Word& w) {
  ExpVec v(pc.ngens(), 0);
  for (const Syllable& s : w) v[s.gen - 1] = uint8_t(s.exp % pc.prime());
  return v;
}

Word vec_to_word(const ExpVec& v) {
  Word w;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) w.push_back({int(i) + 1, int(v[i])});
  return w;
}

ConsistencyReport check_consistency(const PcPresentation& pc) {
  ConsistencyReport rep;
  Collector col(pc);
  const int n = pc.ngens();
  const int p = pc.prime();

  auto fail = [&](const std::string& what, const ExpVec& lhs, const ExpVec& rhs) {
    rep.consistent = false;
    std::ostringstream os;
    os << what << ": " << Element(pc, lhs).str() << " != " << Element(pc, rhs).str();
    rep.failures.push_back(os.str());
  };

  // a_k (a_j a_i) = (a_k a_j) a_i for k > j > i. Both sides collect the word
  // a_k a_j a_i; they differ in the association order.
  for (int k = 3; k <= n; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        ExpVec ak = col.generator(k), aj = col.generator(j), ai = col.generator(i);
        ExpVec lhs = col.multiply(ak, col.multiply(aj, ai));
        ExpVec rhs = col.multiply(col.multiply(ak, aj), ai);
        if (lhs != rhs)
          fail("assoc a" + std::to_string(k) + " a" + std::to_string(j) + " a" + std::to_string(i),
               lhs, rhs);
      }

  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      ExpVec aj = col.generator(j), ai = col.generator(i);
      // a_j^p a_i = a_j^{p-1} (a_j a_i)
      ExpVec lhs = col.multiply(col.power(aj, p), ai);
      ExpVec rhs = col.multiply(col.power(aj, p - 1), col.multiply(aj, ai));
      if (lhs != rhs) fail("power overlap a" + std::to_string(j) + "^p a" + std::to_string(i), lhs, rhs);
      // a_j (a_i^p) = (a_j a_i) a_i^{p-1}
      lhs = col.multiply(aj, col.power(ai, p));
      rhs = col.multiply(col.multiply(aj, ai), col.power(ai, p - 1));
      if (lhs != rhs) fail("power overlap a" + std::to_string(j) + " a" + std::to_string(i) + "^p", lhs, rhs);
    }

  // a_i^p a_i = a_i a_i^p
  for (int i = 1; i <= n; ++i) {
    ExpVec ai = col.generator(i);
    ExpVec lhs = col.multiply(col.power(ai, p), ai);
    ExpVec rhs = col.multiply(ai, col.power(ai, p));
    if (lhs != rhs) fail("power overlap a" + std::to_string(i) + "^p a" + std::to_string(i), lhs, rhs);
  }

  return rep;
}

}  // namespace pgroup
