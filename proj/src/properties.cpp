#include "pgroup/properties.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace pgroup {

std::string to_string(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    default: return "skipped";
  }
}

namespace {

std::vector<Subgroup> lower_central_series_of(const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (!series.back().is_trivial()) {
    Subgroup next = commutator_subgroup(series.back(), h);
    if (next.rank() == series.back().rank())
      throw std::logic_error("subgroup lower central series does not descend");
    series.push_back(std::move(next));
  }
  return series;
}

// gamma_k(h), trivial when the series is shorter.
Subgroup gamma_term(const std::vector<Subgroup>& series, size_t k) {
  if (k == 0) throw std::logic_error("gamma_0 undefined");
  if (k <= series.size()) return series[k - 1];
  return series.back();
}

}  // namespace

bool is_powerful(const Subgroup& h, uint64_t enum_cap) {
  const int p = h.ambient().prime();
  Subgroup derived = commutator_subgroup(h, h);
  if (derived.is_trivial()) return true;
  Subgroup target = agemo_of(h, p == 2 ? 2 : 1, enum_cap);
  return target.contains(derived);
}

bool is_powerful(const PcPresentation& g, uint64_t enum_cap) {
  return is_powerful(whole_group(g), enum_cap);
}

bool is_potent(const Subgroup& h, uint64_t enum_cap) {
  const int p = h.ambient().prime();
  if (p <= 3) return is_powerful(h, enum_cap);
  std::vector<Subgroup> series = lower_central_series_of(h);
  Subgroup gp1 = gamma_term(series, size_t(p) - 1);
  if (gp1.is_trivial()) return true;
  return agemo_of(h, 1, enum_cap).contains(gp1);
}

bool is_potent(const PcPresentation& g, uint64_t enum_cap) {
  return is_potent(whole_group(g), enum_cap);
}

namespace {

// Shared machinery for the O(|G|^2) pair sweeps. Data for T = <a,b> is
// cached by the canonical IGS key; in practice the number of distinct
// 2-generated subgroups is far below the number of pairs.
class PairSweep {
 public:
  PairSweep(const PcPresentation& g, const Caps& caps) : g_(g), caps_(caps), e_(g, caps.enum_cap) {}

  EnumeratedGroup& group() { return e_; }

  // Runs fn over unordered pairs of ranks: exhaustive when |G| <= pair_cap,
  // otherwise sample_pairs draws from a seeded generator. fn returns false
  // to report a violation (sweep stops).
  bool sweep(const std::function<bool(uint64_t, uint64_t)>& fn) {
    if (e_.size() <= caps_.pair_cap) {
      for (uint64_t a = 1; a < e_.size(); ++a)
        for (uint64_t b = a + 1; b < e_.size(); ++b)
          if (!fn(a, b)) return false;
      return true;
    }
    std::mt19937_64 rng(caps_.seed);
    std::uniform_int_distribution<uint64_t> dist(1, e_.size() - 1);
    for (uint64_t t = 0; t < caps_.sample_pairs; ++t)
      if (!fn(dist(rng), dist(rng))) return false;
    return true;
  }

  bool pair_exhaustive() const { return e_.size() <= caps_.pair_cap; }

  const Subgroup& congruence_kernel(const ExpVec& a, const ExpVec& b, int n) {
    Subgroup t = span(g_, {a, b});
    std::string key = std::string(1, char('0' + n)) + t.key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    // agemo_n(gamma_2(T)) agemo_{n-1}(gamma_p(T)) ... gamma_{p^n}(T)
    std::vector<Subgroup> series = lower_central_series_of(t);
    std::vector<ExpVec> gens;
    for (int s = n; s >= 0; --s) {
      // gamma index: 2 for the leading term, then p^(n-s), saturated past
      // the (finite) series length.
      uint64_t gidx = 2;
      if (s < n) {
        gidx = 1;
        for (int e = 0; e < n - s && gidx <= uint64_t(series.size()); ++e)
          gidx *= uint64_t(g_.prime());
      }
      if (gidx > uint64_t(series.size())) continue;  // trivial term
      const Subgroup& term = series[gidx - 1];
      if (term.is_trivial()) continue;
      Subgroup part = s == 0 ? term : agemo_of(term, s, caps_.enum_cap);
      for (const ExpVec& r : part.igs()) gens.push_back(r);
    }
    Subgroup k = span(g_, gens);
    return cache_.emplace(std::move(key), std::move(k)).first->second;
  }

  // agemo_1([T,T]) for the regularity criterion.
  const Subgroup& regularity_kernel(const ExpVec& a, const ExpVec& b) {
    Subgroup t = span(g_, {a, b});
    std::string key = "r" + t.key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Subgroup derived = commutator_subgroup(t, t);
    Subgroup k = derived.is_trivial() ? derived : agemo_of(derived, 1, caps_.enum_cap);
    return cache_.emplace(std::move(key), std::move(k)).first->second;
  }

 private:
  const PcPresentation& g_;
  const Caps& caps_;
  EnumeratedGroup e_;
  std::unordered_map<std::string, Subgroup> cache_;
};

}  // namespace

TriState is_regular(const PcPresentation& g, const Caps& caps) {
  uint64_t order = 1;
  for (int i = 0; i < g.ngens(); ++i) order *= uint64_t(g.prime());
  if (order > caps.pair_cap) return TriState::Skipped;

  PairSweep sweep(g, caps);
  EnumeratedGroup& e = sweep.group();
  Collector col(g);
  const int p = g.prime();
  bool ok = sweep.sweep([&](uint64_t ra, uint64_t rb) {
    const ExpVec& a = e.vec(ra);
    const ExpVec& b = e.vec(rb);
    ExpVec ab_p = col.power(col.multiply(a, b), p);
    ExpVec apbp = col.multiply(col.power(a, p), col.power(b, p));
    if (ab_p == apbp) return true;
    ExpVec s = col.multiply(col.inverse(apbp), ab_p);
    return sweep.regularity_kernel(a, b).contains(s);
  });
  return ok ? TriState::True : TriState::False;
}

bool is_Mi(const PcPresentation& g, int i, uint64_t enum_cap) {
  if (i == 0) return is_powerful(g, enum_cap);
  std::vector<Subgroup> level{whole_group(g)};
  for (int step = 1; step <= i; ++step) {
    std::vector<Subgroup> next;
    std::unordered_map<std::string, bool> seen;
    for (const Subgroup& s : level) {
      if (s.is_trivial()) continue;
      for (Subgroup& m : maximal_subgroups(s)) {
        auto [it, fresh] = seen.emplace(m.key(), true);
        if (!fresh) continue;
        if (step == i && !is_powerful(m, enum_cap)) return false;
        next.push_back(std::move(m));
      }
    }
    level = std::move(next);
  }
  return true;
}

bool cond_power(EnumeratedGroup& e, int i) {
  ElementSet raw = e.power_set(i);
  Subgroup closed = span(e.presentation(), [&] {
    std::vector<ExpVec> gens;
    for (uint64_t r : raw.members()) gens.push_back(e.vec(r));
    return gens;
  }());
  return closed.order() == raw.count();
}

bool cond_omega(EnumeratedGroup& e, int i) {
  ElementSet raw = e.order_set(i);
  Subgroup closed = span(e.presentation(), [&] {
    std::vector<ExpVec> gens;
    for (uint64_t r : raw.members()) gens.push_back(e.vec(r));
    return gens;
  }());
  return closed.order() == raw.count();
}

bool cond_index(EnumeratedGroup& e, int i) {
  ElementSet powers = e.power_set(i);
  ElementSet orders = e.order_set(i);
  std::vector<ExpVec> pg, og;
  for (uint64_t r : powers.members()) pg.push_back(e.vec(r));
  for (uint64_t r : orders.members()) og.push_back(e.vec(r));
  Subgroup agemo_i = span(e.presentation(), pg);
  Subgroup omega_i = span(e.presentation(), og);
  return e.size() == agemo_i.order() * omega_i.order();
}

bool cond_power(const PcPresentation& g, int i, uint64_t enum_cap) {
  EnumeratedGroup e(g, enum_cap);
  return cond_power(e, i);
}

bool cond_omega(const PcPresentation& g, int i, uint64_t enum_cap) {
  EnumeratedGroup e(g, enum_cap);
  return cond_omega(e, i);
}

bool cond_index(const PcPresentation& g, int i, uint64_t enum_cap) {
  EnumeratedGroup e(g, enum_cap);
  return cond_index(e, i);
}

bool regular_power_structure(const PcPresentation& g, uint64_t enum_cap) {
  EnumeratedGroup e(g, enum_cap);
  int ee = 0;
  for (uint64_t r = 0; r < e.size(); ++r) ee = std::max(ee, e.order_exp(r));
  for (int i = 1; i <= ee; ++i)
    if (!cond_power(e, i) || !cond_omega(e, i) || !cond_index(e, i)) return false;
  return true;
}

namespace {

TriState section_condition(const PcPresentation& g, const Caps& caps, bool power_condition) {
  uint64_t order = 1;
  for (int i = 0; i < g.ngens(); ++i) order *= uint64_t(g.prime());
  if (order > caps.section_cap) return TriState::Skipped;

  // Sections H/N: H over all subgroups, N over normal subgroups of H.
  for (int idx = 0; idx <= g.ngens(); ++idx) {
    for (const Subgroup& h : low_index_subgroups(g, idx)) {
      if (h.is_trivial()) continue;
      PcPresentation hp = subgroup_presentation(h);
      for (int t = 0; t <= hp.ngens(); ++t)
        for (const Subgroup& n : low_index_subgroups(hp, t)) {
          if (!is_normal(n)) continue;
          PcpPtr section;
          if (n.is_trivial()) {
            section = std::make_shared<PcPresentation>(hp);
          } else if (n.is_whole_group()) {
            continue;
          } else {
            section = quotient(hp, n).target_ptr();
          }
          EnumeratedGroup se(*section, caps.enum_cap);
          if (power_condition ? !cond_power(se, 1) : !cond_omega(se, 1)) return TriState::False;
        }
    }
  }
  return TriState::True;
}

}  // namespace

TriState is_P1(const PcPresentation& g, const Caps& caps) {
  return section_condition(g, caps, true);
}

TriState is_P2(const PcPresentation& g, const Caps& caps) {
  return section_condition(g, caps, false);
}

bool hall_congruence_check(const PcPresentation& g, int n, const Caps& caps) {
  PairSweep sweep(g, caps);
  EnumeratedGroup& e = sweep.group();
  Collector col(g);
  uint64_t pn = 1;
  for (int t = 0; t < n; ++t) pn *= uint64_t(g.prime());
  return sweep.sweep([&](uint64_t ra, uint64_t rb) {
    const ExpVec& x = e.vec(ra);
    const ExpVec& y = e.vec(rb);
    ExpVec lhs = col.power(col.multiply(x, y), (long long)(pn));
    ExpVec rhs = col.multiply(col.power(x, (long long)(pn)), col.power(y, (long long)(pn)));
    if (lhs == rhs) return true;
    ExpVec s = col.multiply(col.inverse(rhs), lhs);
    return sweep.congruence_kernel(x, y, n).contains(s);
  });
}

bool wilson_omega_check(const PcPresentation& g, int m, int k, uint64_t enum_cap) {
  QuotientMap q = quotient(g, omega(g, m, enum_cap));
  Subgroup lhs = omega(q.target(), k, enum_cap);
  Subgroup omega_mk = omega(g, m + k, enum_cap);
  std::vector<ExpVec> image;
  for (const ExpVec& r : omega_mk.igs()) image.push_back(q.project(r));
  Subgroup rhs = span(q.target(), image);
  return lhs == rhs;
}

bool agemo_ratio_check(const PcPresentation& g, const Subgroup& maximal, uint64_t enum_cap) {
  uint64_t ag = agemo(g, 1, enum_cap).order();
  uint64_t am = agemo_of(maximal, 1, enum_cap).order();
  return ag == am || ag == uint64_t(g.prime()) * am;
}

PropertyReport build_report(const std::string& id, const PcPresentation& g, const Caps& caps,
                            int max_m_level) {
  auto start = std::chrono::steady_clock::now();
  PropertyReport r;
  r.id = id;
  r.prime = g.prime();
  r.order_exp = g.ngens();
  r.d = minimal_generators(g);
  r.nilpotency_class = nilpotency_class(g);

  EnumeratedGroup e(g, caps.enum_cap);
  r.exponent_exp = 0;
  for (uint64_t x = 0; x < e.size(); ++x) r.exponent_exp = std::max(r.exponent_exp, e.order_exp(x));

  r.powerful = is_powerful(g, caps.enum_cap);
  r.potent = is_potent(g, caps.enum_cap);
  r.regular = is_regular(g, caps);
  for (int i = 1; i <= max_m_level; ++i) r.m_levels[i] = is_Mi(g, i, caps.enum_cap);
  for (int i = 1; i <= r.exponent_exp; ++i)
    r.conditions.push_back({i, cond_power(e, i), cond_omega(e, i), cond_index(e, i)});
  r.p1 = is_P1(g, caps);
  r.p2 = is_P2(g, caps);

  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string PropertyReport::json_line() const {
  nlohmann::json j;
  j["id"] = id;
  j["prime"] = prime;
  j["order_exp"] = order_exp;
  j["d"] = d;
  j["class"] = nilpotency_class;
  j["exponent_exp"] = exponent_exp;
  j["is_powerful"] = powerful;
  j["is_potent"] = potent;
  j["is_regular"] = to_string(regular);
  nlohmann::json ml = nlohmann::json::object();
  for (const auto& [i, v] : m_levels) ml[std::to_string(i)] = v;
  j["m_levels"] = ml;
  nlohmann::json cond = nlohmann::json::array();
  for (const ConditionTriple& c : conditions)
    cond.push_back({{"i", c.level}, {"cond_power", c.power}, {"cond_omega", c.omega},
                    {"cond_index", c.index}});
  j["conditions"] = cond;
  j["p1"] = to_string(p1);
  j["p2"] = to_string(p2);
  j["wall_ms"] = wall_ms;
  return j.dump();
}

std::string PropertyReport::csv_header() {
  return "id,prime,order_exp,d,class,exponent_exp,is_powerful,is_potent,is_regular,is_m1,"
         "cond_power_1,cond_omega_1,cond_index_1,p1,p2,wall_ms";
}

std::string PropertyReport::csv_line() const {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << id << ',' << prime << ',' << order_exp << ',' << d << ',' << nilpotency_class << ','
     << exponent_exp << ',' << b(powerful) << ',' << b(potent) << ',' << to_string(regular) << ',';
  if (auto it = m_levels.find(1); it != m_levels.end()) os << b(it->second);
  os << ',';
  if (!conditions.empty())
    os << b(conditions[0].power) << ',' << b(conditions[0].omega) << ',' << b(conditions[0].index);
  else
    os << ",,";
  os << ',' << to_string(p1) << ',' << to_string(p2) << ',' << wall_ms;
  return os.str();
}

}  // namespace pgroup
