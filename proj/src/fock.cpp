#include "liedirac/fock.hpp"

#include <algorithm>

#include "liedirac/errors.hpp"

namespace liedirac {

namespace {

long table_lookup(const std::map<Q, WeightTable, QLess>& classes, const Q& c, const QVec& w) {
  auto it = classes.find(c);
  if (it == classes.end()) return 0;
  auto jt = it->second.find(w);
  return jt == it->second.end() ? 0 : jt->second;
}

QVec negate(const QVec& v) {
  QVec out = v;
  for (Q& x : out) x = -x;
  return out;
}

}  // namespace

CliffordModuleSpec build_clifford_spec(const std::map<Q, WeightTable, QLess>& ambient,
                                       const std::map<Q, WeightTable, QLess>& sub,
                                       const WeightTable& plus_zero,
                                       const AffineWeight& vacuum) {
  CliffordModuleSpec spec;
  spec.vacuum = vacuum;
  spec.fin_dim = vacuum.fin.size();

  for (const auto& [c, tbl] : ambient)
    for (const auto& [w, m] : tbl) {
      if (w.size() != spec.fin_dim) throw invalid_input("graded table dimension mismatch");
      long d = m - table_lookup(sub, c, w);
      if (d < 0) throw invalid_input("subalgebra multiplicity exceeds the ambient one");
      if (d > 0) spec.classes[mod1(c)][w] += d;
    }
  for (const auto& [c, tbl] : sub)
    for (const auto& [w, m] : tbl)
      if (m > table_lookup(ambient, c, w))
        throw invalid_input("subalgebra multiplicity exceeds the ambient one");

  for (const auto& [c, tbl] : spec.classes)
    for (const auto& [w, m] : tbl) {
      spec.total_dim += m;
      if (table_lookup(spec.classes, mod1(-c), negate(w)) != m)
        throw invalid_input("graded table is not self-dual");
    }

  const QVec zero(spec.fin_dim, Q(0));
  spec.cartan_dim = table_lookup(spec.classes, Q(0), zero);
  spec.isotropic_dim = spec.cartan_dim / 2;

  long plus_total = 0, nonzero_total = 0;
  for (const auto& [w, m] : plus_zero) {
    if (m <= 0 || is_zero(w)) throw invalid_input("invalid positive-half entry");
    if (table_lookup(spec.classes, Q(0), w) != m)
      throw invalid_input("positive half does not match the class-0 multiplicities");
    if (plus_zero.count(negate(w)))
      throw invalid_input("positive half contains an opposite pair");
    plus_total += m;
  }
  auto z = spec.classes.find(Q(0));
  if (z != spec.classes.end())
    for (const auto& [w, m] : z->second)
      if (!is_zero(w)) nonzero_total += m;
  if (nonzero_total != 2 * plus_total)
    throw invalid_input("positive half does not cover the nonzero class-0 weights");
  spec.plus_zero = plus_zero;
  return spec;
}

bool mode_less(const CliffordMode& a, const CliffordMode& b) {
  if (a.exponent != b.exponent) return a.exponent > b.exponent;  // nearer zero first
  bool az = is_zero(a.weight), bz = is_zero(b.weight);
  if (az != bz) return az;
  if (a.weight != b.weight) return VecLess{}(a.weight, b.weight);
  return a.index < b.index;
}

std::vector<CliffordMode> creation_modes(const CliffordModuleSpec& spec, const Q& cutoff) {
  std::vector<CliffordMode> modes;
  for (const auto& [c, tbl] : spec.classes) {
    Q start = c == 0 ? Q(-1) : c - 1;
    for (const auto& [w, m] : tbl)
      for (Q j = start; j >= -cutoff; j -= 1)
        for (long i = 0; i < m; ++i) modes.push_back({j, w, i});
  }
  for (const auto& [w, m] : spec.plus_zero)
    for (long i = 0; i < m; ++i) modes.push_back({Q(0), negate(w), i});
  const QVec zero(spec.fin_dim, Q(0));
  for (long i = 0; i < spec.isotropic_dim; ++i) modes.push_back({Q(0), zero, i});
  std::sort(modes.begin(), modes.end(), mode_less);
  return modes;
}

AffineWeight monomial_weight(const CliffordModuleSpec& spec, const SpinorMonomial& m) {
  AffineWeight w = spec.vacuum;
  for (const CliffordMode& mode : m.modes) w = w + AffineWeight{Q(0), mode.weight, mode.exponent};
  return w;
}

namespace {

void enumerate_rec(const std::vector<CliffordMode>& modes, std::size_t i, const Q& cutoff,
                   const Q& drop, SpinorMonomial& current, std::vector<SpinorMonomial>& out) {
  if (i == modes.size()) {
    out.push_back(current);
    return;
  }
  enumerate_rec(modes, i + 1, cutoff, drop, current, out);
  Q next = drop - modes[i].exponent;
  if (next <= cutoff) {
    current.modes.push_back(modes[i]);
    enumerate_rec(modes, i + 1, cutoff, next, current, out);
    current.modes.pop_back();
  }
}

}  // namespace

std::vector<SpinorMonomial> enumerate_monomials(const CliffordModuleSpec& spec,
                                                const Q& cutoff) {
  auto modes = creation_modes(spec, cutoff);
  std::vector<SpinorMonomial> out;
  SpinorMonomial current;
  enumerate_rec(modes, 0, cutoff, Q(0), current, out);
  return out;
}

namespace {

// prod over creation generators of (1 + sign e^{generator weight}), times
// the vacuum monomial; zero modes excluded.
GradedCharacter mode_product(const CliffordModuleSpec& spec, const Q& cutoff, long sign) {
  const Q floor = spec.vacuum.dlt - cutoff;
  GradedCharacter acc = char_monomial(spec.vacuum, floor);
  const AffineWeight unit{Q(0), QVec(spec.fin_dim, Q(0)), Q(0)};
  auto apply = [&](const AffineWeight& gen, long m) {
    GradedCharacter factor = char_monomial(unit, -cutoff);
    factor.insert(gen, sign);
    for (long p = 0; p < m; ++p) acc = char_product(acc, factor);
  };
  for (const auto& [c, tbl] : spec.classes) {
    Q start = c == 0 ? Q(-1) : c - 1;
    for (const auto& [w, m] : tbl)
      for (Q j = start; j >= -cutoff; j -= 1) apply({Q(0), w, j}, m);
  }
  for (const auto& [w, m] : spec.plus_zero) apply({Q(0), negate(w), Q(0)}, m);
  return acc;
}

void scale_coefficients(GradedCharacter& g, long f) {
  for (auto& [d, tbl] : g.slices)
    for (auto& [w, m] : tbl) m *= f;
}

}  // namespace

GradedCharacter clifford_product_character(const CliffordModuleSpec& spec, const Q& cutoff) {
  return mode_product(spec, cutoff, 1);
}

GradedCharacter clifford_signed_character(const CliffordModuleSpec& spec, const Q& cutoff) {
  GradedCharacter g = mode_product(spec, cutoff, -1);
  if (spec.isotropic_dim > 0) {
    // Each zero mode contributes a factor (1 - 1).
    g.slices.clear();
  }
  return g;
}

GradedCharacter clifford_character(const CliffordModuleSpec& spec, const Q& cutoff) {
  if (spec.isotropic_dim > 60) throw internal_error("zero-mode count too large");
  GradedCharacter g = clifford_product_character(spec, cutoff);
  scale_coefficients(g, 1L << spec.isotropic_dim);
  return g;
}

std::pair<GradedCharacter, GradedCharacter> clifford_character_split(
    const CliffordModuleSpec& spec, const Q& cutoff) {
  GradedCharacter total = clifford_character(spec, cutoff);
  GradedCharacter signed_part = clifford_signed_character(spec, cutoff);
  GradedCharacter even = total, odd = total;
  even.slices.clear();
  odd.slices.clear();
  for (const auto& [d, tbl] : total.slices)
    for (const auto& [w, m] : tbl) {
      long s = signed_part.coefficient({total.level, w, d});
      if ((m + s) % 2 != 0) throw internal_error("parity split is not integral");
      even.insert({total.level, w, d}, (m + s) / 2);
      odd.insert({total.level, w, d}, (m - s) / 2);
    }
  for (const auto& [d, tbl] : signed_part.slices)
    for (const auto& [w, m] : tbl)
      if (total.coefficient({total.level, w, d}) == 0 && m != 0)
        throw internal_error("signed character escapes the total character");
  return {even, odd};
}

GradedCharacter clifford_character_by_enumeration(const CliffordModuleSpec& spec,
                                                  const Q& cutoff) {
  GradedCharacter g;
  g.level = spec.vacuum.level;
  g.top_dlt = spec.vacuum.dlt;
  g.floor_dlt = spec.vacuum.dlt - cutoff;
  for (const auto& m : enumerate_monomials(spec, cutoff)) g.insert(monomial_weight(spec, m), 1);
  return g;
}

long clifford_module_factor(const CliffordModuleSpec& spec) {
  if (spec.cartan_dim > 120) throw internal_error("zero-mode count too large");
  return 1L << ((spec.cartan_dim + 1) / 2);
}

}  // namespace liedirac
