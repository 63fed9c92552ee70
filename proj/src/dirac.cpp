#include "liedirac/dirac.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>

#include "liedirac/errors.hpp"
#include "liedirac/qlin.hpp"
#include "liedirac/rootsys.hpp"

namespace liedirac {

namespace {

AffineWeight project_weight(const QMat& p, const AffineWeight& x) {
  return {x.level, mat_vec(p, x.fin), x.dlt};
}

QVec matrix_column(const QMat& m, std::size_t j) {
  QVec c(m.rows, Q(0));
  for (std::size_t i = 0; i < m.rows; ++i) c[i] = m.at(i, j);
  return c;
}

QMat column_matrix(const std::vector<QVec>& cols, std::size_t rows) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw internal_error("column with wrong coordinate count");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

// The ratio t with a == t * b, for b nonzero; nullopt when not parallel.
std::optional<Q> parallel_ratio(const QVec& a, const QVec& b) {
  std::optional<Q> t;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    t = a[j] / b[j];
    break;
  }
  if (!t) return std::nullopt;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != *t * b[j]) return std::nullopt;
  return t;
}

// Average of v over the cycles of perm.
QVec symmetrize_over_orbits(const QVec& v, const std::vector<std::size_t>& perm) {
  QVec out(v.size(), Q(0));
  std::vector<bool> seen(v.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      orbit.push_back(j);
      j = perm[j];
    }
    Q avg = 0;
    for (std::size_t k : orbit) avg += v[k];
    avg /= Q(static_cast<long>(orbit.size()));
    for (std::size_t k : orbit) out[k] = avg;
  }
  return out;
}

// Does some ambient root line restrict onto the positive ray of beta?  The
// subalgebra simple roots must pass this for the two positivity notions
// (ambient chamber, subalgebra chamber) to be compatible.
bool positive_ambient_restriction(const TwistedAffineDatum& d, const QMat& p,
                                  const AffineWeight& beta) {
  if (is_zero(beta.fin)) throw internal_error("chamber test needs a nonzero direction");
  for (const auto& [cls, tbl] : d.table.classes) {
    for (const auto& [gamma, mult] : tbl) {
      (void)mult;
      if (is_zero(gamma)) continue;
      auto c = parallel_ratio(mat_vec(p, gamma), beta.fin);
      if (!c || !(*c > 0)) continue;
      Q deg = *c * beta.dlt;
      if (!is_integer(deg - cls)) continue;
      if (deg > 0) return true;
      if (deg == 0 && d.is_positive_root({Q(0), gamma, Q(0)})) return true;
    }
  }
  return false;
}

// Same test over an untwisted product algebra given by its finite system.
bool positive_flat_restriction(const FiniteRootSystem& rs, const QMat& p,
                               const AffineWeight& beta) {
  if (is_zero(beta.fin)) throw internal_error("chamber test needs a nonzero direction");
  for (const auto& r : rs.positive_roots) {
    for (int sign : {1, -1}) {
      QVec gamma = Q(sign) * r.vec;
      auto c = parallel_ratio(mat_vec(p, gamma), beta.fin);
      if (!c || !(*c > 0)) continue;
      Q deg = *c * beta.dlt;
      if (!is_integer(deg)) continue;
      if (deg > 0) return true;
      if (deg == 0 && sign > 0) return true;
    }
  }
  return false;
}

// Does the restricted image of an ambient real root land on a positive
// multiple of a subalgebra root line (with a matching degree class)?
bool restricted_meets_subsystem(const SubsystemData& s, const AffineWeight& r) {
  for (const auto& [cls, tbl] : s.classes) {
    for (const auto& [gamma, mult] : tbl) {
      (void)mult;
      if (is_zero(gamma)) continue;
      auto t = parallel_ratio(gamma, r.fin);
      if (!t || !(*t > 0)) continue;
      if (is_integer(*t * r.dlt - cls)) return true;
    }
  }
  return false;
}

struct PushedIdeal {
  SubsystemData sub;       // simples, rho, class tables (center added by the caller)
  std::vector<QVec> span;  // embedding columns
  long fixed_rank = 0;     // Cartan rank of the twisted ideal
};

// Builds the abstract twisted datum of the ideal from the induced torus part
// and pushes its affine simple system, class tables, and Weyl vector into
// ambient coordinates through the embedding.
PushedIdeal push_ideal(const QMat& gram, const IdealSpec& ideal, const QVec& induced,
                       const std::function<bool(const AffineWeight&)>& chamber_positive) {
  PushedIdeal out;
  FiniteRootSystem ars = build_root_system(ideal.types);
  if (ideal.eta_perm.size() != ars.rank || ideal.h_evals.size() != ars.rank)
    throw invalid_input("ideal data does not match its rank");
  if (ideal.embed.cols != ars.rank) throw invalid_input("ideal embedding has wrong column count");
  DiagramAut aeta = make_diagram_aut(ars, ideal.eta_perm);
  // Restricted weights only see the diagram-orbit average of the torus part,
  // and integral shifts of it act trivially on the restricted adjoint tables;
  // the stored evaluations pin one presentation within that freedom.
  QVec hsym = symmetrize_over_orbits(induced, aeta.perm);
  for (std::size_t j = 0; j < ars.rank; ++j)
    if (!is_integer(hsym[j] - ideal.h_evals[j]))
      throw invalid_input("stored ideal Cartan evaluations disagree with the induced ones");
  FoldedData afd = fold_data(ars, aeta);
  out.fixed_rank = static_cast<long>(afd.fixed_rank());
  TwistedAffineDatum da = build_twisted_datum(afd, ideal.h_evals, /*allow_walk=*/false);

  // The subalgebra Cartan directions are the embedded images of the diagram
  // orbit averages; for a twisted ideal these span less than the embedding.
  for (const QVec& v : afd.simples) out.span.push_back(mat_vec(ideal.embed, v));

  // The embedding must scale the invariant form uniformly.
  {
    QMat m = transpose(ideal.embed) * gram * ideal.embed;
    Q scale = m.at(0, 0) / ars.gram.at(0, 0);
    if (!(scale > 0)) throw invalid_input("ideal embedding does not scale the form positively");
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j)
        if (m.at(i, j) != scale * ars.gram.at(i, j))
          throw invalid_input("ideal embedding is not a uniform similitude of the form");
  }

  for (const AffineWeight& b : da.simple_roots)
    out.sub.simples.push_back({b.level, mat_vec(ideal.embed, b.fin), b.dlt});
  for (std::size_t i = 0; i < out.sub.simples.size(); ++i)
    for (std::size_t j = 0; j < out.sub.simples.size(); ++j)
      if (affine_pair_coroot(gram, out.sub.simples[j], out.sub.simples[i]) !=
          affine_pair_coroot(da.gram(), da.simple_roots[j], da.simple_roots[i]))
        throw internal_error("pushed simple roots change the affine Cartan pairings");

  for (const AffineWeight& b : out.sub.simples)
    if (!chamber_positive(b))
      throw unsupported_case("subalgebra simple root is not positive for the ambient chamber");

  for (const auto& [cls, tbl] : da.table.classes)
    for (const auto& [gamma, mult] : tbl) out.sub.classes[cls][mat_vec(ideal.embed, gamma)] += mult;

  // The finite part of the Weyl vector pushes; the level re-solves the
  // normalization, then every simple pairing is rechecked.
  QVec rf = mat_vec(ideal.embed, da.rho_hat.fin);
  std::optional<Q> level;
  for (const AffineWeight& b : out.sub.simples) {
    if (b.dlt == 0) continue;
    level = (affine_norm2(gram, b) / 2 - bilinear(rf, gram, b.fin)) / b.dlt;
    break;
  }
  if (!level) throw internal_error("subalgebra affine system has no positive-degree simple root");
  out.sub.rho = {*level, rf, Q(0)};
  for (const AffineWeight& b : out.sub.simples)
    if (affine_pair_coroot(gram, out.sub.rho, b) != 1)
      throw internal_error("pushed Weyl vector fails its normalization");
  return out;
}

// Removes the subalgebra's positive degree-zero roots from the ambient
// positive half; every multiplicity must stay nonnegative.
void subtract_sub_positives(const QMat& gram, const SubsystemData& s, WeightTable& plus) {
  auto it = s.classes.find(Q(0));
  if (it != s.classes.end()) {
    for (const auto& [gamma, mult] : it->second) {
      if (is_zero(gamma)) continue;
      if (!sub_positive_real(gram, s, {Q(0), gamma, Q(0)})) continue;
      plus[gamma] -= mult;
    }
  }
  for (auto w = plus.begin(); w != plus.end();) {
    if (w->second < 0)
      throw invalid_input("subalgebra positivity is incompatible with the ambient chamber");
    if (w->second == 0)
      w = plus.erase(w);
    else
      ++w;
  }
}

long sub_cartan_multiplicity(const SubsystemData& s, std::size_t dim) {
  auto it = s.classes.find(Q(0));
  if (it == s.classes.end()) return 0;
  auto z = it->second.find(QVec(dim, Q(0)));
  return z == it->second.end() ? 0 : z->second;
}

// Shared tail of the two assembly paths: restricted adjoint tables, the
// positive complement half, the vacuum, and the Clifford bookkeeping.
void finish_setup(DiracSetup& s, const std::map<Q, WeightTable, QLess>& full_classes,
                  const WeightTable& raw_plus, long ambient_fixed_rank, long ideal_fixed) {
  const std::size_t dim = s.gram.rows;
  for (const QVec& z : s.sub.center) {
    if (z.size() != dim) throw invalid_input("central direction has wrong coordinate count");
    s.sub.classes[Q(0)][QVec(dim, Q(0))] += 1;
  }
  for (const auto& [cls, tbl] : full_classes)
    for (const auto& [gamma, mult] : tbl) s.ambient_classes[cls][mat_vec(s.p_comb, gamma)] += mult;

  WeightTable plus = raw_plus;
  subtract_sub_positives(s.gram, s.sub, plus);

  AffineWeight vacuum = project_weight(s.p_comb, s.g_rho) - s.sub.rho;
  s.clifford = build_clifford_spec(s.ambient_classes, s.sub.classes, plus, vacuum);

  long sub_zero = sub_cartan_multiplicity(s.sub, dim);
  if (sub_zero != ideal_fixed + static_cast<long>(s.sub.center.size()))
    throw internal_error("subalgebra Cartan dimensions were miscounted");
  if (s.clifford.cartan_dim != ambient_fixed_rank - sub_zero)
    throw internal_error("Clifford Cartan dimension disagrees with the rank gap");
  s.cartan_gap = s.clifford.cartan_dim;
  s.power = (s.cartan_gap + 1) / 2;
  if (clifford_module_factor(s.clifford) != (1L << s.power))
    throw internal_error("Clifford multiplicity factor disagrees with the rank gap");
}

DiracSetup assemble_twisted(const CatalogEntry& entry, const AffineWeight& lambda) {
  DiracSetup s;
  s.entry = entry;
  s.lambda = lambda;
  FiniteRootSystem rs = build_root_system(entry.g_types);
  if (lambda.fin.size() != rs.rank) throw invalid_input("highest weight has wrong coordinate count");
  DiagramAut eta = make_diagram_aut(rs, entry.g_eta);
  FoldedData fd = fold_data(rs, eta);
  if (entry.g_h.size() != rs.rank)
    throw invalid_input("ambient Cartan element has wrong coordinate count");
  auto datum = std::make_shared<TwistedAffineDatum>(build_twisted_datum(fd, entry.g_h));
  if (datum->h_evals != datum->h_evals_input)
    throw unsupported_case("ambient Cartan element lies outside the fundamental alcove");
  s.g = datum;
  s.gram = datum->gram();
  s.g_rho = datum->rho_hat;
  s.restricted = restricted_system(*datum, entry.mu_fin);
  s.p_comb = s.restricted.projector;
  if (!(s.p_comb * s.p_comb == s.p_comb))
    throw internal_error("restriction projector is not idempotent");

  if (entry.ideals.size() > 1) throw unsupported_case("subalgebras with several semisimple ideals");
  long ideal_fixed = 0;
  if (!entry.ideals.empty()) {
    const IdealSpec& ideal = entry.ideals[0];
    if (ideal.embed.rows != rs.rank) throw invalid_input("ideal embedding has wrong row count");
    QVec induced(ideal.embed.cols, Q(0));
    for (std::size_t j = 0; j < ideal.embed.cols; ++j)
      induced[j] = eval_on_cartan(matrix_column(ideal.embed, j), datum->h_evals);
    PushedIdeal pushed =
        push_ideal(s.gram, ideal, induced, [&](const AffineWeight& b) {
          return positive_ambient_restriction(*datum, s.p_comb, b);
        });
    s.sub = std::move(pushed.sub);
    s.sub_span = std::move(pushed.span);
    ideal_fixed = pushed.fixed_rank;
  } else {
    s.sub.rho = datum->zero_weight();
  }
  s.sub.center = entry.center;

  WeightTable plus;
  auto a0 = datum->table.classes.find(Q(0));
  if (a0 != datum->table.classes.end()) {
    for (const auto& [gamma, mult] : a0->second) {
      if (is_zero(gamma)) continue;
      if (!datum->is_positive_root({Q(0), gamma, Q(0)})) continue;
      QVec w = mat_vec(s.p_comb, gamma);
      if (is_zero(w)) throw unsupported_case("degree-zero root restricting to zero");
      plus[w] += mult;
    }
  }
  finish_setup(s, datum->table.classes, plus, static_cast<long>(fd.fixed_rank()), ideal_fixed);
  return s;
}

// Product algebra with the identity twist: the fold machinery needs an
// indecomposable diagram action, so the affinization is assembled directly
// from the finite data.  Only the basic weight is supported here.
DiracSetup assemble_flat(const CatalogEntry& entry, const AffineWeight& lambda) {
  DiracSetup s;
  s.entry = entry;
  s.flat = true;
  s.lambda = lambda;
  FiniteRootSystem rs = build_root_system(entry.g_types);
  s.gram = rs.gram;
  if (lambda.fin.size() != rs.rank) throw invalid_input("highest weight has wrong coordinate count");
  if (!(lambda == AffineWeight{Q(0), QVec(rs.rank, Q(0)), Q(0)}))
    throw unsupported_case("product algebras with the identity twist support only the basic weight");

  if (rs.dual_coxeter.empty()) throw internal_error("root system has no components");
  Q level = rs.dual_coxeter[0];
  for (const Q& h : rs.dual_coxeter)
    if (h != level) throw unsupported_case("product components with different dual Coxeter numbers");
  s.g_rho = {level, rs.rho, Q(0)};

  const QMat& mu = entry.mu_fin;
  if (mu.rows != rs.rank || mu.cols != rs.rank)
    throw invalid_input("positioning involution has wrong shape");
  {
    QMat sum = QMat::identity(rs.rank);
    QMat pow = mu;
    long order = 1;
    while (!(pow == QMat::identity(rs.rank))) {
      for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t j = 0; j < rs.rank; ++j) sum.at(i, j) += pow.at(i, j);
      pow = pow * mu;
      if (++order > 8) throw unsupported_case("positioning involution of large order");
    }
    s.p_comb = QMat(rs.rank, rs.rank);
    for (std::size_t i = 0; i < rs.rank; ++i)
      for (std::size_t j = 0; j < rs.rank; ++j) s.p_comb.at(i, j) = sum.at(i, j) / order;
  }
  if (!(s.p_comb * s.p_comb == s.p_comb))
    throw internal_error("restriction projector is not idempotent");

  if (entry.ideals.size() > 1) throw unsupported_case("subalgebras with several semisimple ideals");
  long ideal_fixed = 0;
  if (!entry.ideals.empty()) {
    const IdealSpec& ideal = entry.ideals[0];
    if (ideal.embed.rows != rs.rank) throw invalid_input("ideal embedding has wrong row count");
    QVec induced(ideal.embed.cols, Q(0));
    PushedIdeal pushed = push_ideal(s.gram, ideal, induced, [&](const AffineWeight& b) {
      return positive_flat_restriction(rs, s.p_comb, b);
    });
    s.sub = std::move(pushed.sub);
    s.sub_span = std::move(pushed.span);
    ideal_fixed = pushed.fixed_rank;
  } else {
    s.sub.rho = {Q(0), QVec(rs.rank, Q(0)), Q(0)};
  }
  s.sub.center = entry.center;

  std::map<Q, WeightTable, QLess> full;
  WeightTable plus;
  for (const auto& r : rs.positive_roots) {
    full[Q(0)][r.vec] += 1;
    full[Q(0)][Q(-1) * r.vec] += 1;
    QVec w = mat_vec(s.p_comb, r.vec);
    if (is_zero(w)) throw unsupported_case("root restricting to zero");
    plus[w] += 1;
  }
  full[Q(0)][QVec(rs.rank, Q(0))] += static_cast<long>(rs.rank);
  finish_setup(s, full, plus, static_cast<long>(rs.rank), ideal_fixed);
  return s;
}

std::string join_messages(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& m : v) {
    if (!out.empty()) out += "; ";
    out += m;
  }
  return out;
}

// Imaginary boson lines of the subalgebra (one entry per Cartan dimension,
// tagged by its degree class); feeds the Fock factor when the subalgebra
// has no simple roots of its own.
std::vector<Q> imaginary_lines(const SubsystemData& s, std::size_t dim) {
  std::vector<Q> lines;
  for (const auto& [cls, tbl] : s.classes) {
    auto z = tbl.find(QVec(dim, Q(0)));
    if (z == tbl.end()) continue;
    for (long k = 0; k < z->second; ++k) lines.push_back(cls);
  }
  return lines;
}

// Highest-weight character over the subalgebra, including the free boson
// factor explicitly when there are no simple roots to carry it.
GradedCharacter sub_module_character(const DiracSetup& setup, const CharSystem& asys,
                                     const AffineWeight& xi, const Q& cutoff) {
  GradedCharacter ch = weyl_kac_character(asys, xi, cutoff);
  if (asys.simples.empty()) {
    std::vector<Q> lines = imaginary_lines(setup.sub, setup.gram.rows);
    if (!lines.empty())
      ch = char_product(ch, heisenberg_character(lines, setup.gram.rows, cutoff));
  }
  return ch;
}

int unimodular_sign(const QMat& m) {
  Q d = det(m);
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw internal_error("commutant element with non-unimodular finite part");
}

// Enumerates the commutant far enough that every element of word length at
// most `depth` is present: the drop budget is doubled until no element
// below the depth has a child that fell outside the budget.
CommEnumeration commutant_through_depth(const TwistedAffineDatum& d, const RestrictedSystem& r,
                                        const AffineWeight& base, long depth) {
  Q max_gen_drop = 1;
  for (std::size_t oi : r.basis) {
    Q drop = base.dlt - aw_apply(d.gram(), r.orbit_longest[oi], base).dlt;
    if (drop > max_gen_drop) max_gen_drop = drop;
  }
  Q bound = Q(depth) * max_gen_drop;
  for (int attempt = 0; attempt < 14; ++attempt) {
    CommEnumeration ce = enumerate_commutant(d, r, base, bound);
    std::map<AffWeylElt, bool, bool (*)(const AffWeylElt&, const AffWeylElt&)> seen(&aw_less);
    for (const AffWeylElt& e : ce.elements) seen.emplace(e, true);
    bool missing = false;
    for (std::size_t i = 0; i < ce.elements.size() && !missing; ++i) {
      if (static_cast<long>(ce.words[i].size()) >= depth) continue;
      for (std::size_t oi : r.basis) {
        AffWeylElt child = aw_compose(ce.elements[i], r.orbit_longest[oi]);
        if (seen.find(child) == seen.end()) {
          missing = true;
          break;
        }
      }
    }
    if (!missing) return ce;
    bound *= 2;
  }
  throw internal_error("commutant enumeration did not stabilize within the drop budget");
}

MultipletEntry finish_entry(const DiracSetup& setup, const AffWeylElt& w,
                            const std::vector<std::size_t>& word, const AffineWeight& xi) {
  MultipletEntry e;
  e.xi = xi;
  e.w = w;
  e.length = static_cast<long>(word.size());
  e.word = word;
  e.dirac_square = dirac_square_check(setup, xi);
  e.dominant_integral = true;
  for (const AffineWeight& b : setup.sub.simples) {
    Q p = affine_pair_coroot(setup.gram, xi, b);
    if (!is_integer(p) || p < 0) {
      e.dominant_integral = false;
      break;
    }
  }
  if (setup.flat) {
    // The only commutant element handled on this path is the identity,
    // whose inversion set is empty; both checks hold vacuously.
    e.inversion_sum_ok = word.empty();
    e.inversions_avoid_sub = word.empty();
  } else {
    std::vector<AffineWeight> invs = inversion_set(*setup.g, w);
    AffineWeight total{Q(0), QVec(setup.gram.rows, Q(0)), Q(0)};
    for (const AffineWeight& psi : invs) total = total + psi;
    e.inversion_sum_ok =
        total == setup.g_rho - aw_apply(setup.gram, w, setup.g_rho);
    e.inversions_avoid_sub = true;
    for (const AffineWeight& psi : invs) {
      AffineWeight res = project_weight(setup.p_comb, psi);
      if (is_zero(res.fin))
        throw unsupported_case("inversion restricting to an imaginary weight");
      if (restricted_meets_subsystem(setup.sub, res)) {
        e.inversions_avoid_sub = false;
        break;
      }
    }
  }
  if (e.dominant_integral) e.label = multiplet_label(setup, xi);
  return e;
}

void require_hypotheses(const DiracSetup& setup) {
  HypothesisReport rep = check_hypotheses(setup);
  if (!rep.ok)
    throw invalid_input("decomposition hypotheses fail: " + join_messages(rep.violations));
}

std::string branch_name(LevelOneBranch b) {
  switch (b) {
    case LevelOneBranch::equal_rank_inner:
      return "equal-rank inner pair";
    case LevelOneBranch::diagonal:
      return "diagonal pair";
    case LevelOneBranch::folded_fixed:
      return "diagram-involution fixed pair";
    case LevelOneBranch::doubled_restriction:
      return "doubled-restriction pair";
    case LevelOneBranch::none:
      break;
  }
  return "";
}

std::optional<std::size_t> singleton_orbit(const RestrictedSystem& r, std::size_t node) {
  for (std::size_t oi = 0; oi < r.orbits.size(); ++oi)
    if (r.orbits[oi].size() == 1 && r.orbits[oi][0] == node) return oi;
  return std::nullopt;
}

}  // namespace

DiracSetup build_dirac_setup(const CatalogEntry& entry, const AffineWeight& lambda) {
  bool identity_eta = entry.g_eta.size() == entry.ambient_rank();
  for (std::size_t i = 0; identity_eta && i < entry.g_eta.size(); ++i)
    identity_eta = entry.g_eta[i] == i;
  if (!identity_eta || entry.g_types.size() == 1) return assemble_twisted(entry, lambda);
  return assemble_flat(entry, lambda);
}

DiracSetup build_untwisted_setup(const CatalogEntry& entry, const AffineWeight& lambda) {
  CatalogEntry plain = entry;
  plain.g_eta.assign(entry.ambient_rank(), 0);
  std::iota(plain.g_eta.begin(), plain.g_eta.end(), std::size_t{0});
  plain.g_h = QVec(entry.ambient_rank(), Q(0));
  for (IdealSpec& ideal : plain.ideals) {
    std::iota(ideal.eta_perm.begin(), ideal.eta_perm.end(), std::size_t{0});
    ideal.h_evals = QVec(ideal.h_evals.size(), Q(0));
  }
  plain.sigma_matrix.reset();
  return build_dirac_setup(plain, lambda);
}

AffineWeight basic_weight(const CatalogEntry& entry) {
  return {Q(0), QVec(entry.ambient_rank(), Q(0)), Q(0)};
}

HypothesisReport check_hypotheses(const CatalogEntry& entry, const AffineWeight& lambda) {
  try {
    DiracSetup setup = build_dirac_setup(entry, lambda);
    return check_hypotheses(setup);
  } catch (const error& e) {
    HypothesisReport rep;
    rep.ok = false;
    rep.violations = {std::string("assembly failed: ") + e.what()};
    return rep;
  }
}

HypothesisReport check_hypotheses(const DiracSetup& setup) {
  HypothesisReport rep;
  auto fail = [&rep](const std::string& m) {
    rep.ok = false;
    rep.violations.push_back(m);
  };
  const std::size_t dim = setup.gram.rows;
  const QMat& mu = setup.entry.mu_fin;

  if (!(transpose(mu) * setup.gram * mu == setup.gram))
    fail("positioning involution does not preserve the invariant form");
  if (!setup.flat) {
    const std::vector<std::size_t>& perm = setup.g->fold.eta.perm;
    QMat e(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) e.at(perm[i], i) = 1;
    if (!(mu * e == e * mu)) fail("positioning involution does not commute with the diagram action");
    // Commutation with the inner part of the twist only needs the moved
    // Cartan element to pair integrally with every root.
    QVec moved = mat_vec(mu, setup.g->x_h) - setup.g->x_h;
    for (const Q& c : mat_vec(setup.gram, moved))
      if (!is_integer(c)) {
        fail("positioning involution does not commute with the inner twist");
        break;
      }
  }

  std::vector<QVec> cartan = setup.sub_span;
  for (const QVec& z : setup.sub.center) cartan.push_back(z);
  if (!cartan.empty()) {
    QMat form(cartan.size(), cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i)
      for (std::size_t j = 0; j < cartan.size(); ++j)
        form.at(i, j) = bilinear(cartan[i], setup.gram, cartan[j]);
    if (det(form) == 0) fail("invariant form degenerates on the subalgebra Cartan");
  }

  {
    std::size_t rank_cartan = cartan.empty() ? 0 : rank(column_matrix(cartan, dim));
    std::size_t rank_proj = rank(setup.p_comb);
    QMat both(dim, cartan.size() + dim);
    for (std::size_t j = 0; j < cartan.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) both.at(i, j) = cartan[j][i];
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) both.at(i, cartan.size() + j) = setup.p_comb.at(i, j);
    if (!(rank_cartan == rank_proj && rank_proj == rank(both)))
      fail("subalgebra Cartan does not span the fixed subspace of the restriction");
  }

  AffineWeight shifted = setup.lambda + setup.g_rho;
  if (!(mat_vec(setup.p_comb, shifted.fin) == shifted.fin))
    fail("shifted highest weight does not restrict from the subalgebra Cartan");

  if (!setup.flat) {
    bool dominant = true;
    for (const AffineWeight& a : setup.g->simple_roots) {
      Q p = affine_pair_coroot(setup.gram, setup.lambda, a);
      if (!is_integer(p) || p < 0) {
        dominant = false;
        break;
      }
    }
    if (!dominant) fail("highest weight is not dominant integral for the twisted algebra");
    if (!(mat_vec(setup.g->fold.projector, setup.lambda.fin) == setup.lambda.fin))
      fail("highest weight is not fixed by the ambient diagram action");
  }
  return rep;
}

Q dirac_square_check(const DiracSetup& setup, const AffineWeight& xi) {
  if (xi.fin.size() != setup.gram.rows)
    throw invalid_input("weight has wrong coordinate count");
  AffineWeight target = xi + setup.sub.rho;
  if (!(mat_vec(setup.p_comb, target.fin) == target.fin))
    throw invalid_input("shifted weight does not restrict from the subalgebra Cartan");
  return affine_norm2(setup.gram, setup.lambda + setup.g_rho) -
         affine_norm2(setup.gram, target);
}

MultipletReport kernel_decomposition(const DiracSetup& setup, long length_bound) {
  if (length_bound < 0) throw invalid_input("length bound must be nonnegative");
  require_hypotheses(setup);
  MultipletReport rep;
  rep.power = setup.power;
  rep.cartan_gap = setup.cartan_gap;

  if (setup.flat) {
    AffineWeight xi = project_weight(setup.p_comb, setup.g_rho) - setup.sub.rho;
    if (!(xi == setup.sub.rho))
      throw internal_error("closed-form weight is not the subalgebra Weyl vector");
    rep.entries.push_back(finish_entry(setup, aw_identity(setup.gram.rows), {}, xi));
    rep.complete = true;
    rep.note = "closed form: diagonally embedded subalgebra of an identity twist";
    return rep;
  }

  const AffineWeight base = setup.lambda + setup.g_rho;
  CommEnumeration ce =
      commutant_through_depth(*setup.g, setup.restricted, base, length_bound + 1);
  bool survivor_past_bound = false;
  for (std::size_t i = 0; i < ce.elements.size(); ++i) {
    long len = static_cast<long>(ce.words[i].size());
    if (len > length_bound + 1) continue;
    if (!minimal_coset_rep(*setup.g, setup.restricted, setup.sub, ce.words[i])) continue;
    if (len == length_bound + 1) {
      survivor_past_bound = true;
      continue;
    }
    AffineWeight applied = aw_apply(setup.gram, ce.elements[i], base);
    AffineWeight xi = project_weight(setup.p_comb, applied) - setup.sub.rho;
    rep.entries.push_back(finish_entry(setup, ce.elements[i], ce.words[i], xi));
  }
  rep.complete = !survivor_past_bound;
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    for (std::size_t j = i + 1; j < rep.entries.size(); ++j)
      if (rep.entries[i].xi == rep.entries[j].xi)
        throw internal_error("coincident multiplet weights");
  return rep;
}

CharacterCheck verify_kernel_character(const DiracSetup& setup, const Q& cutoff) {
  if (cutoff < 0) throw invalid_input("cutoff must be nonnegative");
  if (!(setup.lambda == AffineWeight{Q(0), QVec(setup.gram.rows, Q(0)), Q(0)}))
    throw unsupported_case("spinor character identity is stated at the basic weight only");
  require_hypotheses(setup);

  CharacterCheck out;
  GradedCharacter lhs = clifford_product_character(setup.clifford, cutoff);
  CharSystem asys = char_system(setup.gram, setup.sub);

  GradedCharacter rhs;
  rhs.level = setup.clifford.vacuum.level;
  rhs.top_dlt = 0;
  rhs.floor_dlt = -cutoff;
  if (setup.flat) {
    AffineWeight xi = project_weight(setup.p_comb, setup.g_rho) - setup.sub.rho;
    char_accumulate(rhs, sub_module_character(setup, asys, xi, cutoff));
    out.terms = 1;
  } else {
    const AffineWeight base = setup.g_rho;
    CommEnumeration ce = enumerate_commutant(*setup.g, setup.restricted, base, cutoff);
    for (std::size_t i = 0; i < ce.elements.size(); ++i) {
      if (!minimal_coset_rep(*setup.g, setup.restricted, setup.sub, ce.words[i])) continue;
      AffineWeight applied = aw_apply(setup.gram, ce.elements[i], base);
      AffineWeight xi = project_weight(setup.p_comb, applied) - setup.sub.rho;
      char_accumulate(rhs, sub_module_character(setup, asys, xi, cutoff - ce.drops[i]));
      ++out.terms;
    }
  }
  out.match = char_match(lhs, rhs);
  out.floor = std::max(lhs.floor_dlt, rhs.floor_dlt, QLess{});
  out.top = std::min(lhs.top_dlt, rhs.top_dlt, QLess{});
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

CharacterCheck signed_character_identity(const DiracSetup& setup, const Q& cutoff) {
  if (cutoff < 0) throw invalid_input("cutoff must be nonnegative");
  if (setup.flat)
    throw unsupported_case("signed character identity needs the ambient twisted datum");
  if (setup.clifford.cartan_dim != 0)
    throw unsupported_case("signed character identity requires an equal-rank pair");
  require_hypotheses(setup);

  CharacterCheck out;
  CharSystem gsys = char_system(*setup.g);
  GradedCharacter ambient = weyl_kac_character(gsys, setup.lambda, cutoff);
  GradedCharacter lhs = char_product(project_character(ambient, setup.p_comb),
                                     clifford_signed_character(setup.clifford, cutoff));
  CharSystem asys = char_system(setup.gram, setup.sub);

  GradedCharacter rhs;
  rhs.level = setup.lambda.level + setup.clifford.vacuum.level;
  rhs.top_dlt = 0;
  rhs.floor_dlt = -cutoff;
  const AffineWeight base = setup.lambda + setup.g_rho;
  CommEnumeration ce = enumerate_commutant(*setup.g, setup.restricted, base, cutoff);
  for (std::size_t i = 0; i < ce.elements.size(); ++i) {
    if (!minimal_coset_rep(*setup.g, setup.restricted, setup.sub, ce.words[i])) continue;
    AffineWeight applied = aw_apply(setup.gram, ce.elements[i], base);
    AffineWeight xi = project_weight(setup.p_comb, applied) - setup.sub.rho;
    char_accumulate(rhs, sub_module_character(setup, asys, xi, cutoff - ce.drops[i]),
                    unimodular_sign(ce.elements[i].mat));
    ++out.terms;
  }
  out.match = char_match(lhs, rhs);
  out.floor = std::max(lhs.floor_dlt, rhs.floor_dlt, QLess{});
  out.top = std::min(lhs.top_dlt, rhs.top_dlt, QLess{});
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

MultipletReport so_pair_decomposition(const CatalogEntry& entry) {
  if (!entry.orthogonal) throw invalid_input("entry is not an orthogonal pair");
  DiracSetup setup = build_dirac_setup(entry, basic_weight(entry));
  require_hypotheses(setup);
  const OrthogonalPairInfo& info = *entry.orthogonal;
  const bool even = info.dim_v % 2 == 0;
  const bool det_plus = info.det_t > 0;
  if (setup.cartan_gap != ((even == det_plus) ? 0 : 1))
    throw internal_error("orthogonal-pair rank gap disagrees with its branch");

  MultipletReport rep;
  rep.power = setup.power;
  rep.cartan_gap = setup.cartan_gap;
  rep.complete = true;
  const AffineWeight base = setup.g_rho;
  auto add = [&](const AffWeylElt& w, const std::vector<std::size_t>& word) {
    AffineWeight applied = aw_apply(setup.gram, w, base);
    AffineWeight xi = project_weight(setup.p_comb, applied) - setup.sub.rho;
    rep.entries.push_back(finish_entry(setup, w, word, xi));
  };
  add(aw_identity(setup.gram.rows), {});

  std::optional<std::size_t> reflection_node;
  if (even && det_plus) {
    reflection_node = setup.g->simple_roots.size() - 1;
    rep.note = "vector dimension even, determinant one: identity and the end-node reflection";
  } else if (!even && det_plus) {
    rep.note = "vector dimension odd, determinant one: single multiplet";
  } else if (!even && !det_plus) {
    reflection_node = 0;
    rep.note = "vector dimension odd, determinant minus one: identity and the wall reflection";
  } else {
    rep.note = "vector dimension even, determinant minus one: single multiplet";
  }

  if (reflection_node) {
    std::optional<std::size_t> oi = singleton_orbit(setup.restricted, *reflection_node);
    if (!oi) throw internal_error("closed-form reflection is not restriction-stable");
    if (std::find(setup.restricted.basis.begin(), setup.restricted.basis.end(), *oi) ==
        setup.restricted.basis.end())
      throw internal_error("closed-form reflection is outside the restricted basis");
    if (!minimal_coset_rep(*setup.g, setup.restricted, setup.sub, {*oi}))
      throw internal_error("closed-form reflection fails the minimal representative test");
    add(setup.restricted.orbit_longest[*oi], {*oi});
  }
  return rep;
}

MultipletReport level_one_decomposition(const CatalogEntry& entry, LevelOneKind kind) {
  if (entry.level_one == LevelOneBranch::none)
    throw invalid_input("entry has no level-one closed form");
  DiracSetup setup = kind == LevelOneKind::basic_vector
                         ? build_dirac_setup(entry, basic_weight(entry))
                         : build_untwisted_setup(entry, basic_weight(entry));
  MultipletReport rep = kernel_decomposition(setup, 8);
  std::string side =
      kind == LevelOneKind::basic_vector ? "basic module side" : "spin module side";
  std::string note = branch_name(entry.level_one) + ", " + side;
  rep.note = rep.note.empty() ? note : note + "; " + rep.note;
  return rep;
}

std::vector<AffineWeight> affine_fundamental_weights(const QMat& gram,
                                                     const std::vector<AffineWeight>& simples,
                                                     const std::vector<QVec>& span) {
  const std::size_t n = simples.size();
  if (n != span.size() + 1)
    throw invalid_input("fundamental weights need one more simple root than span directions");
  // Unknowns: the level, then the span coefficients of the finite part.
  QMat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Q nrm = affine_norm2(gram, simples[i]);
    if (!(nrm > 0)) throw invalid_input("simple root with nonpositive norm");
    a.at(i, 0) = 2 * simples[i].dlt / nrm;
    for (std::size_t j = 0; j < span.size(); ++j)
      a.at(i, 1 + j) = 2 * bilinear(span[j], gram, simples[i].fin) / nrm;
  }
  std::vector<AffineWeight> out;
  for (std::size_t t = 0; t < n; ++t) {
    QVec rhs(n, Q(0));
    rhs[t] = 1;
    auto x = solve(a, rhs);
    if (!x) throw internal_error("fundamental weight system is singular");
    QVec fin(gram.rows, Q(0));
    for (std::size_t j = 0; j < span.size(); ++j)
      for (std::size_t i = 0; i < gram.rows; ++i) fin[i] += (*x)[1 + j] * span[j][i];
    out.push_back({(*x)[0], fin, Q(0)});
  }
  return out;
}

std::string multiplet_label(const DiracSetup& setup, const AffineWeight& xi) {
  const SubsystemData& s = setup.sub;
  const std::size_t dim = setup.gram.rows;
  AffineWeight residual = xi;
  std::vector<std::string> parts;

  if (!s.simples.empty()) {
    std::vector<AffineWeight> fw =
        affine_fundamental_weights(setup.gram, s.simples, setup.sub_span);
    for (std::size_t i = 0; i < s.simples.size(); ++i) {
      Q coeff = affine_pair_coroot(setup.gram, xi, s.simples[i]);
      if (!is_integer(coeff) || coeff < 0)
        throw invalid_input("weight is not dominant integral for the subalgebra");
      residual = residual - coeff * fw[i];
      if (coeff == 0) continue;
      parts.push_back(coeff == 1 ? "fw" + std::to_string(i)
                                 : q_to_string(coeff) + " fw" + std::to_string(i));
    }
    if (residual.level != 0)
      throw internal_error("level residual after the fundamental weights");
  } else if (residual.level != 0) {
    parts.push_back(q_to_string(residual.level) + " Lambda0");
    residual.level = 0;
  }

  std::vector<Q> central(s.center.size(), Q(0));
  if (!s.center.empty()) {
    QMat c = column_matrix(s.center, dim);
    QMat normal = transpose(c) * setup.gram * c;
    auto z = solve(normal, mat_vec(transpose(c) * setup.gram, residual.fin));
    if (!z) throw internal_error("central directions are form-degenerate");
    central = *z;
    for (std::size_t j = 0; j < s.center.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) residual.fin[i] -= central[j] * s.center[j][i];
  }
  if (!is_zero(residual.fin))
    throw internal_error("weight does not decompose over the subalgebra labels");

  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " + ";
    out += p;
  }
  if (residual.dlt != 0) {
    if (out.empty())
      out = q_to_string(residual.dlt) + " delta";
    else if (residual.dlt > 0)
      out += " + " + q_to_string(residual.dlt) + " delta";
    else
      out += " - " + q_to_string(-residual.dlt) + " delta";
  }
  bool any_central = false;
  for (const Q& z : central) any_central = any_central || z != 0;
  if (any_central) {
    std::string inner;
    for (const Q& z : central) {
      if (!inner.empty()) inner += ", ";
      inner += q_to_string(z);
    }
    out += (out.empty() ? "central(" : " + central(") + inner + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace liedirac
