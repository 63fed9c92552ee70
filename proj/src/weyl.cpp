#include "liedirac/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "liedirac/errors.hpp"

namespace liedirac {

namespace {

int cmp_qvec(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp_q(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// Stacked (fin, dlt) coordinates of a level-0 vector, for linear solving.
QVec level0_coords(const AffineWeight& x) {
  if (x.level != 0) throw internal_error("level0_coords: nonzero level");
  QVec v = x.fin;
  v.push_back(x.dlt);
  return v;
}

QMat column_matrix(const std::vector<QVec>& cols) {
  if (cols.empty()) throw internal_error("column_matrix: no columns");
  QMat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows) throw internal_error("column_matrix: ragged columns");
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

// Largest rational g such that every entry of v is an integer multiple of g.
Q rational_gcd(const std::vector<Q>& v) {
  mpz_class lcm_den(1), gcd_num(0);
  for (const Q& q : v) {
    if (q == 0) continue;
    mpz_class d = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    lcm_den = lcm_den / g * d;
  }
  for (const Q& q : v) {
    if (q == 0) continue;
    Q scaled = q * Q(lcm_den);
    if (!is_integer(scaled)) throw internal_error("rational_gcd: scaling failed");
    mpz_class n = abs(scaled.get_num());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
  }
  if (gcd_num == 0) throw invalid_input("gcd of the zero vector");
  Q g(gcd_num, lcm_den);
  g.canonicalize();
  return g;
}

// Orthogonal projection of v onto the span of the given rows.
QVec span_projection(const QMat& gram, const std::vector<QVec>& rows, const QVec& v) {
  if (rows.empty()) return QVec(v.size(), Q(0));
  QMat a(rows.size(), rows.size());
  QVec b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) a.at(i, j) = inner_form(gram, rows[i], rows[j]);
    b[i] = inner_form(gram, v, rows[i]);
  }
  auto x = solve(a, b);
  if (!x) throw invalid_input("projection onto a degenerate span");
  QVec p(v.size(), Q(0));
  for (std::size_t i = 0; i < rows.size(); ++i) p = p + (*x)[i] * rows[i];
  return p;
}

bool positive_definite(const QMat& g) {
  // Sylvester criterion on leading principal minors.
  for (std::size_t k = 1; k <= g.rows; ++k) {
    QMat sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = g.at(i, j);
    if (det(sub) <= 0) return false;
  }
  return true;
}

}  // namespace

bool AffineWeightLess::operator()(const AffineWeight& a, const AffineWeight& b) const {
  int c = cmp_q(a.level, b.level);
  if (c != 0) return c < 0;
  c = cmp_q(a.dlt, b.dlt);
  if (c != 0) return c < 0;
  return cmp_qvec(a.fin, b.fin) < 0;
}

AffWeylElt aw_identity(std::size_t n) {
  return AffWeylElt{QMat::identity(n), QVec(n, Q(0)), 0};
}

AffWeylElt aw_compose(const AffWeylElt& a, const AffWeylElt& b) {
  AffWeylElt r;
  r.mat = a.mat * b.mat;
  r.tau = a.tau + mat_vec(a.mat, b.tau);
  return r;
}

AffWeylElt aw_inverse(const AffWeylElt& a) {
  AffWeylElt r;
  r.mat = inverse(a.mat);
  r.tau = -mat_vec(r.mat, a.tau);
  return r;
}

bool aw_equal(const AffWeylElt& a, const AffWeylElt& b) {
  return a.mat == b.mat && a.tau == b.tau;
}

bool aw_less(const AffWeylElt& a, const AffWeylElt& b) {
  if (a.mat.rows != b.mat.rows) return a.mat.rows < b.mat.rows;
  for (std::size_t i = 0; i < a.mat.a.size(); ++i) {
    int c = cmp_q(a.mat.a[i], b.mat.a[i]);
    if (c != 0) return c < 0;
  }
  return cmp_qvec(a.tau, b.tau) < 0;
}

AffineWeight aw_apply(const QMat& gram, const AffWeylElt& w, const AffineWeight& x) {
  QVec f = mat_vec(w.mat, x.fin);
  AffineWeight r;
  r.level = x.level;
  r.fin = f + x.level * w.tau;
  r.dlt = x.dlt - inner_form(gram, f, w.tau) - Q(1, 2) * inner_form(gram, w.tau, w.tau) * x.level;
  return r;
}

AffWeylElt reflection_elt(const QMat& gram, const AffineWeight& root) {
  if (root.level != 0) throw invalid_input("reflection in a weight of nonzero level");
  Q n = inner_form(gram, root.fin, root.fin);
  if (n <= 0) throw invalid_input("reflection in an isotropic root");
  AffWeylElt r;
  r.mat = reflection_matrix(gram, root.fin);
  r.tau = (-root.dlt * Q(2) / n) * root.fin;
  return r;
}

AffWeylElt translation_elt(const TwistedAffineDatum& D, const QVec& v) {
  if (v.size() != D.ambient_dim()) throw invalid_input("translation vector of wrong dimension");
  if (!is_zero(v)) {
    if (D.translation_lattice.empty())
      throw invalid_input("translation outside the translation span");
    QMat m(v.size(), D.translation_lattice.size());
    for (std::size_t j = 0; j < D.translation_lattice.size(); ++j)
      for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = D.translation_lattice[j][i];
    if (!solve(m, v)) throw invalid_input("translation outside the translation span");
  }
  AffWeylElt r = aw_identity(v.size());
  r.tau = v;
  return r;
}

AffWeylElt simple_reflection(const TwistedAffineDatum& D, std::size_t k) {
  if (k >= D.simple_roots.size()) throw invalid_input("simple reflection index out of range");
  return reflection_elt(D.gram(), D.simple_roots[k]);
}

std::vector<AffWeylElt> affine_weyl_ball(const TwistedAffineDatum& D, int length_bound,
                                         long cap) {
  std::vector<AffWeylElt> gens;
  for (std::size_t k = 0; k < D.simple_roots.size(); ++k)
    gens.push_back(simple_reflection(D, k));

  std::vector<AffWeylElt> out;
  std::map<AffWeylElt, std::size_t, bool (*)(const AffWeylElt&, const AffWeylElt&)> seen(aw_less);
  AffWeylElt id = aw_identity(D.ambient_dim());
  out.push_back(id);
  seen.emplace(id, 0);
  std::size_t head = 0;
  while (head < out.size()) {
    AffWeylElt cur = out[head++];
    if (cur.length >= length_bound) continue;
    for (const auto& g : gens) {
      AffWeylElt nxt = aw_compose(cur, g);
      nxt.length = cur.length + 1;
      if (seen.count(nxt)) continue;
      if (static_cast<long>(out.size()) >= cap)
        throw internal_error("affine Weyl ball enumeration exceeded its cap");
      seen.emplace(nxt, out.size());
      out.push_back(nxt);
    }
  }
  return out;
}

std::vector<AffineWeight> inversion_set(const TwistedAffineDatum& D, const AffWeylElt& w) {
  const QMat& G = D.gram();
  AffWeylElt wi = aw_inverse(w);
  std::vector<AffineWeight> out;

  // j delta + gamma is inverted iff j - (M^{-1} gamma, v_i) is negative, or
  // zero with negative finite image; j is therefore bounded by the pairing.
  for (const auto& [cls, tab] : D.table.classes) {
    for (const auto& [gamma, dim] : tab) {
      if (is_zero(gamma)) continue;
      QVec img = mat_vec(wi.mat, gamma);
      Q bound = inner_form(G, img, wi.tau);
      // Positive candidates: j in cls + Z, j >= 0 (j = 0 needs gamma positive).
      Q j = mod1(cls);
      while (j <= bound) {
        bool positive = j > 0 || D.is_positive_root({Q(0), gamma, Q(0)});
        if (positive) {
          Q image_dlt = j - bound;
          bool inverted =
              image_dlt < 0 || (image_dlt == 0 && D.is_positive_root({Q(0), -img, Q(0)}));
          if (inverted) {
            if (dim != 1) throw internal_error("real root of multiplicity != 1");
            out.push_back({Q(0), gamma, j});
          }
        }
        j += 1;
      }
    }
  }
  std::sort(out.begin(), out.end(), AffineWeightLess{});
  return out;
}

std::vector<AffineWeight> inversion_set_from_word(const TwistedAffineDatum& D,
                                                  const std::vector<std::size_t>& word) {
  std::vector<AffineWeight> out;
  std::set<AffineWeight, AffineWeightLess> seen;
  AffWeylElt prefix = aw_identity(D.ambient_dim());
  for (std::size_t idx : word) {
    if (idx >= D.simple_roots.size()) throw invalid_input("word index out of range");
    AffineWeight g = aw_apply(D.gram(), prefix, D.simple_roots[idx]);
    if (!D.is_positive_root(g) || !seen.insert(g).second)
      throw internal_error("word is not reduced");
    out.push_back(g);
    prefix = aw_compose(prefix, simple_reflection(D, idx));
  }
  std::sort(out.begin(), out.end(), AffineWeightLess{});
  return out;
}

AffineWeight RestrictedSystem::restrict_weight(const AffineWeight& x) const {
  return {x.level, mat_vec(projector, x.fin), x.dlt};
}

bool RestrictedSystem::is_isotropic(const AffineWeight& x) const {
  return affine_norm2(datum->gram(), x) == 0;
}

std::optional<QVec> RestrictedSystem::orbit_coords(const AffineWeight& x) const {
  if (x.level != 0) return std::nullopt;
  std::vector<QVec> cols;
  for (const auto& a : orbit_root) cols.push_back(level0_coords(a));
  return solve(column_matrix(cols), level0_coords(x));
}

bool RestrictedSystem::positive_restricted_root(const AffineWeight& beta) const {
  auto coords = orbit_coords(beta);
  if (!coords) return false;
  bool nonzero = false;
  for (const Q& c : *coords) {
    if (!is_integer(c) || c < 0) return false;
    if (c != 0) nonzero = true;
  }
  if (!nonzero) return false;

  const QMat& G = datum->gram();
  AffineWeight b = beta;
  for (long guard = 0; guard < 20000; ++guard) {
    if (affine_norm2(G, b) == 0) return false;
    for (std::size_t j : basis)
      if (b == orbit_root[j]) return true;
    bool moved = false;
    for (std::size_t j : basis) {
      if (affine_pair(G, b, orbit_root[j]) > 0) {
        b = affine_reflect(G, b, orbit_root[j]);
        // A genuine root keeps uniform-sign integer coordinates while it
        // descends; anything else is rejected.
        auto c = orbit_coords(b);
        if (!c) return false;
        bool pos = false, neg = false;
        for (const Q& q : *c) {
          if (!is_integer(q)) return false;
          if (q > 0) pos = true;
          if (q < 0) neg = true;
        }
        if (pos && neg) return false;
        if (neg) return false;  // dropped out of the positive cone
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  throw internal_error("restricted root descent did not terminate");
}

std::optional<AffineWeight> RestrictedSystem::primitive(const AffineWeight& beta) const {
  const QMat& G = datum->gram();
  if (affine_norm2(G, beta) == 0) return std::nullopt;
  auto coords = orbit_coords(beta);
  if (!coords) throw invalid_input("vector outside the restricted root span");
  bool pos = false, neg = false;
  for (const Q& q : *coords) {
    if (q > 0) pos = true;
    if (q < 0) neg = true;
  }
  if (pos && neg) throw invalid_input("vector is not a one-signed combination");
  Q sign = neg ? Q(-1) : Q(1);
  AffineWeight bp = sign * beta;
  Q g = rational_gcd(*coords);
  for (long m = 1; m <= 24; ++m) {
    AffineWeight cand = (Q(m) / g) * bp;
    if (positive_restricted_root(cand)) return sign * cand;
  }
  throw invalid_input("vector is not a multiple of a restricted root");
}

std::vector<AffineWeight> RestrictedSystem::enumerate_positive(int height_bound) const {
  std::vector<AffineWeight> out;
  std::vector<long> coeff(basis.size(), 0);
  // Depth-first enumeration of nonnegative integer combinations.
  auto rec = [&](auto&& self, std::size_t pos, long budget) -> void {
    if (pos == basis.size()) {
      AffineWeight b = datum->zero_weight();
      bool nz = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeff[i] == 0) continue;
        nz = true;
        b = b + Q(coeff[i]) * orbit_root[basis[i]];
      }
      if (nz && positive_restricted_root(b)) out.push_back(b);
      return;
    }
    for (long c = 0; c <= budget; ++c) {
      coeff[pos] = c;
      self(self, pos + 1, budget - c);
    }
    coeff[pos] = 0;
  };
  rec(rec, 0, height_bound);
  std::sort(out.begin(), out.end(), AffineWeightLess{});
  return out;
}

RestrictedSystem restricted_system(const TwistedAffineDatum& D, const QMat& mu_finite) {
  const std::size_t n = D.ambient_dim();
  const QMat& G = D.gram();
  if (mu_finite.rows != n || mu_finite.cols != n)
    throw invalid_input("restriction map of wrong dimension");
  if (!(transpose(mu_finite) * G * mu_finite == G))
    throw invalid_input("restriction map does not preserve the form");

  RestrictedSystem R;
  R.datum = &D;
  R.mu = mu_finite;

  QMat power = mu_finite;
  R.order = 1;
  while (!(power == QMat::identity(n))) {
    power = power * mu_finite;
    if (++R.order > 64) throw invalid_input("restriction map has order > 64");
  }

  // Induced permutation of the simple roots (marks must match).
  const auto& simples = D.simple_roots;
  R.perm.assign(simples.size(), simples.size());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    QVec img = mat_vec(mu_finite, simples[i].fin);
    for (std::size_t j = 0; j < simples.size(); ++j) {
      if (simples[j].fin == img && simples[j].dlt == simples[i].dlt) {
        R.perm[i] = j;
        break;
      }
    }
    if (R.perm[i] == simples.size())
      throw invalid_input("restriction map does not permute the simple roots");
  }
  {
    std::vector<bool> hit(simples.size(), false);
    for (std::size_t j : R.perm) {
      if (hit[j]) throw invalid_input("restriction map is not injective on simples");
      hit[j] = true;
    }
  }

  // Diagram components and the induced action on them: a single orbit is
  // required (direct sums of data are out of scope).
  {
    std::vector<std::size_t> comp(simples.size(), simples.size());
    std::size_t ncomp = 0;
    for (std::size_t s = 0; s < simples.size(); ++s) {
      if (comp[s] != simples.size()) continue;
      std::deque<std::size_t> q{s};
      comp[s] = ncomp;
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (std::size_t v = 0; v < simples.size(); ++v)
          if (comp[v] == simples.size() && D.affine_cartan.at(u, v) != 0) {
            comp[v] = ncomp;
            q.push_back(v);
          }
      }
      ++ncomp;
    }
    std::vector<bool> seen_comp(ncomp, false);
    std::size_t orbits_of_components = 0;
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (seen_comp[c]) continue;
      ++orbits_of_components;
      // follow the permutation action starting from any node of component c
      std::size_t node = 0;
      while (comp[node] != c) ++node;
      std::size_t cur = node;
      do {
        seen_comp[comp[cur]] = true;
        cur = R.perm[cur];
      } while (cur != node);
    }
    if (orbits_of_components > 1)
      throw unsupported_case("restriction map moves between several diagram components");
  }

  // Projector onto the fixed subspace.
  R.projector = QMat::identity(n);
  power = mu_finite;
  for (int k = 1; k < R.order; ++k) {
    for (std::size_t i = 0; i < R.projector.a.size(); ++i) R.projector.a[i] += power.a[i];
    power = power * mu_finite;
  }
  for (auto& e : R.projector.a) e /= R.order;

  // Orbits of the permutation, ordered by least node.
  {
    std::vector<bool> used(simples.size(), false);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> orb;
      std::size_t c = i;
      do {
        orb.push_back(c);
        used[c] = true;
        c = R.perm[c];
      } while (c != i);
      std::sort(orb.begin(), orb.end());
      R.orbits.push_back(orb);
    }
  }

  for (const auto& orb : R.orbits) {
    AffineWeight avg = D.zero_weight();
    for (std::size_t idx : orb) {
      if (simples[idx].dlt != simples[orb[0]].dlt)
        throw internal_error("orbit with unequal marks");
      avg = avg + simples[idx];
    }
    avg = (Q(1, static_cast<long>(orb.size()))) * avg;
    // the average equals the projection of any member
    AffineWeight check = R.restrict_weight(simples[orb[0]]);
    if (!(check == avg)) throw internal_error("orbit average disagrees with projection");
    R.orbit_root.push_back(avg);

    QMat og(orb.size(), orb.size());
    for (std::size_t a = 0; a < orb.size(); ++a)
      for (std::size_t b = 0; b < orb.size(); ++b)
        og.at(a, b) = affine_pair(G, simples[orb[a]], simples[orb[b]]);
    R.orbit_finite.push_back(positive_definite(og));
  }

  // Longest element of the finite subsystem generated by each orbit.
  for (std::size_t oi = 0; oi < R.orbits.size(); ++oi) {
    if (!R.orbit_finite[oi]) {
      R.orbit_longest.push_back(aw_identity(n));
      continue;
    }
    const auto& orb = R.orbits[oi];
    std::vector<AffWeylElt> gens;
    for (std::size_t idx : orb) gens.push_back(reflection_elt(G, simples[idx]));
    std::vector<AffWeylElt> group{aw_identity(n)};
    std::map<AffWeylElt, bool, bool (*)(const AffWeylElt&, const AffWeylElt&)> seen(aw_less);
    seen.emplace(group[0], true);
    for (std::size_t head = 0; head < group.size(); ++head) {
      for (const auto& g : gens) {
        AffWeylElt nxt = aw_compose(group[head], g);
        if (seen.emplace(nxt, true).second) {
          group.push_back(nxt);
          if (group.size() > 100000)
            throw internal_error("orbit subsystem group did not close");
        }
      }
    }
    std::vector<QVec> cols;
    for (std::size_t idx : orb) cols.push_back(level0_coords(simples[idx]));
    QMat cm = column_matrix(cols);
    std::optional<AffWeylElt> longest;
    for (const auto& u : group) {
      bool all_neg = true;
      for (std::size_t idx : orb) {
        AffineWeight img = aw_apply(G, u, simples[idx]);
        auto c = solve(cm, level0_coords(img));
        if (!c) throw internal_error("orbit image left the orbit span");
        for (const Q& q : *c)
          if (q > 0) {
            all_neg = false;
            break;
          }
        if (!all_neg) break;
      }
      if (all_neg) {
        if (longest) throw internal_error("two longest elements in an orbit subsystem");
        longest = u;
      }
    }
    if (!longest) throw internal_error("orbit subsystem has no longest element");
    R.orbit_longest.push_back(*longest);
  }

  for (std::size_t oi = 0; oi < R.orbits.size(); ++oi)
    if (R.orbit_finite[oi]) R.basis.push_back(oi);

  // Integrality of the restricted pairing numbers (the basis roots generate
  // a valid generalized Cartan matrix).
  for (std::size_t a : R.basis)
    for (std::size_t b : R.basis) {
      Q p = Q(2) * affine_pair(G, R.orbit_root[a], R.orbit_root[b]) /
            affine_norm2(G, R.orbit_root[b]);
      if (!is_integer(p)) throw internal_error("restricted pairing is not integral");
      if (a != b && p > 0) throw internal_error("restricted pairing has wrong sign");
    }

  // The restriction of each longest element acts as the reflection in the
  // orbit root (checked on all simple restrictions).
  for (std::size_t oi : R.basis) {
    for (const auto& s : simples) {
      AffineWeight lhs = R.restrict_weight(aw_apply(G, R.orbit_longest[oi], s));
      AffineWeight rhs = affine_reflect(G, R.restrict_weight(s), R.orbit_root[oi]);
      if (!(lhs == rhs))
        throw internal_error("longest element does not restrict to the orbit reflection");
    }
  }

  return R;
}

bool sub_positive_real(const QMat& gram, const SubsystemData& S, const AffineWeight& x) {
  (void)gram;  // positivity is decided in coordinates
  if (x.level != 0 || is_zero(x.fin)) return false;
  auto cit = S.classes.find(mod1(x.dlt));
  if (cit == S.classes.end()) return false;
  auto wit = cit->second.find(x.fin);
  if (wit == cit->second.end() || wit->second < 1) return false;
  if (x.dlt > 0) return true;
  if (x.dlt < 0) return false;
  // Degree zero: decompose over the zero-mark simple roots.
  std::vector<QVec> zero;
  for (const auto& s : S.simples)
    if (s.dlt == 0) zero.push_back(s.fin);
  if (zero.empty()) return false;
  auto c = solve(column_matrix(zero), x.fin);
  if (!c) throw internal_error("degree-0 subsystem root outside its simple span");
  bool pos = false, neg = false;
  for (const Q& q : *c) {
    if (q > 0) pos = true;
    if (q < 0) neg = true;
  }
  if (pos && neg) throw internal_error("degree-0 subsystem root with mixed signs");
  return pos;
}

bool in_subgroup(const QMat& gram, const SubsystemData& S, const AffWeylElt& x) {
  for (const auto& s : S.simples)
    if (affine_pair(gram, S.rho, s) <= 0)
      throw invalid_input("subsystem base weight is not dominant regular");
  AffineWeight y = aw_apply(gram, aw_inverse(x), S.rho);
  AffWeylElt u = aw_identity(x.mat.rows);
  for (long guard = 0; guard < 100000; ++guard) {
    bool moved = false;
    for (const auto& s : S.simples) {
      if (affine_pair(gram, y, s) < 0) {
        y = affine_reflect(gram, y, s);
        u = aw_compose(reflection_elt(gram, s), u);
        moved = true;
        break;
      }
    }
    if (!moved) {
      if (!(y == S.rho)) return false;
      return aw_equal(aw_compose(u, aw_inverse(x)), aw_identity(x.mat.rows));
    }
  }
  throw internal_error("subsystem dominance walk did not terminate");
}

bool in_extended_subgroup(const QMat& gram, const SubsystemData& S, const AffWeylElt& x) {
  if (S.center.empty()) return in_subgroup(gram, S, x);
  QVec central = span_projection(gram, S.center, x.tau);
  if (!lattice_contains(S.center, central)) return false;
  AffWeylElt shift = aw_identity(x.mat.rows);
  shift.tau = -central;
  return in_subgroup(gram, S, aw_compose(shift, x));
}

CommEnumeration enumerate_commutant(const TwistedAffineDatum& D, const RestrictedSystem& R,
                                    const AffineWeight& base, const Q& drop_bound,
                                    long cap) {
  const QMat& G = D.gram();
  for (const auto& s : D.simple_roots)
    if (affine_pair(G, base, s) <= 0)
      throw invalid_input("enumeration base weight is not dominant regular");

  // Generators commute with the restriction map; the products then do too.
  for (std::size_t oi : R.basis) {
    const QMat& m = R.orbit_longest[oi].mat;
    if (!(m * R.mu == R.mu * m))
      throw internal_error("orbit longest element does not commute with the restriction");
  }

  CommEnumeration E;
  std::map<AffWeylElt, std::size_t, bool (*)(const AffWeylElt&, const AffWeylElt&)> seen(aw_less);
  AffWeylElt id = aw_identity(D.ambient_dim());
  E.elements.push_back(id);
  E.words.push_back({});
  E.drops.push_back(Q(0));
  seen.emplace(id, 0);
  for (std::size_t head = 0; head < E.elements.size(); ++head) {
    AffWeylElt cur = E.elements[head];
    std::vector<std::size_t> word = E.words[head];
    Q drop = E.drops[head];
    for (std::size_t oi : R.basis) {
      AffWeylElt nxt = aw_compose(cur, R.orbit_longest[oi]);
      nxt.length = cur.length + 1;
      if (seen.count(nxt)) continue;
      Q ndrop = base.dlt - aw_apply(G, nxt, base).dlt;
      if (ndrop < drop) throw internal_error("drop decreased along the search tree");
      if (ndrop > drop_bound) continue;
      if (static_cast<long>(E.elements.size()) >= cap)
        throw internal_error("commutant enumeration exceeded its cap");
      seen.emplace(nxt, E.elements.size());
      E.elements.push_back(nxt);
      auto w = word;
      w.push_back(oi);
      E.words.push_back(std::move(w));
      E.drops.push_back(ndrop);
    }
  }
  return E;
}

bool minimal_coset_rep(const TwistedAffineDatum& D, const RestrictedSystem& R,
                       const SubsystemData& S, const std::vector<std::size_t>& word) {
  const QMat& G = D.gram();
  std::set<AffineWeight, AffineWeightLess> seen;
  AffWeylElt prefix = aw_identity(D.ambient_dim());
  for (std::size_t oi : word) {
    const AffineWeight& a = R.orbit_root.at(oi);
    AffineWeight gamma = aw_apply(G, prefix, a);
    if (!seen.insert(gamma).second) throw internal_error("coset word is not reduced");
    if (!R.positive_restricted_root(gamma))
      throw internal_error("word inversion left the positive restricted roots");
    // Is some positive multiple of gamma a positive real subsystem root?
    std::set<Q, QLess> ratios;
    for (const auto& [cls, tab] : S.classes) {
      (void)cls;
      for (const auto& [fin, dim] : tab) {
        if (dim < 1 || is_zero(fin)) continue;
        // fin parallel to gamma.fin with positive ratio?
        Q t(0);
        bool parallel = true;
        for (std::size_t i = 0; i < fin.size() && parallel; ++i) {
          if (gamma.fin[i] == 0) {
            if (fin[i] != 0) parallel = false;
          } else if (t == 0) {
            t = fin[i] / gamma.fin[i];
          }
        }
        if (!parallel || t <= 0) continue;
        for (std::size_t i = 0; i < fin.size() && parallel; ++i)
          if (!(fin[i] == t * gamma.fin[i])) parallel = false;
        if (parallel) ratios.insert(t);
      }
    }
    for (const Q& t : ratios)
      if (sub_positive_real(G, S, t * gamma)) return false;
    prefix = aw_compose(prefix, reflection_elt(G, a));
  }
  return true;
}

std::vector<std::size_t> center_coset_reps(const QMat& gram, const SubsystemData& S,
                                           const std::vector<AffWeylElt>& elems) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool fresh = true;
    for (std::size_t k : kept) {
      if (in_extended_subgroup(gram, S, aw_compose(elems[i], aw_inverse(elems[k])))) {
        fresh = false;
        break;
      }
    }
    if (fresh) kept.push_back(i);
  }
  return kept;
}

}  // namespace liedirac
