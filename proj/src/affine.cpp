#include "liedirac/affine.hpp"

#include <algorithm>
#include <set>

#include "liedirac/errors.hpp"

namespace liedirac {

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
  return {a.level + b.level, a.fin + b.fin, a.dlt + b.dlt};
}
AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
  return {a.level - b.level, a.fin - b.fin, a.dlt - b.dlt};
}
AffineWeight operator-(const AffineWeight& a) { return {-a.level, -a.fin, -a.dlt}; }
AffineWeight operator*(const Q& c, const AffineWeight& a) {
  return {c * a.level, c * a.fin, c * a.dlt};
}

Q affine_pair(const QMat& gram, const AffineWeight& x, const AffineWeight& y) {
  return bilinear(x.fin, gram, y.fin) + x.level * y.dlt + y.level * x.dlt;
}

Q affine_norm2(const QMat& gram, const AffineWeight& x) {
  return affine_pair(gram, x, x);
}

Q affine_pair_coroot(const QMat& gram, const AffineWeight& x, const AffineWeight& root) {
  Q nn = bilinear(root.fin, gram, root.fin);
  if (nn <= 0) throw internal_error("coroot pairing against a non-real root");
  return 2 * affine_pair(gram, x, root) / nn;
}

AffineWeight affine_reflect(const QMat& gram, const AffineWeight& x,
                            const AffineWeight& root) {
  return x - affine_pair_coroot(gram, x, root) * root;
}

namespace {

// Walk x into the closed alcove {gamma_i(x) >= 0, theta(x) <= 1/r},
// checking the affine wall first and then the finite walls in index order.
QVec alcove_reduce(const FoldedData& fd, QVec x) {
  const QMat& G = fd.parent.gram;
  const QVec theta_cov = coroot_vec(G, fd.theta);
  const Q bound = Q(1, fd.r);
  for (int iter = 0; iter < 200000; ++iter) {
    if (inner_form(G, fd.theta, x) > bound) {
      x = reflect(G, x, fd.theta) + bound * theta_cov;
      continue;
    }
    bool moved = false;
    for (const QVec& g : fd.simples) {
      if (inner_form(G, g, x) < 0) {
        x = reflect(G, x, g);
        moved = true;
        break;
      }
    }
    if (!moved) return x;
  }
  throw internal_error("alcove reduction did not terminate");
}

std::map<Q, long, QLess> class_dimensions(const GradedTable& t) {
  std::map<Q, long, QLess> dims;
  for (const auto& [cls, table] : t.classes) {
    long d = 0;
    for (const auto& [w, m] : table) d += m;
    dims[cls] = d;
  }
  return dims;
}

}  // namespace

long TwistedAffineDatum::root_multiplicity(const Q& j, const QVec& gamma) const {
  if (j == 0 && is_zero(gamma)) return 0;
  auto cit = table.classes.find(mod1(j));
  if (cit == table.classes.end()) return 0;
  auto wit = cit->second.find(gamma);
  return wit == cit->second.end() ? 0 : wit->second;
}

bool TwistedAffineDatum::is_positive_root(const AffineWeight& r) const {
  if (r.level != 0) throw internal_error("roots must have level 0");
  if (r.dlt > 0) return true;
  if (r.dlt < 0) return false;
  if (is_zero(r.fin)) throw internal_error("positivity of the zero vector");
  // Degree 0: expand in the zero-mark simples.
  std::vector<const AffineWeight*> s0;
  for (std::size_t k = 0; k < simple_roots.size(); ++k)
    if (marks[k] == 0) s0.push_back(&simple_roots[k]);
  if (s0.empty()) throw internal_error("degree-0 root but no zero-mark simples");
  QMat A(ambient_dim(), s0.size());
  for (std::size_t j = 0; j < s0.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim(); ++i) A.at(i, j) = s0[j]->fin[i];
  auto c = solve(A, r.fin);
  if (!c) throw internal_error("degree-0 root outside the zero-mark span");
  bool nonneg = true, nonpos = true;
  for (const Q& x : *c) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  if (nonneg) return true;
  if (nonpos) return false;
  throw internal_error("degree-0 root with mixed-sign expansion");
}

std::vector<AffineWeight> TwistedAffineDatum::real_roots_in_band(const Q& lo,
                                                                 const Q& hi) const {
  std::vector<AffineWeight> out;
  for (const auto& [cls, tbl] : table.classes)
    for (const auto& [gamma, m] : tbl) {
      if (is_zero(gamma)) continue;
      // dlt = cls + n for integers n with lo <= dlt <= hi.
      Q n = qfloor(lo - cls);
      while (cls + n < lo) n += 1;
      for (Q d = cls + n; d <= hi; d += 1)
        out.push_back({Q(0), gamma, d});
    }
  return out;
}

TwistedAffineDatum build_twisted_datum(const FoldedData& fd, const QVec& h_evals,
                                       bool allow_walk) {
  TwistedAffineDatum D;
  D.fold = fd;
  D.h_evals_input = h_evals;
  const QMat& G = fd.parent.gram;

  // nu-image of h: (alpha_i, x) = h_evals[i].
  auto x0 = solve(G, h_evals);
  if (!x0) throw internal_error("Gram matrix not invertible");
  // Validate eta-symmetry early (sigma_graded_table re-checks).
  for (std::size_t i = 0; i < h_evals.size(); ++i)
    if (h_evals[fd.eta.perm[i]] != h_evals[i])
      throw invalid_input("twisting element is not fixed by the diagram action");

  QVec x = alcove_reduce(fd, *x0);
  if (!allow_walk && x != *x0)
    throw invalid_input(
        "inherited twisting element lies outside the fundamental alcove");
  D.x_h = x;
  D.h_evals = mat_vec(G, x);
  D.table = sigma_graded_table(fd, D.h_evals);

  // A conjugate automorphism must have identical eigenclass dimensions.
  if (class_dimensions(D.table) !=
      class_dimensions(sigma_graded_table(fd, h_evals)))
    throw internal_error("alcove reduction changed eigenclass dimensions");

  // Marks and simple roots.
  const std::size_t l = fd.fixed_rank();
  D.marks.assign(l + 1, Q(0));
  D.marks[0] = Q(1, fd.r) - inner_form(G, fd.theta, x);
  D.simple_roots.push_back({Q(0), -fd.theta, D.marks[0]});
  for (std::size_t i = 0; i < l; ++i) {
    D.marks[i + 1] = inner_form(G, fd.simples[i], x);
    D.simple_roots.push_back({Q(0), fd.simples[i], D.marks[i + 1]});
  }
  for (const Q& s : D.marks)
    if (s < 0) throw internal_error("negative mark after alcove reduction");
  for (std::size_t k = 0; k <= l; ++k)
    if (D.root_multiplicity(D.simple_roots[k].dlt, D.simple_roots[k].fin) < 1)
      throw internal_error("simple root missing from the graded table");

  // Affine Cartan matrix of the datum (rows = coroots).
  D.affine_cartan = QMat(l + 1, l + 1);
  for (std::size_t i = 0; i <= l; ++i)
    for (std::size_t j = 0; j <= l; ++j) {
      Q a = affine_pair_coroot(G, D.simple_roots[j], D.simple_roots[i]);
      if (!is_integer(a))
        throw internal_error("non-integral affine Cartan pairing");
      if (i == j && a != 2) throw internal_error("affine Cartan diagonal != 2");
      if (i != j && a > 0) throw internal_error("positive off-diagonal Cartan entry");
      D.affine_cartan.at(i, j) = a;
    }

  // rho vector: degree-0 positive half sum plus (1-2j)-weighted full sums.
  QVec rho_fin(fd.parent.rank, Q(0));
  {
    auto cit = D.table.classes.find(Q(0));
    if (cit != D.table.classes.end()) {
      QVec half(fd.parent.rank, Q(0));
      for (const auto& [gamma, m] : cit->second) {
        if (is_zero(gamma)) continue;
        if (m != 1)
          throw internal_error("degree-0 root with multiplicity > 1");
        if (D.is_positive_root({Q(0), gamma, Q(0)})) half += gamma;
      }
      rho_fin += Q(1, 2) * half;
    }
    for (const auto& [cls, tbl] : D.table.classes) {
      if (cls == 0 || cls >= Q(1, 2)) continue;
      QVec s(fd.parent.rank, Q(0));
      for (const auto& [gamma, m] : tbl) s += Q(m) * gamma;
      rho_fin += (Q(1) - 2 * cls) * (Q(1, 2) * s);
    }
  }

  // Solve the level from 2(rho_hat, alpha)/(alpha, alpha) = 1 on the simples.
  bool have_level = false;
  Q level = 0;
  for (std::size_t k = 0; k <= l; ++k) {
    const AffineWeight& a = D.simple_roots[k];
    Q target = inner_form(G, a.fin, a.fin) / 2;
    Q finite_part = inner_form(G, rho_fin, a.fin);
    if (a.dlt == 0) {
      if (finite_part != target)
        throw internal_error("rho normalization fails on a zero-mark simple");
    } else {
      Q c = (target - finite_part) / a.dlt;
      if (have_level && c != level)
        throw internal_error("rho level inconsistent across simples");
      level = c;
      have_level = true;
    }
  }
  if (!have_level) throw internal_error("no positive mark to solve the rho level");
  D.rho_hat = {level, rho_fin, Q(0)};

  // Translation lattice: Z-span of the W_eta orbit of (1/r) theta^vee.
  {
    QVec v0 = Q(1, fd.r) * coroot_vec(G, fd.theta);
    std::set<QVec, VecLess> orbit = {v0};
    std::vector<QVec> frontier = {v0};
    while (!frontier.empty()) {
      std::vector<QVec> next;
      for (const QVec& v : frontier)
        for (const QVec& s : fd.simples) {
          QVec w = reflect(G, v, s);
          if (orbit.insert(w).second) next.push_back(w);
        }
      frontier = std::move(next);
      if (orbit.size() > 100000)
        throw internal_error("runaway coroot orbit");
    }
    D.translation_lattice =
        hnf_basis(std::vector<QVec>(orbit.begin(), orbit.end()));
  }
  return D;
}

}  // namespace liedirac
