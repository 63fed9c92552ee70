// Twisted affinization data.
//
// For an automorphism sigma = eta * exp(2 pi i ad(h)) of a (sigma-
// indecomposable) Lie algebra g, the twisted loop algebra is graded by
// (1/r) Z against the fixed Cartan subalgebra h_0, and its weight theory
// lives on the span of { Lambda_0, h_0*, delta }.  A weight is stored as
//
//     level * Lambda_0  +  fin  +  dlt * delta
//
// with fin in ambient coordinates (the simple-root basis of g).  The
// invariant pairing extends the ambient Gram form by
// (Lambda_0, delta) = 1 and (Lambda_0, Lambda_0) = (delta, anything
// finite) = 0, so
//
//     (x, y) = (x.fin, y.fin)_G + x.level * y.dlt + y.level * x.dlt.
//
// Roots of the twisted algebra have level 0; the real root j delta + gamma
// has multiplicity equal to the dimension of the restricted-weight-gamma
// space of the exp(2 pi i j) eigenspace of sigma, which is exactly the
// graded table computed in rootsys.
//
// The constructor first moves h into the fundamental alcove
//    { x : gamma_i(x) >= 0,  theta(x) <= 1/r }
// by the affine reflection walk (walls checked affine wall first, then the
// finite walls in index order), replacing sigma by a conjugate automorphism.
// The simple system of the twisted algebra is then
//
//     { s_0 delta - theta }  u  { s_i delta + gamma_i },
//
// with marks s_i = gamma_i(h), s_0 = 1/r - theta(h).  The distinguished
// rho-vector has finite part assembled from the graded table (half sum of
// the positive degree-0 roots, plus (1-2j)-weighted half sums over the full
// weight multisets of the fractional classes with 0 < j < 1/2) and its
// level is solved from the normalization
//
//     2 (rho_hat, alpha) / (alpha, alpha) = 1   for every simple alpha,
//
// which the constructor verifies to hold consistently; for an untwisted
// datum the solved level equals the dual Coxeter number.

#pragma once

#include "liedirac/rootsys.hpp"

namespace liedirac {

struct AffineWeight {
  Q level;
  QVec fin;
  Q dlt;

  bool operator==(const AffineWeight& o) const {
    return level == o.level && fin == o.fin && dlt == o.dlt;
  }
};

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator-(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator-(const AffineWeight& a);
AffineWeight operator*(const Q& c, const AffineWeight& a);

Q affine_pair(const QMat& gram, const AffineWeight& x, const AffineWeight& y);
Q affine_norm2(const QMat& gram, const AffineWeight& x);
// 2 (x, root) / (root, root); the root must have positive finite norm.
Q affine_pair_coroot(const QMat& gram, const AffineWeight& x, const AffineWeight& root);
// x - <x, root^vee> root.
AffineWeight affine_reflect(const QMat& gram, const AffineWeight& x,
                            const AffineWeight& root);

struct TwistedAffineDatum {
  FoldedData fold;
  QVec h_evals_input;   // alpha_i(h) as given
  QVec h_evals;         // after the alcove reduction
  QVec x_h;             // nu-image of the reduced h in ambient coordinates
  GradedTable table;    // sigma eigenclass tables for the reduced h
  std::vector<AffineWeight> simple_roots;  // [0] = affine wall root
  QVec marks;                              // s_0, s_1, ..., s_l
  QMat affine_cartan;   // pairings <alpha_j, alpha_i^vee> of the simples
  AffineWeight rho_hat; // fin = rho_sigma, level solved, dlt = 0
  std::vector<QVec> translation_lattice;  // Z-basis of span (1/r) W_eta theta^vee

  const QMat& gram() const { return fold.parent.gram; }
  std::size_t ambient_dim() const { return fold.parent.rank; }

  Q pair(const AffineWeight& x, const AffineWeight& y) const {
    return affine_pair(gram(), x, y);
  }
  Q norm2(const AffineWeight& x) const { return affine_norm2(gram(), x); }

  // Multiplicity of the root j delta + gamma (0 for (0,0)).
  long root_multiplicity(const Q& j, const QVec& gamma) const;
  // Sigma class of a restricted weight line at loop exponent j.
  // Positivity of a root of the twisted algebra: dlt > 0, or dlt == 0 and
  // the finite part positive in the degree-0 subsystem.
  bool is_positive_root(const AffineWeight& r) const;
  // All real roots with dlt in [lo, hi] (every table entry shifted by
  // integers); used by small enumerations and tests.
  std::vector<AffineWeight> real_roots_in_band(const Q& lo, const Q& hi) const;

  AffineWeight zero_weight() const { return AffineWeight{Q(0), QVec(ambient_dim(), Q(0)), Q(0)}; }
};

// allow_walk: when false the constructor requires h to lie in the closed
// fundamental alcove already (used for centralizer-side data, whose twisting
// element is inherited and must not be moved).
TwistedAffineDatum build_twisted_datum(const FoldedData& fd, const QVec& h_evals,
                                       bool allow_walk = true);

}  // namespace liedirac
