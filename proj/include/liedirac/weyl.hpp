// Affine Weyl group elements acting on extended weights, inversion sets, and
// the restricted (fixed-subspace) reflection machinery used to pick minimal
// coset representatives for a subalgebra's Weyl group.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "liedirac/affine.hpp"

namespace liedirac {

// Element w = t_tau * mat of the extended affine Weyl group: `mat` is a form
// isometry of the finite weight space, `tau` a finite translation vector.
// The action fixes delta and the level.
struct AffWeylElt {
  QMat mat;
  QVec tau;
  long length = -1;  // Coxeter length where a BFS computed it, else -1.
};

AffWeylElt aw_identity(std::size_t n);
AffWeylElt aw_compose(const AffWeylElt& a, const AffWeylElt& b);  // a after b
AffWeylElt aw_inverse(const AffWeylElt& a);
bool aw_equal(const AffWeylElt& a, const AffWeylElt& b);
bool aw_less(const AffWeylElt& a, const AffWeylElt& b);  // ordering for maps
AffineWeight aw_apply(const QMat& gram, const AffWeylElt& w, const AffineWeight& x);

// Ordering helper for sets of affine weights.
struct AffineWeightLess {
  bool operator()(const AffineWeight& a, const AffineWeight& b) const;
};

// Reflection in a real root (level 0, nonisotropic): t_{-j b_vee} s_b for the
// root with finite part b and delta coefficient j.
AffWeylElt reflection_elt(const QMat& gram, const AffineWeight& root);

// Pure translation by v; v must lie in the rational span of the datum's
// translation lattice.
AffWeylElt translation_elt(const TwistedAffineDatum& D, const QVec& v);

AffWeylElt simple_reflection(const TwistedAffineDatum& D, std::size_t k);

// All elements of length <= bound, BFS order (lengths filled in).
std::vector<AffWeylElt> affine_weyl_ball(const TwistedAffineDatum& D, int length_bound,
                                         long cap = 2000000);

// N(w) = {alpha positive real | w^{-1}(alpha) negative}, enumerated exactly.
std::vector<AffineWeight> inversion_set(const TwistedAffineDatum& D, const AffWeylElt& w);

// Same set computed from a reduced word in the datum's simple reflections;
// throws internal_error if the word is not reduced.
std::vector<AffineWeight> inversion_set_from_word(const TwistedAffineDatum& D,
                                                  const std::vector<std::size_t>& word);

// Restriction machinery for a finite-order isometry `mu` of the finite weight
// space that permutes the datum's simple roots (marks matching).  Restriction
// of a weight to the fixed subspace is realized as orthogonal projection, so
// restricted objects remain ambient vectors.
struct RestrictedSystem {
  const TwistedAffineDatum* datum = nullptr;
  QMat mu;                 // finite action
  int order = 1;
  std::vector<std::size_t> perm;               // induced permutation of simples
  QMat projector;                              // average of mu powers
  std::vector<std::vector<std::size_t>> orbits;  // orbits of `perm`, min-first
  std::vector<AffineWeight> orbit_root;        // per-orbit average of simples
  std::vector<bool> orbit_finite;              // generated subsystem finite?
  std::vector<AffWeylElt> orbit_longest;       // longest element (identity if not finite)
  std::vector<std::size_t> basis;              // orbit indices entering the basis P

  AffineWeight restrict_weight(const AffineWeight& x) const;
  bool is_isotropic(const AffineWeight& x) const;

  // Coordinates over all orbit roots (nullopt when outside their span).
  std::optional<QVec> orbit_coords(const AffineWeight& x) const;

  // Membership of a candidate in the positive real part of the reflection
  // system generated by the basis roots (descent walk).
  bool positive_restricted_root(const AffineWeight& beta) const;

  // The unique system element with beta = c * primitive(beta), c > 0.
  // nullopt if beta is isotropic; invalid_input if beta is not a rational
  // multiple of any system element.
  std::optional<AffineWeight> primitive(const AffineWeight& beta) const;

  // All positive system elements of coordinate height <= bound (test aid).
  std::vector<AffineWeight> enumerate_positive(int height_bound) const;
};

RestrictedSystem restricted_system(const TwistedAffineDatum& D, const QMat& mu_finite);

// Root data of an embedded subalgebra, pushed into ambient coordinates: the
// affine simple roots, the shifted Weyl vector (regular, positive level), the
// graded root-multiplicity table, and a basis for the lattice spanning the
// central directions (empty when the subalgebra is semisimple).
struct SubsystemData {
  std::vector<AffineWeight> simples;
  AffineWeight rho;
  std::map<Q, WeightTable, QLess> classes;
  std::vector<QVec> center;
};

bool sub_positive_real(const QMat& gram, const SubsystemData& S, const AffineWeight& x);

// Exact membership of x in the reflection group generated by the subsystem's
// simple reflections, decided by a descent walk on the shifted Weyl vector.
bool in_subgroup(const QMat& gram, const SubsystemData& S, const AffWeylElt& x);

// Membership in the group generated by the subsystem reflections together
// with translations by the central lattice.
bool in_extended_subgroup(const QMat& gram, const SubsystemData& S, const AffWeylElt& x);

// Breadth-first enumeration of the group generated by the orbit longest
// elements, pruned by the delta-coefficient drop of `base` (which must be
// dominant regular of positive level).  Elements are deduplicated, lengths
// are BFS depths in the orbit generators, and drops are monotone along the
// search tree.
struct CommEnumeration {
  std::vector<AffWeylElt> elements;
  std::vector<std::vector<std::size_t>> words;  // orbit-index words
  std::vector<Q> drops;
};

CommEnumeration enumerate_commutant(const TwistedAffineDatum& D, const RestrictedSystem& R,
                                    const AffineWeight& base, const Q& drop_bound,
                                    long cap = 200000);

// Minimal-representative test for the right cosets of the subsystem's Weyl
// group: no prefix inversion of the word may be a positive-multiple image of
// a positive real subsystem root.
bool minimal_coset_rep(const TwistedAffineDatum& D, const RestrictedSystem& R,
                       const SubsystemData& S, const std::vector<std::size_t>& word);

// Greedy selection of one representative per coset of the central-extended
// subgroup among the given elements (indices into `elems`), preserving order.
std::vector<std::size_t> center_coset_reps(const QMat& gram, const SubsystemData& S,
                                           const std::vector<AffWeylElt>& elems);

}  // namespace liedirac
