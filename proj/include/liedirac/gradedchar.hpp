#pragma once
// Truncated delta-graded characters with exact rational weights, and
// character computations for integrable highest-weight modules over the
// affine data produced by this library.
//
// A graded character is stored slice by slice: slice d holds the finite
// weights occurring at delta-degree d with their integer multiplicities.
// Characters are exact on a band [floor_dlt, top_dlt] and identically zero
// above the top; below the floor nothing is claimed.  Sums require equal
// levels, products add them, and every operation tracks the band on which
// the result is still exact.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "liedirac/affine.hpp"
#include "liedirac/qlin.hpp"
#include "liedirac/rootsys.hpp"
#include "liedirac/weyl.hpp"

namespace liedirac {

struct GradedCharacter {
  Q level = 0;
  Q top_dlt = 0;
  Q floor_dlt = 0;
  std::map<Q, WeightTable, QLess> slices;

  long coefficient(const AffineWeight& w) const;
  long slice_dimension(const Q& dlt) const;
  // Adds mult at w, erasing the entry if the total cancels to zero.
  void insert(const AffineWeight& w, long mult);
};

GradedCharacter char_monomial(const AffineWeight& w, const Q& floor_dlt);
// acc += scale * g.  Levels must match; the floor rises to the larger one.
void char_accumulate(GradedCharacter& acc, const GradedCharacter& g, long scale = 1);
GradedCharacter char_product(const GradedCharacter& x, const GradedCharacter& y);
// Slice-by-slice equality on the intersection of the exact bands.
bool char_match(const GradedCharacter& x, const GradedCharacter& y);
// Applies a linear map to every finite weight (delta-degrees unchanged).
GradedCharacter project_character(const GradedCharacter& g, const QMat& p);

// A root datum sufficient for character computations: the invariant form,
// the affine simple roots, the solved Weyl vector, and the rotation-class
// tables of the adjoint action (zero weights standing for Cartan lines).
// Works both for an ambient twisted datum and for an embedded subalgebra.
struct CharSystem {
  QMat gram;
  std::vector<AffineWeight> simples;
  AffineWeight rho;
  std::map<Q, WeightTable, QLess> classes;
};

CharSystem char_system(const TwistedAffineDatum& d);
CharSystem char_system(const QMat& gram, const SubsystemData& s);

// All positive roots of delta-degree at most `band`, real and imaginary,
// with multiplicities.  Positivity is decided by the rho pairing.
std::vector<std::pair<AffineWeight, long>> positive_roots_in_band(const CharSystem& sys,
                                                                  const Q& band);

// The Weyl orbit of a strictly dominant weight x, restricted to points of
// delta-degree at least floor_dlt, each paired with the determinant of the
// group element reaching it.  Throws invalid_input if x lies on a wall.
std::vector<std::pair<AffineWeight, int>> signed_orbit_points(const CharSystem& sys,
                                                              const AffineWeight& x,
                                                              const Q& floor_dlt,
                                                              std::size_t cap = 2000000);

// Character of the irreducible highest-weight module V(lambda), exact down
// to `cutoff` delta-levels below lambda, computed by the multiplicity
// recursion on the norm of the shifted weight.
GradedCharacter freudenthal_character(const CharSystem& sys, const AffineWeight& lambda,
                                      const Q& cutoff);

// The same character computed independently from the signed orbit of
// lambda + rho and exact partition counts into positive roots.
GradedCharacter weyl_kac_character(const CharSystem& sys, const AffineWeight& lambda,
                                   const Q& cutoff);

// Product of (1 - e^{-alpha})^{mult alpha} over the positive roots of
// delta-degree at most `cutoff`, as a character at level zero.
GradedCharacter denominator_series(const CharSystem& sys, const Q& cutoff);

// Oscillator factor for a set of Cartan lines: one factor
// prod_{j in c + Z, j > 0} (1 - q^j)^{-1} per listed rotation class c.
// Weights are zero vectors of the given dimension; the level is zero.
GradedCharacter heisenberg_character(const std::vector<Q>& line_classes, std::size_t fin_dim,
                                     const Q& cutoff);

}  // namespace liedirac
