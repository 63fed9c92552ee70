// Twisted Clifford (fermionic Fock) modules attached to a graded quadratic
// space.
//
// The input is the table of restricted weights of a space V, graded by the
// classes of an elliptic operator; V is typically the orthocomplement of a
// reductive subalgebra inside an ambient algebra, with weights taken against
// the subalgebra Cartan and encoded in ambient coordinates.  Modes of V at
// loop exponent j (j running over a class) pair with modes at -j, and the
// module is generated from a vacuum vector by the creation half:
//
//   * every mode at exponent j < 0 (all weights, multiplicities included),
//   * the chosen negative half of the nonzero class-0 weights at j = 0,
//   * floor(L/2) of the L zero-weight class-0 directions at j = 0.
//
// Monomials in distinct creation generators, strictly increasing in a fixed
// total order, form a basis; the monomial's weight is the vacuum shift plus
// the sum of j delta + beta over its generators.  The resulting character
// equals 2^{floor(L/2)} e^{vacuum} prod (1 + e^{-alpha})^{mult alpha} over
// the positive half of the mode set.  The full Clifford quotient carries one
// extra middle generator when L is odd (an anisotropic zero mode adjoined
// freely), so characters of the quotient module acquire the uniform factor
// 2^{ceil(L/2)} instead; that factor is exposed separately and multiplied in
// by the decomposition layer, while enumeration stays on the monomial basis.

#pragma once

#include "liedirac/gradedchar.hpp"

namespace liedirac {

struct CliffordModuleSpec {
  std::map<Q, WeightTable, QLess> classes;  // weights of V per class
  WeightTable plus_zero;                    // positive half of nonzero class-0 weights
  long cartan_dim = 0;                      // L: class-0 zero-weight multiplicity
  long isotropic_dim = 0;                   // floor(L/2): zero modes among the generators
  AffineWeight vacuum;                      // weight of the empty monomial
  std::size_t fin_dim = 0;                  // ambient coordinate dimension
  long total_dim = 0;                       // dim V
};

// Difference of two graded tables (ambient minus subalgebra), validated:
// multiplicities must stay nonnegative, the result must be symmetric under
// (class, weight) -> (-class, -weight), and plus_zero must select exactly one
// of each +/- pair of nonzero class-0 weights with the full multiplicity.
CliffordModuleSpec build_clifford_spec(const std::map<Q, WeightTable, QLess>& ambient,
                                       const std::map<Q, WeightTable, QLess>& sub,
                                       const WeightTable& plus_zero,
                                       const AffineWeight& vacuum);

// One creation generator; Cartan-type generators carry the zero weight, and
// index separates equal copies.
struct CliffordMode {
  Q exponent;   // j <= 0
  QVec weight;  // finite weight (zero for Cartan-type modes)
  long index;   // 0 .. multiplicity-1
};

// Fixed total order: exponent closest to zero first, zero weights before
// nonzero ones, then weight order, then index.
bool mode_less(const CliffordMode& a, const CliffordMode& b);

// All creation generators with delta-drop at most cutoff, sorted by
// mode_less.
std::vector<CliffordMode> creation_modes(const CliffordModuleSpec& spec, const Q& cutoff);

struct SpinorMonomial {
  std::vector<CliffordMode> modes;  // strictly increasing under mode_less
};

AffineWeight monomial_weight(const CliffordModuleSpec& spec, const SpinorMonomial& m);

// Exhaustive list of basis monomials with delta-drop at most cutoff.  The
// count grows exponentially with the generator count, so this is meant for
// small systems and cross-checks.
std::vector<SpinorMonomial> enumerate_monomials(const CliffordModuleSpec& spec,
                                                const Q& cutoff);

// Character of the monomial basis: 2^{floor(L/2)} times the product
// character below.  Computed through the product expansion.
GradedCharacter clifford_character(const CliffordModuleSpec& spec, const Q& cutoff);

// Same, split by monomial length parity (even part first).
std::pair<GradedCharacter, GradedCharacter> clifford_character_split(
    const CliffordModuleSpec& spec, const Q& cutoff);

// Character computed by explicit monomial enumeration (small systems only).
GradedCharacter clifford_character_by_enumeration(const CliffordModuleSpec& spec,
                                                  const Q& cutoff);

// e^{vacuum} prod (1 + e^{-alpha})^{mult alpha} over the positive mode half:
// no zero-mode factor.
GradedCharacter clifford_product_character(const CliffordModuleSpec& spec, const Q& cutoff);

// e^{vacuum} prod (1 - e^{-alpha})^{mult alpha}; equals the even-minus-odd
// character when there are no zero modes, and collapses to zero otherwise.
GradedCharacter clifford_signed_character(const CliffordModuleSpec& spec, const Q& cutoff);

// 2^{ceil(L/2)}: multiplies the product character to give the character of
// the full Clifford quotient module.
long clifford_module_factor(const CliffordModuleSpec& spec);

}  // namespace liedirac
