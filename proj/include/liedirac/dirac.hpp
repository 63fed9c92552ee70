// Kernel decompositions for the cubic Dirac operator of a twisted affine pair.
//
// A catalog entry fixes an ambient algebra g with a finite-order twist, a
// reductive subalgebra a preserved by it, and the embedding data.  This
// module assembles the working state for the pair — the ambient twisted
// datum, the subalgebra root data pushed into ambient coordinates, and the
// twisted Clifford module on the orthocomplement — and produces the
// decomposition of the Dirac kernel into subalgebra multiplets: one
// highest weight per commutant element, each entry carrying independent
// verification flags (vanishing Dirac square, dominance, inversion-set
// bookkeeping).  Character identities give a second, global cross-check
// of the same decompositions through truncated graded characters.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liedirac/affine.hpp"
#include "liedirac/catalog.hpp"
#include "liedirac/fock.hpp"
#include "liedirac/gradedchar.hpp"
#include "liedirac/weyl.hpp"

namespace liedirac {

// Everything needed to decompose one pair at one highest weight.  `g` is
// null exactly when `flat` is set: a product algebra with the identity
// twist, where the diagonally embedded subalgebra is handled in closed
// form (the fold machinery requires an indecomposable action, so no
// ambient datum exists in that case).
struct DiracSetup {
  CatalogEntry entry;
  std::shared_ptr<const TwistedAffineDatum> g;
  RestrictedSystem restricted;  // valid only when g is non-null
  QMat p_comb;                  // restriction to the subalgebra Cartan (projector)
  SubsystemData sub;            // subalgebra root data, ambient coordinates
  std::vector<QVec> sub_span;   // span of the semisimple part (embedding columns)
  std::map<Q, WeightTable, QLess> ambient_classes;  // adjoint weights, restricted
  CliffordModuleSpec clifford;  // twisted spinor module on the complement
  AffineWeight lambda;          // ambient highest weight
  AffineWeight g_rho;           // normalized ambient Weyl vector
  QMat gram;                    // invariant form on the finite weight space
  long cartan_gap = 0;          // rank of the fixed part minus rank of the subalgebra's
  long power = 0;               // multiplet multiplicity exponent: ceil(cartan_gap / 2)
  bool flat = false;
};

// Structural and weight-level preconditions for the decomposition.  The
// entry-level overload also reports assembly failures (bad embedding data,
// an involution that does not normalize the twist, ...) as violations
// instead of throwing.
struct HypothesisReport {
  bool ok = true;
  std::vector<std::string> violations;
};

HypothesisReport check_hypotheses(const CatalogEntry& entry, const AffineWeight& lambda);
HypothesisReport check_hypotheses(const DiracSetup& setup);

// Assembles the working state; throws invalid_input / unsupported_case when
// the entry's data is inconsistent or outside the implemented families.
DiracSetup build_dirac_setup(const CatalogEntry& entry, const AffineWeight& lambda);

// Same pair with the twist switched off: identity diagram action and zero
// torus part on both the ambient algebra and the ideal.  Dispatches to the
// closed-form flat state when the ambient algebra has several components.
DiracSetup build_untwisted_setup(const CatalogEntry& entry, const AffineWeight& lambda);

// The zero highest weight of the entry's ambient algebra.
AffineWeight basic_weight(const CatalogEntry& entry);

// Difference of shifted norms |lambda + rho_g|^2 - |xi + rho_a|^2; zero
// exactly when the Dirac square annihilates the xi-multiplet.  The shifted
// weight must restrict from the ambient Cartan.
Q dirac_square_check(const DiracSetup& setup, const AffineWeight& xi);

// One multiplet V(xi) of the kernel, with its commutant element, the word
// in the restricted generators, and independently recomputed checks.
struct MultipletEntry {
  AffineWeight xi;
  AffWeylElt w;
  long length = 0;
  std::vector<std::size_t> word;
  Q dirac_square = 0;           // must vanish
  bool dominant_integral = false;
  bool inversion_sum_ok = false;       // sum of inversions equals rho - w(rho)
  bool inversions_avoid_sub = false;   // no inversion restricts into the subsystem
  std::string label;                   // xi over the subalgebra fundamental weights
};

struct MultipletReport {
  std::vector<MultipletEntry> entries;  // by length, then discovery order
  long power = 0;                       // common multiplicity 2^power
  long cartan_gap = 0;
  bool complete = false;  // no further commutant element survives past the bound
  std::string note;
};

// Full decomposition: enumerates the commutant of the restriction
// inside the ambient affine Weyl group, keeps the minimal coset
// representatives whose inversions avoid the subsystem, and returns one
// multiplet per survivor of length at most `length_bound`.  Throws
// invalid_input when the hypotheses fail.
MultipletReport kernel_decomposition(const DiracSetup& setup, long length_bound = 8);

// Truncated graded-character comparison; `floor`/`top` delimit the compared
// delta band and `terms` counts the right-hand summands.
struct CharacterCheck {
  bool match = false;
  Q floor = 0;
  Q top = 0;
  std::size_t terms = 0;
  GradedCharacter lhs;
  GradedCharacter rhs;
};

// Unsigned identity at the basic weight: the spinor character of the
// complement equals the multiplet sum.  Requires lambda == 0 (the operator
// has nonzero square otherwise).
CharacterCheck verify_kernel_character(const DiracSetup& setup, const Q& cutoff);

// Signed identity for equal-rank pairs (cartan_gap == 0): the restricted
// ambient character times the signed spinor character equals the
// alternating multiplet sum.
CharacterCheck signed_character_identity(const DiracSetup& setup, const Q& cutoff);

// Closed-form decomposition for the orthogonal pairs so(d+1) > so(d),
// branching on the parity of d and the determinant of the twisting map:
// either a single multiplet or a pair {1, reflection}.  Validated against
// the search path by the tests.
MultipletReport so_pair_decomposition(const CatalogEntry& entry);

// Which level-one module the closed form decomposes: the basic/vector
// module of the stored twist, or the spin module (identity twist).
enum class LevelOneKind { basic_vector, spin };

MultipletReport level_one_decomposition(const CatalogEntry& entry, LevelOneKind kind);

// Fundamental weights of an affine simple system: for each index i the
// weight with coroot pairings delta_ij against the given simples, zero
// delta coefficient, and finite part inside the span of `span`.
std::vector<AffineWeight> affine_fundamental_weights(const QMat& gram,
                                                     const std::vector<AffineWeight>& simples,
                                                     const std::vector<QVec>& span);

// xi written over the subalgebra fundamental weights, e.g.
// "fw0 + 2 fw2 - 1/2 delta" (plus a "central(...)" part when the
// subalgebra has central directions).  Requires xi dominant integral.
std::string multiplet_label(const DiracSetup& setup, const AffineWeight& xi);

}  // namespace liedirac
