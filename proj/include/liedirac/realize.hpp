#pragma once
// Concrete matrix pictures of the classical algebras together with a
// finite-order automorphism.  The automorphism is conjugation by a signed
// monomial matrix, optionally composed with negative transpose in the
// special-linear family.  All spectral data stays exact: monomial entries
// are roots of unity stored as exponents in [0,1), and eigenvalue classes
// of the automorphism come out as rationals mod 1.
//
// Orthogonal and symplectic algebras are realized with the antidiagonal
// bilinear form, so the diagonal matrices they contain form a standard
// Cartan subalgebra and diagram automorphisms act by monomial matrices.

#include <cstddef>
#include <vector>

#include "liedirac/qlin.hpp"
#include "liedirac/rootsys.hpp"

namespace liedirac {

enum class ClassicalFamily { SL, SO, SP };

// The automorphism sends X to S X S^{-1}, or to S (-X^T) S^{-1} when
// neg_transpose is set (special-linear only).  The monomial S maps the
// basis vector e_j to e^{2 pi i phase[j]} e_{perm[j]}.
//
// For the special-linear family the algebra may be a direct sum of
// traceless blocks; block[j] names the block of coordinate j and the
// monomial must permute blocks of equal size.  Orthogonal and symplectic
// realizations are single-block.
struct MatrixRealization {
  ClassicalFamily family = ClassicalFamily::SL;
  int n = 0;
  std::vector<std::size_t> perm;
  QVec phase;
  bool neg_transpose = false;
  std::vector<int> block;
};

// Trivial automorphism of the chosen algebra.
MatrixRealization identity_realization(ClassicalFamily family, int n);

// Dimension of the realized algebra.
long realization_dimension(const MatrixRealization& m);

// Consistency checks: perm is a permutation, phases are reduced mod 1,
// the monomial rescales the defining bilinear form by a scalar (SO/SP),
// and blocks are permuted consistently (SL).  Throws invalid_input.
void validate_realization(const MatrixRealization& m);

// Basis of the fixed diagonal Cartan subalgebra, each vector listing the
// n diagonal entries.
std::vector<QVec> fixed_cartan_basis(const MatrixRealization& m);

// Eigenvalue-class table of the automorphism: class exponent in [0,1)
// mapped to a table of joint ad-weights for the fixed diagonal Cartan.
// Weight tuples are coordinates against fixed_cartan_basis; the table
// totals the full algebra dimension.
GradedTable matrix_eigengrade(const MatrixRealization& m);

// Values of the standard simple roots on the fixed Cartan basis:
// entry (i, k) is the i-th simple root applied to the k-th basis vector.
// Simple roots follow the standard chain conventions of the family; for
// a multi-block special-linear algebra the blocks contribute their chains
// in block order.
QMat simple_root_values(const MatrixRealization& m);

}  // namespace liedirac
