// Exact rational linear algebra used throughout the library.
//
// Everything downstream (root systems, affine Weyl elements, graded
// characters) is computed over Q, so this header pins down the few dense
// matrix/vector primitives we need: Gaussian elimination with exact pivots,
// inverses, determinants, kernels, and integer-lattice helpers (Hermite
// normal form, dual bases) for translation lattices.  Matrices are small
// (rank of a Lie algebra plus a couple of border rows), so no attempt is
// made at sparsity or pivoting heuristics beyond "first nonzero".

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liedirac {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Compare for use as std::map keys and for canonical sorts.
int cmp_q(const Q& a, const Q& b);
bool lex_less(const QVec& a, const QVec& b);

bool is_zero(const QVec& v);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Q& c, const QVec& v);
QVec& operator+=(QVec& a, const QVec& b);

// Representative of x mod 1 in [0, 1).
Q mod1(const Q& x);
bool is_integer(const Q& x);
// Floor of a rational as an integer-valued rational.
Q qfloor(const Q& x);

// "p/q" (or "p" when q == 1); parse accepts both forms plus a leading '-'.
std::string q_to_string(const Q& x);
Q q_from_string(const std::string& s);

struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Q> a;  // row-major

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Q(0)) {}

  Q& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Q& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMat identity(std::size_t n);
  bool operator==(const QMat& o) const;
};

QMat operator*(const QMat& A, const QMat& B);
QVec mat_vec(const QMat& A, const QVec& v);
// Row vector times matrix (v^T A).
QVec vec_mat(const QVec& v, const QMat& A);
QMat transpose(const QMat& A);

// v^T A w — the workhorse for Gram pairings.
Q bilinear(const QVec& v, const QMat& A, const QVec& w);

Q det(QMat A);
std::size_t rank(QMat A);
// Inverse; throws on singular input.
QMat inverse(const QMat& A);
// Solve A x = b; nullopt when inconsistent or underdetermined.
std::optional<QVec> solve(const QMat& A, const QVec& b);
// Basis of the null space {x : A x = 0}, as rows.
std::vector<QVec> kernel_basis(const QMat& A);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMat& A);

// --- integer lattice helpers -------------------------------------------------
//
// A lattice is handed around as a list of Q-vectors (generators, possibly
// redundant).  hnf_basis clears denominators, runs an integer row HNF and
// returns an independent basis of the generated lattice.  lattice_contains
// answers membership of a rational vector exactly.

std::vector<QVec> hnf_basis(const std::vector<QVec>& generators);
bool lattice_contains(const std::vector<QVec>& basis, const QVec& v);
// Coordinates of v in the given (independent) basis, if integral.
std::optional<std::vector<mpz_class>> lattice_coords(const std::vector<QVec>& basis,
                                                     const QVec& v);

}  // namespace liedirac
