// Finite root systems, diagram automorphisms, and folded fixed-point data.
//
// Conventions used throughout the library:
//
//   * The ambient space is h* of a (semi)simple Lie algebra g, with
//     coordinates taken in the basis of simple roots of g.  Roots are
//     integer vectors in these coordinates; everything else is rational.
//   * The invariant form is fixed by requiring long roots of each simple
//     component to have squared length 2.  It is handed around as the Gram
//     matrix G_ij = (alpha_i, alpha_j) = d_i a_ij, where a is the Cartan
//     matrix in the convention a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
//     and d_i = (alpha_i, alpha_i)/2.
//   * A diagram automorphism eta is a permutation of the simple-root nodes
//     preserving the Cartan matrix.  Its fixed-point ("folded") data is the
//     root system of the fixed subalgebra g^eta: simple roots are orbit
//     averages of the parent simple roots, taken with the restricted form.
//     The averages are rational vectors in ambient coordinates, and all
//     pairings are computed with the ambient Gram matrix, so no separate
//     coordinate system is introduced for the folded side.
//
// The folded data also records the distinguished dominant weight theta that
// normalizes the twisted affinization: the highest root for the trivial
// automorphism, the highest short root of the folded system for a proper
// fold of a connected diagram (doubled when some orbit contains two adjacent
// nodes, the "non-reduced" case), and the highest root of the diagonal copy
// when eta cyclically permutes m isomorphic components.
//
// Finally, eta_graded_table / sigma_graded_table compute, per eigenvalue
// class t in [0,1) of the automorphism sigma = eta * exp(2 pi i ad(h)), the
// multiset of h_0-restricted weights of the corresponding eigenspace of g.
// The class-0 slice is the adjoint table of g^eta shifted by h; the nonzero
// eta-classes form a single irreducible module with highest weight theta in
// every supported case, which makes the construction uniform.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "liedirac/qlin.hpp"

namespace liedirac {

enum class LieFamily { A, B, C, D, E, F, G };

struct SimpleType {
  LieFamily family;
  int rank;
};

// "A3", "D4", "E6", ... ; throws invalid_input on anything else.
SimpleType parse_simple_type(const std::string& s);
std::string simple_type_name(const SimpleType& t);

// Cartan matrix (a_ij = 2(a_i,a_j)/(a_i,a_i)) and half squared lengths d_i
// of one simple factor, long roots normalized to squared length 2.
QMat cartan_matrix(const SimpleType& t);
QVec root_half_lengths(const SimpleType& t);

struct VecLess {
  bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};
struct QLess {
  bool operator()(const Q& a, const Q& b) const { return cmp_q(a, b) < 0; }
};

// A root together with its expansion in the generating simple system.
struct RootInfo {
  std::vector<int> coeffs;  // in the generating simples (all >= 0)
  QVec vec;                 // ambient coordinates
  int height = 0;           // sum of coeffs
};

// Positive roots of the (finite) system generated by `simples` inside the
// space with Gram matrix `gram`, by string closure.  Requires the simples to
// be linearly independent with positive definite restricted form (this is
// checked indirectly: the closure must terminate, and every generated vector
// must have positive norm).  Sorted by (height, lex).
std::vector<RootInfo> root_closure(const QMat& gram, const std::vector<QVec>& simples);

Q inner_form(const QMat& gram, const QVec& x, const QVec& y);
// 2(x, root)/(root, root).
Q pair_coroot(const QMat& gram, const QVec& x, const QVec& root);
// Image of the coroot under the form: 2 root / (root, root).
QVec coroot_vec(const QMat& gram, const QVec& root);
// Reflection of x in the hyperplane of `root`.
QVec reflect(const QMat& gram, const QVec& x, const QVec& root);
// Ambient matrix of that reflection.
QMat reflection_matrix(const QMat& gram, const QVec& root);

QVec half_sum_of_positives(const std::vector<RootInfo>& positives);

// Weight multiplicities of the irreducible module with dominant highest
// weight `lambda` over the system generated by `simples` (Freudenthal).
using WeightTable = std::map<QVec, long, VecLess>;
WeightTable irrep_weight_table(const QMat& gram, const std::vector<QVec>& simples,
                               const QVec& lambda);

// Full finite Weyl group generated by the reflections in `simples`, as
// ambient matrices with determinant sign.  Throws unsupported_case if the
// group exceeds `max_order`.
struct SignedMat {
  QMat mat;
  int sign;  // (-1)^length
};
std::vector<SignedMat> finite_weyl_group(const QMat& gram,
                                         const std::vector<QVec>& simples,
                                         std::size_t max_order = 2000000);

// --- ambient systems --------------------------------------------------------

struct FiniteRootSystem {
  std::vector<SimpleType> components;
  std::vector<std::vector<std::size_t>> component_nodes;
  std::size_t rank = 0;
  QMat cartan;
  QVec d;        // half squared lengths
  QMat gram;     // d_i * a_ij, symmetric positive definite
  QMat gram_inv;
  std::vector<RootInfo> positive_roots;
  QVec rho;
  // Per component: highest root, highest short root (== highest root when
  // simply laced), dual Coxeter number.
  std::vector<QVec> highest_root;
  std::vector<QVec> highest_short_root;
  std::vector<Q> dual_coxeter;

  Q inner(const QVec& x, const QVec& y) const { return inner_form(gram, x, y); }
  Q norm2(const QVec& x) const { return inner_form(gram, x, x); }
  std::size_t dimension() const { return rank + 2 * positive_roots.size(); }
  bool is_root_vector(const QVec& v) const;
};

FiniteRootSystem build_root_system(const std::vector<SimpleType>& components);

// --- diagram automorphisms and folding --------------------------------------

struct DiagramAut {
  std::vector<std::size_t> perm;  // node i -> perm[i]
  int order = 1;
};

// Validates that `perm` preserves the Cartan matrix.
DiagramAut make_diagram_aut(const FiniteRootSystem& rs, std::vector<std::size_t> perm);

enum class FoldKind { untwisted, internal_fold, component_cycle };

struct FoldedData {
  FiniteRootSystem parent;
  DiagramAut eta;
  FoldKind kind = FoldKind::untwisted;
  int r = 1;  // twist order entering the delta/r normalization
  std::vector<std::vector<std::size_t>> orbits;  // ordered by minimal node
  std::vector<QVec> simples;                     // orbit averages, ambient coords
  std::vector<RootInfo> positive_roots;          // of the fixed subalgebra
  QVec rho_fixed;                                // half sum of those
  QVec theta;                                    // normalizing dominant weight
  bool theta_doubled = false;
  QMat projector;  // ambient average over eta powers (restriction to h_0*)

  std::size_t fixed_rank() const { return simples.size(); }
};

// Analyzes the automorphism and produces the folded data; throws
// unsupported_case for automorphisms outside the supported families
// (transitive cycles of isomorphic components, proper folds of a connected
// diagram of order 2 or 3, or the identity on a single component).
FoldedData fold_data(const FiniteRootSystem& rs, const DiagramAut& eta);

// --- graded eigenspace tables ----------------------------------------------

// classes[t] = restricted weights (with multiplicity) of the eigenspace of
// the automorphism with eigenvalue exp(2 pi i t), t in [0,1).
struct GradedTable {
  std::map<Q, WeightTable, QLess> classes;
  long total_dimension() const;
};

GradedTable eta_graded_table(const FoldedData& fd);

// Evaluation gamma(h) of a restricted weight against an element h of the
// fixed Cartan subalgebra, where h is described by its values on the parent
// simple roots (h_evals[i] = alpha_i(h), required eta-symmetric).
Q eval_on_cartan(const QVec& weight, const QVec& h_evals);

// Table of sigma = eta * exp(2 pi i ad(h)): the eta-class of each weight
// line is shifted by gamma(h) mod 1.
GradedTable sigma_graded_table(const FoldedData& fd, const QVec& h_evals);

}  // namespace liedirac
