#pragma once
// Built-in catalog of (algebra, automorphism, subalgebra) setups.
//
// Each entry describes an ambient simple or semisimple algebra g with a
// finite-order automorphism sigma (diagram part plus torus part), a
// reductive subalgebra a on which sigma restricts, and the involution
// that positions a inside g.  All embeddings are exact: the subalgebra's
// simple roots are given as ambient coordinate columns, its central
// directions as ambient vectors, and the torus parts as rational
// evaluation lists.  Where the algebras are classical the entry also
// carries a concrete matrix picture of sigma for cross-checking.

#include <optional>
#include <string>
#include <vector>

#include "liedirac/qlin.hpp"
#include "liedirac/realize.hpp"
#include "liedirac/rootsys.hpp"

namespace liedirac {

// One sigma-indecomposable ideal of the subalgebra, described abstractly
// (own type, diagram automorphism, torus evaluations in the abstract
// simple-root basis) together with the embedding of its abstract simple
// roots into ambient coordinates.
struct IdealSpec {
  std::vector<SimpleType> types;
  std::vector<std::size_t> eta_perm;
  QVec h_evals;
  QMat embed;  // ambient rank x abstract rank, columns = images
};

// How the vector-representation decomposition rules select their branch
// (orthogonal pairs only): the dimension of the defining representation
// and the determinant of the twisting orthogonal map.
struct OrthogonalPairInfo {
  int dim_v = 0;
  int det_t = 0;       // +1 or -1
  bool t_identity = false;
  bool t_minus_identity = false;
};

// Which closed-form decomposition family applies at level one.
enum class LevelOneBranch {
  none,
  equal_rank_inner,    // a is the fixed algebra of an inner involution
  diagonal,            // g = s + s with the swap, a the diagonal copy
  folded_fixed,        // a is the fixed algebra of a diagram involution
  doubled_restriction  // odd special-linear diagram involution
};

struct CatalogEntry {
  std::string id;
  std::string title;

  // Ambient algebra and automorphism.
  std::vector<SimpleType> g_types;
  std::vector<std::size_t> g_eta;
  QVec g_h;  // alpha_i(h) on the parent simples (pre-reduction)

  // Involution positioning the subalgebra (finite action, ambient coords).
  QMat mu_fin;

  // Subalgebra: semisimple ideals plus central directions.
  std::vector<IdealSpec> ideals;
  std::vector<QVec> center;

  // Concrete matrix picture of sigma, when the ambient algebra is classical.
  std::optional<MatrixRealization> sigma_matrix;

  std::optional<OrthogonalPairInfo> orthogonal;
  LevelOneBranch level_one = LevelOneBranch::none;

  std::size_t ambient_rank() const {
    std::size_t r = 0;
    for (const auto& t : g_types) r += t.rank;
    return r;
  }
};

const std::vector<CatalogEntry>& catalog();
// Lookup by id; throws invalid_input for unknown ids.
const CatalogEntry& catalog_entry(const std::string& id);

}  // namespace liedirac
