#include "liedirac/catalog.hpp"

#include <utility>

#include "liedirac/errors.hpp"

namespace liedirac {
namespace {

const Q kHalf(1, 2);
const Q kQuarter(1, 4);
const Q kThreeQuarter(3, 4);

std::vector<std::size_t> iota_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

QMat perm_mat(const std::vector<std::size_t>& p) {
  QMat m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.at(p[i], i) = 1;
  return m;
}

// Matrix whose columns are the given ambient vectors.
QMat columns(std::size_t rows, const std::vector<QVec>& cols) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw internal_error("catalog column size mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

MatrixRealization classical(ClassicalFamily fam, int n, std::vector<std::size_t> perm,
                            QVec phase, bool neg_t = false, std::vector<int> block = {}) {
  MatrixRealization r;
  r.family = fam;
  r.n = n;
  r.perm = std::move(perm);
  r.phase = std::move(phase);
  r.neg_transpose = neg_t;
  r.block = block.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0)
                          : std::move(block);
  validate_realization(r);
  return r;
}

MatrixRealization diag_phases(ClassicalFamily fam, int n, QVec phase) {
  return classical(fam, n, iota_perm(static_cast<std::size_t>(n)), std::move(phase));
}

IdealSpec ideal(std::vector<SimpleType> types, std::vector<std::size_t> eta, QVec h,
                std::size_t ambient_rank, std::vector<QVec> embed_cols) {
  IdealSpec s;
  s.types = std::move(types);
  s.eta_perm = std::move(eta);
  s.h_evals = std::move(h);
  s.embed = columns(ambient_rank, embed_cols);
  return s;
}

// ---------------------------------------------------------------------------
// Orthogonal pairs so(V+1) > so(V).  The ambient split coordinates place the
// distinguished fixed line in the middle position; the V standard coordinates
// fill the remaining split pairs in order.  The positioning involution
// reflects onto the subalgebra Cartan: the identity when that Cartan has full
// rank, the fork swap for the even ambient systems, and — for the reflection
// twists of an even-dimensional V — the reflection in the first standard
// coordinate, which exchanges the wall node of the twisted diagram with the
// adjacent finite node.
// ---------------------------------------------------------------------------

// so(6) > so(5): ambient D3, subalgebra B2 spanning the involution-fixed part.
CatalogEntry so_pair_d5(const std::string& suffix) {
  CatalogEntry e;
  e.id = "so-pair-d5-" + suffix;
  e.g_types = {parse_simple_type("D3")};
  e.mu_fin = perm_mat({0, 2, 1});
  e.ideals = {ideal({parse_simple_type("B2")}, {0, 1}, QVec{0, 0}, 3,
                    {QVec{1, 0, 0}, QVec{0, kHalf, kHalf}})};
  return e;
}

// so(7) > so(6): ambient B3, subalgebra D3 as a root subsystem.
CatalogEntry so_pair_d6(const std::string& suffix) {
  CatalogEntry e;
  e.id = "so-pair-d6-" + suffix;
  e.g_types = {parse_simple_type("B3")};
  e.mu_fin = QMat::identity(3);
  e.ideals = {ideal({parse_simple_type("D3")}, {0, 1, 2}, QVec{0, 0, 0}, 3,
                    {QVec{1, 0, 0}, QVec{0, 1, 0}, QVec{0, 1, 2}})};
  return e;
}

// so(8) > so(7): ambient D4, subalgebra B3 spanning the involution-fixed part.
CatalogEntry so_pair_d7(const std::string& suffix) {
  CatalogEntry e;
  e.id = "so-pair-d7-" + suffix;
  e.g_types = {parse_simple_type("D4")};
  e.mu_fin = perm_mat({0, 1, 3, 2});
  e.ideals = {ideal({parse_simple_type("B3")}, {0, 1, 2}, QVec{0, 0, 0}, 4,
                    {QVec{1, 0, 0, 0}, QVec{0, 1, 0, 0}, QVec{0, 0, kHalf, kHalf}})};
  return e;
}

// so(9) > so(8): ambient B4, subalgebra D4 as a root subsystem.
CatalogEntry so_pair_d8(const std::string& suffix) {
  CatalogEntry e;
  e.id = "so-pair-d8-" + suffix;
  e.g_types = {parse_simple_type("B4")};
  e.mu_fin = QMat::identity(4);
  e.ideals = {ideal({parse_simple_type("D4")}, {0, 1, 2, 3}, QVec{0, 0, 0, 0}, 4,
                    {QVec{1, 0, 0, 0}, QVec{0, 1, 0, 0}, QVec{0, 0, 1, 0},
                     QVec{0, 0, 1, 2}})};
  return e;
}

OrthogonalPairInfo orth(int dim_v, int det_t, bool is_id, bool is_minus) {
  OrthogonalPairInfo o;
  o.dim_v = dim_v;
  o.det_t = det_t;
  o.t_identity = is_id;
  o.t_minus_identity = is_minus;
  return o;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  // --- torus inside sl(2): fixed algebra of conjugation by diag(1,-1). ---
  {
    CatalogEntry e;
    e.id = "sl2-torus";
    e.title = "sl(2) with its Cartan subalgebra";
    e.g_types = {parse_simple_type("A1")};
    e.g_eta = {0};
    e.g_h = QVec{kHalf};
    e.mu_fin = QMat::identity(1);
    e.center = {QVec{1}};
    e.sigma_matrix = diag_phases(ClassicalFamily::SL, 2, QVec{0, kHalf});
    e.level_one = LevelOneBranch::equal_rank_inner;
    cat.push_back(std::move(e));
  }

  // --- gl(2) inside sl(3): fixed algebra of conjugation by diag(1,1,-1). ---
  {
    CatalogEntry e;
    e.id = "sl3-gl2";
    e.title = "sl(3) with the block subalgebra gl(2)";
    e.g_types = {parse_simple_type("A2")};
    e.g_eta = {0, 1};
    e.g_h = QVec{0, kHalf};
    e.mu_fin = QMat::identity(2);
    e.ideals = {ideal({parse_simple_type("A1")}, {0}, QVec{0}, 2, {QVec{1, 0}})};
    e.center = {QVec{1, 2}};
    e.sigma_matrix = diag_phases(ClassicalFamily::SL, 3, QVec{0, 0, kHalf});
    e.level_one = LevelOneBranch::equal_rank_inner;
    cat.push_back(std::move(e));
  }

  // --- gl(2) inside sp(4): fixed algebra of conjugation by diag(i,i,-i,-i). ---
  {
    CatalogEntry e;
    e.id = "sp4-gl2";
    e.title = "sp(4) with the block subalgebra gl(2)";
    e.g_types = {parse_simple_type("C2")};
    e.g_eta = {0, 1};
    e.g_h = QVec{0, kHalf};
    e.mu_fin = QMat::identity(2);
    e.ideals = {ideal({parse_simple_type("A1")}, {0}, QVec{0}, 2, {QVec{1, 0}})};
    e.center = {QVec{1, 1}};
    e.sigma_matrix =
        diag_phases(ClassicalFamily::SP, 4, QVec{kQuarter, kQuarter, kThreeQuarter, kThreeQuarter});
    e.level_one = LevelOneBranch::equal_rank_inner;
    cat.push_back(std::move(e));
  }

  // --- diagonal sl(2) inside sl(2)+sl(2) with the factor swap. ---
  {
    CatalogEntry e;
    e.id = "sl2-diag";
    e.title = "sl(2)+sl(2) with the diagonal copy";
    e.g_types = {parse_simple_type("A1"), parse_simple_type("A1")};
    e.g_eta = {1, 0};
    e.g_h = QVec{0, 0};
    e.mu_fin = perm_mat({1, 0});
    e.ideals = {ideal({parse_simple_type("A1")}, {0}, QVec{0}, 2, {QVec{kHalf, kHalf}})};
    e.sigma_matrix = classical(ClassicalFamily::SL, 4, {2, 3, 0, 1}, QVec{0, 0, 0, 0},
                               false, {0, 0, 1, 1});
    e.level_one = LevelOneBranch::diagonal;
    cat.push_back(std::move(e));
  }

  // --- diagonal sl(3) inside sl(3)+sl(3) with the factor swap. ---
  {
    CatalogEntry e;
    e.id = "sl3-diag";
    e.title = "sl(3)+sl(3) with the diagonal copy";
    e.g_types = {parse_simple_type("A2"), parse_simple_type("A2")};
    e.g_eta = {2, 3, 0, 1};
    e.g_h = QVec{0, 0, 0, 0};
    e.mu_fin = perm_mat({2, 3, 0, 1});
    e.ideals = {ideal({parse_simple_type("A2")}, {0, 1}, QVec{0, 0}, 4,
                      {QVec{kHalf, 0, kHalf, 0}, QVec{0, kHalf, 0, kHalf}})};
    e.sigma_matrix = classical(ClassicalFamily::SL, 6, {3, 4, 5, 0, 1, 2},
                               QVec{0, 0, 0, 0, 0, 0}, false, {0, 0, 0, 1, 1, 1});
    e.level_one = LevelOneBranch::diagonal;
    cat.push_back(std::move(e));
  }

  // --- so(3) inside sl(3): fixed algebra of the transpose involution. ---
  {
    CatalogEntry e;
    e.id = "sl3-so3";
    e.title = "sl(3) with the orthogonal subalgebra so(3)";
    e.g_types = {parse_simple_type("A2")};
    e.g_eta = {1, 0};
    e.g_h = QVec{0, 0};
    e.mu_fin = perm_mat({1, 0});
    e.ideals = {ideal({parse_simple_type("A1")}, {0}, QVec{0}, 2, {QVec{kHalf, kHalf}})};
    e.sigma_matrix = classical(ClassicalFamily::SL, 3, {2, 1, 0}, QVec{0, 0, 0}, true);
    e.level_one = LevelOneBranch::doubled_restriction;
    cat.push_back(std::move(e));
  }

  // --- so(6) > so(5), three twisting classes. ---
  {
    CatalogEntry e = so_pair_d5("det1");
    e.title = "so(6) > so(5), identity twist";
    e.g_eta = {0, 1, 2};
    e.g_h = QVec{0, 0, 0};
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 6, QVec{0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(5, +1, true, false);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d5("detm1");
    e.title = "so(6) > so(5), twist by minus the identity of the 5-space";
    e.g_eta = {0, 2, 1};
    e.g_h = QVec{0, 0, 0};
    e.sigma_matrix = classical(ClassicalFamily::SO, 6, {0, 1, 3, 2, 4, 5},
                               QVec{0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(5, -1, false, true);
    e.level_one = LevelOneBranch::folded_fixed;
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d5("rot");
    e.title = "so(6) > so(5), quarter rotation in one plane";
    e.g_eta = {0, 1, 2};
    e.g_h = QVec{kQuarter, 0, 0};
    e.ideals[0].h_evals = QVec{kQuarter, 0};
    e.sigma_matrix =
        diag_phases(ClassicalFamily::SO, 6, QVec{kQuarter, 0, 0, 0, 0, kThreeQuarter});
    e.orthogonal = orth(5, +1, false, false);
    cat.push_back(std::move(e));
  }

  // --- so(7) > so(6), three twisting classes. ---
  {
    CatalogEntry e = so_pair_d6("det1");
    e.title = "so(7) > so(6), identity twist";
    e.g_eta = {0, 1, 2};
    e.g_h = QVec{0, 0, 0};
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 7, QVec{0, 0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(6, +1, true, false);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d6("neg");
    e.title = "so(7) > so(6), twist by minus the identity of the 6-space";
    e.g_eta = {0, 1, 2};
    e.g_h = QVec{0, 0, kHalf};
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 7,
                                 QVec{kHalf, kHalf, kHalf, 0, kHalf, kHalf, kHalf});
    e.orthogonal = orth(6, +1, false, true);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d6("detm1");
    e.title = "so(7) > so(6), twist by one reflection of the 6-space";
    e.g_eta = {0, 1, 2};
    e.g_h = QVec{0, 0, kHalf};
    // The reflection twist restricts to the fork swap of so(6), so only a
    // rank-two piece of its Cartan survives; the embedding threads the
    // swapped fork through the complementary coordinate line.
    e.mu_fin = columns(3, {QVec{-1, -2, -2}, QVec{0, 1, 0}, QVec{0, 0, 1}});
    e.ideals[0].eta_perm = {0, 2, 1};
    e.ideals[0].h_evals = QVec{0, kHalf, kHalf};
    e.ideals[0].embed =
        columns(3, {QVec{0, 1, 0}, QVec{1, 1, 2}, QVec{-1, -1, 0}});
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 7,
                                 QVec{kHalf, kHalf, kHalf, 0, kHalf, kHalf, kHalf});
    e.orthogonal = orth(6, -1, false, false);
    cat.push_back(std::move(e));
  }

  // --- so(8) > so(7), two twisting classes. ---
  {
    CatalogEntry e = so_pair_d7("det1");
    e.title = "so(8) > so(7), identity twist";
    e.g_eta = {0, 1, 2, 3};
    e.g_h = QVec{0, 0, 0, 0};
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 8, QVec{0, 0, 0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(7, +1, true, false);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d7("detm1");
    e.title = "so(8) > so(7), twist by minus the identity of the 7-space";
    e.g_eta = {0, 1, 3, 2};
    e.g_h = QVec{0, 0, 0, 0};
    e.sigma_matrix = classical(ClassicalFamily::SO, 8, {0, 1, 2, 4, 3, 5, 6, 7},
                               QVec{0, 0, 0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(7, -1, false, true);
    e.level_one = LevelOneBranch::folded_fixed;
    cat.push_back(std::move(e));
  }

  // --- so(9) > so(8), four twisting classes. ---
  {
    CatalogEntry e = so_pair_d8("det1");
    e.title = "so(9) > so(8), identity twist";
    e.g_eta = {0, 1, 2, 3};
    e.g_h = QVec{0, 0, 0, 0};
    e.sigma_matrix = diag_phases(ClassicalFamily::SO, 9, QVec{0, 0, 0, 0, 0, 0, 0, 0, 0});
    e.orthogonal = orth(8, +1, true, false);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d8("neg");
    e.title = "so(9) > so(8), twist by minus the identity of the 8-space";
    e.g_eta = {0, 1, 2, 3};
    e.g_h = QVec{0, 0, 0, kHalf};
    e.sigma_matrix = diag_phases(
        ClassicalFamily::SO, 9,
        QVec{kHalf, kHalf, kHalf, kHalf, 0, kHalf, kHalf, kHalf, kHalf});
    e.orthogonal = orth(8, +1, false, true);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d8("detm1");
    e.title = "so(9) > so(8), twist by one reflection of the 8-space";
    e.g_eta = {0, 1, 2, 3};
    e.g_h = QVec{0, 0, 0, kHalf};
    e.mu_fin = columns(4, {QVec{-1, -2, -2, -2}, QVec{0, 1, 0, 0},
                           QVec{0, 0, 1, 0}, QVec{0, 0, 0, 1}});
    e.ideals[0].eta_perm = {0, 1, 3, 2};
    e.ideals[0].h_evals = QVec{0, 0, kHalf, kHalf};
    e.ideals[0].embed = columns(4, {QVec{0, 1, 0, 0}, QVec{0, 0, 1, 0},
                                    QVec{1, 1, 1, 2}, QVec{-1, -1, -1, 0}});
    e.sigma_matrix = diag_phases(
        ClassicalFamily::SO, 9,
        QVec{kHalf, kHalf, kHalf, kHalf, 0, kHalf, kHalf, kHalf, kHalf});
    e.orthogonal = orth(8, -1, false, false);
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e = so_pair_d8("rot");
    e.title = "so(9) > so(8), quarter rotation in one plane";
    e.g_eta = {0, 1, 2, 3};
    e.g_h = QVec{kQuarter, 0, 0, 0};
    e.ideals[0].h_evals = QVec{kQuarter, 0, 0, 0};
    e.sigma_matrix = diag_phases(
        ClassicalFamily::SO, 9,
        QVec{kQuarter, 0, 0, 0, 0, 0, 0, 0, kThreeQuarter});
    e.orthogonal = orth(8, +1, false, false);
    cat.push_back(std::move(e));
  }

  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw invalid_input("unknown catalog entry: " + id);
}

}  // namespace liedirac
