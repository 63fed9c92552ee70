#include "liedirac/qlin.hpp"

#include <algorithm>
#include <stdexcept>

#include "liedirac/errors.hpp"

namespace liedirac {

int cmp_q(const Q& a, const Q& b) {
  int c = cmp(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

bool lex_less(const QVec& a, const QVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool is_zero(const QVec& v) {
  for (const Q& x : v)
    if (x != 0) return false;
  return true;
}

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch in +");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch in -");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec operator-(const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec operator*(const Q& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

QVec& operator+=(QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw internal_error("vector size mismatch in +=");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Q mod1(const Q& x) {
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Q out(r, den);
  out.canonicalize();
  return out;
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

Q qfloor(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return Q(f);
}

std::string q_to_string(const Q& x) {
  Q c = x;
  c.canonicalize();  // constructor-supplied fractions need not be reduced
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Q q_from_string(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational literal");
  try {
    Q x(s);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument&) {
    throw invalid_input("malformed rational literal: " + s);
  }
}

QMat QMat::identity(std::size_t n) {
  QMat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

bool QMat::operator==(const QMat& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

QMat operator*(const QMat& A, const QMat& B) {
  if (A.cols != B.rows) throw internal_error("matrix size mismatch in *");
  QMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Q& aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

QVec mat_vec(const QMat& A, const QVec& v) {
  if (A.cols != v.size()) throw internal_error("matrix/vector size mismatch");
  QVec r(A.rows, Q(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      if (A.at(i, j) != 0) r[i] += A.at(i, j) * v[j];
  return r;
}

QVec vec_mat(const QVec& v, const QMat& A) {
  if (A.rows != v.size()) throw internal_error("vector/matrix size mismatch");
  QVec r(A.cols, Q(0));
  for (std::size_t i = 0; i < A.rows; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < A.cols; ++j) r[j] += v[i] * A.at(i, j);
  }
  return r;
}

QMat transpose(const QMat& A) {
  QMat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Q bilinear(const QVec& v, const QMat& A, const QVec& w) {
  if (v.size() != A.rows || w.size() != A.cols)
    throw internal_error("bilinear: size mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < A.rows; ++i) {
    if (v[i] == 0) continue;
    Q row = 0;
    for (std::size_t j = 0; j < A.cols; ++j)
      if (A.at(i, j) != 0 && w[j] != 0) row += A.at(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

Q det(QMat A) {
  if (A.rows != A.cols) throw internal_error("det of non-square matrix");
  const std::size_t n = A.rows;
  Q d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A.at(piv, col) == 0) ++piv;
    if (piv == n) return Q(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
      d = -d;
    }
    d *= A.at(col, col);
    Q inv = Q(1) / A.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (A.at(i, col) == 0) continue;
      Q f = A.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) A.at(i, j) -= f * A.at(col, j);
    }
  }
  return d;
}

std::vector<std::size_t> rref(QMat& A) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols && row < A.rows; ++col) {
    std::size_t piv = row;
    while (piv < A.rows && A.at(piv, col) == 0) ++piv;
    if (piv == A.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(row, j));
    Q inv = Q(1) / A.at(row, col);
    for (std::size_t j = col; j < A.cols; ++j) A.at(row, j) *= inv;
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == row || A.at(i, col) == 0) continue;
      Q f = A.at(i, col);
      for (std::size_t j = col; j < A.cols; ++j) A.at(i, j) -= f * A.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMat A) { return rref(A).size(); }

QMat inverse(const QMat& A) {
  if (A.rows != A.cols) throw internal_error("inverse of non-square matrix");
  const std::size_t n = A.rows;
  QMat M(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n + i) = 1;
  }
  auto pivots = rref(M);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw internal_error("inverse of singular matrix");
  QMat R(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R.at(i, j) = M.at(i, n + j);
  return R;
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  if (A.rows != b.size()) throw internal_error("solve: size mismatch");
  QMat M(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  auto pivots = rref(M);
  // Inconsistent if the augmented column is a pivot.
  if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
  // Underdetermined if fewer pivots than unknown columns that matter; for our
  // callers a unique solution is expected, so require full column rank.
  if (pivots.size() != A.cols) return std::nullopt;
  QVec x(A.cols, Q(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M.at(r, A.cols);
  return x;
}

std::vector<QVec> kernel_basis(const QMat& A) {
  QMat M = A;
  auto pivots = rref(M);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free_col = 0; free_col < A.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(A.cols, Q(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -M.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// --- lattices ---------------------------------------------------------------

namespace {

// Integer row Hermite normal form (row style, in place), returning the number
// of nonzero rows.  Plain Euclidean sweeps; matrices here are tiny.
std::size_t zhnf(std::vector<std::vector<mpz_class>>& M) {
  if (M.empty()) return 0;
  const std::size_t cols = M[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
    // Euclidean elimination below position (row, col).
    while (true) {
      std::size_t piv = M.size();
      for (std::size_t i = row; i < M.size(); ++i)
        if (M[i][col] != 0 &&
            (piv == M.size() || abs(M[i][col]) < abs(M[piv][col])))
          piv = i;
      if (piv == M.size()) break;  // column is zero below
      std::swap(M[row], M[piv]);
      bool cleared = true;
      for (std::size_t i = row + 1; i < M.size(); ++i) {
        if (M[i][col] == 0) continue;
        mpz_class q = M[i][col] / M[row][col];  // truncated; loop handles rest
        for (std::size_t j = 0; j < cols; ++j) M[i][j] -= q * M[row][j];
        if (M[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (M[row][col] == 0) continue;
    if (M[row][col] < 0)
      for (std::size_t j = 0; j < cols; ++j) M[row][j] = -M[row][j];
    // Reduce entries above the pivot.
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), M[i][col].get_mpz_t(), M[row][col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) M[i][j] -= q * M[row][j];
    }
    ++row;
  }
  return row;
}

}  // namespace

std::vector<QVec> hnf_basis(const std::vector<QVec>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators[0].size();
  // Common denominator.
  mpz_class den = 1;
  for (const QVec& g : generators) {
    if (g.size() != n) throw internal_error("hnf_basis: ragged generators");
    for (const Q& x : g) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
      den = l;
    }
  }
  std::vector<std::vector<mpz_class>> M;
  for (const QVec& g : generators) {
    std::vector<mpz_class> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      Q scaled = Q(den) * g[j];
      scaled.canonicalize();
      row[j] = scaled.get_num();
    }
    M.push_back(std::move(row));
  }
  std::size_t r = zhnf(M);
  std::vector<QVec> basis;
  for (std::size_t i = 0; i < r; ++i) {
    QVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = Q(M[i][j], den);
    for (Q& x : v) x.canonicalize();
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<mpz_class>> lattice_coords(const std::vector<QVec>& basis,
                                                     const QVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return std::vector<mpz_class>{};
    return std::nullopt;
  }
  const std::size_t n = basis[0].size();
  QMat A(n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) A.at(i, j) = basis[j][i];
  auto x = solve(A, v);
  if (!x) return std::nullopt;
  std::vector<mpz_class> coords;
  for (const Q& c : *x) {
    if (!is_integer(c)) return std::nullopt;
    coords.push_back(c.get_num());
  }
  return coords;
}

bool lattice_contains(const std::vector<QVec>& basis, const QVec& v) {
  return lattice_coords(basis, v).has_value();
}

}  // namespace liedirac
