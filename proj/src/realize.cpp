#include "liedirac/realize.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "liedirac/errors.hpp"

namespace liedirac {

namespace {

// 0-based index paired with a under the antidiagonal form.
std::size_t paired(const MatrixRealization& m, std::size_t a) {
  return static_cast<std::size_t>(m.n) - 1 - a;
}

// Exponent of the symplectic form sign on coordinate a (+1 first half,
// -1 second half).
Q form_sign_exp(const MatrixRealization& m, std::size_t a) {
  return a < static_cast<std::size_t>(m.n) / 2 ? Q(0) : Q(1, 2);
}

bool uses_form(const MatrixRealization& m) {
  return m.family == ClassicalFamily::SO || m.family == ClassicalFamily::SP;
}

using Key = std::pair<std::size_t, std::size_t>;

// Twin position of an off-diagonal matrix entry under the form involution.
Key twin(const MatrixRealization& m, const Key& k) {
  return {paired(m, k.second), paired(m, k.first)};
}

Key canonical_key(const MatrixRealization& m, const Key& k) {
  if (!uses_form(m)) return k;
  Key t = twin(m, k);
  return std::min(k, t);
}

// One basis line of the algebra.  Off-diagonal lines are keyed by the
// canonical matrix position; Cartan lines of the orthogonal/symplectic
// algebras are keyed by the diagonal position (a, a) with a in the first
// half.  Special-linear diagonals are handled separately.
struct LineStep {
  Key key;
  Q exp;  // phase exponent mod 1 picked up by the canonical basis vector
};

// Image of the line under the automorphism.
LineStep sigma_on_line(const MatrixRealization& m, const Key& k) {
  const auto& pi = m.perm;
  if (k.first == k.second) {
    // Cartan line E_aa - E_{a'a'} of the orthogonal/symplectic algebra.
    std::size_t a = pi[k.first];
    if (a < static_cast<std::size_t>(m.n) / 2) return {{a, a}, Q(0)};
    return {{paired(m, a), paired(m, a)}, Q(1, 2)};
  }
  std::size_t a = k.first, b = k.second;
  if (m.family == ClassicalFamily::SL) {
    if (!m.neg_transpose) return {{pi[a], pi[b]}, mod1(m.phase[a] - m.phase[b])};
    return {{pi[b], pi[a]}, mod1(Q(1, 2) + m.phase[b] - m.phase[a])};
  }
  Key image{pi[a], pi[b]};
  Key canon = canonical_key(m, image);
  if (image == canon) return {canon, mod1(m.phase[a] - m.phase[b])};
  // The image elementary matrix is the twin of the canonical one; the
  // scalar is carried by the twin coefficient of the source line.
  Q cexp = Q(1, 2);
  if (m.family == ClassicalFamily::SP)
    cexp = mod1(cexp + form_sign_exp(m, b) - form_sign_exp(m, a));
  std::size_t ap = paired(m, a), bp = paired(m, b);
  return {canon, mod1(cexp + m.phase[bp] - m.phase[ap])};
}

std::vector<Key> line_keys(const MatrixRealization& m) {
  std::vector<Key> keys;
  const std::size_t n = m.n;
  if (m.family == ClassicalFamily::SL) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && m.block[a] == m.block[b]) keys.push_back({a, b});
    return keys;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || b == paired(m, a)) continue;
      Key k{a, b};
      if (k == canonical_key(m, k)) keys.push_back(k);
    }
  if (m.family == ClassicalFamily::SP)
    for (std::size_t a = 0; a < n; ++a) keys.push_back({a, paired(m, a)});
  for (std::size_t a = 0; a < n / 2; ++a) keys.push_back({a, a});
  return keys;
}

// Orbit classes: a cycle of length m with accumulated phase exponent F
// splits into the eigenvalue exponents (F + j)/m, j = 0..m-1.
void add_orbit_classes(GradedTable& gt, const Q& total, std::size_t len, const QVec& weight,
                       long mult) {
  for (std::size_t j = 0; j < len; ++j) {
    Q cls = mod1((total + Q(static_cast<long>(j))) / Q(static_cast<long>(len)));
    gt.classes[cls][weight] += mult;
  }
}

void prune_empty(GradedTable& gt) {
  for (auto it = gt.classes.begin(); it != gt.classes.end();) {
    auto& tbl = it->second;
    for (auto jt = tbl.begin(); jt != tbl.end();) {
      if (jt->second == 0)
        jt = tbl.erase(jt);
      else
        ++jt;
    }
    if (tbl.empty())
      it = gt.classes.erase(it);
    else
      ++it;
  }
}

}  // namespace

MatrixRealization identity_realization(ClassicalFamily family, int n) {
  MatrixRealization m;
  m.family = family;
  m.n = n;
  m.perm.resize(n);
  for (int i = 0; i < n; ++i) m.perm[i] = i;
  m.phase.assign(n, Q(0));
  m.block.assign(n, 0);
  validate_realization(m);
  return m;
}

long realization_dimension(const MatrixRealization& m) {
  const long n = m.n;
  switch (m.family) {
    case ClassicalFamily::SO:
      return n * (n - 1) / 2;
    case ClassicalFamily::SP:
      return n * (n + 1) / 2;
    case ClassicalFamily::SL: {
      std::map<int, long> sizes;
      for (int b : m.block) sizes[b] += 1;
      long d = 0;
      for (auto& [b, s] : sizes) d += s * s - 1;
      return d;
    }
  }
  throw internal_error("unknown matrix family");
}

void validate_realization(const MatrixRealization& m) {
  const std::size_t n = m.n;
  if (m.n < 2) throw invalid_input("matrix realization needs size >= 2");
  if (m.perm.size() != n || m.phase.size() != n || m.block.size() != n)
    throw invalid_input("matrix realization arrays must have length n");
  std::vector<bool> seen(n, false);
  for (std::size_t v : m.perm) {
    if (v >= n || seen[v]) throw invalid_input("matrix realization map is not a permutation");
    seen[v] = true;
  }
  for (const Q& p : m.phase)
    if (mod1(p) != p) throw invalid_input("matrix realization phases must lie in [0,1)");

  if (m.family == ClassicalFamily::SL) {
    // Blocks must be permuted consistently.
    std::map<int, int> image;
    for (std::size_t a = 0; a < n; ++a) {
      auto [it, fresh] = image.emplace(m.block[a], m.block[m.perm[a]]);
      if (!fresh && it->second != m.block[m.perm[a]])
        throw invalid_input("matrix realization splits a block");
    }
    std::map<int, int> hits;
    for (auto& [b, ib] : image) hits[ib] += 1;
    for (auto& [b, c] : hits)
      if (c != 1) throw invalid_input("matrix realization merges blocks");
    return;
  }

  if (m.neg_transpose)
    throw invalid_input("negative transpose applies to the special-linear family only");
  if (m.family == ClassicalFamily::SP && m.n % 2 != 0)
    throw invalid_input("symplectic realizations need even size");
  // The monomial must rescale the antidiagonal form by a scalar: it has to
  // respect the coordinate pairing and shift paired phases uniformly.
  std::optional<Q> scale;
  for (std::size_t a = 0; a < n; ++a) {
    if (m.perm[paired(m, a)] != paired(m, m.perm[a]))
      throw invalid_input("matrix realization does not respect the coordinate pairing");
    Q s = m.phase[a] + m.phase[paired(m, a)];
    if (m.family == ClassicalFamily::SP)
      s += form_sign_exp(m, m.perm[a]) - form_sign_exp(m, a);
    s = mod1(s);
    if (!scale)
      scale = s;
    else if (*scale != s)
      throw invalid_input("matrix realization does not rescale the bilinear form");
  }
}

std::vector<QVec> fixed_cartan_basis(const MatrixRealization& m) {
  validate_realization(m);
  const std::size_t n = m.n;
  std::vector<QVec> rows;
  if (m.family == ClassicalFamily::SL) {
    std::map<int, QVec> traces;
    for (std::size_t a = 0; a < n; ++a) {
      auto [it, fresh] = traces.emplace(m.block[a], QVec(n, Q(0)));
      it->second[a] = 1;
    }
    for (auto& [b, row] : traces) rows.push_back(row);
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t ap = paired(m, a);
      if (a > ap) continue;
      QVec row(n, Q(0));
      row[a] += 1;
      row[ap] += 1;  // a == ap forces the middle entry to vanish
      rows.push_back(row);
    }
  }
  // Fixed-point condition: h o pi^{-1} = h, with a sign for the negative
  // transpose (which negates diagonals before permuting).
  Q sign = m.neg_transpose ? Q(-1) : Q(1);
  for (std::size_t a = 0; a < n; ++a) {
    QVec row(n, Q(0));
    row[m.perm[a]] += 1;
    row[a] -= sign;
    if (!is_zero(row)) rows.push_back(row);
  }
  QMat A(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) A.at(i, j) = rows[i][j];
  return kernel_basis(A);
}

GradedTable matrix_eigengrade(const MatrixRealization& m) {
  validate_realization(m);
  std::vector<QVec> basis = fixed_cartan_basis(m);
  auto weight_of = [&](const Key& k) {
    QVec w(basis.size(), Q(0));
    if (k.first == k.second) return w;  // Cartan line
    for (std::size_t i = 0; i < basis.size(); ++i) w[i] = basis[i][k.first] - basis[i][k.second];
    return w;
  };

  GradedTable gt;
  std::vector<Key> keys = line_keys(m);
  std::map<Key, bool> visited;
  for (const Key& k : keys) visited[k] = false;
  for (const Key& start : keys) {
    if (visited[start]) continue;
    Q total = 0;
    std::size_t len = 0;
    QVec w = weight_of(start);
    Key cur = start;
    do {
      visited.at(cur) = true;
      if (weight_of(cur) != w)
        throw internal_error("weight is not constant along an automorphism orbit");
      LineStep step = sigma_on_line(m, cur);
      total += step.exp;
      cur = step.key;
      ++len;
    } while (cur != start);
    add_orbit_classes(gt, total, len, w, 1);
  }

  if (m.family == ClassicalFamily::SL) {
    // Diagonal part: eigenvalues of the (sign-)permutation action on the
    // diagonal, minus the per-block trace lines.
    QVec zero(basis.size(), Q(0));
    Q step = m.neg_transpose ? Q(1, 2) : Q(0);
    std::vector<bool> seen(m.n, false);
    for (int a = 0; a < m.n; ++a) {
      if (seen[a]) continue;
      std::size_t len = 0;
      for (std::size_t c = a; !seen[c]; c = m.perm[c]) {
        seen[c] = true;
        ++len;
      }
      add_orbit_classes(gt, Q(static_cast<long>(len)) * step, len, zero, 1);
    }
    // Subtract the trace line of each block orbit.
    std::map<int, int> block_image;
    for (int a = 0; a < m.n; ++a) block_image[m.block[a]] = m.block[m.perm[a]];
    std::map<int, bool> bseen;
    for (auto& [b, ib] : block_image) bseen[b] = false;
    for (auto& [b, ib] : block_image) {
      if (bseen[b]) continue;
      std::size_t len = 0;
      for (int c = b; !bseen[c]; c = block_image[c]) {
        bseen[c] = true;
        ++len;
      }
      add_orbit_classes(gt, Q(static_cast<long>(len)) * step, len, zero, -1);
    }
  }

  prune_empty(gt);
  if (gt.total_dimension() != realization_dimension(m))
    throw internal_error("eigenvalue classes do not sum to the algebra dimension");
  return gt;
}

QMat simple_root_values(const MatrixRealization& m) {
  std::vector<QVec> basis = fixed_cartan_basis(m);
  auto entry = [&](std::size_t a, std::size_t b, std::size_t k) {
    return basis[k][a] - basis[k][b];
  };
  std::vector<Key> lines;
  const std::size_t n = m.n;
  if (m.family == ClassicalFamily::SL) {
    std::map<int, std::vector<std::size_t>> coords;
    for (std::size_t a = 0; a < n; ++a) coords[m.block[a]].push_back(a);
    for (auto& [b, cs] : coords)
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) lines.push_back({cs[i], cs[i + 1]});
  } else {
    const std::size_t l = n / 2;
    for (std::size_t i = 0; i + 2 < l + 1; ++i) lines.push_back({i, i + 1});
    if (m.family == ClassicalFamily::SP)
      lines.push_back({l - 1, l});
    else if (n % 2 == 1)
      lines.push_back({l - 1, l});
    else
      lines.push_back({l - 2, l});
  }
  QMat vals(lines.size(), basis.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k)
      vals.at(i, k) = entry(lines[i].first, lines[i].second, k);
  return vals;
}

}  // namespace liedirac
