#include "liedirac/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "liedirac/errors.hpp"

namespace liedirac {

namespace {

struct FamilySpec {
  QVec d;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Dynkin diagram data: half squared lengths (long = 1, i.e. (a,a) = 2) and
// edges.  The Gram entry on an edge is -max(d_i, d_j) in every family, which
// reproduces the standard single/double/triple bond Cartan integers.
FamilySpec family_spec(const SimpleType& t) {
  const int n = t.rank;
  FamilySpec spec;
  auto chain = [&](int count) {
    for (int i = 0; i + 1 < count; ++i) spec.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case LieFamily::A:
      if (n < 1) throw invalid_input("A family needs rank >= 1");
      spec.d.assign(n, Q(1));
      chain(n);
      break;
    case LieFamily::B:
      if (n < 2) throw invalid_input("B family needs rank >= 2");
      spec.d.assign(n, Q(1));
      spec.d[n - 1] = Q(1, 2);
      chain(n);
      break;
    case LieFamily::C:
      if (n < 2) throw invalid_input("C family needs rank >= 2");
      spec.d.assign(n, Q(1, 2));
      spec.d[n - 1] = Q(1);
      chain(n);
      break;
    case LieFamily::D:
      if (n < 3) throw invalid_input("D family needs rank >= 3");
      spec.d.assign(n, Q(1));
      for (int i = 0; i + 1 < n - 1; ++i) spec.edges.emplace_back(i, i + 1);
      spec.edges.emplace_back(n - 3, n - 1);
      break;
    case LieFamily::E:
      if (n < 6 || n > 8) throw invalid_input("E family needs rank 6, 7 or 8");
      spec.d.assign(n, Q(1));
      // Nodes 1,3,4,...,n form a chain; node 2 hangs off node 4.
      spec.edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) spec.edges.emplace_back(i, i + 1);
      spec.edges.emplace_back(1, 3);
      break;
    case LieFamily::F:
      if (n != 4) throw invalid_input("F family needs rank 4");
      spec.d = {Q(1), Q(1), Q(1, 2), Q(1, 2)};
      chain(4);
      break;
    case LieFamily::G:
      if (n != 2) throw invalid_input("G family needs rank 2");
      spec.d = {Q(1, 3), Q(1)};
      chain(2);
      break;
  }
  return spec;
}

}  // namespace

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2) throw invalid_input("malformed type name: " + s);
  LieFamily fam;
  switch (s[0]) {
    case 'A': fam = LieFamily::A; break;
    case 'B': fam = LieFamily::B; break;
    case 'C': fam = LieFamily::C; break;
    case 'D': fam = LieFamily::D; break;
    case 'E': fam = LieFamily::E; break;
    case 'F': fam = LieFamily::F; break;
    case 'G': fam = LieFamily::G; break;
    default: throw invalid_input("malformed type name: " + s);
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw invalid_input("malformed type name: " + s);
    rank = rank * 10 + (s[i] - '0');
  }
  SimpleType t{fam, rank};
  family_spec(t);  // validates the rank range
  return t;
}

std::string simple_type_name(const SimpleType& t) {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

QVec root_half_lengths(const SimpleType& t) { return family_spec(t).d; }

QMat cartan_matrix(const SimpleType& t) {
  FamilySpec spec = family_spec(t);
  const std::size_t n = spec.d.size();
  QMat G(n, n);
  for (std::size_t i = 0; i < n; ++i) G.at(i, i) = 2 * spec.d[i];
  for (auto [i, j] : spec.edges) {
    Q g = -std::max(spec.d[i], spec.d[j], [](const Q& a, const Q& b) { return a < b; });
    G.at(i, j) = g;
    G.at(j, i) = g;
  }
  QMat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      A.at(i, j) = G.at(i, j) / spec.d[i];
      if (!is_integer(A.at(i, j)))
        throw internal_error("non-integral Cartan entry for " + simple_type_name(t));
    }
  return A;
}

Q inner_form(const QMat& gram, const QVec& x, const QVec& y) {
  return bilinear(x, gram, y);
}

Q pair_coroot(const QMat& gram, const QVec& x, const QVec& root) {
  Q nn = inner_form(gram, root, root);
  if (nn == 0) throw internal_error("coroot pairing against isotropic vector");
  return 2 * inner_form(gram, x, root) / nn;
}

QVec coroot_vec(const QMat& gram, const QVec& root) {
  Q nn = inner_form(gram, root, root);
  if (nn == 0) throw internal_error("coroot of isotropic vector");
  return (Q(2) / nn) * root;
}

QVec reflect(const QMat& gram, const QVec& x, const QVec& root) {
  return x - pair_coroot(gram, x, root) * root;
}

QMat reflection_matrix(const QMat& gram, const QVec& root) {
  const std::size_t n = gram.rows;
  Q nn = inner_form(gram, root, root);
  if (nn == 0) throw internal_error("reflection in isotropic vector");
  QVec g_root = mat_vec(gram, root);  // (e_j, root) as j-th entry
  QMat M = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M.at(i, j) -= Q(2) / nn * root[i] * g_root[j];
  return M;
}

std::vector<RootInfo> root_closure(const QMat& gram, const std::vector<QVec>& simples) {
  const std::size_t m = simples.size();
  for (const QVec& s : simples)
    if (inner_form(gram, s, s) <= 0)
      throw invalid_input("root closure: generator with non-positive norm");

  std::map<QVec, RootInfo, VecLess> known;
  std::vector<std::vector<const RootInfo*>> layers;  // by height
  for (std::size_t i = 0; i < m; ++i) {
    RootInfo ri;
    ri.coeffs.assign(m, 0);
    ri.coeffs[i] = 1;
    ri.vec = simples[i];
    ri.height = 1;
    auto [it, fresh] = known.emplace(ri.vec, ri);
    if (!fresh) throw invalid_input("root closure: repeated generator");
    (void)it;
  }

  constexpr int kMaxHeight = 256;
  for (int h = 1; h <= kMaxHeight; ++h) {
    std::vector<RootInfo> next;
    for (const auto& [vec, ri] : known) {
      if (ri.height != h) continue;
      for (std::size_t i = 0; i < m; ++i) {
        // Root string through ri.vec in direction simples[i]:
        // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p
        // is the depth of the string below beta.
        int p = 0;
        QVec down = vec - simples[i];
        while (known.count(down)) {
          ++p;
          down = down - simples[i];
        }
        Q pairing = pair_coroot(gram, vec, simples[i]);
        if (!is_integer(pairing))
          throw invalid_input("root closure: non-integral Cartan pairing");
        Q q = p - pairing;
        if (q > 0) {
          RootInfo nri;
          nri.coeffs = ri.coeffs;
          nri.coeffs[i] += 1;
          nri.vec = vec + simples[i];
          nri.height = h + 1;
          next.push_back(std::move(nri));
        }
      }
    }
    bool added = false;
    for (RootInfo& ri : next) {
      if (known.emplace(ri.vec, ri).second) added = true;
    }
    if (!added) break;
    if (h == kMaxHeight)
      throw internal_error("root closure did not terminate");
    if (known.size() > 100000)
      throw internal_error("root closure exploded");
  }
  (void)layers;

  std::vector<RootInfo> out;
  out.reserve(known.size());
  for (auto& [vec, ri] : known) out.push_back(ri);
  std::sort(out.begin(), out.end(), [](const RootInfo& a, const RootInfo& b) {
    if (a.height != b.height) return a.height < b.height;
    return lex_less(a.vec, b.vec);
  });
  return out;
}

QVec half_sum_of_positives(const std::vector<RootInfo>& positives) {
  if (positives.empty()) return {};
  QVec s(positives[0].vec.size(), Q(0));
  for (const RootInfo& r : positives) s += r.vec;
  return Q(1, 2) * s;
}

WeightTable irrep_weight_table(const QMat& gram, const std::vector<QVec>& simples,
                               const QVec& lambda) {
  for (const QVec& s : simples) {
    Q p = pair_coroot(gram, lambda, s);
    if (!is_integer(p) || p < 0)
      throw invalid_input("irrep weight table: highest weight not dominant integral");
  }
  std::vector<RootInfo> positives = root_closure(gram, simples);
  QVec rho = half_sum_of_positives(positives);
  if (rho.empty()) rho.assign(lambda.size(), Q(0));

  // Weight set, layer by layer going down from lambda.  A candidate mu at
  // depth h belongs to the module iff for some i the top tau of its alpha_i
  // string (within already-accepted weights) satisfies
  // depth(mu below tau) <= <tau, alpha_i^vee>.
  std::set<QVec, VecLess> weights;
  weights.insert(lambda);
  std::vector<QVec> layer = {lambda};
  constexpr int kMaxLayers = 4096;
  for (int h = 1; h <= kMaxLayers && !layer.empty(); ++h) {
    std::set<QVec, VecLess> candidates;
    for (const QVec& w : layer)
      for (const QVec& s : simples) candidates.insert(w - s);
    std::vector<QVec> next;
    for (const QVec& mu : candidates) {
      if (weights.count(mu)) continue;
      bool member = false;
      for (const QVec& s : simples) {
        int q = 0;
        QVec up = mu + s;
        while (weights.count(up)) {
          ++q;
          up = up + s;
        }
        if (q == 0) continue;
        QVec tau = mu + Q(q) * s;
        if (Q(q) <= pair_coroot(gram, tau, s)) {
          member = true;
          break;
        }
      }
      if (member) {
        weights.insert(mu);
        next.push_back(mu);
      }
    }
    if (h == kMaxLayers && !next.empty())
      throw internal_error("irrep weight generation did not terminate");
    layer = std::move(next);
  }

  // Freudenthal recursion, top down.  Order by decreasing (lambda - mu)
  // height is implied by processing in decreasing inner(mu, rho)... instead
  // we sort by the coefficient sum of lambda - mu in the simples, recovered
  // via exact solve against the simple matrix; for speed we instead iterate
  // until all multiplicities stabilize, which terminates because each
  // mu + k alpha lookup refers to weights strictly closer to lambda.
  const std::size_t dim = lambda.size();
  QMat S(dim, simples.size());
  for (std::size_t j = 0; j < simples.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) S.at(i, j) = simples[j][i];
  std::vector<std::pair<Q, QVec>> order;  // (depth, weight)
  for (const QVec& mu : weights) {
    auto c = solve(S, lambda - mu);
    if (!c) throw internal_error("weight not in root lattice of the subsystem");
    Q depth = 0;
    for (const Q& x : *c) depth += x;
    order.emplace_back(depth, mu);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int c = cmp_q(a.first, b.first);
    if (c != 0) return c < 0;
    return lex_less(a.second, b.second);
  });

  WeightTable mult;
  QVec lr = lambda + rho;
  Q top_norm = inner_form(gram, lr, lr);
  for (const auto& [depth, mu] : order) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    QVec mr = mu + rho;
    Q denom = top_norm - inner_form(gram, mr, mr);
    if (denom == 0)
      throw internal_error("Freudenthal denominator vanished off the top weight");
    Q num = 0;
    for (const RootInfo& alpha : positives) {
      QVec w = mu + alpha.vec;
      while (true) {
        auto it = mult.find(w);
        if (it == mult.end()) {
          if (!weights.count(w)) break;
          throw internal_error("Freudenthal ordering violated");
        }
        num += Q(it->second) * inner_form(gram, w, alpha.vec);
        w = w + alpha.vec;
      }
    }
    Q m = 2 * num / denom;
    if (!is_integer(m) || m <= 0)
      throw internal_error("Freudenthal produced a non-positive multiplicity");
    mult[mu] = static_cast<long>(m.get_num().get_si());
  }
  return mult;
}

std::vector<SignedMat> finite_weyl_group(const QMat& gram,
                                         const std::vector<QVec>& simples,
                                         std::size_t max_order) {
  std::vector<QMat> gens;
  for (const QVec& s : simples) gens.push_back(reflection_matrix(gram, s));
  auto key = [](const QMat& M) { return M.a; };
  std::map<std::vector<Q>, int, VecLess> seen;
  std::vector<SignedMat> out;
  QMat id = QMat::identity(gram.rows);
  seen[key(id)] = 1;
  out.push_back({id, 1});
  std::size_t head = 0;
  while (head < out.size()) {
    SignedMat cur = out[head++];
    for (const QMat& g : gens) {
      QMat next = g * cur.mat;
      if (seen.emplace(key(next), 1).second) {
        out.push_back({next, -cur.sign});
        if (out.size() > max_order)
          throw unsupported_case("Weyl group larger than the configured bound");
      }
    }
  }
  return out;
}

bool FiniteRootSystem::is_root_vector(const QVec& v) const {
  for (const RootInfo& r : positive_roots)
    if (r.vec == v || r.vec == -v) return true;
  return false;
}

FiniteRootSystem build_root_system(const std::vector<SimpleType>& components) {
  if (components.empty()) throw invalid_input("empty component list");
  FiniteRootSystem rs;
  rs.components = components;
  for (const SimpleType& t : components) {
    std::vector<std::size_t> nodes;
    int rk = family_spec(t).d.size();
    for (int i = 0; i < rk; ++i) nodes.push_back(rs.rank + i);
    rs.component_nodes.push_back(nodes);
    rs.rank += rk;
  }
  rs.cartan = QMat(rs.rank, rs.rank);
  rs.d.assign(rs.rank, Q(0));
  for (std::size_t c = 0; c < components.size(); ++c) {
    QMat A = cartan_matrix(components[c]);
    QVec dc = root_half_lengths(components[c]);
    const auto& nodes = rs.component_nodes[c];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      rs.d[nodes[i]] = dc[i];
      for (std::size_t j = 0; j < nodes.size(); ++j)
        rs.cartan.at(nodes[i], nodes[j]) = A.at(i, j);
    }
  }
  rs.gram = QMat(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j)
      rs.gram.at(i, j) = rs.d[i] * rs.cartan.at(i, j);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j)
      if (rs.gram.at(i, j) != rs.gram.at(j, i))
        throw internal_error("asymmetric Gram matrix");
  rs.gram_inv = inverse(rs.gram);

  std::vector<QVec> simples;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    QVec e(rs.rank, Q(0));
    e[i] = 1;
    simples.push_back(e);
  }
  rs.positive_roots = root_closure(rs.gram, simples);
  rs.rho = half_sum_of_positives(rs.positive_roots);
  for (std::size_t i = 0; i < rs.rank; ++i)
    if (pair_coroot(rs.gram, rs.rho, simples[i]) != 1)
      throw internal_error("half sum of positive roots fails <rho, a_i^vee> = 1");

  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& nodes = rs.component_nodes[c];
    std::vector<const RootInfo*> comp_roots;
    for (const RootInfo& r : rs.positive_roots) {
      bool in_comp = true;
      for (std::size_t i = 0; i < rs.rank; ++i)
        if (r.coeffs[i] != 0 &&
            std::find(nodes.begin(), nodes.end(), i) == nodes.end())
          in_comp = false;
      if (in_comp) comp_roots.push_back(&r);
    }
    auto highest = *std::max_element(
        comp_roots.begin(), comp_roots.end(),
        [](const RootInfo* a, const RootInfo* b) { return a->height < b->height; });
    Q min_norm = inner_form(rs.gram, comp_roots[0]->vec, comp_roots[0]->vec);
    for (const RootInfo* r : comp_roots)
      min_norm = std::min(min_norm, inner_form(rs.gram, r->vec, r->vec),
                          [](const Q& a, const Q& b) { return a < b; });
    const RootInfo* hs = nullptr;
    for (const RootInfo* r : comp_roots)
      if (inner_form(rs.gram, r->vec, r->vec) == min_norm &&
          (!hs || r->height > hs->height))
        hs = r;
    rs.highest_root.push_back(highest->vec);
    rs.highest_short_root.push_back(hs->vec);
    rs.dual_coxeter.push_back(1 + pair_coroot(rs.gram, rs.rho, highest->vec));
  }
  return rs;
}

DiagramAut make_diagram_aut(const FiniteRootSystem& rs, std::vector<std::size_t> perm) {
  if (perm.size() != rs.rank) throw invalid_input("diagram map has wrong size");
  std::vector<bool> hit(rs.rank, false);
  for (std::size_t p : perm) {
    if (p >= rs.rank || hit[p]) throw invalid_input("diagram map is not a permutation");
    hit[p] = true;
  }
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j)
      if (rs.cartan.at(perm[i], perm[j]) != rs.cartan.at(i, j))
        throw invalid_input("permutation does not preserve the Cartan matrix");
  DiagramAut aut;
  aut.perm = std::move(perm);
  aut.order = 1;
  std::vector<std::size_t> p = aut.perm;
  auto is_id = [&](const std::vector<std::size_t>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != i) return false;
    return true;
  };
  while (!is_id(p)) {
    std::vector<std::size_t> np(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) np[i] = aut.perm[p[i]];
    p = np;
    ++aut.order;
    if (aut.order > 64) throw internal_error("runaway permutation order");
  }
  return aut;
}

FoldedData fold_data(const FiniteRootSystem& rs, const DiagramAut& eta) {
  FoldedData fd;
  fd.parent = rs;
  fd.eta = eta;

  // Node orbits, ordered by minimal node.
  std::vector<bool> seen(rs.rank, false);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    do {
      orbit.push_back(j);
      seen[j] = true;
      j = eta.perm[j];
    } while (j != i);
    std::sort(orbit.begin(), orbit.end());
    fd.orbits.push_back(orbit);
  }
  for (const auto& orbit : fd.orbits) {
    QVec avg(rs.rank, Q(0));
    for (std::size_t n : orbit) avg[n] += Q(1, orbit.size());
    fd.simples.push_back(avg);
  }

  // Classify.
  if (eta.order == 1) {
    if (rs.components.size() != 1)
      throw unsupported_case(
          "trivial diagram action on a reducible algebra; split into "
          "indecomposable summands first");
    fd.kind = FoldKind::untwisted;
    fd.r = 1;
  } else if (rs.components.size() == 1) {
    if (eta.order != 2 && eta.order != 3)
      throw unsupported_case("connected diagram fold of order " +
                             std::to_string(eta.order));
    fd.kind = FoldKind::internal_fold;
    fd.r = eta.order;
  } else {
    // Must cyclically and transitively permute isomorphic components with no
    // twist on the return map (order equals the number of components).
    const std::size_t m = rs.components.size();
    auto comp_of = [&](std::size_t node) {
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t n : rs.component_nodes[c])
          if (n == node) return c;
      throw internal_error("node outside all components");
    };
    std::vector<std::size_t> cperm(m);
    for (std::size_t c = 0; c < m; ++c)
      cperm[c] = comp_of(eta.perm[rs.component_nodes[c][0]]);
    std::set<std::size_t> orbit;
    std::size_t c = 0;
    do {
      orbit.insert(c);
      c = cperm[c];
    } while (c != 0);
    if (orbit.size() != m)
      throw unsupported_case("diagram action does not permute the summands "
                             "transitively");
    for (std::size_t k = 1; k < m; ++k)
      if (simple_type_name(rs.components[k]) != simple_type_name(rs.components[0]))
        throw internal_error("transitively permuted summands of distinct type");
    if (static_cast<std::size_t>(eta.order) != m)
      throw unsupported_case(
          "summand cycle with a nontrivial twist on the return map");
    fd.kind = FoldKind::component_cycle;
    fd.r = eta.order;
  }

  fd.positive_roots = root_closure(rs.gram, fd.simples);
  fd.rho_fixed = half_sum_of_positives(fd.positive_roots);

  // Distinguished dominant weight theta.
  auto dominant_check = [&](const QVec& v) {
    for (const QVec& s : fd.simples)
      if (pair_coroot(rs.gram, v, s) < 0)
        throw internal_error("selected theta is not dominant");
  };
  if (fd.kind == FoldKind::internal_fold) {
    Q min_norm = inner_form(rs.gram, fd.positive_roots[0].vec, fd.positive_roots[0].vec);
    for (const RootInfo& r : fd.positive_roots)
      min_norm = std::min(min_norm, inner_form(rs.gram, r.vec, r.vec),
                          [](const Q& a, const Q& b) { return a < b; });
    const RootInfo* hs = nullptr;
    for (const RootInfo& r : fd.positive_roots)
      if (inner_form(rs.gram, r.vec, r.vec) == min_norm &&
          (!hs || r.height > hs->height))
        hs = &r;
    // An orbit containing two adjacent nodes signals the non-reduced case,
    // where the normalizing weight is twice the highest short root.
    fd.theta_doubled = false;
    for (const auto& orbit : fd.orbits)
      for (std::size_t x : orbit)
        for (std::size_t y : orbit)
          if (x != y && rs.cartan.at(x, y) != 0) fd.theta_doubled = true;
    fd.theta = fd.theta_doubled ? Q(2) * hs->vec : hs->vec;
  } else {
    const RootInfo* hi = nullptr;
    for (const RootInfo& r : fd.positive_roots)
      if (!hi || r.height > hi->height) hi = &r;
    fd.theta = hi->vec;
    fd.theta_doubled = false;
  }
  dominant_check(fd.theta);

  // Averaging projector onto the eta-fixed subspace.
  QMat Meta(rs.rank, rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) Meta.at(eta.perm[i], i) = 1;
  QMat P(rs.rank, rs.rank);
  QMat power = QMat::identity(rs.rank);
  for (int k = 0; k < eta.order; ++k) {
    for (std::size_t i = 0; i < rs.rank * rs.rank; ++i) P.a[i] += power.a[i];
    power = Meta * power;
  }
  for (Q& x : P.a) x /= eta.order;
  fd.projector = P;
  return fd;
}

long GradedTable::total_dimension() const {
  long total = 0;
  for (const auto& [t, table] : classes)
    for (const auto& [w, m] : table) total += m;
  return total;
}

GradedTable eta_graded_table(const FoldedData& fd) {
  GradedTable gt;
  WeightTable adjoint;
  for (const RootInfo& r : fd.positive_roots) {
    adjoint[r.vec] += 1;
    adjoint[-r.vec] += 1;
  }
  QVec zero(fd.parent.rank, Q(0));
  adjoint[zero] += static_cast<long>(fd.fixed_rank());
  gt.classes[Q(0)] = adjoint;

  if (fd.kind == FoldKind::internal_fold) {
    WeightTable module = irrep_weight_table(fd.parent.gram, fd.simples, fd.theta);
    for (int p = 1; p < fd.r; ++p) gt.classes[Q(p, fd.r)] = module;
  } else if (fd.kind == FoldKind::component_cycle) {
    for (int p = 1; p < fd.r; ++p) gt.classes[Q(p, fd.r)] = adjoint;
  }

  if (gt.total_dimension() != static_cast<long>(fd.parent.dimension()))
    throw internal_error("graded table dimensions do not sum to dim g");
  return gt;
}

Q eval_on_cartan(const QVec& weight, const QVec& h_evals) {
  if (weight.size() != h_evals.size())
    throw internal_error("weight/Cartan evaluation size mismatch");
  Q s = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * h_evals[i];
  return s;
}

GradedTable sigma_graded_table(const FoldedData& fd, const QVec& h_evals) {
  if (h_evals.size() != fd.parent.rank)
    throw invalid_input("Cartan element has wrong coordinate count");
  for (std::size_t i = 0; i < h_evals.size(); ++i)
    if (h_evals[fd.eta.perm[i]] != h_evals[i])
      throw invalid_input("Cartan element is not fixed by the diagram action");

  GradedTable base = eta_graded_table(fd);
  GradedTable out;
  for (const auto& [t, table] : base.classes)
    for (const auto& [w, m] : table) {
      Q cls = mod1(t + eval_on_cartan(w, h_evals));
      out.classes[cls][w] += m;
    }
  if (out.total_dimension() != base.total_dimension())
    throw internal_error("class shift changed the total dimension");
  return out;
}

}  // namespace liedirac
