#include "liedirac/gradedchar.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "liedirac/errors.hpp"

namespace liedirac {

long GradedCharacter::coefficient(const AffineWeight& w) const {
  auto s = slices.find(w.dlt);
  if (s == slices.end()) return 0;
  auto it = s->second.find(w.fin);
  return it == s->second.end() ? 0 : it->second;
}

long GradedCharacter::slice_dimension(const Q& dlt) const {
  auto s = slices.find(dlt);
  if (s == slices.end()) return 0;
  long total = 0;
  for (const auto& [w, m] : s->second) total += m;
  return total;
}

void GradedCharacter::insert(const AffineWeight& w, long mult) {
  if (mult == 0) return;
  WeightTable& tbl = slices[w.dlt];
  long& entry = tbl[w.fin];
  entry += mult;
  if (entry == 0) {
    tbl.erase(w.fin);
    if (tbl.empty()) slices.erase(w.dlt);
  }
}

GradedCharacter char_monomial(const AffineWeight& w, const Q& floor_dlt) {
  GradedCharacter g;
  g.level = w.level;
  g.top_dlt = w.dlt;
  g.floor_dlt = floor_dlt;
  if (w.dlt >= floor_dlt) g.insert(w, 1);
  return g;
}

void char_accumulate(GradedCharacter& acc, const GradedCharacter& g, long scale) {
  if (&acc == &g) {
    GradedCharacter copy = g;
    char_accumulate(acc, copy, scale);
    return;
  }
  if (acc.level != g.level) throw internal_error("character sum across different levels");
  acc.floor_dlt = std::max(acc.floor_dlt, g.floor_dlt, QLess{});
  acc.top_dlt = std::max(acc.top_dlt, g.top_dlt, QLess{});
  while (!acc.slices.empty() && QLess{}(acc.slices.begin()->first, acc.floor_dlt))
    acc.slices.erase(acc.slices.begin());
  for (const auto& [d, tbl] : g.slices) {
    if (QLess{}(d, acc.floor_dlt)) continue;
    for (const auto& [w, m] : tbl) acc.insert({g.level, w, d}, scale * m);
  }
}

GradedCharacter char_product(const GradedCharacter& x, const GradedCharacter& y) {
  GradedCharacter out;
  out.level = x.level + y.level;
  out.top_dlt = x.top_dlt + y.top_dlt;
  out.floor_dlt = std::max(x.floor_dlt + y.top_dlt, y.floor_dlt + x.top_dlt, QLess{});
  for (const auto& [dx, tx] : x.slices)
    for (const auto& [dy, ty] : y.slices) {
      Q d = dx + dy;
      if (QLess{}(d, out.floor_dlt)) continue;
      for (const auto& [wx, mx] : tx)
        for (const auto& [wy, my] : ty) out.insert({out.level, wx + wy, d}, mx * my);
    }
  return out;
}

bool char_match(const GradedCharacter& x, const GradedCharacter& y) {
  if (x.level != y.level) return false;
  Q floor = std::max(x.floor_dlt, y.floor_dlt, QLess{});
  Q top = std::min(x.top_dlt, y.top_dlt, QLess{});
  std::set<Q, QLess> keys;
  for (const auto& [d, t] : x.slices) keys.insert(d);
  for (const auto& [d, t] : y.slices) keys.insert(d);
  for (const Q& d : keys) {
    if (QLess{}(d, floor) || QLess{}(top, d)) continue;
    auto ix = x.slices.find(d);
    auto iy = y.slices.find(d);
    const WeightTable empty;
    const WeightTable& tx = ix == x.slices.end() ? empty : ix->second;
    const WeightTable& ty = iy == y.slices.end() ? empty : iy->second;
    if (tx != ty) return false;
  }
  return true;
}

GradedCharacter project_character(const GradedCharacter& g, const QMat& p) {
  GradedCharacter out;
  out.level = g.level;
  out.top_dlt = g.top_dlt;
  out.floor_dlt = g.floor_dlt;
  for (const auto& [d, tbl] : g.slices)
    for (const auto& [w, m] : tbl) out.insert({g.level, mat_vec(p, w), d}, m);
  return out;
}

CharSystem char_system(const TwistedAffineDatum& d) {
  return {d.gram(), d.simple_roots, d.rho_hat, d.table.classes};
}

CharSystem char_system(const QMat& gram, const SubsystemData& s) {
  return {gram, s.simples, s.rho, s.classes};
}

std::vector<std::pair<AffineWeight, long>> positive_roots_in_band(const CharSystem& sys,
                                                                  const Q& band) {
  std::vector<std::pair<AffineWeight, long>> out;
  if (sys.simples.empty()) return out;
  if (!(sys.rho.level > 0)) throw internal_error("rho must have positive level");
  for (const auto& [cls, tbl] : sys.classes) {
    for (const auto& [gamma, mult] : tbl) {
      if (mult <= 0) continue;
      if (is_zero(gamma)) {
        // Imaginary roots j delta with j in the class, j > 0.
        Q j = cls == 0 ? Q(1) : cls;
        for (; j <= band; j += 1) out.push_back({{Q(0), gamma, j}, mult});
        continue;
      }
      // Real roots j delta + gamma, positive exactly when the rho pairing is.
      Q threshold = -inner_form(sys.gram, sys.rho.fin, gamma) / sys.rho.level;
      Q j = cls + qfloor(threshold - cls);
      while (!(j > threshold)) j += 1;
      for (; j <= band; j += 1) out.push_back({{Q(0), gamma, j}, mult});
    }
  }
  return out;
}

std::vector<std::pair<AffineWeight, int>> signed_orbit_points(const CharSystem& sys,
                                                              const AffineWeight& x,
                                                              const Q& floor_dlt,
                                                              std::size_t cap) {
  for (const AffineWeight& s : sys.simples)
    if (!(affine_pair_coroot(sys.gram, x, s) > 0))
      throw invalid_input("orbit seed must be strictly dominant");
  std::map<AffineWeight, int, AffineWeightLess> visited;
  std::deque<AffineWeight> frontier;
  visited[x] = 1;
  frontier.push_back(x);
  while (!frontier.empty()) {
    AffineWeight y = frontier.front();
    frontier.pop_front();
    int sign = visited.at(y);
    for (const AffineWeight& s : sys.simples) {
      if (!(affine_pair_coroot(sys.gram, y, s) > 0)) continue;
      AffineWeight z = affine_reflect(sys.gram, y, s);
      if (QLess{}(z.dlt, floor_dlt)) continue;
      if (visited.emplace(z, -sign).second) {
        frontier.push_back(z);
        if (visited.size() > cap) throw internal_error("orbit enumeration exceeded cap");
      }
    }
  }
  return {visited.begin(), visited.end()};
}

namespace {

// Candidate weights of V(lambda) in the band: the coset cone below lambda
// cut by the norm bound |mu + rho| <= |lambda + rho|.  Every true weight is
// reachable from lambda by single simple-root steps through true weights,
// so the closure under such steps inside the ball misses none of them.
std::set<AffineWeight, AffineWeightLess> weight_candidates(const CharSystem& sys,
                                                           const AffineWeight& lambda,
                                                           const Q& cutoff) {
  const AffineWeight x = lambda + sys.rho;
  const Q bound = affine_norm2(sys.gram, x);
  const Q floor = lambda.dlt - cutoff;
  std::set<AffineWeight, AffineWeightLess> seen = {lambda};
  std::deque<AffineWeight> frontier = {lambda};
  while (!frontier.empty()) {
    AffineWeight mu = frontier.front();
    frontier.pop_front();
    for (const AffineWeight& s : sys.simples) {
      AffineWeight nu = mu - s;
      if (QLess{}(nu.dlt, floor)) continue;
      if (affine_norm2(sys.gram, nu + sys.rho) > bound) continue;
      if (seen.insert(nu).second) frontier.push_back(nu);
    }
  }
  return seen;
}

void require_dominant_integrable(const CharSystem& sys, const AffineWeight& lambda) {
  for (const AffineWeight& s : sys.simples) {
    Q p = affine_pair_coroot(sys.gram, lambda, s);
    if (p < 0 || !is_integer(p))
      throw invalid_input("highest weight must be dominant integral for the system");
  }
}

long to_long_exact(const Q& q, const char* what) {
  if (!is_integer(q)) throw internal_error(std::string("non-integer ") + what);
  if (!q.get_num().fits_slong_p()) throw internal_error(std::string("overflow in ") + what);
  return q.get_num().get_si();
}

}  // namespace

GradedCharacter freudenthal_character(const CharSystem& sys, const AffineWeight& lambda,
                                      const Q& cutoff) {
  GradedCharacter out;
  out.level = lambda.level;
  out.top_dlt = lambda.dlt;
  out.floor_dlt = lambda.dlt - cutoff;
  if (sys.simples.empty()) {
    out.insert(lambda, 1);
    return out;
  }
  require_dominant_integrable(sys, lambda);
  const AffineWeight x = lambda + sys.rho;
  const Q bound = affine_norm2(sys.gram, x);
  auto cands = weight_candidates(sys, lambda, cutoff);
  auto roots = positive_roots_in_band(sys, cutoff);

  // Order: descending delta-degree, then descending rho pairing, so that
  // every mu + k alpha with alpha positive is computed before mu.
  std::vector<AffineWeight> order(cands.begin(), cands.end());
  std::sort(order.begin(), order.end(), [&](const AffineWeight& a, const AffineWeight& b) {
    if (a.dlt != b.dlt) return QLess{}(b.dlt, a.dlt);
    Q pa = affine_pair(sys.gram, sys.rho, a);
    Q pb = affine_pair(sys.gram, sys.rho, b);
    if (pa != pb) return QLess{}(pb, pa);
    return AffineWeightLess{}(a, b);
  });

  std::map<AffineWeight, long, AffineWeightLess> mult;
  for (const AffineWeight& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Q denom = bound - affine_norm2(sys.gram, mu + sys.rho);
    if (denom == 0) {
      // Norm-sphere candidates other than lambda itself are never weights:
      // a dominant weight strictly below lambda lies strictly inside the
      // sphere, and the dominant representative maximizes the shifted norm
      // over each linear orbit.
      mult[mu] = 0;
      continue;
    }
    Q sum = 0;
    for (const auto& [alpha, malpha] : roots) {
      for (long k = 1;; ++k) {
        AffineWeight y = mu + Q(k) * alpha;
        if (QLess{}(lambda.dlt, y.dlt)) break;
        if (affine_norm2(sys.gram, y + sys.rho) > bound) break;
        auto it = mult.find(y);
        long my = it == mult.end() ? 0 : it->second;
        if (my != 0) sum += Q(malpha) * Q(my) * affine_pair(sys.gram, y, alpha);
      }
    }
    long m = to_long_exact(2 * sum / denom, "multiplicity");
    if (m < 0) throw internal_error("negative multiplicity in recursion");
    mult[mu] = m;
  }
  for (const auto& [mu, m] : mult) out.insert(mu, m);
  return out;
}

namespace {

struct PartitionKey {
  std::size_t index;
  AffineWeight nu;
};
struct PartitionKeyLess {
  bool operator()(const PartitionKey& a, const PartitionKey& b) const {
    if (a.index != b.index) return a.index < b.index;
    return AffineWeightLess{}(a.nu, b.nu);
  }
};

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  if (!r.fits_slong_p()) throw internal_error("overflow in binomial");
  return r.get_si();
}

struct PartitionCounter {
  const CharSystem& sys;
  std::vector<std::pair<AffineWeight, long>> roots;
  std::map<PartitionKey, long, PartitionKeyLess> memo;

  long count(std::size_t i, const AffineWeight& nu) {
    if (nu.dlt < 0) return 0;
    Q pr = affine_pair(sys.gram, sys.rho, nu);
    if (pr < 0) return 0;
    if (is_zero(nu.fin) && nu.dlt == 0) return 1;
    if (i == roots.size()) return 0;
    PartitionKey key{i, nu};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const auto& [alpha, m] = roots[i];
    long total = 0;
    AffineWeight rem = nu;
    for (long k = 0;; ++k) {
      if (rem.dlt < 0) break;
      if (affine_pair(sys.gram, sys.rho, rem) < 0) break;
      total += binom(k + m - 1, m - 1) * count(i + 1, rem);
      rem = rem - alpha;
    }
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

GradedCharacter weyl_kac_character(const CharSystem& sys, const AffineWeight& lambda,
                                   const Q& cutoff) {
  GradedCharacter out;
  out.level = lambda.level;
  out.top_dlt = lambda.dlt;
  out.floor_dlt = lambda.dlt - cutoff;
  if (sys.simples.empty()) {
    out.insert(lambda, 1);
    return out;
  }
  require_dominant_integrable(sys, lambda);
  const AffineWeight x = lambda + sys.rho;
  auto points = signed_orbit_points(sys, x, out.floor_dlt);
  PartitionCounter pc{sys, positive_roots_in_band(sys, cutoff), {}};
  for (const AffineWeight& mu : weight_candidates(sys, lambda, cutoff)) {
    long m = 0;
    for (const auto& [p, sign] : points) {
      AffineWeight nu = p - sys.rho - mu;
      if (nu.dlt < 0) continue;
      m += sign * pc.count(0, nu);
    }
    if (m < 0) throw internal_error("negative multiplicity from the alternating sum");
    out.insert(mu, m);
  }
  return out;
}

GradedCharacter denominator_series(const CharSystem& sys, const Q& cutoff) {
  const std::size_t dim = sys.rho.fin.size();
  GradedCharacter acc = char_monomial({Q(0), QVec(dim, Q(0)), Q(0)}, -cutoff);
  for (const auto& [alpha, m] : positive_roots_in_band(sys, cutoff)) {
    GradedCharacter factor;
    factor.level = 0;
    factor.top_dlt = 0;
    factor.floor_dlt = -cutoff;
    factor.insert({Q(0), QVec(dim, Q(0)), Q(0)}, 1);
    factor.insert({Q(0), Q(-1) * alpha.fin, -alpha.dlt}, -1);
    for (long p = 0; p < m; ++p) acc = char_product(acc, factor);
  }
  return acc;
}

GradedCharacter heisenberg_character(const std::vector<Q>& line_classes, std::size_t fin_dim,
                                     const Q& cutoff) {
  const AffineWeight one{Q(0), QVec(fin_dim, Q(0)), Q(0)};
  GradedCharacter acc = char_monomial(one, -cutoff);
  for (const Q& cls : line_classes) {
    Q c = mod1(cls);
    for (Q j = (c == 0 ? Q(1) : c); j <= cutoff; j += 1) {
      GradedCharacter factor;
      factor.level = 0;
      factor.top_dlt = 0;
      factor.floor_dlt = -cutoff;
      for (Q d = 0; d <= cutoff; d += j) factor.insert({Q(0), QVec(fin_dim, Q(0)), -d}, 1);
      acc = char_product(acc, factor);
    }
  }
  return acc;
}

}  // namespace liedirac
