// Affine Weyl elements, inversion sets, restricted systems and coset
// machinery.  Closed-form expectations were computed by hand on rank-1 and
// rank-2 data and frozen; structural identities (lengths versus inversion
// counts, the rho-difference sum) are checked across whole balls.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedirac/errors.hpp"
#include "liedirac/weyl.hpp"

using namespace liedirac;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Q(x));
  return v;
}

QVec qv2(std::initializer_list<std::pair<long, long>> xs) {
  QVec v;
  for (auto [n, d] : xs) v.push_back(Q(n, d));
  return v;
}

TwistedAffineDatum datum(const std::string& type, std::vector<std::size_t> perm,
                         const QVec& h_evals) {
  auto rs = build_root_system({parse_simple_type(type)});
  auto fd = fold_data(rs, make_diagram_aut(rs, std::move(perm)));
  return build_twisted_datum(fd, h_evals);
}

TwistedAffineDatum swap_datum() {
  auto rs = build_root_system({parse_simple_type("A1"), parse_simple_type("A1")});
  auto fd = fold_data(rs, make_diagram_aut(rs, {1, 0}));
  return build_twisted_datum(fd, qv({0, 0}));
}

// Root data of the diagonal rank-1 subalgebra of the swap datum, pushed into
// ambient coordinates: its root is the common restriction gamma = (1/2, 1/2)
// of the two summand roots, of squared length 1, and its shifted Weyl vector
// solves the simple-root normalization at level 1.
SubsystemData diagonal_sub() {
  SubsystemData S;
  QVec gamma = qv2({{1, 2}, {1, 2}});
  S.simples.push_back({Q(0), -gamma, Q(1)});
  S.simples.push_back({Q(0), gamma, Q(0)});
  S.rho = {Q(1), Q(1, 2) * gamma, Q(0)};
  WeightTable t;
  t[gamma] = 1;
  t[-gamma] = 1;
  t[qv({0, 0})] = 1;
  S.classes[Q(0)] = t;
  return S;
}

}  // namespace

TEST_CASE("translations compose and act by the closed formula") {
  auto D = datum("A1", {0}, qv({0}));
  auto ta = translation_elt(D, qv({1}));
  auto tb = translation_elt(D, qv({2}));
  CHECK(aw_equal(aw_compose(ta, tb), translation_elt(D, qv({3}))));
  CHECK(aw_equal(aw_compose(ta, aw_inverse(ta)), aw_identity(1)));

  AffineWeight lambda0{Q(1), qv({0}), Q(0)};
  AffineWeight img = aw_apply(D.gram(), ta, lambda0);
  CHECK(img.level == Q(1));
  CHECK(img.fin == qv({1}));
  CHECK(img.dlt == Q(-1));  // minus half the squared length of the shift

  // Folded datum: the translation span is the fixed line, so a vector with
  // unequal coordinates is rejected.
  CHECK_THROWS_AS(translation_elt(datum("A2", {1, 0}, qv({0, 0})), qv({1, 0})),
                  invalid_input);
}

TEST_CASE("reflections negate their root and preserve the form") {
  auto D = datum("A2", {0, 1}, qv({0, 0}));
  for (std::size_t k = 0; k < D.simple_roots.size(); ++k) {
    auto s = simple_reflection(D, k);
    AffineWeight img = aw_apply(D.gram(), s, D.simple_roots[k]);
    CHECK(img == -D.simple_roots[k]);
    CHECK(aw_equal(aw_compose(s, s), aw_identity(2)));
  }
  // isometry on a few fixed rational weights
  auto w = aw_compose(simple_reflection(D, 0), simple_reflection(D, 2));
  for (const AffineWeight x :
       {AffineWeight{Q(2), qv2({{1, 3}, {5, 7}}), Q(-1)},
        AffineWeight{Q(1, 2), qv2({{-2, 5}, {3, 4}}), Q(9)}}) {
    AffineWeight y = aw_apply(D.gram(), w, x);
    CHECK(D.norm2(y) == D.norm2(x));
    CHECK(y.level == x.level);
  }
}

TEST_CASE("rank-1 ball sizes and inversion sets") {
  auto D = datum("A1", {0}, qv({0}));
  auto ball = affine_weyl_ball(D, 4);
  std::map<long, int> per_length;
  for (const auto& w : ball) per_length[w.length]++;
  CHECK(per_length[0] == 1);
  CHECK(per_length[1] == 2);
  CHECK(per_length[2] == 2);
  CHECK(per_length[3] == 2);
  CHECK(per_length[4] == 2);

  for (const auto& w : ball) {
    auto inv = inversion_set(D, w);
    CHECK(static_cast<long>(inv.size()) == w.length);
    AffineWeight sum = D.zero_weight();
    for (const auto& r : inv) sum = sum + r;
    AffineWeight diff = D.rho_hat - aw_apply(D.gram(), w, D.rho_hat);
    CHECK(sum == diff);
  }

  // Length-3 elements against exhaustive reduced words.
  auto n1 = inversion_set_from_word(D, {0, 1, 0});
  auto n2 = inversion_set_from_word(D, {1, 0, 1});
  CHECK(n1.size() == 3);
  CHECK(n2.size() == 3);
  auto s0 = simple_reflection(D, 0);
  auto s1 = simple_reflection(D, 1);
  auto w010 = aw_compose(aw_compose(s0, s1), s0);
  CHECK(inversion_set(D, w010) == n1);
  CHECK_THROWS_AS(inversion_set_from_word(D, {0, 0}), internal_error);
}

TEST_CASE("twisted rank-1 inversion sets carry fractional exponents") {
  auto D = datum("A2", {1, 0}, qv({0, 0}));
  auto ball = affine_weyl_ball(D, 4);
  for (const auto& w : ball) {
    auto inv = inversion_set(D, w);
    CHECK(static_cast<long>(inv.size()) == w.length);
    AffineWeight sum = D.zero_weight();
    for (const auto& r : inv) sum = sum + r;
    CHECK(sum == D.rho_hat - aw_apply(D.gram(), w, D.rho_hat));
  }
  // the affine wall reflection inverts exactly its own simple root, whose
  // finite part is the negated doubled weight -2 gamma
  auto inv = inversion_set(D, simple_reflection(D, 0));
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].dlt == Q(1, 2));
  CHECK(inv[0].fin == qv({-1, -1}));
}

TEST_CASE("identity restriction reproduces the ambient system") {
  auto D = datum("A1", {0}, qv({0}));
  auto R = restricted_system(D, QMat::identity(1));
  CHECK(R.order == 1);
  CHECK(R.orbits.size() == 2);
  CHECK(R.basis.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(R.orbit_root[i] == D.simple_roots[i]);

  // positive restricted roots match the datum's positive real roots
  for (const auto& r : D.real_roots_in_band(Q(0), Q(2))) {
    if (D.is_positive_root(r)) {
      CHECK(R.positive_restricted_root(r));
      CHECK_FALSE(R.positive_restricted_root(-r));
    }
  }
  CHECK_FALSE(R.positive_restricted_root({Q(0), qv({0}), Q(1)}));  // isotropic

  auto pos = R.enumerate_positive(4);
  for (const auto& b : pos) CHECK(D.root_multiplicity(b.dlt, b.fin) == 1);
}

TEST_CASE("restriction map validation") {
  auto D = datum("A1", {0}, qv({0}));
  QMat bad(1, 1);
  bad.at(0, 0) = Q(2);
  CHECK_THROWS_AS(restricted_system(D, bad), invalid_input);
}

TEST_CASE("swap pair: restricted system and subgroup membership") {
  auto D = swap_datum();
  QMat mu(2, 2);
  mu.at(0, 1) = mu.at(1, 0) = Q(1);
  auto R = restricted_system(D, mu);
  CHECK(R.order == 2);
  CHECK(R.orbits.size() == 2);  // both simples are fixed by the swap
  CHECK(R.basis.size() == 2);
  CHECK(R.orbit_root[0] == D.simple_roots[0]);
  CHECK(R.orbit_root[1] == D.simple_roots[1]);

  auto S = diagonal_sub();
  const QMat& G = D.gram();
  QVec gamma = qv2({{1, 2}, {1, 2}});

  // The diagonal Weyl group contains its finite reflection and the coroot
  // translation, but not the halved translation or the ambient wall element.
  auto s_fin = reflection_elt(G, {Q(0), gamma, Q(0)});
  auto s_aff = reflection_elt(G, {Q(0), -gamma, Q(1)});
  auto t_two = aw_compose(s_aff, s_fin);
  CHECK(in_subgroup(G, S, s_fin));
  CHECK(in_subgroup(G, S, s_aff));
  CHECK(in_subgroup(G, S, t_two));
  CHECK(in_subgroup(G, S, aw_identity(2)));
  auto wall = simple_reflection(D, 0);  // t_gamma s_gamma
  CHECK_FALSE(in_subgroup(G, S, wall));
  auto t_one = translation_elt(D, gamma);
  CHECK_FALSE(in_subgroup(G, S, t_one));

  // primitive image of the doubled direction
  auto P = R.primitive({Q(0), Q(2) * gamma, Q(0)});
  REQUIRE(P.has_value());
  CHECK(*P == AffineWeight{Q(0), gamma, Q(0)});
  CHECK_FALSE(R.primitive({Q(0), qv({0, 0}), Q(3)}).has_value());
}

TEST_CASE("swap pair: minimal coset representatives") {
  auto D = swap_datum();
  QMat mu(2, 2);
  mu.at(0, 1) = mu.at(1, 0) = Q(1);
  auto R = restricted_system(D, mu);
  auto S = diagonal_sub();

  auto E = enumerate_commutant(D, R, D.rho_hat, Q(2));
  CHECK(E.elements.size() == 6);
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < E.elements.size(); ++i)
    if (minimal_coset_rep(D, R, S, E.words[i])) minimal.push_back(i);
  REQUIRE(minimal.size() == 2);
  CHECK(E.words[minimal[0]].empty());
  CHECK(E.words[minimal[1]] == std::vector<std::size_t>{0});
  // drops attached to the minimal elements: 0 and one half
  CHECK(E.drops[minimal[0]] == Q(0));
  CHECK(E.drops[minimal[1]] == Q(1, 2));
}

TEST_CASE("commutant enumeration matches the ball for trivial restriction") {
  auto D = datum("A1", {0}, qv({0}));
  auto R = restricted_system(D, QMat::identity(1));
  auto E = enumerate_commutant(D, R, D.rho_hat, Q(3));
  auto ball = affine_weyl_ball(D, 8);
  std::size_t expected = 0;
  for (const auto& w : ball) {
    Q drop = D.rho_hat.dlt - aw_apply(D.gram(), w, D.rho_hat).dlt;
    if (drop <= 3) ++expected;
  }
  CHECK(E.elements.size() == expected);
  for (std::size_t i = 0; i < E.elements.size(); ++i)
    CHECK(static_cast<long>(E.words[i].size()) == E.elements[i].length);
}

TEST_CASE("central cosets for the rank-1 Cartan subalgebra") {
  auto D = datum("A1", {0}, qv({0}));
  // Subalgebra with no roots: its Weyl group is trivial and the central
  // lattice is the full translation lattice.
  SubsystemData S;
  S.rho = {Q(1), qv({0}), Q(0)};
  S.center = {qv({1})};

  auto ball = affine_weyl_ball(D, 4);
  std::vector<AffWeylElt> elems(ball.begin(), ball.end());
  auto kept = center_coset_reps(D.gram(), S, elems);
  REQUIRE(kept.size() == 2);
  CHECK(aw_equal(elems[kept[0]], aw_identity(1)));
  CHECK(elems[kept[1]].mat.at(0, 0) == Q(-1));

  // sanity: without the central lattice every translation is a new coset
  SubsystemData S2;
  S2.rho = {Q(1), qv({0}), Q(0)};
  auto kept2 = center_coset_reps(D.gram(), S2, elems);
  CHECK(kept2.size() > 2);
}
