#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "parahoric/cohomology.hpp"

#include <random>

using namespace parahoric;

namespace {

const std::vector<std::string> kSmallLabels{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};

GammaAction flip_action(const RootDatum& d, unsigned e = 2) {
  std::vector<int> perm(d.rank);
  for (std::size_t i = 0; i < d.rank; ++i) perm[i] = static_cast<int>(d.rank - i);
  return GammaAction::lattice(diagram_automorphism(d, perm), e);
}

}  // namespace

TEST_CASE("action validation") {
  const RootDatum a3 = build_root_datum("A3");
  CHECK_NOTHROW(validate_action(a3, GammaAction::trivial(a3, 4)));
  CHECK_THROWS_AS(validate_action(a3, flip_action(a3, 3)), InvalidInput);
  CHECK_THROWS_AS(validate_action(a3, GammaAction::trivial(a3, 6, 3)), InvalidInput);
  CHECK_NOTHROW(validate_action(a3, GammaAction::trivial(a3, 6, 5)));
  GammaAction bad = flip_action(a3);
  bad.mode = ActionMode::Trivial;
  CHECK_THROWS_AS(validate_action(a3, bad), InvalidInput);
  CHECK_THROWS_AS(h1_structural(a3, bad), InvalidInput);
  CHECK_FALSE(gamma0_convention(5).empty());
}

TEST_CASE("trivial action gives (Z/e)^r") {
  for (const auto& label : kSmallLabels) {
    const RootDatum d = build_root_datum(label);
    for (unsigned e = 1; e <= 4; ++e) {
      CAPTURE(label);
      CAPTURE(e);
      const FiniteAbelianGroup g = h1_structural(d, GammaAction::trivial(d, e));
      CHECK(g.invariant_factors == std::vector<Integer>(e == 1 ? 0 : d.rank, Integer(e)));
    }
  }
}

TEST_CASE("norm matrix") {
  const IntMatrix a = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(norm_matrix(a, 2) == IntMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(norm_matrix(IntMatrix::identity(2), 3) == IntMatrix::from_rows({{3, 0}, {0, 3}}));
}

TEST_CASE("outer involution of A2 and A3") {
  const RootDatum a2 = build_root_datum("A2"), a3 = build_root_datum("A3");
  CHECK(h1_structural(a2, flip_action(a2)).is_trivial());
  const H1Classes one = h1_elements(a2, flip_action(a2));
  CHECK(one.representatives.size() == 1);

  const FiniteAbelianGroup g = h1_structural(a3, flip_action(a3));
  CHECK(g.invariant_factors == std::vector<Integer>{2});
  const H1Classes two = h1_elements(a3, flip_action(a3));
  REQUIRE(two.representatives.size() == 2);
  CHECK(qz_is_zero(two.representatives[0]));
  // On the diagonal torus z_1 z_2 is the second partial sum, i.e. the second coroot coordinate.
  CHECK(two.representatives[1][1] == RationalModZ(1, 2));
}

TEST_CASE("element model classes") {
  const RootDatum a1 = build_root_datum("A1");
  const H1Classes h = h1_elements(a1, GammaAction::trivial(a1, 3));
  CHECK(h.representatives == std::vector<QZVector>{{RationalModZ()}, {RationalModZ(1, 3)}, {RationalModZ(2, 3)}});

  const RootDatum a3 = build_root_datum("A3");
  const GammaAction flip = flip_action(a3);
  const ElementModel model(lattice_torus(flip), 4, kDefaultCap, kernels::Policy::Parallel);
  CHECK(model.class_count() == 2);
  const QZVector quarter{RationalModZ(1, 4), RationalModZ(), RationalModZ(3, 4)};
  CHECK(model.is_norm_killed(quarter));
  CHECK(model.class_of(quarter) == 0);
  CHECK(classes_equal(quarter, qz_zero(3), flip));
  CHECK_THROWS_AS(model.class_of({RationalModZ(1, 4), RationalModZ(), RationalModZ()}), InvalidInput);
  for (std::size_t i = 0; i < model.points().size(); ++i) {
    const QZVector t = kernels::from_residues(model.points().point(i), model.modulus());
    CHECK(model.class_of(t) == model.class_of_point()[i]);
    CHECK(classes_equal(t, model.representative(model.class_of_point()[i]), flip));
  }
}

TEST_CASE("classes_equal") {
  const RootDatum a1 = build_root_datum("A1");
  const QZVector half{RationalModZ(1, 2)};
  CHECK(classes_equal(half, half, GammaAction::trivial(a1, 2)));
  CHECK_FALSE(classes_equal(half, qz_zero(1), GammaAction::trivial(a1, 2)));

  // H^1 vanishes for the outer involution of A2, so every norm-killed element is a coboundary.
  const RootDatum a2 = build_root_datum("A2");
  const GammaAction flip = flip_action(a2);
  const IntMatrix n = norm_matrix(flip.matrix, 2);
  std::size_t killed = 0;
  oracle::for_each_point(2, 6, [&](const oracle::Vec& x) {
    const QZVector t{RationalModZ(x[0], 6), RationalModZ(x[1], 6)};
    if (!qz_is_zero(apply_qz(n, t))) return;
    ++killed;
    CHECK(classes_equal(t, qz_zero(2), flip));
  });
  CHECK(killed == 6);
}

TEST_CASE("cocycle tables") {
  const RootDatum a1 = build_root_datum("A1");
  const auto zero = cocycle_of(qz_zero(1), GammaAction::trivial(a1, 4));
  CHECK(zero == std::vector<QZVector>(4, qz_zero(1)));
  const auto half = cocycle_of({RationalModZ(1, 2)}, GammaAction::trivial(a1, 2));
  CHECK(half == std::vector<QZVector>{{RationalModZ()}, {RationalModZ(1, 2)}});
  const auto third = cocycle_of({RationalModZ(1, 3)}, GammaAction::trivial(a1, 3));
  CHECK(third[2] == QZVector{RationalModZ(2, 3)});
  CHECK_THROWS_AS(cocycle_of({RationalModZ(1, 4)}, GammaAction::trivial(a1, 2)), InvalidInput);
}

TEST_CASE("structural and element models agree with a brute-force count") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const RootDatum d = build_root_datum(kSmallLabels[rng() % kSmallLabels.size()]);
    const auto elements = weyl_group_elements(d);
    const WeylElement& w = elements[rng() % elements.size()];
    const auto order = matrix_order(w.matrix);
    REQUIRE(order);
    if (*order > 4) continue;
    const unsigned e = *order * (1 + static_cast<unsigned>(rng() % (4 / *order)));
    const GammaAction action = GammaAction::lattice(LatticeAutomorphism{w.matrix, *order}, e);
    CAPTURE(d.type.label());
    CAPTURE(e);
    const FiniteAbelianGroup g = h1_structural(d, action);
    const H1Classes h = h1_elements(d, action);
    CHECK(g.order() == static_cast<unsigned long>(h.representatives.size()));
    CHECK(h.representatives.size() == oracle::h1_order_bruteforce(oracle::to_mat(w.matrix), e));
    for (std::size_t i = 0; i < h.representatives.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(classes_equal(h.representatives[i], h.representatives[j], action));
  }
}

TEST_CASE("local types for the trivial action match Burnside") {
  const RootDatum a1 = build_root_datum("A1");
  for (unsigned n = 1; n <= 12; ++n) {
    const GammaAction action = GammaAction::trivial(a1, n);
    const RationalVector base{Rational(1, 2 * n)};  // <alpha, a> = 1/n
    const LiftProvider lifts = base_point_lifts(a1, action, base);
    CHECK(local_types(a1, action, &lifts).size() == (n + 1) / 2);
    CHECK(local_types(a1, action, nullptr).size() == n / 2 + 1);
    CHECK(local_types(a1, action, nullptr).size() == oracle::burnside_types(a1, n, {0}));
  }
  const RootDatum a2 = build_root_datum("A2");
  CHECK(local_types(a2, GammaAction::trivial(a2, 2), nullptr).size() == 2);

  std::mt19937_64 rng(7);
  for (const auto& label : {"A2", "B2", "G2", "A3", "C3"}) {
    const RootDatum d = build_root_datum(label);
    for (unsigned e = 1; e <= 4; ++e) {
      RationalVector values(d.rank);
      for (auto& v : values) v = Rational(static_cast<long>(rng() % (2 * e + 1)) - static_cast<long>(e), e);
      const auto inv = rational_inverse(d.cartan);
      RationalVector base(d.rank);
      for (std::size_t i = 0; i < d.rank; ++i) {
        base[i] = 0;
        for (std::size_t j = 0; j < d.rank; ++j) base[i] += inv[i][j] * values[j];
        base[i].canonicalize();
      }
      const GammaAction action = GammaAction::trivial(d, e);
      const LiftProvider lifts = base_point_lifts(d, action, base);
      const auto types = local_types(d, action, &lifts);
      CAPTURE(label);
      CAPTURE(e);
      CHECK(types.size() == oracle::burnside_types(d, e, base));
      CHECK(types == local_types(d, action, &lifts, kDefaultCap, kernels::Policy::Serial));
      std::size_t classes = 0;
      for (const auto& t : types) classes += t.orbit_size;
      std::size_t expected = 1;
      for (std::size_t i = 0; i < d.rank; ++i) expected *= e;
      CHECK(classes == expected);
    }
  }
}

TEST_CASE("local types need lifts outside the trivial mode") {
  const RootDatum a3 = build_root_datum("A3");
  CHECK_THROWS_AS(local_types(a3, flip_action(a3), nullptr), InvalidInput);
  const RootDatum a1 = build_root_datum("A1");
  CHECK_THROWS_AS(base_point_lifts(a1, GammaAction::trivial(a1, 3), {Rational(1, 4)}), InvalidInput);
  CHECK(fixed_weyl_generators(a3, GammaAction::trivial(a3, 2), kDefaultCap).size() == 3);
}
