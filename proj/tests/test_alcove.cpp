#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "parahoric/alcove.hpp"

#include <random>

using namespace parahoric;

namespace {

AlcovePoint by_values(const RootDatum& d, std::initializer_list<Rational> values) {
  return point_from_root_values(d, RationalVector(values));
}

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalVector random_point(std::mt19937_64& rng, std::size_t rank) {
  RationalVector x(rank);
  for (auto& c : x) {
    const long den = 1 + static_cast<long>(rng() % 12);
    c = Rational(static_cast<long>(rng() % (8 * den)) - 4 * den, den);
    c.canonicalize();
  }
  return x;
}

}  // namespace

TEST_CASE("root values and the fundamental alcove") {
  const RootDatum a2 = build_root_datum("A2");
  const AlcovePoint bary = by_values(a2, {Rational(1, 3), Rational(1, 3)});
  CHECK(theta_value(a2, bary) == Rational(2, 3));
  CHECK(in_fundamental_alcove(a2, bary));
  CHECK(root_values(a2, bary) == RationalVector{Rational(1, 3), Rational(1, 3)});
  CHECK_FALSE(in_fundamental_alcove(a2, by_values(a2, {Rational(2, 3), Rational(2, 3)})));
  CHECK_THROWS_AS(point_from_root_values(a2, {Rational(1)}), InvalidInput);
}

TEST_CASE("alcove reduction examples") {
  const RootDatum a1 = build_root_datum("A1");
  const AlcoveReduction r = reduce_to_alcove(a1, by_values(a1, {Rational(7, 3)}));
  CHECK(root_values(a1, r.point) == RationalVector{Rational(1, 3)});
  const AlcovePoint inside = by_values(a1, {Rational(1, 2)});
  CHECK(reduce_to_alcove(a1, inside).point == inside);
  CHECK(reduce_to_alcove(a1, inside).word.empty());

  const RootDatum a2 = build_root_datum("A2");
  const AlcoveReduction z = reduce_to_alcove(a2, AlcovePoint{{Rational(1), Rational(0)}});
  CHECK(z.point == AlcovePoint{RationalVector(2)});
  // Replaying the word reproduces the reduced point.
  AlcovePoint x{{Rational(5, 4), Rational(-7, 3)}};
  const AlcoveReduction rr = reduce_to_alcove(a2, x);
  for (std::size_t node : rr.word) x = affine_reflection(a2, x, node);
  CHECK(x == rr.point);
}

TEST_CASE("affine reflections are involutions fixing their walls") {
  std::mt19937_64 rng(19);
  for (const auto& label : {"A2", "B2", "C3", "G2", "F4"}) {
    const RootDatum d = build_root_datum(label);
    for (int trial = 0; trial < 20; ++trial) {
      const AlcovePoint x{random_point(rng, d.rank)};
      for (std::size_t node = 0; node <= d.rank; ++node) {
        const AlcovePoint y = affine_reflection(d, x, node);
        CHECK(affine_reflection(d, y, node) == x);
        const Rational before = node == 0 ? theta_value(d, x) - 1 : root_values(d, x)[node - 1];
        const Rational after = node == 0 ? theta_value(d, y) - 1 : root_values(d, y)[node - 1];
        CHECK(after == -before);
      }
    }
  }
}

TEST_CASE("reduction agrees with a search over W and translations") {
  std::mt19937_64 rng(29);
  for (const auto& label : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootDatum d = build_root_datum(label);
    for (int trial = 0; trial < 25; ++trial) {
      const AlcovePoint x{random_point(rng, d.rank)};
      CHECK(reduce_to_alcove(d, x).point.coords == oracle::alcove_by_search(d, x.coords));
    }
  }
}

TEST_CASE("facets") {
  const RootDatum a1 = build_root_datum("A1");
  FacetDescriptor f = facet_of(a1, by_values(a1, {Rational(0)}));
  CHECK(f.walls == std::vector<std::size_t>{1});
  CHECK(f.kind == FacetKind::Vertex);
  CHECK(f.special);
  f = facet_of(a1, by_values(a1, {Rational(1)}));
  CHECK(f.walls == std::vector<std::size_t>{0});
  CHECK(describe(f) == "vertex {0}, hyperspecial");
  f = facet_of(a1, by_values(a1, {Rational(1, 3)}));
  CHECK(f.walls.empty());
  CHECK(f.kind == FacetKind::Iwahori);
  CHECK_FALSE(f.special);
  CHECK(describe(f) == "Iwahori");

  const RootDatum g2 = build_root_datum("G2");
  // Vertices of the G2 alcove: only the origin is special.
  CHECK(facet_of(g2, by_values(g2, {Rational(0), Rational(0)})).special);
  CHECK_FALSE(facet_of(g2, by_values(g2, {Rational(1, 3), Rational(0)})).special);
  CHECK(facet_of(g2, by_values(g2, {Rational(1, 3), Rational(0)})).kind == FacetKind::Vertex);
  CHECK(describe(facet_of(g2, by_values(g2, {Rational(0), Rational(1, 4)}))) == "facet {1}");
  CHECK_THROWS_AS(facet_of(a1, by_values(a1, {Rational(3, 2)})), InvalidInput);
}

TEST_CASE("split degrees") {
  const RootDatum a1 = build_root_datum("A1");
  CHECK(min_split_degree(a1, by_values(a1, {Rational(2)}), 0).degree == 1);
  for (long n = 1; n <= 9; ++n) CHECK(min_split_degree(a1, by_values(a1, {Rational(1, n)}), 0).degree == n);
  const SplitDegree s2 = min_split_degree(a1, by_values(a1, {Rational(1, 3)}), 2);
  CHECK(s2.degree == 3);
  CHECK(s2.tame);
  CHECK_FALSE(min_split_degree(a1, by_values(a1, {Rational(1, 3)}), 3).tame);
  const RootDatum a2 = build_root_datum("A2");
  CHECK(min_split_degree(a2, by_values(a2, {Rational(1, 3), Rational(1, 3)}), 0).degree == 3);
}

TEST_CASE("twisted facets for SL2") {
  const RootDatum a1 = build_root_datum("A1");
  const AlcovePoint base = by_values(a1, {Rational(1, 5)});
  CHECK(type_to_alcove(a1, qz_zero(1), 5, base).point == base);
  for (long n = 3; n <= 11; n += 2) {
    const AlcovePoint b = by_values(a1, {Rational(1, n)});
    const TwistedFacet t = type_to_alcove(a1, {RationalModZ((n - 1) / 2, n)}, static_cast<unsigned>(n), b);
    CHECK(root_values(a1, t.point) == RationalVector{Rational(1)});
    CHECK(describe(t.facet) == "vertex {0}, hyperspecial");
  }
  for (long n = 4; n <= 9; ++n) {
    const TwistedFacet t = type_to_alcove(a1, {RationalModZ(1, n)}, static_cast<unsigned>(n), by_values(a1, {Rational(1, n)}));
    CHECK(root_values(a1, t.point) == RationalVector{q(3, n)});
    CHECK(t.facet.kind == FacetKind::Iwahori);
  }
  CHECK_THROWS_AS(type_to_alcove(a1, {RationalModZ(1, 3)}, 4, base), InvalidInput);
}

TEST_CASE("apartment orbit types") {
  const RootDatum a1 = build_root_datum("A1");
  for (long n = 1; n <= 12; ++n) {
    const auto pts = apartment_orbit_types(a1, by_values(a1, {Rational(1, n)}), static_cast<unsigned>(n));
    REQUIRE(pts.size() == static_cast<std::size_t>((n + 1) / 2));
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(root_values(a1, pts[i]) == RationalVector{q(static_cast<long>(2 * i + 1), n)});
  }
  const RootDatum a2 = build_root_datum("A2");
  CHECK(apartment_orbit_types(a2, AlcovePoint{RationalVector(2)}, 2).size() == 2);
  CHECK(apartment_orbit_types(a2, by_values(a2, {Rational(1, 7), Rational(2, 7)}), 1).size() == 1);

  for (const auto& label : {"A1", "A2", "B2", "G2"}) {
    const RootDatum d = build_root_datum(label);
    for (unsigned e = 1; e <= 4; ++e) {
      const AlcovePoint a{RationalVector(d.rank, Rational(1, 2 * e))};
      const auto pts = apartment_orbit_types(d, a, e);
      CHECK(pts == apartment_orbit_types(d, a, e, kDefaultCap, kernels::Policy::Serial));
      std::set<RationalVector> expected;
      oracle::for_each_point(d.rank, e, [&](const oracle::Vec& nu) {
        RationalVector x = a.coords;
        for (std::size_t i = 0; i < d.rank; ++i) {
          x[i] += Rational(nu[i], e);
          x[i].canonicalize();
        }
        expected.insert(oracle::alcove_by_search(d, x));
      });
      std::set<RationalVector> got;
      for (const auto& p : pts) got.insert(p.coords);
      CHECK(got == expected);
    }
  }
  CHECK_THROWS_AS(apartment_orbit_types(build_root_datum("A3"), AlcovePoint{RationalVector(3)}, 12, 1000), CapExceeded);
}

TEST_CASE("vertex prime data") {
  const auto e8 = vertex_prime_data(CartanType{'E', 8});
  CHECK(e8.mark_primes == std::vector<long>{2, 3, 5});
  CHECK(e8.excluded_characteristics == std::vector<long>{2, 3, 5});
  CHECK_FALSE(e8.affine_aut_order.has_value());
  const auto f4 = vertex_prime_data(CartanType{'F', 4});
  CHECK(f4.mark_primes == std::vector<long>{2, 3});
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto a = vertex_prime_data(CartanType{'A', n});
    CHECK(a.mark_primes.empty());
    std::set<long> expected{2};
    for (long p : oracle::primes_of(static_cast<long>(n) + 1)) expected.insert(p);
    CHECK(a.excluded_characteristics == std::vector<long>(expected.begin(), expected.end()));
  }
  // Affine diagram symmetries of type A against a search over node permutations.
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto a = vertex_prime_data(CartanType{'A', n});
    REQUIRE(a.affine_aut_order.has_value());
    CHECK(*a.affine_aut_order == static_cast<unsigned long>(oracle::affine_automorphisms(build_root_datum(CartanType{'A', n}))));
  }
  CHECK(*vertex_prime_data(CartanType{'A', 5}, true).affine_aut_order == 2);
  CHECK(*vertex_prime_data(CartanType{'A', 4}, true).affine_aut_order == 1);
  CHECK_THROWS_AS(vertex_prime_data(CartanType{'B', 3}, true), InvalidInput);
}
