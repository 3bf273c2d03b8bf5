#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parahoric/exactalg.hpp"

#include <algorithm>
#include <random>

using namespace parahoric;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    total += (c % 2 ? -1 : 1) * m(0, c) * laplace_det(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("smith form of small examples") {
  const SmithForm id = smith_normal_form(IntMatrix::identity(2));
  CHECK(id.D == IntMatrix::identity(2));

  const SmithForm s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}));
  CHECK(s.D == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(s.U * IntMatrix::from_rows({{2, 4}, {6, 8}}) * s.V == s.D);

  const SmithForm z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.D.is_zero());
  CHECK(z.U.is_identity());
  CHECK(z.V.is_identity());
  CHECK(z.rank == 0);
}

TEST_CASE("smith form properties on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, rows, cols, 6);
    const SmithForm s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK((s.U * s.U_inv).is_identity());
    CHECK((s.V * s.V_inv).is_identity());
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) CHECK((i < s.rank) == (s.D(i, i) != 0));
    if (rows == cols) CHECK(abs(m.determinant()) == abs(s.D.determinant()));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    CHECK(m.determinant() == laplace_det(m));
  }
}

TEST_CASE("kernel basis") {
  auto k = kernel_basis(IntMatrix::from_rows({{1, -1}, {-1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntVector{1, 1});
  CHECK(kernel_basis(IntMatrix::identity(3)).empty());
  k = kernel_basis(IntMatrix::from_rows({{2, -2}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntVector{1, 1});

  // Saturation: any integer kernel vector of a random matrix is an integer combination of the basis.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 2, 3, 4);
    const auto basis = kernel_basis(m);
    for (const auto& v : basis) CHECK(qz_is_zero(qz_from_rationals(m.apply(RationalVector(v.begin(), v.end())))));
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c) {
          const IntVector v{a, b, c};
          const IntVector mv = m.apply(v);
          if (std::any_of(mv.begin(), mv.end(), [](const Integer& x) { return x != 0; })) continue;
          if (basis.empty())
            CHECK((a == 0 && b == 0 && c == 0));
          else
            CHECK(solve_integer(IntMatrix::from_columns(3, basis), v).has_value());
        }
  }
}

TEST_CASE("quotient structure") {
  std::vector<IntVector> gens{{2, 0}, {0, 4}};
  FiniteAbelianGroup g = quotient_structure(2, gens);
  CHECK(g.invariant_factors == std::vector<Integer>{2, 4});
  CHECK(g.free_rank == 0);
  for (long e = 1; e <= 6; ++e) {
    gens = {{e, 0}, {0, e}};
    g = quotient_structure(2, gens);
    CHECK(g.order() == e * e);
    CHECK(g.invariant_factors.size() == (e == 1 ? 0u : 2u));
  }
  g = quotient_structure(1, std::vector<IntVector>{});
  CHECK(g.free_rank == 1);
  CHECK_THROWS_AS(g.order(), Error);
  gens = {{2, 4}, {6, 8}};
  CHECK(quotient_structure(2, gens).order() == 8);
}

TEST_CASE("solve mod Z") {
  auto x = solve_mod_z(IntMatrix::from_rows({{-2}}), {RationalModZ(1, 2)});
  REQUIRE(x);
  CHECK((Integer(-2) * (*x)[0]) == RationalModZ(1, 2));
  const QZVector v{RationalModZ(1, 3), RationalModZ(5, 7)};
  x = solve_mod_z(IntMatrix::identity(2), v);
  REQUIRE(x);
  CHECK(*x == v);
  CHECK_FALSE(solve_mod_z(IntMatrix::from_rows({{0}}), {RationalModZ(1, 3)}).has_value());
}

TEST_CASE("solve mod Z against exhaustive search") {
  // Rank-one 2x2 matrices: (x1, x2) enters only through a x1 + b x2, so denominators 12 * gcd(a, b) suffice.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const long a = long(rng() % 5) - 2, b = long(rng() % 5) - 2, c = long(rng() % 3) + 1;
    const IntMatrix m = IntMatrix::from_rows({{a, b}, {c * a, c * b}});
    const QZVector v{RationalModZ(long(rng() % 12), 12), RationalModZ(long(rng() % 12), 12)};
    const auto x = solve_mod_z(m, v);
    if (x) {
      CHECK(apply_qz(m, *x) == v);
      continue;
    }
    const long K = 12 * 6;
    bool found = false;
    for (long p = 0; p < K && !found; ++p)
      for (long q = 0; q < K && !found; ++q) {
        const QZVector y{RationalModZ(p, K), RationalModZ(q, K)};
        found = apply_qz(m, y) == v;
      }
    CHECK_FALSE(found);
  }
}

TEST_CASE("integer inverse") {
  const IntMatrix u = IntMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK((u * integer_inverse(u)).is_identity());
  CHECK_THROWS_AS(integer_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), InvalidInput);
}

TEST_CASE("Q/Z arithmetic") {
  CHECK(RationalModZ(3, 2) == RationalModZ(1, 2));
  CHECK(RationalModZ(-1, 3) == RationalModZ(2, 3));
  CHECK(RationalModZ::parse("-1/4") == RationalModZ(3, 4));
  CHECK(RationalModZ::parse("2") == RationalModZ());
  CHECK(RationalModZ(1, 2).to_string() == "1/2");
  CHECK(RationalModZ().to_string() == "0/1");
  CHECK((RationalModZ(1, 2) + RationalModZ(1, 2)).is_zero());
  CHECK(Integer(3) * RationalModZ(1, 2) == RationalModZ(1, 2));
  CHECK(common_denominator({RationalModZ(1, 4), RationalModZ(1, 6)}) == 12);
  CHECK(common_denominator(qz_zero(3)) == 1);
  CHECK_THROWS_AS(RationalModZ::parse("x/2"), InvalidInput);
}

TEST_CASE("hermite basis is canonical") {
  std::vector<IntVector> a{{2, 4}, {0, 6}}, b{{2, -2}, {2, 4}, {4, 2}};
  CHECK(hermite_basis(a, 2) == hermite_basis(b, 2));
}

TEST_CASE("primes and lcm") {
  CHECK(prime_divisors(360) == std::vector<long>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
  const std::vector<Integer> v{4, 6, 10};
  CHECK(lcm_of(v) == 60);
}
