#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "parahoric/slmodel.hpp"

#include <random>

using namespace parahoric;

namespace {

MonomialMatrix random_monomial(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  QZVector z;
  for (std::size_t i = 0; i < n; ++i) z.emplace_back(static_cast<long>(rng() % 12), 12);
  return MonomialMatrix{p, z};
}

// Makes a monomial matrix SL by correcting its first entry.
MonomialMatrix to_sl(MonomialMatrix m) {
  m.entries[0] = m.entries[0] - m.det_value();
  return m;
}

QZVector qz(std::initializer_list<std::pair<long, long>> v) {
  QZVector out;
  for (auto [p, q] : v) out.emplace_back(p, q);
  return out;
}

// Orbits of W^gamma on H^1 computed from scratch on the diagonal torus T[L]:
// classes are norm-killed points modulo coboundaries (gamma - 1)s, s in T[2L] (e = 2).
std::size_t sl_types_bruteforce(std::size_t n, const InvolutionSpec& spec, long L) {
  const auto pi = spec.j.perm;
  auto gamma = [&](const oracle::Vec& t, long m) {
    oracle::Vec g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = oracle::mod(-t[pi[j]], m);
    return g;
  };
  auto sums_to_zero = [&](const oracle::Vec& t, long m) {
    long s = 0;
    for (long x : t) s += x;
    return oracle::mod(s, m) == 0;
  };
  std::vector<oracle::Vec> killed;
  oracle::for_each_point(n, L, [&](const oracle::Vec& t) {
    if (!sums_to_zero(t, L)) return;
    const oracle::Vec g = gamma(t, L);
    for (std::size_t j = 0; j < n; ++j)
      if (oracle::mod(t[j] + g[j], L) != 0) return;
    killed.push_back(t);
  });
  std::set<oracle::Vec> boundaries;
  oracle::for_each_point(n, 2 * L, [&](const oracle::Vec& s) {
    if (!sums_to_zero(s, 2 * L)) return;
    const oracle::Vec g = gamma(s, 2 * L);
    oracle::Vec b(n);
    for (std::size_t j = 0; j < n; ++j) {
      const long v = oracle::mod(g[j] - s[j], 2 * L);
      if (v % 2 != 0) return;
      b[j] = v / 2;
    }
    boundaries.insert(b);
  });
  auto class_key = [&](const oracle::Vec& t) {
    oracle::Vec best = t;
    for (const auto& b : boundaries) {
      oracle::Vec c(n);
      for (std::size_t j = 0; j < n; ++j) c[j] = oracle::mod(t[j] + b[j], L);
      best = std::min(best, c);
    }
    return best;
  };
  std::set<oracle::Vec> classes;
  for (const auto& t : killed) classes.insert(class_key(t));

  // Twisted Weyl action t -> sigma^-1 . t + t_w, with sigma running over W^gamma.
  std::vector<std::pair<std::vector<std::size_t>, oracle::Vec>> maps;
  for (const auto& sigma : fixed_permutations(n, spec)) {
    const QZVector tw = t_w(weyl_lift(sigma), spec);
    oracle::Vec shift(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = tw[j].value() * L;
      shift[j] = v.get_num().get_si();
    }
    maps.emplace_back(sigma, shift);
  }
  std::map<oracle::Vec, oracle::Vec> parent;
  for (const auto& c : classes) parent[c] = c;
  std::function<oracle::Vec(const oracle::Vec&)> find = [&](const oracle::Vec& c) {
    return parent[c] == c ? c : parent[c] = find(parent[c]);
  };
  for (const auto& c : classes)
    for (const auto& [sigma, shift] : maps) {
      oracle::Vec img(n);
      for (std::size_t j = 0; j < n; ++j) img[j] = oracle::mod(c[sigma[j]] + shift[j], L);
      const auto a = find(c), b = find(class_key(img));
      if (a != b) parent[a] = b;
    }
  std::set<oracle::Vec> roots;
  for (const auto& c : classes) roots.insert(find(c));
  return roots.size();
}

}  // namespace

TEST_CASE("monomial group laws") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const MonomialMatrix a = random_monomial(rng, n), b = random_monomial(rng, n), c = random_monomial(rng, n);
    CHECK(mm_mul(a, mm_inv(a)) == MonomialMatrix::identity(n));
    CHECK(mm_mul(mm_inv(a), a) == MonomialMatrix::identity(n));
    CHECK(mm_mul(mm_mul(a, b), c) == mm_mul(a, mm_mul(b, c)));
    CHECK(mm_transpose(mm_mul(a, b)) == mm_mul(mm_transpose(b), mm_transpose(a)));
    CHECK(mm_transpose(mm_transpose(a)) == a);
    CHECK(mm_mul(a, b).det_value() == a.det_value() + b.det_value());
  }
  const MonomialMatrix d = MonomialMatrix::diagonal(qz({{1, 3}, {1, 5}}));
  CHECK(mm_transpose(d) == d);
  const MonomialMatrix m{{1, 0}, qz({{1, 3}, {0, 1}})};
  const MonomialMatrix inv = mm_inv(m);
  CHECK(inv.perm == std::vector<std::size_t>{1, 0});
  CHECK(inv.entries == qz({{0, 1}, {2, 3}}));
  CHECK_THROWS_AS(validate(MonomialMatrix{{0, 0}, qz_zero(2)}), InvalidInput);
}

TEST_CASE("involutions") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<InvolutionKind> kinds{InvolutionKind::J};
    if (n % 2 == 0) kinds.push_back(InvolutionKind::JPrime);
    for (auto kind : kinds) {
      const InvolutionSpec spec = make_involution(kind, n);
      std::mt19937_64 rng(n);
      for (int trial = 0; trial < 30; ++trial) {
        const MonomialMatrix m = to_sl(random_monomial(rng, n));
        CHECK(involution_apply(involution_apply(m, spec), spec) == m);
        const MonomialMatrix m2 = to_sl(random_monomial(rng, n));
        CHECK(involution_apply(mm_mul(m, m2), spec) == mm_mul(involution_apply(m, spec), involution_apply(m2, spec)));
      }
    }
  }
  const InvolutionSpec j3 = make_involution(InvolutionKind::J, 3);
  const MonomialMatrix diag = MonomialMatrix::diagonal(qz({{1, 5}, {2, 5}, {2, 5}}));
  CHECK(involution_apply(diag, j3).entries == qz({{3, 5}, {3, 5}, {4, 5}}));
  CHECK(involution_apply(MonomialMatrix::identity(3), j3) == MonomialMatrix::identity(3));
  CHECK_THROWS_AS(involution_apply(MonomialMatrix::diagonal(qz({{1, 2}, {0, 1}, {0, 1}})), j3), InvalidInput);
  CHECK_THROWS_AS(make_involution(InvolutionKind::JPrime, 5), InvalidInput);
  CHECK_THROWS_AS(make_involution(InvolutionKind::CaseB, 4), InvalidInput);
  CHECK(parse_involution("J-prime") == InvolutionKind::JPrime);
  CHECK(parse_involution("case-B") == InvolutionKind::CaseB);
  CHECK_THROWS_AS(parse_involution("K"), InvalidInput);
}

TEST_CASE("t_w for the central block of SL4") {
  const MonomialMatrix w = weyl_lift({0, 2, 1, 3});
  CHECK(w.entries == qz({{0, 1}, {1, 2}, {0, 1}, {0, 1}}));
  CHECK(w.is_sl());
  const InvolutionSpec j = make_involution(InvolutionKind::J, 4), jp = make_involution(InvolutionKind::JPrime, 4);
  CHECK(t_w(w, j) == qz({{0, 1}, {1, 2}, {1, 2}, {0, 1}}));
  CHECK(involution_apply(w, jp) == w);
  CHECK(t_w(w, jp) == qz_zero(4));
  CHECK(t_w(MonomialMatrix::identity(4), j) == qz_zero(4));
  CHECK_THROWS_AS(t_w(weyl_lift({1, 0, 2, 3}), j), ConsistencyError);
}

TEST_CASE("torus cohomology of SL_n") {
  for (std::size_t n : {3, 5, 7}) CHECK(sl_torus_h1(n, make_involution(InvolutionKind::J, n)).structure.is_trivial());
  for (std::size_t n : {4, 6}) {
    for (auto kind : {InvolutionKind::J, InvolutionKind::JPrime}) {
      const H1Classes h = sl_torus_h1(n, make_involution(kind, n));
      CHECK(h.structure.order() == 2);
      REQUIRE(h.representatives.size() == 2);
      RationalModZ z;  // z_1 ... z_m detects the class
      for (std::size_t j = 0; j < n / 2; ++j) z = z + h.representatives[1][j];
      CHECK(z == RationalModZ(1, 2));
    }
  }
}

TEST_CASE("SL_n local types") {
  CHECK(sl_local_types(5, make_involution(InvolutionKind::J, 5)).size() == 1);
  CHECK(sl_local_types(4, make_involution(InvolutionKind::J, 4)).size() == 1);
  CHECK(sl_local_types(4, make_involution(InvolutionKind::JPrime, 4)).size() == 2);
  struct Case {
    std::size_t n;
    InvolutionKind kind;
  };
  for (const auto& c : {Case{2, InvolutionKind::J}, Case{3, InvolutionKind::J}, Case{4, InvolutionKind::J},
                        Case{4, InvolutionKind::JPrime}, Case{5, InvolutionKind::J}, Case{5, InvolutionKind::CaseB},
                        Case{6, InvolutionKind::JPrime}}) {
    CAPTURE(c.n);
    const InvolutionSpec spec = make_involution(c.kind, c.n);
    const auto types = sl_local_types(c.n, spec);
    CHECK(types.size() == sl_types_bruteforce(c.n, spec, 4));
    CHECK(types == sl_local_types(c.n, spec, kDefaultCap, kernels::Policy::Serial));
    // Lattice route: local_types on A_{n-1} with the induced action and the same lifts.
    const RootDatum d = build_root_datum(CartanType{'A', c.n - 1});
    const GammaAction action{ActionMode::SlMatrix, 2, sl_induced_lattice_action(spec), 0};
    const LiftProvider lifts = sl_lift_provider(spec);
    CHECK(local_types(d, action, &lifts).size() == types.size());
  }
  CHECK_THROWS_AS(fixed_permutations(9, make_involution(InvolutionKind::J, 9)), CapExceeded);
}

TEST_CASE("orbits do not depend on the chosen Weyl lift") {
  const std::size_t n = 4;
  const InvolutionSpec spec = make_involution(InvolutionKind::JPrime, n);
  const auto gens = generating_permutations(fixed_permutations(n, spec));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<TwistedGenerator> a, b;
    for (const auto& sigma : gens) {
      const MonomialMatrix w = weyl_lift(sigma);
      QZVector s;
      for (std::size_t j = 0; j + 1 < n; ++j) s.emplace_back(static_cast<long>(rng() % 4), 4);
      RationalModZ sum;
      for (const auto& x : s) sum = sum + x;
      s.push_back(-sum);
      a.push_back(sl_twisted_generator(w, spec));
      b.push_back(sl_twisted_generator(mm_mul(w, MonomialMatrix::diagonal(s)), spec));
    }
    const ElementModel model(sl_torus_model(spec), 8, kDefaultCap, kernels::Policy::Parallel);
    const auto ta = twisted_orbits(model, a, kernels::Policy::Parallel);
    const auto tb = twisted_orbits(model, b, kernels::Policy::Parallel);
    CHECK(ta == tb);
  }
}

TEST_CASE("coordinates") {
  const QZVector t = qz({{1, 3}, {1, 3}, {1, 3}});
  const QZVector c = sl_to_coroot_coords(t);
  CHECK(c == qz({{1, 3}, {2, 3}}));
  CHECK(sl_from_coroot_coords(c) == t);
  CHECK_THROWS_AS(sl_to_coroot_coords(qz({{1, 3}, {0, 1}})), InvalidInput);
  const RootDatum a3 = build_root_datum("A3");
  for (const auto& w : weyl_group_elements(a3)) {
    const auto sigma = sl_permutation_of(w);
    IntMatrix p(4, 4);
    for (std::size_t j = 0; j < 4; ++j) p(sigma[j], j) = 1;
    CHECK(p * sl_coroot_basis(4) == sl_coroot_basis(4) * w.matrix);
  }
  CHECK(sl_induced_lattice_action(make_involution(InvolutionKind::J, 4)) ==
        IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("special vertices of quasi-split unitary groups") {
  CHECK(su_special_vertex_types(5, SuCase::OddA).types == 1);
  CHECK(su_special_vertex_types(5, SuCase::OddB).types == 1);
  CHECK(su_special_vertex_types(4, SuCase::EvenLambdaM).types == 2);
  CHECK(su_special_vertex_types(4, SuCase::EvenLambda0).types == 1);
  CHECK(su_special_vertex_types(4, SuCase::EvenLambdaM).involution == "J'");
  CHECK_THROWS_AS(su_special_vertex_types(4, SuCase::OddA), InvalidInput);
  CHECK_THROWS_AS(su_special_vertex_types(5, SuCase::EvenLambda0), InvalidInput);
  CHECK(parse_su_case("even-m") == SuCase::EvenLambdaM);
  CHECK_THROWS_AS(parse_su_case("odd"), InvalidInput);
}
