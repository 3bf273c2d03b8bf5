#include "parahoric/slmodel.hpp"

#include <algorithm>
#include <set>

namespace parahoric {
namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) c[j] = a[b[j]];
  return c;
}

void check_size(std::size_t n) {
  if (n < 2) throw InvalidInput("SL_n model needs n >= 2");
  if (n > 8) throw CapExceeded("SL_n model enumerates S_n and is limited to n <= 8");
}

// Order and lattice agreement of the n-coordinate model with the coroot-lattice computation.
FiniteAbelianGroup checked_structure(const InvolutionSpec& spec, const ElementModel& model) {
  const std::size_t n = spec.j.size();
  const RootDatum d = build_root_datum(CartanType{'A', n - 1});
  const GammaAction action{ActionMode::Lattice, 2, sl_induced_lattice_action(spec), 0};
  const FiniteAbelianGroup g = h1_structural(d, action);
  if (g.order() != static_cast<unsigned long>(model.class_count()))
    throw ConsistencyError("SL_" + std::to_string(n) + " torus H^1: diagonal model has " +
                           std::to_string(model.class_count()) + " classes, lattice model order " + g.order().get_str());
  return g;
}

}  // namespace

// gamma(diag(t)) = J^-1 diag(-t) J has entry -t_{pi(j)} at j, pi the permutation of J.
IntMatrix sl_torus_action(const InvolutionSpec& spec) {
  const std::size_t n = spec.j.size();
  IntMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) g(j, spec.j.perm[j]) = -1;
  return g;
}

TorusModel sl_torus_model(const InvolutionSpec& spec) {
  const std::size_t n = spec.j.size();
  IntMatrix ones(1, n);
  for (std::size_t j = 0; j < n; ++j) ones(0, j) = 1;
  return TorusModel{sl_torus_action(spec), 2, ones};
}

IntMatrix sl_coroot_basis(std::size_t n) {
  if (n < 2) throw InvalidInput("SL_n coroot basis needs n >= 2");
  IntMatrix b(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i + 1, i) = -1;
  }
  return b;
}

QZVector sl_to_coroot_coords(const QZVector& t) {
  QZVector c(t.size() - 1);
  RationalModZ acc;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    acc = acc + t[i];
    c[i] = acc;
  }
  if (!(acc + t.back()).is_zero()) throw InvalidInput("diagonal element " + to_string(t) + " is not in SL_n");
  return c;
}

QZVector sl_from_coroot_coords(const QZVector& c) {
  const std::size_t n = c.size() + 1;
  QZVector t(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalModZ v = i < c.size() ? c[i] : RationalModZ();
    if (i > 0) v = v - c[i - 1];
    t[i] = v;
  }
  return t;
}

IntMatrix sl_induced_lattice_action(const InvolutionSpec& spec) {
  const std::size_t n = spec.j.size();
  const IntMatrix b = sl_coroot_basis(n);
  const IntMatrix image = sl_torus_action(spec) * b;
  IntMatrix m(n - 1, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto c = solve_integer(b, image.column(i));
    if (!c) throw ConsistencyError("involution does not preserve the coroot lattice");
    for (std::size_t k = 0; k + 1 < n; ++k) m(k, i) = (*c)[k];
  }
  return m;
}

std::vector<std::size_t> sl_permutation_of(const WeylElement& w) {
  const std::size_t n = w.matrix.rows() + 1;
  const IntMatrix v = sl_coroot_basis(n) * w.matrix;
  Perm sigma(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      if (v(r, i) == 1) sigma[i] = r;
      if (v(r, i) == -1 && i + 2 == n) sigma[n - 1] = r;
    }
  MonomialMatrix check{sigma, qz_zero(n)};
  validate(check);
  return sigma;
}

H1Classes sl_torus_h1(std::size_t n, const InvolutionSpec& spec, std::size_t cap, kernels::Policy policy) {
  if (spec.j.size() != n) throw InvalidInput("involution has the wrong size");
  if (n < 2) throw InvalidInput("SL_n model needs n >= 2");
  const ElementModel model(sl_torus_model(spec), 2, cap, policy);
  H1Classes out;
  out.structure = checked_structure(spec, model);
  for (std::size_t c = 0; c < model.class_count(); ++c) out.representatives.push_back(model.representative(c));
  out.gamma0_choice = gamma0_convention(2);
  return out;
}

std::vector<std::vector<std::size_t>> fixed_permutations(std::size_t n, const InvolutionSpec& spec) {
  check_size(n);
  if (spec.j.size() != n) throw InvalidInput("involution has the wrong size");
  Perm sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = j;
  std::vector<Perm> out;
  do {
    if (involution_apply(weyl_lift(sigma), spec).perm == sigma) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<std::vector<std::size_t>> generating_permutations(const std::vector<std::vector<std::size_t>>& group) {
  if (group.empty()) return {};
  const std::size_t n = group.front().size();
  Perm id(n);
  for (std::size_t j = 0; j < n; ++j) id[j] = j;
  std::set<Perm> closure{id};
  std::vector<Perm> gens;
  for (const auto& g : group) {
    if (closure.count(g)) continue;
    gens.push_back(g);
    std::vector<Perm> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          Perm y = compose(x, s);
          if (closure.insert(y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
  }
  if (closure.size() != group.size()) throw InvalidInput("generating_permutations: input is not a group");
  return gens;
}

// w^-1 diag(t) w has entry t_{sigma(j)} at j.
TwistedGenerator sl_twisted_generator(const MonomialMatrix& w_lift, const InvolutionSpec& spec) {
  const std::size_t n = w_lift.size();
  IntMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(j, w_lift.perm[j]) = 1;
  return TwistedGenerator{std::move(p), t_w(w_lift, spec)};
}

std::vector<LocalType> sl_local_types(std::size_t n, const InvolutionSpec& spec, std::size_t cap,
                                      kernels::Policy policy) {
  std::vector<TwistedGenerator> gens;
  std::vector<Integer> dens{Integer(2)};
  for (const auto& sigma : generating_permutations(fixed_permutations(n, spec))) {
    gens.push_back(sl_twisted_generator(weyl_lift(sigma), spec));
    dens.push_back(common_denominator(gens.back().twist));
  }
  const ElementModel model(sl_torus_model(spec), kernels::checked_modulus(lcm_of(dens)), cap, policy);
  checked_structure(spec, model);
  return twisted_orbits(model, gens, policy);
}

LiftProvider sl_lift_provider(const InvolutionSpec& spec) {
  return [spec](const WeylElement& w) {
    const auto sigma = sl_permutation_of(w);
    if (sigma.size() != spec.j.size()) throw InvalidInput("Weyl element does not match the involution size");
    return sl_to_coroot_coords(t_w(weyl_lift(sigma), spec));
  };
}

SuCase parse_su_case(const std::string& name) {
  if (name == "odd-A") return SuCase::OddA;
  if (name == "odd-B") return SuCase::OddB;
  if (name == "even-m" || name == "even-Lambda-m") return SuCase::EvenLambdaM;
  if (name == "even-0" || name == "even-Lambda-0") return SuCase::EvenLambda0;
  throw InvalidInput("unknown unitary case '" + name + "' (expected odd-A, odd-B, even-m, even-0)");
}

std::string to_string(SuCase c) {
  switch (c) {
    case SuCase::OddA: return "odd-A";
    case SuCase::OddB: return "odd-B";
    case SuCase::EvenLambdaM: return "even-Lambda-m";
    case SuCase::EvenLambda0: return "even-Lambda-0";
  }
  return "?";
}

SuReport su_special_vertex_types(std::size_t n, SuCase c, std::size_t cap) {
  const bool odd_case = c == SuCase::OddA || c == SuCase::OddB;
  if (odd_case && (n % 2 == 0 || n < 3)) throw InvalidInput(to_string(c) + " needs odd n >= 3");
  if (!odd_case && (n % 2 == 1 || n < 4)) throw InvalidInput(to_string(c) + " needs even n >= 4");

  SuReport report;
  InvolutionKind kind = InvolutionKind::J;
  switch (c) {
    case SuCase::OddA:
      report.reduction = "stabilizer of Lambda'_0; hermitian form antidiag(1,...,1) gives J";
      break;
    case SuCase::OddB:
      kind = InvolutionKind::CaseB;
      report.reduction = "stabilizer of Lambda'_m; unit parts of the form in the basis pi^-1 f_1..pi^-1 f_m, f_m+1..f_n";
      break;
    case SuCase::EvenLambdaM:
      kind = InvolutionKind::JPrime;
      report.reduction = "stabilizer of Lambda'_m; involution J' = diag(-1,..,-1,1,..,1) J";
      break;
    case SuCase::EvenLambda0:
      report.reduction = "stabilizer of Lambda'_0; involution J";
      break;
  }
  const InvolutionSpec spec = make_involution(kind, n);
  report.involution = spec.name;
  report.torus_h1_order = sl_torus_h1(n, spec, cap).structure.order();
  report.types = sl_local_types(n, spec, cap).size();
  return report;
}

}  // namespace parahoric
