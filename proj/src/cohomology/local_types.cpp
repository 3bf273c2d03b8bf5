#include "parahoric/cohomology.hpp"

#include <numeric>

namespace parahoric {

LiftProvider base_point_lifts(const RootDatum& d, const GammaAction& action, const RationalVector& base) {
  if (!action.matrix.is_identity()) throw InvalidInput("base-point lifts are only defined for a trivial lattice action");
  if (base.size() != d.rank) throw InvalidInput("base point has wrong dimension");
  const Rational e(static_cast<long>(action.order));
  RationalVector mu(d.rank);
  for (std::size_t i = 0; i < d.rank; ++i) mu[i] = base[i] * e;
  for (const auto& v : d.simple_root_values(mu))
    if (v.get_den() != 1)
      throw InvalidInput("base point is not on the 1/" + std::to_string(action.order) + " grid of root values");
  return [mu, e](const WeylElement& w) {
    const IntMatrix inv = integer_inverse(w.matrix);
    const RationalVector moved = inv.apply(mu);
    RationalVector t(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const Rational diff = moved[i] - mu[i];
      if (diff.get_den() != 1) throw ConsistencyError("w^-1 mu - mu is not a coroot-lattice vector");
      t[i] = diff / e;
    }
    return qz_from_rationals(t);
  };
}

std::vector<WeylElement> fixed_weyl_generators(const RootDatum& d, const GammaAction& action, std::size_t cap) {
  if (action.matrix.is_identity()) {
    std::vector<WeylElement> gens;
    for (std::size_t i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
    return gens;
  }
  return generating_subset(fixed_weyl_subgroup(d, LatticeAutomorphism{action.matrix, action.order}, cap));
}

std::vector<LocalType> twisted_orbits(const ElementModel& model, const std::vector<TwistedGenerator>& generators,
                                      kernels::Policy policy) {
  const std::int64_t L = model.modulus();
  std::vector<kernels::AffineMap> maps;
  for (const auto& g : generators)
    maps.push_back(kernels::AffineMap{kernels::to_residue_matrix(g.matrix, L), kernels::to_residues(g.twist, L)});

  const auto& points = model.points();
  const auto& cls = model.class_of_point();
  const std::size_t n = points.size();
  const auto images = kernels::apply_maps(points, maps, policy);

  std::vector<std::size_t> parent(model.class_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t g = 0; g < maps.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = images[g * n + i];
      if (j == kernels::kNotFound) throw ConsistencyError("twisted Weyl action leaves the kernel of the norm");
      std::size_t a = root(cls[i]), b = root(cls[j]);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      parent[a] = b;
    }

  std::vector<LocalType> types;
  std::vector<std::size_t> slot(model.class_count(), kernels::kNotFound);
  for (std::size_t c = 0; c < model.class_count(); ++c) {
    const std::size_t r = root(c);
    if (slot[r] == kernels::kNotFound) {
      slot[r] = types.size();
      types.push_back(LocalType{model.representative(r), 0, types.size()});
    }
    types[slot[r]].orbit_size += 1;
  }
  if (!qz_is_zero(types.front().representative)) throw ConsistencyError("neutral type is not first");
  return types;
}

std::vector<LocalType> local_types(const RootDatum& d, const GammaAction& action, const LiftProvider* lifts,
                                   std::size_t cap, kernels::Policy policy) {
  validate_action(d, action);
  if (!lifts && action.mode != ActionMode::Trivial)
    throw InvalidInput("no Weyl-group lifts are available for a " + to_string(action.mode) + " action");

  std::vector<TwistedGenerator> gens;
  std::vector<Integer> dens{Integer(action.order)};
  for (const auto& w : fixed_weyl_generators(d, action, cap)) {
    QZVector twist = lifts ? (*lifts)(w) : qz_zero(d.rank);
    dens.push_back(common_denominator(twist));
    gens.push_back(TwistedGenerator{integer_inverse(w.matrix), std::move(twist)});
  }
  const std::int64_t L = kernels::checked_modulus(lcm_of(dens));
  const ElementModel model(lattice_torus(action), L, cap, policy);
  const Integer expected = h1_structural(d, action).order();
  if (expected != static_cast<unsigned long>(model.class_count()))
    throw ConsistencyError("H^1 models disagree: structural order " + expected.get_str() + ", element count " +
                           std::to_string(model.class_count()));
  return twisted_orbits(model, gens, policy);
}

}  // namespace parahoric
