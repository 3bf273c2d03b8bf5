#include "parahoric/rootdata.hpp"

#include <algorithm>
#include <map>

namespace parahoric {

bool qz_less(const QZVector& a, const QZVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Orbit> orbit_partition(const std::vector<QZVector>& points, const std::vector<TwistedGenerator>& generators,
                                   kernels::Policy policy) {
  if (points.empty()) return {};
  const std::size_t dim = points.front().size();
  if (dim == 0) throw InvalidInput("orbit_partition: zero-dimensional points");
  std::vector<Integer> dens;
  for (const auto& p : points) {
    if (p.size() != dim) throw InvalidInput("orbit_partition: points of different dimensions");
    dens.push_back(common_denominator(p));
  }
  for (const auto& g : generators) {
    if (g.matrix.rows() != dim || g.matrix.cols() != dim || g.twist.size() != dim)
      throw InvalidInput("orbit_partition: generator has wrong size");
    dens.push_back(common_denominator(g.twist));
  }
  const std::int64_t L = kernels::checked_modulus(lcm_of(dens));

  std::vector<std::int64_t> flat;
  flat.reserve(points.size() * dim);
  for (const auto& p : points) {
    auto x = kernels::to_residues(p, L);
    flat.insert(flat.end(), x.begin(), x.end());
  }
  const kernels::PointTable table(dim, L, std::move(flat));

  std::vector<kernels::AffineMap> maps;
  for (const auto& g : generators)
    maps.push_back(kernels::AffineMap{kernels::to_residue_matrix(g.matrix, L), kernels::to_residues(g.twist, L)});

  const auto labels = kernels::orbit_labels(table, maps, policy);
  std::map<std::size_t, std::size_t> slot;
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto [it, fresh] = slot.emplace(labels[i], orbits.size());
    if (fresh) orbits.push_back(Orbit{kernels::from_residues(table.point(labels[i]), L), {}});
    orbits[it->second].members.push_back(kernels::from_residues(table.point(i), L));
  }
  // Labels are the least index of each orbit, and the table is sorted, so
  // orbits already come out ordered by representative.
  return orbits;
}

}  // namespace parahoric
