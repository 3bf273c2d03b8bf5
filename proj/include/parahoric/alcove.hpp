#pragma once

// One apartment of the split simply connected group: points are rational
// vectors in X_*(T) (x) Q, written on the simple coroots. The fundamental
// alcove is {<alpha_i, x> >= 0, <theta, x> <= 1}; node 0 is the wall <theta, x> = 1.

#include "parahoric/exactalg.hpp"
#include "parahoric/kernels.hpp"
#include "parahoric/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parahoric {

struct AlcovePoint {
  RationalVector coords;

  friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
};

/// The point with <alpha_i, x> = values[i].
AlcovePoint point_from_root_values(const RootDatum& d, const RationalVector& values);
RationalVector root_values(const RootDatum& d, const AlcovePoint& x);
Rational theta_value(const RootDatum& d, const AlcovePoint& x);
bool in_fundamental_alcove(const RootDatum& d, const AlcovePoint& x);

/// Reflection in the wall of affine node i (0 is the affine node).
AlcovePoint affine_reflection(const RootDatum& d, const AlcovePoint& x, std::size_t node);
AlcovePoint translate(const AlcovePoint& x, const IntVector& coroot_vector);

struct AlcoveReduction {
  AlcovePoint point;
  std::vector<std::size_t> word;  // affine nodes in the order they were applied
};

/// Reflects across the first violated wall until x lies in the closed fundamental alcove.
AlcoveReduction reduce_to_alcove(const RootDatum& d, const AlcovePoint& x);

enum class FacetKind { Vertex, Iwahori, Intermediate };

struct FacetDescriptor {
  std::vector<std::size_t> walls;  // sorted affine nodes whose wall contains the point
  FacetKind kind = FacetKind::Iwahori;
  bool special = false;  // every root takes an integral value; for split groups this is hyperspecial
};

FacetDescriptor facet_of(const RootDatum& d, const AlcovePoint& x0);
std::string to_string(FacetKind kind);
/// "vertex {0}, hyperspecial", "Iwahori", "facet {1,2}".
std::string describe(const FacetDescriptor& f);

struct SplitDegree {
  Integer degree;
  bool tame = true;
};

/// lcm of the denominators of <alpha, x> over positive roots, and whether the
/// characteristic (0 for none) is prime to it.
SplitDegree min_split_degree(const RootDatum& d, const AlcovePoint& x, long characteristic);

struct TwistedFacet {
  AlcovePoint point;
  FacetDescriptor facet;
};

/// Reduction of base + rep, where rep is lambda/e on the simple coroots (trivial action).
TwistedFacet type_to_alcove(const RootDatum& d, const QZVector& rep, unsigned e, const AlcovePoint& base);

/// Fundamental-alcove representatives of (W x (1/e)Q^vee) a modulo W_aff, sorted by root values.
/// Enumerates the e^rank translates a + nu/e and reduces each one.
std::vector<AlcovePoint> apartment_orbit_types(const RootDatum& d, const AlcovePoint& a, unsigned e,
                                               std::size_t cap = kDefaultCap,
                                               kernels::Policy policy = kernels::Policy::Parallel);

struct VertexPrimeData {
  std::string diagram;
  std::vector<long> mark_primes;
  std::optional<Integer> affine_aut_order;
  std::vector<long> excluded_characteristics;
};

/// `twisted` selects the twisted affine diagram 2A_n (type A only).
VertexPrimeData vertex_prime_data(const CartanType& type, bool twisted = false);

}  // namespace parahoric
