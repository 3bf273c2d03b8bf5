#pragma once

// Root data of the simply connected simple groups, Bourbaki numbering.
//
// Coordinates: cocharacters X_*(T) are written in the basis of simple
// coroots, characters X^*(T) in the dual basis of fundamental weights.
// Roots themselves are usually handled through their coefficients on the
// simple roots; pairing() converts.

#include "parahoric/exactalg.hpp"
#include "parahoric/kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parahoric {

inline constexpr std::size_t kDefaultCap = 1'000'000;

struct CartanType {
  char family = 'A';
  std::size_t rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Accepts ("A", 3), ("A3", 0) or ("A3", 3). Throws InvalidInput on unsupported input.
CartanType parse_cartan_type(const std::string& label, std::size_t rank = 0);

struct WeylElement {
  IntMatrix matrix;       // acting on X_*(T)
  std::vector<int> word;  // simple reflections, 1-based, applied right to left
};

struct LatticeAutomorphism {
  IntMatrix matrix;
  unsigned order = 1;
};

class RootDatum {
 public:
  CartanType type;
  std::size_t rank = 0;
  /// cartan(i, j) = <alpha_i, alpha_j^vee>.
  IntMatrix cartan;
  /// Squared root lengths in a normalization where the Gram matrix is integral.
  std::vector<long> length2;
  /// Positive roots as coefficient vectors on the simple roots, sorted by height then lexicographically.
  std::vector<IntVector> positive_roots;
  /// positive_coroots[k] is the coroot of positive_roots[k], on the simple coroots.
  std::vector<IntVector> positive_coroots;
  IntVector highest_root;
  IntVector highest_coroot;
  IntVector marks;

  /// Simple root alpha_i (0-based) in fundamental-weight coordinates.
  IntVector simple_root_weights(std::size_t i) const { return cartan.row(i); }

  /// <root, x> for a root given on the simple roots and x on the simple coroots.
  Integer pairing(const IntVector& root, const IntVector& x) const;
  Rational pairing(const IntVector& root, const RationalVector& x) const;

  /// Values <alpha_i, x> for the simple roots.
  RationalVector simple_root_values(const RationalVector& x) const;
};

RootDatum build_root_datum(const CartanType& type);
RootDatum build_root_datum(const std::string& label, std::size_t rank = 0);

/// s_i(v) = v - <alpha_i, v> alpha_i^vee, i is 1-based.
WeylElement simple_reflection(const RootDatum& d, std::size_t i);

/// Order of a finite-order integer matrix, or nullopt if it exceeds max_order.
std::optional<unsigned> matrix_order(const IntMatrix& m, unsigned max_order = 720);

/// Every element of W, identity first, then in breadth-first order of word length.
/// Throws CapExceeded when |W| > cap.
std::vector<WeylElement> weyl_group_elements(const RootDatum& d, std::size_t cap = kDefaultCap);
std::size_t weyl_order(const RootDatum& d, std::size_t cap = kDefaultCap);

/// Induced automorphism of X_*(T) for a 1-based node permutation
/// (node i goes to node perm[i-1]). Throws InvalidInput if it is not a diagram symmetry.
LatticeAutomorphism diagram_automorphism(const RootDatum& d, const std::vector<int>& perm);

/// Elements w of W with A w A^-1 = w.
std::vector<WeylElement> fixed_weyl_subgroup(const RootDatum& d, const LatticeAutomorphism& a,
                                             std::size_t cap = kDefaultCap);

/// A small subset of `group` that generates it, chosen greedily in the given order.
/// `group` must be closed under multiplication.
std::vector<WeylElement> generating_subset(const std::vector<WeylElement>& group);

/// t -> matrix * t + twist on (Q/Z)^r.
struct TwistedGenerator {
  IntMatrix matrix;
  QZVector twist;
};

struct Orbit {
  QZVector representative;  // lexicographically least member
  std::vector<QZVector> members;

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Orbits of the group generated by `generators` on the finite set `points`.
/// Orbits are sorted by representative. Throws InvalidInput when some
/// generator maps a point outside the set.
std::vector<Orbit> orbit_partition(const std::vector<QZVector>& points, const std::vector<TwistedGenerator>& generators,
                                   kernels::Policy policy = kernels::Policy::Parallel);

/// Lexicographic order on Q/Z vectors by canonical values.
bool qz_less(const QZVector& a, const QZVector& b);

}  // namespace parahoric
