#pragma once

// H^1 of a finite cyclic group Gamma = <gamma_0> of order e acting on the
// torsion of a torus T(k) = X_*(T) (x) k^x, and its quotient by W^Gamma.
//
// k^x torsion is modeled additively by Q/Z (so -1 is 1/2). For cyclic Gamma
// H^1(Gamma, T(k)) = ker(N) / (gamma_0 - 1) T(k) with N = 1 + A + ... + A^(e-1).
// Two independent computations are kept:
//   structural: X_*^Gamma / N X_*, via Smith forms, with lambda -> lambda/e;
//   element:    enumerate ker(N) on T[L] and sort points into classes by an
//               SNF-derived key of (A - 1).
// They must agree; a mismatch raises ConsistencyError.

#include "parahoric/exactalg.hpp"
#include "parahoric/kernels.hpp"
#include "parahoric/rootdata.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

enum class ActionMode { Trivial, Lattice, SlMatrix };

std::string to_string(ActionMode mode);

struct GammaAction {
  ActionMode mode = ActionMode::Trivial;
  unsigned order = 1;   // e
  IntMatrix matrix;     // A = action of gamma_0 on X_*(T)
  long characteristic = 0;  // residue characteristic p, 0 for none

  static GammaAction trivial(const RootDatum& d, unsigned e, long characteristic = 0);
  static GammaAction lattice(const LatticeAutomorphism& a, unsigned e, long characteristic = 0);
};

/// Checks A^e = I, sizes, and that p does not divide e. Throws InvalidInput.
void validate_action(const RootDatum& d, const GammaAction& action);

/// Recorded generator convention: gamma_0 acts through a fixed primitive e-th root of unity.
std::string gamma0_convention(unsigned e);

IntMatrix norm_matrix(const IntMatrix& a, unsigned e);

/// A torus given by coordinates on (Q/Z)^n cut out by constraints C t = 0
/// (no constraints for a cocharacter-lattice model), with a linear action.
struct TorusModel {
  IntMatrix action;
  unsigned order = 1;
  std::optional<IntMatrix> constraints;

  std::size_t dim() const { return action.rows(); }
};

TorusModel lattice_torus(const GammaAction& action);

struct H1Classes {
  FiniteAbelianGroup structure;
  /// One canonical (lexicographically least on T[e]) element per class, sorted; class 0 is neutral.
  std::vector<QZVector> representatives;
  std::string gamma0_choice;
};

/// Structure of X_*^Gamma / N X_*, together with lambda in X_*^Gamma running over coset representatives.
struct StructuralH1 {
  FiniteAbelianGroup structure;
  std::vector<IntVector> coset_representatives;
};

StructuralH1 structural_h1(const IntMatrix& a, unsigned e);

FiniteAbelianGroup h1_structural(const RootDatum& d, const GammaAction& action);

/// Enumerates norm-killed points of T[modulus] and sorts them into classes.
class ElementModel {
 public:
  ElementModel(const TorusModel& model, std::int64_t modulus, std::size_t cap, kernels::Policy policy);

  std::int64_t modulus() const { return modulus_; }
  const kernels::PointTable& points() const { return points_; }
  std::size_t class_count() const { return class_rep_.size(); }
  /// Class index of every enumerated point.
  const std::vector<std::size_t>& class_of_point() const { return class_of_point_; }
  /// Index (into points()) of the canonical element of each class.
  const std::vector<std::size_t>& class_representatives() const { return class_rep_; }
  QZVector representative(std::size_t cls) const;

  bool is_norm_killed(const QZVector& t) const;
  /// Class of an arbitrary norm-killed vector (any denominators). Throws InvalidInput otherwise.
  std::size_t class_of(const QZVector& t) const;

 private:
  TorusModel model_;
  IntMatrix norm_;
  IntMatrix key_rows_;  // rows of U beyond rank(A - 1) restricted to the torus coordinates; may be empty
  bool has_key_ = false;
  std::int64_t modulus_;
  kernels::PointTable points_;
  std::vector<std::size_t> class_of_point_;
  std::vector<std::size_t> class_rep_;
  std::map<std::vector<std::int64_t>, std::size_t> class_by_key_;
};

/// Element-model computation, cross-checked against structural_h1.
H1Classes h1_elements(const RootDatum& d, const GammaAction& action, std::size_t cap = kDefaultCap,
                      kernels::Policy policy = kernels::Policy::Parallel);

/// True iff t1 - t2 lies in (A - 1) T(k), decided with solve_mod_z.
bool classes_equal(const QZVector& t1, const QZVector& t2, const GammaAction& action);

/// Entry i is theta(gamma_0^i) = sum_{j<i} A^j rep, for i = 0..e-1.
std::vector<QZVector> cocycle_of(const QZVector& rep, const GammaAction& action);

struct LocalType {
  QZVector representative;
  std::size_t orbit_size = 0;  // number of H^1(Gamma, T) classes in the orbit
  std::size_t index = 0;

  friend bool operator==(const LocalType&, const LocalType&) = default;
};

/// t_w in T for a generator w of W^Gamma, in simple-coroot coordinates.
using LiftProvider = std::function<QZVector(const WeylElement&)>;

/// Lifts for trivial A attached to a base point a (simple-coroot coordinates) with
/// e<alpha_i, a> integral: t_w = (w^-1 mu - mu)/e with mu = e a, i.e. the action
/// t -> w^-1(t + a) - a. The zero base point gives t_w = 0.
LiftProvider base_point_lifts(const RootDatum& d, const GammaAction& action, const RationalVector& base);

/// Generators of W^Gamma: the simple reflections when A = 1, otherwise a generating
/// subset of the enumerated fixed subgroup.
std::vector<WeylElement> fixed_weyl_generators(const RootDatum& d, const GammaAction& action, std::size_t cap);

/// Orbits of W^Gamma on H^1(Gamma, T(k)) under [t] -> [w^-1 t + t_w]. A missing
/// provider is only accepted for the trivial action (t_w = 0).
std::vector<LocalType> local_types(const RootDatum& d, const GammaAction& action, const LiftProvider* lifts,
                                   std::size_t cap = kDefaultCap, kernels::Policy policy = kernels::Policy::Parallel);

/// Shared orbit step: classes of `model` under the affine maps t -> M_g t + s_g.
/// Images must stay norm-killed; otherwise ConsistencyError.
std::vector<LocalType> twisted_orbits(const ElementModel& model, const std::vector<TwistedGenerator>& generators,
                                      kernels::Policy policy);

}  // namespace parahoric
