#pragma once

// Monomial matrices in SL_n(k) with torsion entries, written additively:
// column j has its single nonzero entry exp(2 pi i z_j) in row perm[j].
// This is enough to lift Weyl elements of SL_n, apply the outer involutions
// A -> J^-1 (A^t)^-1 J, and compute t_w = w^-1 gamma(w).

#include "parahoric/cohomology.hpp"

#include <string>
#include <vector>

namespace parahoric {

struct MonomialMatrix {
  std::vector<std::size_t> perm;  // 0-based, column j -> row perm[j]
  QZVector entries;

  std::size_t size() const { return perm.size(); }
  /// Sum of entries plus 1/2 for an odd permutation.
  RationalModZ det_value() const;
  bool is_diagonal() const;
  bool is_sl() const { return det_value().is_zero(); }

  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(const QZVector& t);
  static MonomialMatrix permutation(const std::vector<std::size_t>& perm);

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Checks that perm is a permutation and sizes agree. Throws InvalidInput.
void validate(const MonomialMatrix& m);
bool is_odd_permutation(const std::vector<std::size_t>& perm);

MonomialMatrix mm_mul(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix mm_inv(const MonomialMatrix& m);
MonomialMatrix mm_transpose(const MonomialMatrix& m);

enum class InvolutionKind { J, JPrime, CaseB };

struct InvolutionSpec {
  std::string name;
  MonomialMatrix j;
};

/// J = antidiag(1,...,1); J' = diag(-1 (m times), 1 (m times)) J for n = 2m;
/// case B: diag(-1 (m times), 1, 1 (m times)) J for n = 2m+1 (see docs/unitary-case-b.md).
InvolutionSpec make_involution(InvolutionKind kind, std::size_t n);
InvolutionKind parse_involution(const std::string& name);

/// J^-1 (M^t)^-1 J. Throws InvalidInput unless M is in SL_n.
MonomialMatrix involution_apply(const MonomialMatrix& m, const InvolutionSpec& spec);

/// Diagonal of w^-1 gamma(w). Throws ConsistencyError if the product is not diagonal.
QZVector t_w(const MonomialMatrix& w_lift, const InvolutionSpec& spec);

/// Permutation matrix of perm, made SL by putting -1 (additive 1/2) in the lowest
/// moved column when perm is odd. For the transposition of m, m+1 this is the
/// central block [[0, 1], [-1, 0]].
MonomialMatrix weyl_lift(const std::vector<std::size_t>& perm);

/// The linear action of gamma on the diagonal torus (Q/Z)^n.
IntMatrix sl_torus_action(const InvolutionSpec& spec);

/// (Q/Z)^n with the constraint sum = 0 and the action of gamma (order 2).
TorusModel sl_torus_model(const InvolutionSpec& spec);

/// Columns e_i - e_{i+1}: simple coroots of SL_n in the diagonal coordinates.
IntMatrix sl_coroot_basis(std::size_t n);
/// Diagonal coordinates (sum 0) to simple-coroot coordinates (partial sums).
QZVector sl_to_coroot_coords(const QZVector& t);
QZVector sl_from_coroot_coords(const QZVector& c);
/// The action on X_*(T) of A_{n-1} induced by gamma.
IntMatrix sl_induced_lattice_action(const InvolutionSpec& spec);
/// Permutation of {0..n-1} underlying a Weyl element of A_{n-1}.
std::vector<std::size_t> sl_permutation_of(const WeylElement& w);

/// H^1(Gamma, T) on diagonal coordinates, cross-checked against h1_structural
/// for the induced lattice action. Representatives are diagonal vectors.
H1Classes sl_torus_h1(std::size_t n, const InvolutionSpec& spec, std::size_t cap = kDefaultCap,
                      kernels::Policy policy = kernels::Policy::Parallel);

/// Permutations sigma whose lift satisfies gamma(w) in w T, i.e. W^gamma. n <= 8.
std::vector<std::vector<std::size_t>> fixed_permutations(std::size_t n, const InvolutionSpec& spec);
std::vector<std::vector<std::size_t>> generating_permutations(const std::vector<std::vector<std::size_t>>& group);

/// The twisted map t -> w^-1 t w + t_w on diagonal coordinates, for a lift of sigma.
TwistedGenerator sl_twisted_generator(const MonomialMatrix& w_lift, const InvolutionSpec& spec);

/// Local types H^1(Gamma, T)/W^gamma for SL_n with the given involution.
std::vector<LocalType> sl_local_types(std::size_t n, const InvolutionSpec& spec, std::size_t cap = kDefaultCap,
                                      kernels::Policy policy = kernels::Policy::Parallel);

/// Lift provider for local_types on A_{n-1} with the induced lattice action:
/// t_w from weyl_lift, converted to simple-coroot coordinates.
LiftProvider sl_lift_provider(const InvolutionSpec& spec);

enum class SuCase { OddA, OddB, EvenLambdaM, EvenLambda0 };

SuCase parse_su_case(const std::string& name);
std::string to_string(SuCase c);

struct SuReport {
  std::size_t types = 0;
  Integer torus_h1_order;
  std::string involution;
  std::string reduction;
};

/// Special-vertex types of the quasi-split unitary group, via the reduction of each case to an involution of SL_n.
SuReport su_special_vertex_types(std::size_t n, SuCase c, std::size_t cap = kDefaultCap);

}  // namespace parahoric
