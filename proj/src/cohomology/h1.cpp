#include "parahoric/cohomology.hpp"

#include <set>

namespace parahoric {
namespace {

IntMatrix minus_identity(const IntMatrix& a) { return a - IntMatrix::identity(a.rows()); }

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

// X_*^Gamma = ker(A - 1) with basis K (columns), and N X_* written in that basis.
struct FixedLattice {
  std::vector<IntVector> basis;
  std::vector<IntVector> norm_image;  // coordinates of N e_j in the basis
};

FixedLattice fixed_lattice(const IntMatrix& a, unsigned e) {
  FixedLattice f;
  f.basis = kernel_basis(minus_identity(a));
  if (f.basis.empty()) return f;
  const IntMatrix k = IntMatrix::from_columns(a.rows(), f.basis);
  const IntMatrix n = norm_matrix(a, e);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto c = solve_integer(k, n.column(j));
    if (!c) throw ConsistencyError("norm image is not contained in the fixed lattice");
    f.norm_image.push_back(std::move(*c));
  }
  return f;
}

}  // namespace

std::string to_string(ActionMode mode) {
  switch (mode) {
    case ActionMode::Trivial: return "trivial";
    case ActionMode::Lattice: return "lattice";
    case ActionMode::SlMatrix: return "sl-matrix";
  }
  return "?";
}

GammaAction GammaAction::trivial(const RootDatum& d, unsigned e, long characteristic) {
  return GammaAction{ActionMode::Trivial, e, IntMatrix::identity(d.rank), characteristic};
}

GammaAction GammaAction::lattice(const LatticeAutomorphism& a, unsigned e, long characteristic) {
  return GammaAction{a.matrix.is_identity() ? ActionMode::Trivial : ActionMode::Lattice, e, a.matrix, characteristic};
}

void validate_action(const RootDatum& d, const GammaAction& action) {
  if (action.order < 1) throw InvalidInput("order of Gamma must be positive");
  if (action.matrix.rows() != d.rank || !action.matrix.is_square())
    throw InvalidInput("action matrix must be " + std::to_string(d.rank) + " x " + std::to_string(d.rank));
  if (!matrix_power(action.matrix, action.order).is_identity())
    throw InvalidInput("action does not satisfy A^e = 1 for e = " + std::to_string(action.order));
  if (action.mode == ActionMode::Trivial && !action.matrix.is_identity())
    throw InvalidInput("trivial mode requires the identity matrix");
  if (action.characteristic < 0) throw InvalidInput("characteristic must be 0 or a prime");
  if (action.characteristic > 1 && action.order % action.characteristic == 0)
    throw InvalidInput("order " + std::to_string(action.order) + " is divisible by the characteristic " +
                       std::to_string(action.characteristic) + " (not tame)");
}

std::string gamma0_convention(unsigned e) {
  return "gamma_0 acts through the fixed primitive root of unity zeta_" + std::to_string(e);
}

IntMatrix norm_matrix(const IntMatrix& a, unsigned e) {
  IntMatrix n(a.rows(), a.cols());
  IntMatrix p = IntMatrix::identity(a.rows());
  for (unsigned i = 0; i < e; ++i) {
    n = n + p;
    p = p * a;
  }
  return n;
}

TorusModel lattice_torus(const GammaAction& action) { return TorusModel{action.matrix, action.order, std::nullopt}; }

FiniteAbelianGroup h1_structural(const RootDatum& d, const GammaAction& action) {
  validate_action(d, action);
  const FixedLattice f = fixed_lattice(action.matrix, action.order);
  if (f.basis.empty()) return FiniteAbelianGroup{};
  const FiniteAbelianGroup g = quotient_structure(f.basis.size(), f.norm_image);
  if (!g.is_finite()) throw ConsistencyError("X^Gamma / N X is infinite");
  return g;
}

StructuralH1 structural_h1(const IntMatrix& a, unsigned e) {
  StructuralH1 out;
  const FixedLattice f = fixed_lattice(a, e);
  if (f.basis.empty()) {
    out.coset_representatives.push_back(IntVector(a.rows(), 0));
    return out;
  }
  const std::size_t s = f.basis.size();
  out.structure = quotient_structure(s, f.norm_image);
  if (!out.structure.is_finite()) throw ConsistencyError("X^Gamma / N X is infinite");

  // Z^s / span(C) = (+) Z/d_i through y -> U y, so U^-1 applied to the box of d_i gives coset representatives.
  const SmithForm snf = smith_normal_form(IntMatrix::from_columns(s, f.norm_image));
  const IntMatrix k = IntMatrix::from_columns(a.rows(), f.basis);
  std::vector<Integer> box(s);
  for (std::size_t i = 0; i < s; ++i) box[i] = snf.diagonal(i);
  IntVector digits(s, 0);
  for (;;) {
    out.coset_representatives.push_back(k.apply(snf.U_inv.apply(digits)));
    std::size_t i = 0;
    for (; i < s; ++i) {
      digits[i] += 1;
      if (digits[i] < box[i]) break;
      digits[i] = 0;
    }
    if (i == s) break;
  }
  return out;
}

ElementModel::ElementModel(const TorusModel& model, std::int64_t modulus, std::size_t cap, kernels::Policy policy)
    : model_(model), norm_(norm_matrix(model.action, model.order)), modulus_(modulus), points_(model.dim(), modulus) {
  const std::size_t n = model.dim();
  if (modulus % model.order != 0) throw InvalidInput("element model modulus must be a multiple of e");

  const IntMatrix filter = model.constraints ? stack(norm_, *model.constraints) : norm_;
  points_ = kernels::enumerate_kernel(kernels::to_residue_matrix(filter, modulus), n, cap, policy);

  const IntMatrix coboundary = model.constraints ? stack(minus_identity(model.action), *model.constraints)
                                                 : minus_identity(model.action);
  const SmithForm snf = smith_normal_form(coboundary);
  const std::size_t key_len = coboundary.rows() - snf.rank;
  has_key_ = key_len > 0;
  std::vector<std::int64_t> keys;
  if (has_key_) {
    key_rows_ = IntMatrix(key_len, n);
    for (std::size_t i = 0; i < key_len; ++i)
      for (std::size_t j = 0; j < n; ++j) key_rows_(i, j) = snf.U(snf.rank + i, j);
    keys = kernels::apply_rows(kernels::to_residue_matrix(key_rows_, modulus), points_, policy);
  }

  class_of_point_.resize(points_.size());
  for (std::size_t p = 0; p < points_.size(); ++p) {
    std::vector<std::int64_t> key;
    if (has_key_) key.assign(keys.begin() + static_cast<std::ptrdiff_t>(p * key_len),
                             keys.begin() + static_cast<std::ptrdiff_t>((p + 1) * key_len));
    auto [it, fresh] = class_by_key_.emplace(std::move(key), class_rep_.size());
    if (fresh) class_rep_.push_back(p);
    class_of_point_[p] = it->second;
  }
}

QZVector ElementModel::representative(std::size_t cls) const {
  return kernels::from_residues(points_.point(class_rep_.at(cls)), modulus_);
}

bool ElementModel::is_norm_killed(const QZVector& t) const {
  if (t.size() != model_.dim()) throw InvalidInput("torus element has wrong dimension");
  if (!qz_is_zero(apply_qz(norm_, t))) return false;
  return !model_.constraints || qz_is_zero(apply_qz(*model_.constraints, t));
}

std::size_t ElementModel::class_of(const QZVector& t) const {
  if (!is_norm_killed(t)) throw InvalidInput("element " + to_string(t) + " is not killed by the norm");
  std::vector<std::int64_t> key;
  if (has_key_) key = kernels::to_residues(apply_qz(key_rows_, t), modulus_);
  const auto it = class_by_key_.find(key);
  if (it == class_by_key_.end()) throw ConsistencyError("class of " + to_string(t) + " has no enumerated member");
  return it->second;
}

H1Classes h1_elements(const RootDatum& d, const GammaAction& action, std::size_t cap, kernels::Policy policy) {
  validate_action(d, action);
  const ElementModel model(lattice_torus(action), static_cast<std::int64_t>(action.order), cap, policy);
  const Integer h_struct = h1_structural(d, action).order();
  const std::size_t h_elem = model.class_count();
  if (h_struct != static_cast<unsigned long>(h_elem))
    throw ConsistencyError("H^1 models disagree: structural order " + h_struct.get_str() + ", element count " +
                           std::to_string(h_elem));
  const StructuralH1 structural = structural_h1(action.matrix, action.order);
  std::set<std::size_t> hit;
  const Integer e(action.order);
  for (const auto& lambda : structural.coset_representatives) {
    QZVector t(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) t[i] = RationalModZ(lambda[i], e);
    hit.insert(model.class_of(t));
  }
  if (hit.size() != h_elem)
    throw ConsistencyError("structural representatives reach " + std::to_string(hit.size()) + " of " +
                           std::to_string(h_elem) + " classes");

  H1Classes out;
  out.structure = structural.structure;
  for (std::size_t c = 0; c < model.class_count(); ++c) out.representatives.push_back(model.representative(c));
  out.gamma0_choice = gamma0_convention(action.order);
  return out;
}

bool classes_equal(const QZVector& t1, const QZVector& t2, const GammaAction& action) {
  const IntMatrix n = norm_matrix(action.matrix, action.order);
  if (!qz_is_zero(apply_qz(n, t1)) || !qz_is_zero(apply_qz(n, t2)))
    throw InvalidInput("classes_equal: inputs must be killed by the norm");
  return solve_mod_z(minus_identity(action.matrix), t1 - t2).has_value();
}

std::vector<QZVector> cocycle_of(const QZVector& rep, const GammaAction& action) {
  if (rep.size() != action.matrix.rows()) throw InvalidInput("cocycle_of: dimension mismatch");
  if (!qz_is_zero(apply_qz(norm_matrix(action.matrix, action.order), rep)))
    throw InvalidInput("cocycle_of: " + to_string(rep) + " is not killed by the norm");
  std::vector<QZVector> table;
  QZVector acc = qz_zero(rep.size());
  QZVector term = rep;
  for (unsigned i = 0; i < action.order; ++i) {
    table.push_back(acc);
    acc = acc + term;
    term = apply_qz(action.matrix, term);
  }
  return table;
}

}  // namespace parahoric
