#include "parahoric/slmodel.hpp"

namespace parahoric {

bool is_odd_permutation(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 1;
}

void validate(const MonomialMatrix& m) {
  if (m.perm.empty()) throw InvalidInput("monomial matrix of size 0");
  if (m.entries.size() != m.perm.size()) throw InvalidInput("monomial matrix: entry count differs from size");
  std::vector<bool> hit(m.perm.size(), false);
  for (std::size_t p : m.perm) {
    if (p >= m.perm.size() || hit[p]) throw InvalidInput("monomial matrix: not a permutation");
    hit[p] = true;
  }
}

RationalModZ MonomialMatrix::det_value() const {
  RationalModZ d;
  for (const auto& z : entries) d = d + z;
  if (is_odd_permutation(perm)) d = d + RationalModZ(1, 2);
  return d;
}

bool MonomialMatrix::is_diagonal() const {
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] != j) return false;
  return true;
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) { return diagonal(qz_zero(n)); }

MonomialMatrix MonomialMatrix::diagonal(const QZVector& t) {
  MonomialMatrix m;
  m.perm.resize(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) m.perm[j] = j;
  m.entries = t;
  validate(m);
  return m;
}

MonomialMatrix MonomialMatrix::permutation(const std::vector<std::size_t>& perm) {
  MonomialMatrix m{perm, qz_zero(perm.size())};
  validate(m);
  return m;
}

// (A B) e_j = A (b_j e_{s(j)}) = b_j a_{s(j)} e_{r(s(j))}.
MonomialMatrix mm_mul(const MonomialMatrix& a, const MonomialMatrix& b) {
  validate(a);
  validate(b);
  if (a.size() != b.size()) throw InvalidInput("mm_mul: size mismatch");
  MonomialMatrix c;
  c.perm.resize(a.size());
  c.entries.resize(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.entries[j] = b.entries[j] + a.entries[b.perm[j]];
  }
  return c;
}

// M e_j = z_j e_{s(j)}, so M^-1 e_{s(j)} = -z_j e_j.
MonomialMatrix mm_inv(const MonomialMatrix& m) {
  validate(m);
  MonomialMatrix r;
  r.perm.resize(m.size());
  r.entries.resize(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    r.perm[m.perm[j]] = j;
    r.entries[m.perm[j]] = -m.entries[j];
  }
  return r;
}

// Entry z_j at (s(j), j) moves to (j, s(j)).
MonomialMatrix mm_transpose(const MonomialMatrix& m) {
  validate(m);
  MonomialMatrix t;
  t.perm.resize(m.size());
  t.entries.resize(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    t.perm[m.perm[j]] = j;
    t.entries[m.perm[j]] = m.entries[j];
  }
  return t;
}

InvolutionSpec make_involution(InvolutionKind kind, std::size_t n) {
  if (n < 2) throw InvalidInput("involution needs n >= 2");
  std::vector<std::size_t> rev(n);
  for (std::size_t j = 0; j < n; ++j) rev[j] = n - 1 - j;
  MonomialMatrix j = MonomialMatrix::permutation(rev);
  const std::size_t m = n / 2;
  switch (kind) {
    case InvolutionKind::J:
      return InvolutionSpec{"J", j};
    case InvolutionKind::JPrime:
      if (n % 2 != 0) throw InvalidInput("J' is defined for even n");
      // diag(-1,..,-1,1,..,1) J: column c of J sits in row n-1-c, negated when that row is < m.
      for (std::size_t c = m; c < n; ++c) j.entries[c] = RationalModZ(1, 2);
      return InvolutionSpec{"J'", j};
    case InvolutionKind::CaseB:
      if (n % 2 != 1) throw InvalidInput("the case-B form is defined for odd n");
      for (std::size_t c = m + 1; c < n; ++c) j.entries[c] = RationalModZ(1, 2);
      return InvolutionSpec{"case-B", j};
  }
  throw InvalidInput("unknown involution");
}

InvolutionKind parse_involution(const std::string& name) {
  if (name == "J") return InvolutionKind::J;
  if (name == "J-prime" || name == "J'" || name == "Jprime") return InvolutionKind::JPrime;
  if (name == "case-B" || name == "B") return InvolutionKind::CaseB;
  throw InvalidInput("unknown involution '" + name + "' (expected J, J-prime or case-B)");
}

MonomialMatrix involution_apply(const MonomialMatrix& m, const InvolutionSpec& spec) {
  validate(m);
  if (m.size() != spec.j.size()) throw InvalidInput("involution_apply: size mismatch");
  if (!m.is_sl()) throw InvalidInput("involution_apply: matrix is not in SL_n");
  return mm_mul(mm_mul(mm_inv(spec.j), mm_inv(mm_transpose(m))), spec.j);
}

QZVector t_w(const MonomialMatrix& w_lift, const InvolutionSpec& spec) {
  const MonomialMatrix t = mm_mul(mm_inv(w_lift), involution_apply(w_lift, spec));
  if (!t.is_diagonal()) throw ConsistencyError("w^-1 gamma(w) is not diagonal: the lift does not lie in W^gamma");
  return t.entries;
}

MonomialMatrix weyl_lift(const std::vector<std::size_t>& perm) {
  MonomialMatrix m = MonomialMatrix::permutation(perm);
  if (is_odd_permutation(perm)) {
    std::size_t moved = 0;
    while (perm[moved] == moved) ++moved;
    m.entries[moved] = RationalModZ(1, 2);
  }
  return m;
}

}  // namespace parahoric
