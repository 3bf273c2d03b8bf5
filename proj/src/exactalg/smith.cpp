#include "parahoric/exactalg.hpp"

#include <algorithm>

namespace parahoric {
namespace {

// Tracks D together with U, U^-1, V, V^-1 so that U * M * V = D holds after every step.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        v_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    v_inv.swap_rows(a, b);
  }
  // row[dst] += f * row[src]
  void row_op(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
    u_inv.add_col_multiple(src, dst, -f);
  }
  // col[dst] += f * col[src]
  void col_op(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
    v_inv.add_row_multiple(src, dst, -f);
  }
  void negate_row(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
    for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, r) = -u_inv(i, r);
  }

  IntMatrix d, u, u_inv, v, v_inv;
};

bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

Integer SmithForm::diagonal(std::size_t i) const {
  if (i >= D.rows() || i >= D.cols()) return 0;
  return D(i, i);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithWorkspace w(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(w.d, t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (w.d(i, t) == 0) continue;
        Integer q = w.d(i, t) / w.d(t, t);
        w.row_op(i, t, -q);
        if (w.d(i, t) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m.rows(); ++i)
          if (w.d(i, t) != 0 && (best == t || abs(w.d(i, t)) < abs(w.d(best, t)))) best = i;
        w.swap_rows(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (w.d(t, j) == 0) continue;
        Integer q = w.d(t, j) / w.d(t, t);
        w.col_op(j, t, -q);
        if (w.d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (w.d(t, j) != 0 && (best == t || abs(w.d(t, j)) < abs(w.d(t, best)))) best = j;
        w.swap_cols(t, best);
        continue;
      }
      // Pivot must divide the remaining block; otherwise fold an offending row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (w.d(i, j) % w.d(t, t) != 0) {
            w.row_op(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.u), std::move(w.u_inv), std::move(w.d), std::move(w.v), std::move(w.v_inv), t};
}

std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors, std::size_t dim) {
  std::vector<IntVector> rows(vectors.begin(), vectors.end());
  for (const auto& r : rows)
    if (r.size() != dim) throw InvalidInput("hermite_basis: vector length mismatch");

  auto sub_multiple = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < dim; ++j) rows[dst][j] -= q * rows[src][j];
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      while (rows[i][col] != 0) {
        Integer q = rows[r][col] / rows[i][col];
        sub_multiple(r, i, q);
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      sub_multiple(i, r, q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t j = s.rank; j < m.cols(); ++j) basis.push_back(s.V.column(j));
  return hermite_basis(basis, m.cols());
}

FiniteAbelianGroup quotient_structure(std::size_t rank, std::span<const IntVector> generators) {
  if (rank == 0) throw InvalidInput("quotient_structure: rank must be positive");
  if (generators.empty()) return FiniteAbelianGroup{{}, rank};
  const SmithForm s = smith_normal_form(IntMatrix::from_columns(rank, generators));
  FiniteAbelianGroup g;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) g.invariant_factors.push_back(s.D(i, i));
  g.free_rank = rank - s.rank;
  return g;
}

std::optional<QZVector> solve_mod_z(const IntMatrix& m, const QZVector& v) {
  if (v.size() != m.rows()) throw InvalidInput("solve_mod_z: dimension mismatch");
  const SmithForm s = smith_normal_form(m);
  const QZVector w = apply_qz(s.U, v);
  QZVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      y[i] = RationalModZ(Rational(w[i].value() / Rational(s.D(i, i))));
    } else if (!w[i].is_zero()) {
      return std::nullopt;
    }
  }
  return apply_qz(s.V, y);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw InvalidInput("solve_integer: dimension mismatch");
  const SmithForm s = smith_normal_form(m);
  const IntVector c = s.U.apply(b);
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

}  // namespace parahoric
