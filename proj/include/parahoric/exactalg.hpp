#pragma once

// Exact integer and Q/Z linear algebra. Everything above this layer is
// built on these types; there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace parahoric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unsupported label, malformed point, invalid action...
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Always a bug, never user error.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  IntVector apply(const IntVector& v) const;
  RationalVector apply(const RationalVector& v) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  /// Fraction-free Bareiss elimination.
  Integer determinant() const;

  /// Largest absolute value of an entry.
  Integer max_abs() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent);

/// Element of Q/Z, kept as the unique fraction in [0, 1) in lowest terms.
/// -1 in k^x is the additive value 1/2.
class RationalModZ {
 public:
  RationalModZ() = default;
  RationalModZ(const Integer& numerator, const Integer& denominator);
  explicit RationalModZ(const Rational& value);

  /// Accepts "a/b", "a" or "-a/b".
  static RationalModZ parse(const std::string& text);

  const Rational& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return value_ == 0; }

  /// "num/den", always with an explicit denominator.
  std::string to_string() const;

  RationalModZ operator-() const;
  friend RationalModZ operator+(const RationalModZ& a, const RationalModZ& b);
  friend RationalModZ operator-(const RationalModZ& a, const RationalModZ& b);
  friend RationalModZ operator*(const Integer& k, const RationalModZ& a);
  friend bool operator==(const RationalModZ& a, const RationalModZ& b) { return a.value_ == b.value_; }
  friend bool operator<(const RationalModZ& a, const RationalModZ& b) { return a.value_ < b.value_; }

 private:
  void canonicalize();
  Rational value_{0};
};

using QZVector = std::vector<RationalModZ>;

QZVector qz_zero(std::size_t n);
QZVector qz_from_rationals(const RationalVector& v);
QZVector operator+(const QZVector& a, const QZVector& b);
QZVector operator-(const QZVector& a, const QZVector& b);
QZVector operator-(const QZVector& a);
/// Integer matrix acting on a Q/Z vector (well defined because entries are integers).
QZVector apply_qz(const IntMatrix& m, const QZVector& v);
bool qz_is_zero(const QZVector& v);
/// Least common multiple of the denominators; 1 for the zero vector.
Integer common_denominator(const QZVector& v);
std::string to_string(const QZVector& v);

/// Isomorphism type Z^free_rank + Z/d_1 + ... + Z/d_s with d_1 | d_2 | ... | d_s, d_i > 1.
struct FiniteAbelianGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of the torsion part times (free part must be zero, else throws).
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U, U_inv;
  IntMatrix D;
  IntMatrix V, V_inv;
  std::size_t rank = 0;

  Integer diagonal(std::size_t i) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// echelon rows, positive pivots, entries above each pivot reduced into [0, pivot).
std::vector<IntVector> hermite_basis(std::span<const IntVector> vectors, std::size_t dim);

/// Z-basis of {v : M v = 0}, in Hermite form.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Structure of Z^rank / span(generators).
FiniteAbelianGroup quotient_structure(std::size_t rank, std::span<const IntVector> generators);

/// Some x with M x = v mod Z^rows, or nullopt when none exists.
std::optional<QZVector> solve_mod_z(const IntMatrix& m, const QZVector& v);

/// Exact integer solution of M x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Exact rational inverse of a nonsingular square matrix.
std::vector<RationalVector> rational_inverse(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws InvalidInput if the inverse is not integral.
IntMatrix integer_inverse(const IntMatrix& m);

Integer lcm_of(std::span<const Integer> values);
std::vector<long> prime_divisors(const Integer& n);

}  // namespace parahoric
