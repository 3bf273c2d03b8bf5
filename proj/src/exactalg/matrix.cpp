#include "parahoric/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace parahoric {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("IntMatrix dimensions must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("IntMatrix::from_rows: empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidInput("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::span<const IntVector> columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidInput("IntMatrix::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw InvalidInput("IntMatrix::apply: dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RationalVector IntMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw InvalidInput("IntMatrix::apply: dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += Rational((*this)(i, j)) * v[j];
    acc.canonicalize();
    out[i] = acc;
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : data_) {
    Integer v = abs(x);
    if (v > best) best = v;
  }
  return best;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("IntMatrix multiply: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("IntMatrix add: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("IntMatrix subtract: dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw InvalidInput("matrix_power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::vector<RationalVector> rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("rational_inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("rational_inverse: singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RationalVector> inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv[i][j] = a[i][n + j];
      inv[i][j].canonicalize();
    }
  return inv;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  const auto inv = rational_inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv[i][j].get_den() != 1) throw InvalidInput("integer_inverse: matrix is not unimodular");
      out(i, j) = inv[i][j].get_num();
    }
  return out;
}

Integer lcm_of(std::span<const Integer> values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), Integer(abs(v)).get_mpz_t());
  }
  return l;
}

std::vector<long> prime_divisors(const Integer& n) {
  std::vector<long> primes;
  Integer rest = abs(n);
  for (long p = 2; Integer(p) * p <= rest; ++p) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) {
    if (!rest.fits_slong_p()) throw InvalidInput("prime_divisors: cofactor too large");
    primes.push_back(rest.get_si());
  }
  return primes;
}

}  // namespace parahoric
