#include "parahoric/exactalg.hpp"

#include <sstream>

namespace parahoric {

RationalModZ::RationalModZ(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidInput("RationalModZ: zero denominator");
  value_ = Rational(numerator, denominator);
  canonicalize();
}

RationalModZ::RationalModZ(const Rational& value) : value_(value) { canonicalize(); }

void RationalModZ::canonicalize() {
  value_.canonicalize();
  Integer num = value_.get_num();
  const Integer den = value_.get_den();
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  value_ = Rational(num, den);
  value_.canonicalize();
}

RationalModZ RationalModZ::parse(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw InvalidInput("cannot parse rational '" + text + "'");
  if (r.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return RationalModZ(r);
}

std::string RationalModZ::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

RationalModZ RationalModZ::operator-() const { return RationalModZ(Rational(-value_)); }

RationalModZ operator+(const RationalModZ& a, const RationalModZ& b) {
  return RationalModZ(Rational(a.value_ + b.value_));
}

RationalModZ operator-(const RationalModZ& a, const RationalModZ& b) {
  return RationalModZ(Rational(a.value_ - b.value_));
}

RationalModZ operator*(const Integer& k, const RationalModZ& a) {
  return RationalModZ(Rational(Rational(k) * a.value_));
}

QZVector qz_zero(std::size_t n) { return QZVector(n); }

QZVector qz_from_rationals(const RationalVector& v) {
  QZVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

QZVector operator+(const QZVector& a, const QZVector& b) {
  if (a.size() != b.size()) throw InvalidInput("QZVector add: dimension mismatch");
  QZVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

QZVector operator-(const QZVector& a, const QZVector& b) {
  if (a.size() != b.size()) throw InvalidInput("QZVector subtract: dimension mismatch");
  QZVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

QZVector operator-(const QZVector& a) {
  QZVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

QZVector apply_qz(const IntMatrix& m, const QZVector& v) {
  if (v.size() != m.cols()) throw InvalidInput("apply: dimension mismatch");
  QZVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += Rational(m(i, j)) * v[j].value();
    out[i] = RationalModZ(acc);
  }
  return out;
}

bool qz_is_zero(const QZVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Integer common_denominator(const QZVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  return l;
}

std::string to_string(const QZVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].to_string();
  }
  os << ')';
  return os.str();
}

Integer FiniteAbelianGroup::order() const {
  if (free_rank != 0) throw InvalidInput("order of an infinite abelian group");
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::string FiniteAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : invariant_factors) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace parahoric
