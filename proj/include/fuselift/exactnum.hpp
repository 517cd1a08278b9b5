// Exact scalar arithmetic: arbitrary-precision rationals and rationals mod 1.
// No floating point anywhere; every value is a reduced fraction.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace fuselift {

using Integer = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Reduced fraction p/q with q >= 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return boost::multiprecision::numerator(v_); }
  Integer den() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return den() == 1; }
  bool is_zero() const { return v_ == 0; }

  Rational operator+(const Rational& o) const { return Rational(BigRat(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(BigRat(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(BigRat(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(BigRat(-v_)); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // "p/q" for non-integers, plain "p" otherwise.
  std::string str() const;
  // Accepts "p", "p/q", optional leading '-'; q > 0 after sign normalization.
  static Rational parse(std::string_view text);

 private:
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  BigRat v_;
};

// Element of Q/Z, stored as the canonical representative in [0, 1).
class QZ {
 public:
  QZ() = default;  // zero
  explicit QZ(const Rational& r) : rep_(reduce(r)) {}

  // p/q mod 1; rejects q = 0 and q < 0.
  static QZ make(const Integer& p, const Integer& q);

  const Rational& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  // Smallest n >= 1 with n*this = 0 (the denominator of the representative).
  Integer order() const { return rep_.den(); }

  QZ operator+(const QZ& o) const { return QZ(rep_ + o.rep_); }
  QZ operator-(const QZ& o) const { return QZ(rep_ - o.rep_); }
  QZ operator-() const { return QZ(-rep_); }
  // n * this for any integer n (also negative).
  QZ scaled(const Integer& n) const { return QZ(rep_ * Rational(n)); }

  bool operator==(const QZ& o) const { return rep_ == o.rep_; }
  bool operator!=(const QZ& o) const { return rep_ != o.rep_; }
  bool operator<(const QZ& o) const { return rep_ < o.rep_; }

  // Canonical form: "0" or "p/q" with 0 < p < q.
  std::string str() const { return rep_.str(); }
  // Accepts any rational text; reduces mod 1.
  static QZ parse(std::string_view text) { return QZ(Rational::parse(text)); }

 private:
  static Rational reduce(const Rational& r);
  Rational rep_;  // invariant: 0 <= rep_ < 1
};

}  // namespace fuselift
