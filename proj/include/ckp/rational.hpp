#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ckp/errors.hpp"

namespace ckp {

using Integer = mpz_class;

/// Arbitrary-precision rational with exact arithmetic, stored canonically
/// (denominator > 0, lowest terms). Backed by GMP. There is deliberately no
/// conversion to or from floating point: every quantity in this library is
/// either an Integer or a Rational.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Integer& n) : q_(n) {}
  Rational(const Integer& num, const Integer& den);

  /// Parses "p", "-p" or "p/q" (q a positive integer). Throws ParseError on
  /// anything else, including floating-point syntax.
  static Rational parse(const std::string& text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const;
  Rational squared() const { return *this * *this; }

  /// Requires is_integer().
  Integer to_integer() const;

  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend int cmp(const Rational& a, const Rational& b) { return ::cmp(a.q_, b.q_); }

 private:
  mpq_class q_;
};

/// x <= sqrt(s), evaluated exactly (sign analysis plus squared comparison).
/// Requires s >= 0.
bool leq_sqrt(const Rational& x, const Rational& s);

/// x < sqrt(s), evaluated exactly. Requires s >= 0.
bool lt_sqrt(const Rational& x, const Rational& s);

/// Sign of (x1 + sqrt(s)*y1) - (x2 + sqrt(s)*y2), evaluated exactly.
/// Requires s >= 0. Correct whether or not sqrt(s) is rational.
int cmp_affine_sqrt(const Rational& x1, const Rational& y1,
                    const Rational& x2, const Rational& y2,
                    const Rational& s);

}  // namespace ckp
