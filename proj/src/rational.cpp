#include "ckp/rational.hpp"

#include <cctype>

namespace ckp {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw ContractError("rational denominator must be nonzero");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&text]() -> ParseError {
    return ParseError("not an exact rational: \"" + text + "\" (expected \"p\" or \"p/q\")");
  };
  const auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };

  const size_t slash = text.find('/');
  std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
  size_t num_start = 0;
  if (!num_text.empty() && num_text[0] == '-') num_start = 1;
  if (!digits(num_text, num_start, num_text.size())) throw bad();

  Integer num(num_text, 10);
  if (slash == std::string::npos) return Rational(num);

  const std::string den_text = text.substr(slash + 1);
  if (!digits(den_text, 0, den_text.size())) throw bad();
  Integer den(den_text, 10);
  if (sgn(den) == 0) throw ParseError("rational denominator is zero in \"" + text + "\"");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ContractError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Integer Rational::to_integer() const {
  if (!is_integer()) throw ContractError("rational " + str() + " is not an integer");
  return numerator();
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

bool leq_sqrt(const Rational& x, const Rational& s) {
  if (s.is_negative()) throw ContractError("leq_sqrt requires a nonnegative radicand");
  if (x.sign() <= 0) return true;
  return x.squared() <= s;
}

bool lt_sqrt(const Rational& x, const Rational& s) {
  if (s.is_negative()) throw ContractError("lt_sqrt requires a nonnegative radicand");
  if (x.is_negative()) return true;
  if (x.is_zero()) return s.is_positive();
  return x.squared() < s;
}

int cmp_affine_sqrt(const Rational& x1, const Rational& y1,
                    const Rational& x2, const Rational& y2,
                    const Rational& s) {
  if (s.is_negative()) throw ContractError("cmp_affine_sqrt requires a nonnegative radicand");
  const Rational a = x1 - x2;
  const Rational b = y1 - y2;
  if (b.is_zero() || s.is_zero()) return a.sign();
  if (a.is_zero()) return b.sign();
  if (a.sign() == b.sign()) return a.sign();
  // Opposite signs: compare |a| against sqrt(s)*|b| by squaring.
  const int c = cmp(a.squared(), s * b.squared());
  return a.is_positive() ? c : -c;
}

}  // namespace ckp
