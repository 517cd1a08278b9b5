#include "fuselift/exactnum.hpp"

#include "fuselift/errors.hpp"

namespace fuselift {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail_domain("rational with zero denominator");
  v_ = BigRat(num) / BigRat(den);  // division path normalizes sign and gcd
}

Rational Rational::operator/(const Rational& o) const {
  if (o.v_ == 0) fail_domain("division by zero rational");
  return Rational(BigRat(v_ / o.v_));
}

std::string Rational::str() const {
  std::string s = num().str();
  if (!is_integer()) {
    s += '/';
    s += den().str();
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) fail_parse("empty rational text");
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view part, const char* what) -> Integer {
    if (part.empty()) fail_parse(std::string("missing ") + what + " in rational text");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) fail_parse(std::string("missing digits in ") + what);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        fail_parse("invalid character in rational text: '" + std::string(part) + "'");
    return Integer(std::string(part));
  };
  const Integer num = parse_int(text.substr(0, slash), "numerator");
  if (slash == std::string_view::npos) return Rational(num);
  const Integer den = parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) fail_parse("zero denominator in rational text");
  return Rational(num, den);
}

QZ QZ::make(const Integer& p, const Integer& q) {
  if (q <= 0) fail_domain("fraction mod 1 requires a positive denominator");
  return QZ(Rational(p, q));
}

Rational QZ::reduce(const Rational& r) {
  // floor division: representative r - floor(r) lies in [0, 1)
  Integer n = r.num(), d = r.den();
  Integer q = n / d;
  if (n < 0 && q * d != n) --q;
  return r - Rational(q);
}

}  // namespace fuselift
