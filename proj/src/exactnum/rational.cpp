#include "celint/rational.hpp"

#include "celint/errors.hpp"

#include <cctype>

namespace celint {

Rational::Rational(long num, long den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
  };
  auto to_mpz = [](std::string part) {
    if (!part.empty() && part[0] == '+') part.erase(0, 1);
    return mpz_class(part, 10);
  };
  if (slash == std::string::npos) {
    check_int(s);
    return Rational(to_mpz(s));
  }
  std::string n = s.substr(0, slash), d = s.substr(slash + 1);
  check_int(n);
  check_int(d);
  return Rational(to_mpz(n), to_mpz(d));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace celint
