#include "celint/polynomial.hpp"

#include "celint/errors.hpp"

#include <sstream>

namespace celint {

Polynomial::Polynomial(Rational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::m() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational c, unsigned exponent) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(exponent + 1, Rational(0));
  v[exponent] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  std::vector<Rational> quot(rem.degree() - divisor.degree() + 1, Rational(0));
  const Rational lead = divisor.leading();
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Rational q = rem.leading() / lead;
    for (int i = 0; i <= dd; ++i) rem.coeffs_[i + shift] -= q * divisor.coeffs_[i];
    quot[shift] = q;
    // The leading term cancels exactly; drop it even if trim would anyway.
    rem.coeffs_.pop_back();
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  r *= Rational(1) / leading();
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Rational, std::vector<mpz_class>> Polynomial::primitive_integer_form() const {
  if (is_zero()) return {Rational(1), {}};
  mpz_class l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_class v = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {Rational(l, g), std::move(ints)};
}

std::string Polynomial::render_integer(std::span<const mpz_class> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const mpz_class& c = coeffs[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "m";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

} // namespace celint
