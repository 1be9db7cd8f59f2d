#pragma once

#include "celint/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace celint {

/// Univariate polynomial over Q in the indeterminate m. Coefficients are
/// stored by ascending exponent with no trailing zeros.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(Rational c); // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {} // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The indeterminate m.
  static Polynomial m();
  static Polynomial monomial(Rational c, unsigned exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t exponent) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws DivisionByZero when the divisor is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial pow(unsigned e) const;
  Rational evaluate(const Rational& x) const;

  /// Integer coefficients, primitive, positive leading coefficient: returns
  /// (scale, p) with p = scale * this.
  std::pair<Rational, std::vector<mpz_class>> primitive_integer_form() const;

  /// Ascending-order rendering with the given coefficients, e.g. "5+6*m".
  static std::string render_integer(std::span<const mpz_class> coeffs);

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

} // namespace celint
