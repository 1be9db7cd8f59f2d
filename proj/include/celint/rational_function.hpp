#pragma once

#include "celint/polynomial.hpp"
#include "celint/rational.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace celint {

/// Element of Q(m) in canonical form: gcd(num, den) = 1 and den monic.
/// Structural equality coincides with equality of values.
class RationalFunction {
public:
  RationalFunction() : den_(1) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {} // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}    // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {} // NOLINT
  /// Throws ZeroDenominator when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction m() { return RationalFunction(Polynomial::m()); }

  /// Parses the grammar produced by to_string: integers, m, + - * / ^ and
  /// parentheses.
  static RationalFunction parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return den_.is_constant() && num_ == Polynomial(1); }
  /// Value of a constant function; throws std::logic_error otherwise.
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& c);
  /// Throws DivisionByZero.
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// Exact value at x. Throws PoleError when den(x) = 0.
  Rational evaluate(const Rational& x) const;

  /// Integer-cleared display form, e.g. "-12*m/(5+6*m)".
  std::string to_string() const;

private:
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Evaluates num(x)/den(x) for a pair that need not be reduced. Throws
/// PoleError when only the denominator vanishes and IndeterminateError when
/// both do.
Rational evaluate_quotient(const Polynomial& num, const Polynomial& den, const Rational& x);

struct PoleReport {
  /// Distinct rational roots of the denominator, ascending.
  std::vector<Rational> poles;
  /// Monic squarefree cofactor left after removing every rational root, when
  /// its degree is at least 2. It has no rational roots; it is not factored
  /// further.
  std::vector<Polynomial> nonlinear_factors;
};

PoleReport rational_poles(const RationalFunction& f);

} // namespace celint
