#pragma once

#include "celint/chow_ring.hpp"
#include "celint/rational_function.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace celint {

/// Element of A_*V with coefficients in Q(m), stored densely over the basis
/// of its ring.
class ChowClass {
public:
  ChowClass(RingPtr ring, std::vector<RationalFunction> coeffs);
  explicit ChowClass(RingPtr ring);

  /// Parses a class literal such as "[X] + (3+2*m)/(1+m)*D" or
  /// "1 + 3*h + 3*h^2". Basis names are matched greedily; a bare scalar
  /// stands for a multiple of the fundamental class; products of classes
  /// use the ring multiplication.
  static ChowClass parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  std::span<const RationalFunction> coeffs() const { return coeffs_; }
  const RationalFunction& coeff(std::size_t i) const { return coeffs_[i]; }
  const RationalFunction& coeff(std::string_view name) const;

  bool is_zero() const;
  /// Codimensions carrying a nonzero coefficient.
  std::vector<int> support_codims() const;
  bool is_pure_codim(int k) const;

  ChowClass operator-() const;
  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const RationalFunction& s);
  ChowClass& operator*=(const ChowClass& o);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
  friend ChowClass operator*(ChowClass a, const RationalFunction& s) { return a *= s; }
  friend ChowClass operator*(const RationalFunction& s, ChowClass a) { return a *= s; }
  /// Same ring and identical coefficients.
  friend bool operator==(const ChowClass& a, const ChowClass& b);

  ChowClass pow(unsigned e) const;
  /// Multiplicative inverse; requires a nonzero codimension-0 coefficient.
  ChowClass inverse() const;
  /// Codimension-k part.
  ChowClass graded_piece(int k) const;
  /// Degree map applied to the top-codimension piece.
  RationalFunction degree() const;

  ChowClass map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& f) const;
  /// Applies RationalFunction::evaluate to every coefficient.
  ChowClass evaluate(const Rational& x) const;

  /// "[V] + (5/2)*h + 2*h^2"; terms in basis order; "0" for the zero class.
  std::string to_string() const;

private:
  void require_same_ring(const ChowClass& o) const;

  RingPtr ring_;
  std::vector<RationalFunction> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ChowClass& c);

/// deg(c): degree map on the top-codimension piece.
inline RationalFunction degree_of_class(const ChowClass& c) { return c.degree(); }

/// Parses a linear combination of the given names with rational constant
/// coefficients (no ring products). A bare scalar goes to `unit_index`.
std::vector<Rational> parse_linear_combination(std::span<const std::string> names,
                                               std::size_t unit_index, std::string_view text);

} // namespace celint
