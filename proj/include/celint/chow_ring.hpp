#pragma once

#include "celint/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace celint {

class ChowClass;
class ChowRing;
using RingPtr = std::shared_ptr<const ChowRing>;

struct BasisElement {
  std::string name;
  int codim = 0;
};

/// One nonzero structure constant: basis index and coefficient.
struct Term {
  std::size_t index;
  Rational coeff;
};
using SparseVector = std::vector<Term>;

/// Raw numeric presentation of a ring. Basis elements must be sorted by
/// codimension; index 0 is the fundamental class.
struct RingData {
  int dimension = 0;
  std::vector<BasisElement> basis;
  /// Row-major N x N table of products b_i * b_j.
  std::vector<SparseVector> products;
  /// Degree of every basis element (nonzero only in top codimension).
  std::vector<Rational> degree;
  /// c(TV) cap [V] as a dense coefficient vector.
  std::vector<Rational> tangent_chern;
};

/// Finite presentation of a graded Chow ring A^*V with Q coefficients.
/// Immutable once created; `create` checks the ring axioms exhaustively on
/// the basis and throws PresentationError naming the first violation.
class ChowRing : public std::enable_shared_from_this<ChowRing> {
public:
  static RingPtr create(RingData data);

  int dimension() const { return data_.dimension; }
  std::size_t size() const { return data_.basis.size(); }
  const BasisElement& element(std::size_t i) const { return data_.basis[i]; }
  std::span<const BasisElement> basis() const { return data_.basis; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws ParseError for unknown names.
  std::size_t index_of(std::string_view name) const;
  int codim(std::size_t i) const { return data_.basis[i].codim; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return data_.products[i * size() + j]; }
  const Rational& degree(std::size_t i) const { return data_.degree[i]; }
  std::span<const Rational> tangent_chern_coeffs() const { return data_.tangent_chern; }
  const RingData& data() const { return data_; }

  ChowClass tangent_chern() const;
  ChowClass fundamental_class() const;
  ChowClass basis_class(std::size_t i) const;
  ChowClass zero() const;

  /// Class of a point: defined when the top codimension has a unique basis
  /// element of nonzero degree. Used as the center of point blow-ups.
  std::optional<std::vector<Rational>> point_class() const;

private:
  explicit ChowRing(RingData data);
  void validate() const;

  RingData data_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

/// Literal presentation as written in ring files: names per codimension,
/// products and chern data as class literals over the basis names.
struct LiteralPresentation {
  int dimension = 0;
  std::vector<std::vector<std::string>> basis_by_codim;
  /// (left, right) -> linear combination of basis names. Products with the
  /// fundamental class and products beyond the dimension are implied; other
  /// missing pairs are zero. Supplying both orders of a pair with different
  /// values is a commutativity violation.
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> products;
  std::map<std::string, Rational> degree;
  std::string tangent_chern;
};

RingPtr ring_literal(const LiteralPresentation& spec);

/// Inverse of ring_literal: a presentation that rebuilds an identical ring.
LiteralPresentation to_literal(const ChowRing& ring);

} // namespace celint
