#include "celint/chow_class.hpp"

#include "celint/detail/expr_parser.hpp"
#include "celint/errors.hpp"

#include <algorithm>
#include <ostream>

namespace celint {

ChowClass::ChowClass(RingPtr ring, std::vector<RationalFunction> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw std::invalid_argument("class without a ring");
  if (coeffs_.size() != ring_->size()) throw RingMismatch("coefficient count does not match the ring basis");
}

ChowClass::ChowClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("class without a ring");
  coeffs_.resize(ring_->size());
}

const RationalFunction& ChowClass::coeff(std::string_view name) const { return coeffs_[ring_->index_of(name)]; }

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

std::vector<int> ChowClass::support_codims() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero() && (out.empty() || out.back() != ring_->codim(i))) out.push_back(ring_->codim(i));
  return out;
}

bool ChowClass::is_pure_codim(int k) const {
  auto s = support_codims();
  return s.empty() || (s.size() == 1 && s[0] == k);
}

void ChowClass::require_same_ring(const ChowClass& o) const {
  if (ring_ != o.ring_) throw RingMismatch("classes live in different rings");
}

ChowClass ChowClass::operator-() const {
  ChowClass r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const RationalFunction& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& o) {
  require_same_ring(o);
  std::vector<RationalFunction> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      const auto& prod = ring_->product(i, j);
      if (prod.empty()) continue;
      RationalFunction ab = coeffs_[i] * o.coeffs_[j];
      for (const auto& t : prod) out[t.index] += ab * RationalFunction(t.coeff);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

bool operator==(const ChowClass& a, const ChowClass& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass r = ring_->fundamental_class();
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

ChowClass ChowClass::inverse() const {
  const RationalFunction& c0 = coeffs_[0];
  if (c0.is_zero()) throw DivisionByZero("class with zero codimension-0 part is not invertible");
  // c = c0 (1 + x) with x nilpotent, so c^-1 = c0^-1 * sum (-x)^k.
  ChowClass x = *this * c0.inverse();
  x.coeffs_[0] = 0;
  ChowClass term = ring_->fundamental_class();
  ChowClass sum = term;
  for (int k = 1; k <= ring_->dimension(); ++k) {
    term *= -x;
    sum += term;
  }
  return sum * c0.inverse();
}

ChowClass ChowClass::graded_piece(int k) const {
  ChowClass r(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (ring_->codim(i) == k) r.coeffs_[i] = coeffs_[i];
  return r;
}

RationalFunction ChowClass::degree() const {
  RationalFunction d;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!ring_->degree(i).is_zero()) d += coeffs_[i] * RationalFunction(ring_->degree(i));
  return d;
}

ChowClass ChowClass::map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& f) const {
  ChowClass r = *this;
  for (auto& c : r.coeffs_) c = f(c);
  return r;
}

ChowClass ChowClass::evaluate(const Rational& x) const {
  return map_coefficients([&](const RationalFunction& c) { return RationalFunction(c.evaluate(x)); });
}

namespace {

std::string render_coefficient(const RationalFunction& c) {
  if (c.is_constant()) {
    Rational v = c.constant_value();
    if (v.is_integer()) return v.to_string();
    return "(" + v.to_string() + ")";
  }
  return "(" + c.to_string() + ")";
}

} // namespace

std::string ChowClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    RationalFunction c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = c.is_constant() && c.constant_value().sign() < 0;
    if (negative) c = -c;
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string& name = ring_->element(i).name;
    out += c.is_one() ? name : render_coefficient(c) + "*" + name;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const ChowClass& c) { return os << c.to_string(); }

namespace {

/// Value of a class-literal subexpression: either a pure scalar or a class
/// (coefficients over the basis).
struct ClassValue {
  bool scalar = true;
  RationalFunction s;
  std::vector<RationalFunction> v;
};

/// Parser domain for class literals. With a ring, products of classes use
/// the ring multiplication; without one (linear mode) they are rejected.
class ClassDomain {
public:
  using Value = ClassValue;

  ClassDomain(std::span<const std::string> names, std::size_t unit, const ChowRing* ring)
      : names_(names), unit_(unit), ring_(ring) {
    order_.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return names_[a].size() > names_[b].size(); });
  }

  Value constant(const Rational& r) const { return {true, RationalFunction(r), {}}; }

  Value as_class(const Value& a) const {
    if (!a.scalar) return a;
    Value r{false, {}, std::vector<RationalFunction>(names_.size())};
    r.v[unit_] = a.s;
    return r;
  }

  Value add(const Value& a, const Value& b) const {
    if (a.scalar && b.scalar) return {true, a.s + b.s, {}};
    Value r = as_class(a);
    Value o = as_class(b);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }
  Value neg(const Value& a) const { return scale(a, RationalFunction(-1)); }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }

  Value scale(Value a, const RationalFunction& s) const {
    if (a.scalar) {
      a.s *= s;
      return a;
    }
    for (auto& c : a.v) c *= s;
    return a;
  }

  Value mul(const Value& a, const Value& b) const {
    if (a.scalar) return scale(b, a.s);
    if (b.scalar) return scale(a, b.s);
    if (!ring_) throw ParseError("product of basis elements is not allowed in a linear combination");
    auto ptr = ring_->shared_from_this();
    ChowClass x(ptr, a.v), y(ptr, b.v);
    x *= y;
    return {false, {}, std::vector<RationalFunction>(x.coeffs().begin(), x.coeffs().end())};
  }

  Value div(const Value& a, const Value& b) const {
    if (!b.scalar) throw ParseError("division by a class");
    return scale(a, b.s.inverse());
  }

  Value pow(const Value& a, int e) const {
    if (a.scalar) return {true, a.s.pow(e), {}};
    Value r = constant(Rational(1));
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return as_class(r);
  }

  std::optional<std::pair<Value, std::size_t>> match_atom(std::string_view rest) const {
    for (std::size_t i : order_) {
      const std::string& name = names_[i];
      if (rest.substr(0, name.size()) != name) continue;
      if (detail::is_name_char(name.back()) && rest.size() > name.size() && detail::is_name_char(rest[name.size()]))
        continue;
      Value r{false, {}, std::vector<RationalFunction>(names_.size())};
      r.v[i] = 1;
      return std::pair{std::move(r), name.size()};
    }
    if (!rest.empty() && rest[0] == 'm' && (rest.size() == 1 || !detail::is_name_char(rest[1])))
      return std::pair{Value{true, RationalFunction::m(), {}}, std::size_t{1}};
    return std::nullopt;
  }

private:
  std::span<const std::string> names_;
  std::size_t unit_;
  const ChowRing* ring_;
  std::vector<std::size_t> order_;
};

} // namespace

ChowClass ChowClass::parse(const RingPtr& ring, std::string_view text) {
  std::vector<std::string> names;
  for (const auto& b : ring->basis()) names.push_back(b.name);
  ClassDomain domain(names, 0, ring.get());
  ClassValue v = domain.as_class(detail::ExprParser<ClassDomain>(domain, text).parse());
  return ChowClass(ring, std::move(v.v));
}

std::vector<Rational> parse_linear_combination(std::span<const std::string> names, std::size_t unit_index,
                                               std::string_view text) {
  ClassDomain domain(names, unit_index, nullptr);
  ClassValue v = domain.as_class(detail::ExprParser<ClassDomain>(domain, text).parse());
  std::vector<Rational> out;
  for (const auto& c : v.v) {
    if (!c.is_constant()) throw ParseError("coefficient depends on m in '" + std::string(text) + "'");
    out.push_back(c.constant_value());
  }
  return out;
}

} // namespace celint
