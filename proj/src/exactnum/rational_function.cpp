#include "celint/rational_function.hpp"

#include "celint/detail/expr_parser.hpp"
#include "celint/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace celint {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den.degree() > 0) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
  }
  Rational lead = den.leading();
  if (!(lead == Rational(1))) {
    Rational inv = Rational(1) / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant: " + to_string());
  return num_.constant_term();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  if (c.is_zero()) return *this = RationalFunction();
  num_ *= c;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(1) / *this; }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

Rational RationalFunction::evaluate(const Rational& x) const {
  return evaluate_quotient(num_, den_, x);
}

Rational evaluate_quotient(const Polynomial& num, const Polynomial& den, const Rational& x) {
  Rational d = den.evaluate(x);
  Rational n = num.evaluate(x);
  if (d.is_zero()) {
    if (n.is_zero()) throw IndeterminateError("0/0 at m = " + x.to_string());
    throw PoleError("pole at m = " + x.to_string());
  }
  return n / d;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  // Clear denominators jointly so both parts are integer polynomials with
  // coprime content and a positive leading denominator coefficient.
  mpz_class l = 1;
  for (const auto& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& c : den_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  auto to_ints = [&](const Polynomial& p) {
    std::vector<mpz_class> v;
    for (const auto& c : p.coeffs()) v.push_back(c.numerator() * (l / c.denominator()));
    return v;
  };
  std::vector<mpz_class> n = to_ints(num_), d = to_ints(den_);
  mpz_class g = 0;
  for (const auto& c : n) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : n) c /= g;
  for (auto& c : d) c /= g;

  auto terms = [](const std::vector<mpz_class>& v) {
    return std::count_if(v.begin(), v.end(), [](const mpz_class& c) { return c != 0; });
  };
  std::string ns = Polynomial::render_integer(n);
  if (d.size() == 1 && d[0] == 1) return ns;
  if (terms(n) > 1) ns = "(" + ns + ")";
  std::string ds = Polynomial::render_integer(d);
  const bool bare = d.size() == 1 || (terms(d) == 1 && d.back() == 1);
  return ns + "/" + (bare ? ds : "(" + ds + ")");
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

namespace {

struct ScalarDomain {
  using Value = RationalFunction;
  Value constant(const Rational& r) const { return Value(r); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, int e) const { return a.pow(e); }
  std::optional<std::pair<Value, std::size_t>> match_atom(std::string_view rest) const {
    if (!rest.empty() && rest[0] == 'm' && (rest.size() == 1 || !detail::is_name_char(rest[1])))
      return std::pair{RationalFunction::m(), std::size_t{1}};
    return std::nullopt;
  }
};

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

} // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
  ScalarDomain domain;
  return detail::ExprParser<ScalarDomain>(domain, text).parse();
}

PoleReport rational_poles(const RationalFunction& f) {
  PoleReport report;
  Polynomial rest = f.den();
  if (rest.degree() <= 0) return report;
  std::set<Rational> roots;
  while (rest.degree() >= 1 && rest.constant_term().is_zero()) {
    roots.insert(Rational(0));
    rest = rest.divmod(Polynomial::m()).first;
  }
  if (rest.degree() >= 1) {
    auto ints = rest.primitive_integer_form().second;
    auto ps = positive_divisors(ints.front());
    auto qs = positive_divisors(ints.back());
    for (const auto& q : qs) {
      for (const auto& p : ps) {
        for (int s : {1, -1}) {
          Rational x(mpz_class(p * s), q);
          if (rest.degree() < 1 || roots.count(x)) continue;
          if (!rest.evaluate(x).is_zero()) continue;
          roots.insert(x);
          Polynomial lin(std::vector<Rational>{-x, Rational(1)});
          for (;;) {
            auto [quot, rem] = rest.divmod(lin);
            if (!rem.is_zero()) break;
            rest = quot;
          }
        }
      }
    }
  }
  report.poles.assign(roots.begin(), roots.end());
  if (rest.degree() >= 2) {
    Polynomial g = gcd(rest, rest.derivative());
    report.nonlinear_factors.push_back(rest.divmod(g).first.monic());
  }
  return report;
}

} // namespace celint
