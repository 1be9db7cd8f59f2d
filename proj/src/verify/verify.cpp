#include "celint/verify.hpp"

#include "celint/catalog.hpp"
#include "celint/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace celint {

Json report_to_json(const CheckReport& r) {
  return {{"name", r.name}, {"passed", r.passed}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"context", r.context}};
}

std::string report_line(const CheckReport& r) {
  std::string out = (r.passed ? "PASS " : "FAIL ") + r.name;
  if (!r.context.empty()) out += ": " + r.context;
  if (!r.passed) out += ": " + r.lhs + " != " + r.rhs;
  return out;
}

bool same_class(const ChowClass& a, const ChowClass& b) {
  if (a.ring() == b.ring()) return a == b;
  const auto& ra = *a.ring();
  const auto& rb = *b.ring();
  if (ra.dimension() != rb.dimension() || ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra.element(i).name != rb.element(i).name) return false;
    if (!(a.coeff(i) == b.coeff(i))) return false;
  }
  return true;
}

namespace {

CheckReport compare(std::string name, const ChowClass& lhs, const ChowClass& rhs, std::string context) {
  return {std::move(name), same_class(lhs, rhs), lhs.to_string(), rhs.to_string(), std::move(context)};
}

CheckReport compare(std::string name, const RationalFunction& lhs, const RationalFunction& rhs, std::string context) {
  return {std::move(name), lhs == rhs, lhs.to_string(), rhs.to_string(), std::move(context)};
}

std::string describe_step(const std::vector<std::string>& names, const BlowupStep& step) {
  std::string out = "point";
  bool first = true;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (!contains_index(step.contains, j)) continue;
    out += first ? " on " : ",";
    out += names[j];
    first = false;
  }
  return out;
}

std::string describe(const NCConfig& config) {
  std::string out;
  for (const auto& c : config.components()) {
    if (!out.empty()) out += ", ";
    out += c.name + "=" + c.cls.to_string() + " (m=" + c.mult.value.to_string() + ")";
  }
  return "dim " + std::to_string(config.ring()->dimension()) + " [" + out + "]";
}

RationalFunction degree_product(const DegreeConfig& config, Subset s) {
  RationalFunction p(1);
  for (std::size_t i = 0; i < config.names.size(); ++i)
    if (contains_index(s, i)) p *= config.mults[i].value + RationalFunction(1);
  return p;
}

ChowClass pulled_c1(const ManifestationChain& chain, const RingPtr& source) {
  RingPtr end = chain.empty() ? source : chain.back()->target();
  ChowClass c = end->tangent_chern().graded_piece(1);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) c = (*it)->pull(c);
  return c;
}

} // namespace

ChowClass multiplicity_divisor(const NCConfig& config) {
  ChowClass sum = config.ring()->zero();
  for (const auto& c : config.components()) sum += c.cls * c.mult.value;
  return sum;
}

CheckReport check_key(const NCConfig& config, const StratumSelection& sel, const BlowupStep& step) {
  ChowClass before = integrate_class(config, sel);
  Transported t = blowup_transport(config, step, sel);
  ChowClass after = t.map->push(integrate_class(t.config, t.selection));
  return compare("key", after, before, describe(config) + ", blow up " + describe_step(config.names(), step));
}

CheckReport check_cov(const Side& x, const Side& y) {
  if (x.config.ring() != y.config.ring()) throw PreconditionViolated("both sides must live on one resolving ring");
  if (!(multiplicity_divisor(x.config) == multiplicity_divisor(y.config)))
    throw PreconditionViolated("the two sides carry different multiplicity divisors");
  ChowClass lhs = manifest(integrate_class(x.config, StratumSelection::whole(x.config.names())), x.chain);
  ChowClass rhs = manifest(integrate_class(y.config, StratumSelection::whole(y.config.names())), y.chain);
  return compare("cov", lhs, rhs, describe(x.config));
}

CheckReport check_denloe(const DegreeConfig& config, const StratumSelection& sel, const BlowupStep& step) {
  RationalFunction before = integrate_degree(config, sel);
  TransportedDegree t = blowup_transport_degree(config, step, sel);
  RationalFunction after = integrate_degree(t.config, t.selection);
  return compare("denloe", after, before, "blow up " + describe_step(config.names, step) + ", S = " + sel.to_string());
}

CheckReport check_denloe_center(const DegreeConfig& config, const BlowupStep& step) {
  RationalFunction before = RationalFunction(1) / degree_product(config, step.contains);
  TransportedDegree t = blowup_transport_degree(config, step, StratumSelection::whole(config.names));
  StratumSelection over = StratumSelection::from_closed(t.config.names, Subset{1});
  RationalFunction after = integrate_degree(t.config, over);
  return compare("denloe", after, before, "S = blown-up " + describe_step(config.names, step));
}

CheckReport check_altexp(const NCConfig& config) {
  ChowClass direct = integrate_class(config, StratumSelection::whole(config.names()));
  ChowClass alt = integrate_alternating(config);
  ChowClass weighted = integrate_weighted(config);
  CheckReport r = compare("altexp", alt, direct, describe(config));
  if (r.passed && !(weighted == direct)) r = compare("altexp", weighted, direct, describe(config));
  return r;
}

CheckReport check_spell_elgen(const SpellSide& x, const SpellSide& y, int i) {
  if (i < 0) throw PreconditionViolated("the power i must be non-negative");
  const RingPtr& v = x.config.ring();
  if (y.config.ring() != v || x.d.ring() != v || x.k.ring() != v || y.d.ring() != v || y.k.ring() != v)
    throw PreconditionViolated("all data must live on the common resolving ring");
  if (!(x.k + x.d == y.k + y.d)) throw PreconditionViolated("K_X + D_X differs from K_Y + D_Y");
  if (!(multiplicity_divisor(x.config) == x.k + x.d) || !(multiplicity_divisor(y.config) == y.k + y.d))
    throw PreconditionViolated("multiplicities do not match K + D");

  ChowClass ix = integrate_class(x.config, StratumSelection::whole(x.config.names()));
  ChowClass iy = integrate_class(y.config, StratumSelection::whole(y.config.names()));
  ChowClass lhs = (pulled_c1(x.chain, v) - y.d).pow(static_cast<unsigned>(i)) * ix;
  ChowClass rhs = (pulled_c1(y.chain, v) - x.d).pow(static_cast<unsigned>(i)) * iy;
  CheckReport r;
  r.name = "spell_elgen";
  r.context = "i = " + std::to_string(i) + ", " + describe(x.config);
  r.passed = ix == iy && lhs == rhs;
  r.lhs = "deg " + lhs.degree().to_string() + " (" + lhs.to_string() + ")";
  r.rhs = "deg " + rhs.degree().to_string() + " (" + rhs.to_string() + ")";
  return r;
}

CheckReport check_necfacts(const RingPtr& base, const std::optional<ChowClass>& divisor) {
  std::string name = "e";
  for (int k = 0; base->find(name) || base->find(name + "^2"); ++k) name = "e" + std::to_string(k);
  Blowup b = ring_blowup_point(base, name);
  const auto& w = b.ring;
  const int d = base->dimension();
  auto pt_coeffs = *base->point_class();
  std::vector<RationalFunction> pc;
  for (const auto& c : pt_coeffs) pc.emplace_back(c);
  ChowClass pt(base, pc);
  ChowClass one = w->fundamental_class();
  ChowClass e = b.exceptional;
  ChowClass ctw = w->tangent_chern();
  ChowClass ctv = base->tangent_chern();
  ChowClass inv_e = (one + e).inverse();

  std::vector<std::pair<ChowClass, ChowClass>> sides{
      {b.map->push(ctw), ctv + pt * RationalFunction(d - 1)},
      {b.map->push(ctw * e * inv_e), pt * RationalFunction(d)},
      {b.map->push(ctw * inv_e), ctv - pt},
  };
  if (divisor) {
    if (divisor->ring() != base) throw RingMismatch("divisor is not a class on the base ring");
    if (!divisor->is_pure_codim(1)) throw NotADivisor("necfacts (5) needs a codimension-1 class");
    ChowClass proper = proper_transform(*b.map, e, *divisor, 1);
    sides.emplace_back(b.map->push(ctw * inv_e * (one + proper).inverse()),
                       ctv * (base->fundamental_class() + *divisor).inverse());
  }

  CheckReport r;
  r.name = "necfacts";
  r.context = "dim " + std::to_string(d) + (divisor ? ", D = " + divisor->to_string() : "");
  r.passed = true;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (!r.lhs.empty()) {
      r.lhs += "; ";
      r.rhs += "; ";
    }
    std::string tag = "(" + std::to_string(k + 2) + ") ";
    r.lhs += tag + sides[k].first.to_string();
    r.rhs += tag + sides[k].second.to_string();
    if (!(sides[k].first == sides[k].second)) r.passed = false;
  }
  return r;
}

CheckReport check_can_degree(const std::vector<Side>& representatives, const std::optional<Rational>& cy_chi) {
  std::vector<RationalFunction> degrees;
  for (const auto& s : representatives) {
    RationalFunction deg =
        manifest(integrate_class(s.config, StratumSelection::whole(s.config.names())), s.chain).degree();
    bool seen = false;
    for (const auto& x : degrees) seen = seen || x == deg;
    if (!seen) degrees.push_back(deg);
  }
  auto render = [](const std::vector<RationalFunction>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ", ") + x.to_string();
    return "{" + out + "}";
  };
  CheckReport r;
  r.name = "can_degree";
  r.context = std::to_string(representatives.size()) + " canonical representatives";
  r.lhs = render(degrees);
  if (cy_chi) {
    r.rhs = render({RationalFunction(*cy_chi)});
    r.passed = degrees.size() == 1 && degrees[0] == RationalFunction(*cy_chi);
  } else {
    r.rhs = r.lhs;
    r.passed = true;
  }
  return r;
}

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.passed ? 0 : 1;
  return n;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("CELINT_SEED");
  if (!s || !*s) return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("CELINT_SEED is not a non-negative integer: ") + s);
  }
}

} // namespace celint
