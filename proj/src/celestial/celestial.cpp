#include "celint/celestial.hpp"

#include "celint/errors.hpp"

namespace celint {

namespace {

RationalFunction one_plus(const Multiplicity& m, const std::string& name) {
  RationalFunction r = m.value + RationalFunction(1);
  if (r.is_zero()) throw UndefinedMultiplicity("1 + m vanishes identically on '" + name + "'");
  return r;
}

ChowClass one_plus_class(const ChowClass& e) { return e.ring()->fundamental_class() + e; }

} // namespace

ChowClass log_chern(const NCConfig& config) {
  ChowClass c = config.ring()->tangent_chern();
  for (const auto& comp : config.components()) c *= one_plus_class(comp.cls).inverse();
  return c;
}

ChowClass integrate_class(const NCConfig& config, const StratumSelection& sel) {
  if (sel.universe() != config.names()) throw UniverseMismatch("selection does not match the configuration");
  const auto& comps = config.components();
  std::vector<ChowClass> weighted;
  for (const auto& c : comps) weighted.push_back(c.cls * one_plus(c.mult, c.name).inverse());
  ChowClass sum = config.ring()->zero();
  for (Subset s : sel.strata()) {
    ChowClass term = config.ring()->fundamental_class();
    for (std::size_t i = 0; i < comps.size() && !term.is_zero(); ++i)
      if (contains_index(s, i)) term *= weighted[i];
    sum += term;
  }
  return log_chern(config) * sum;
}

ChowClass manifest(const ChowClass& c, const ManifestationChain& chain) {
  ChowClass out = c;
  for (const auto& map : chain) out = map->push(out);
  return out;
}

RationalFunction integrate_degree(const DegreeConfig& config, const StratumSelection& sel) {
  if (sel.universe() != config.names) throw UniverseMismatch("selection does not match the configuration");
  config.validate();
  auto open = chi_mobius(config.chi_closed, config.names.size());
  RationalFunction sum;
  for (Subset s : sel.strata()) {
    auto it = open.find(s);
    if (it == open.end() || it->second.is_zero()) continue;
    RationalFunction term(it->second);
    for (std::size_t i = 0; i < config.names.size(); ++i)
      if (contains_index(s, i)) term /= one_plus(config.mults[i], config.names[i]);
    sum += term;
  }
  return sum;
}

ZetaClass zeta(const NCConfig& config, const StratumSelection& sel, const ManifestationChain& chain) {
  ChowClass c = manifest(integrate_class(config.zeta_form(), sel), chain);
  RationalFunction d = c.degree();
  return {c, d, rational_poles(d)};
}

ZetaDegree zeta(const DegreeConfig& config, const StratumSelection& sel) {
  RationalFunction d = integrate_degree(config.zeta_form(), sel);
  return {d, rational_poles(d)};
}

ChowClass csm_stratum(const NCConfig& config, Subset stratum) {
  ChowClass c = log_chern(config);
  for (std::size_t i = 0; i < config.size(); ++i)
    if (contains_index(stratum, i)) c *= config.components()[i].cls;
  return c;
}

bool is_discrepancy_only(const NCConfig& config) {
  for (const auto& c : config.components()) {
    if (!c.mult.value.is_constant()) return false;
    if (c.mult.has_decomposition() && !c.mult.a->is_zero()) return false;
  }
  return true;
}

ChowClass csm_set(const NCConfig& config, const StratumSelection& sel, const ManifestationChain& chain) {
  if (!is_discrepancy_only(config))
    throw PreconditionViolated("CSM classes need discrepancy-only multiplicities (a = 0)");
  return manifest(integrate_class(config, sel), chain);
}

const RationalFunction& ConstructibleFunction::at(const std::string& stratum) const {
  for (const auto& [name, value] : values)
    if (name == stratum) return value;
  throw ConfigError("unknown base stratum '" + stratum + "'");
}

RationalFunction ConstructibleFunction::integral(const std::vector<std::pair<std::string, Rational>>& strata) const {
  RationalFunction sum;
  for (const auto& [name, chi] : strata) sum += at(name) * RationalFunction(chi);
  return sum;
}

std::string ConstructibleFunction::to_string() const {
  std::string out;
  for (const auto& [name, value] : values) out += name + ": " + value.to_string() + "\n";
  return out;
}

ConstructibleFunction ix_function(const FiberedConfig& config, const StratumSelection& sel) {
  if (sel.universe() != config.names) throw UniverseMismatch("selection does not match the configuration");
  config.validate();
  ConstructibleFunction f;
  for (std::size_t t = 0; t < config.base_strata.size(); ++t) {
    RationalFunction value;
    for (Subset s : sel.strata()) {
      auto it = config.fiber_chi.find({t, s});
      if (it == config.fiber_chi.end() || it->second.is_zero()) continue;
      RationalFunction term(it->second);
      for (std::size_t i = 0; i < config.names.size(); ++i)
        if (contains_index(s, i)) term /= one_plus(config.mults[i], config.names[i]);
      value += term;
    }
    f.values.emplace_back(config.base_strata[t].first, std::move(value));
  }
  return f;
}

ChowClass stringy_class(const NCConfig& config, const ManifestationChain& chain) {
  if (!is_discrepancy_only(config))
    throw PreconditionViolated("stringy classes need discrepancy-only multiplicities (a = 0)");
  return manifest(integrate_class(config, StratumSelection::whole(config.names())), chain);
}

Rational stringy_hypersurface_coefficient(int d, int k, Flavor flavor) {
  if (d < 1 || k < 1) throw PreconditionViolated("need d >= 1 and k >= 1");
  Rational t = (Rational(1 - k).pow(static_cast<unsigned>(d + 1)) - Rational(1)) / Rational(k);
  if (flavor == Flavor::Omega) return (t + Rational(1)) / Rational(d);
  if (k >= d + 1) throw NotLogTerminal("omega flavor needs k < d+1");
  return (t + Rational(k)) / Rational(d + 1 - k);
}

ChowClass stringy_hypersurface(int n, int d, int k, const ChowClass& csm_x, const ChowClass& cb, Flavor flavor) {
  if (csm_x.ring() != cb.ring()) throw RingMismatch("csm_X and c(B) live in different rings");
  if (n != csm_x.ring()->dimension()) throw PreconditionViolated("n does not match the ring dimension");
  return csm_x + cb * RationalFunction(stringy_hypersurface_coefficient(d, k, flavor));
}

ChowClass divisor_action(const ChowClass& div, const ChowClass& c) {
  if (div.ring() != c.ring()) throw RingMismatch("divisor and class live in different rings");
  if (!div.is_pure_codim(1)) throw NotADivisor("divisor action needs a codimension-1 class");
  return div * c;
}

ChowClass integrate_alternating(const NCConfig& config) {
  const auto& comps = config.components();
  ChowClass tv = config.ring()->tangent_chern();
  std::vector<ChowClass> local;
  std::vector<RationalFunction> weight;
  for (const auto& c : comps) {
    local.push_back(c.cls * one_plus_class(c.cls).inverse());
    weight.push_back(-c.mult.value / one_plus(c.mult, c.name));
  }
  ChowClass sum = config.ring()->zero();
  const Subset full = comps.empty() ? 0 : static_cast<Subset>((std::uint64_t{1} << comps.size()) - 1);
  for (Subset s = 0;; ++s) {
    ChowClass term = tv;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (contains_index(s, i)) term = term * local[i] * weight[i];
    sum += term;
    if (s == full) break;
  }
  return sum;
}

ChowClass integrate_weighted(const NCConfig& config) {
  const auto& comps = config.components();
  ChowClass tv = config.ring()->tangent_chern();
  RationalFunction norm = 1;
  std::vector<ChowClass> inv;
  for (const auto& c : comps) {
    norm *= one_plus(c.mult, c.name);
    inv.push_back(one_plus_class(c.cls).inverse());
  }
  ChowClass sum = config.ring()->zero();
  const Subset full = comps.empty() ? 0 : static_cast<Subset>((std::uint64_t{1} << comps.size()) - 1);
  for (Subset s = 0;; ++s) {
    ChowClass term = tv;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (contains_index(s, i)) term = term * inv[i] * comps[i].mult.value;
    sum += term;
    if (s == full) break;
  }
  return sum * norm.inverse();
}

} // namespace celint
