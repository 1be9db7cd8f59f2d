#include "celint/model.hpp"

#include "celint/catalog.hpp"
#include "celint/errors.hpp"

#include <algorithm>
#include <bit>

namespace celint {

int subset_size(Subset s) { return std::popcount(s); }

Multiplicity Multiplicity::decomposed(Rational a, Rational k) {
  RationalFunction v = RationalFunction::m() * RationalFunction(a) + RationalFunction(k);
  return {std::move(v), std::move(a), std::move(k)};
}

Multiplicity center_multiplicity(int d, const std::vector<const Multiplicity*>& through) {
  Rational a = 0, k = d - 1;
  RationalFunction v = Rational(d - 1);
  bool decomposed = true;
  for (const auto* m : through) {
    v += m->value;
    if (m->has_decomposition()) {
      a += *m->a;
      k += *m->k;
    } else {
      decomposed = false;
    }
  }
  if (decomposed) return {v, a, k};
  return Multiplicity::of(v);
}

namespace {

void check_multiplicity(const std::string& name, const Multiplicity& m) {
  if ((m.value + RationalFunction(1)).is_zero())
    throw UndefinedMultiplicity("1 + m vanishes identically on '" + name + "'");
  if (m.has_decomposition() && !(m.value == Multiplicity::decomposed(*m.a, *m.k).value))
    throw ConfigError("multiplicity of '" + name + "' does not match its decomposition");
}

void check_universe_size(std::size_t n) {
  if (n > max_components) throw ConfigError("too many components (at most 30)");
}

} // namespace

NCConfig::NCConfig(RingPtr ring, std::vector<Component> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  check_universe_size(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.cls.ring() != ring_) throw RingMismatch("component '" + c.name + "' lives in another ring");
    if (!c.cls.is_pure_codim(1)) throw NotADivisor("component '" + c.name + "' is not a codimension-1 class");
    for (const auto& coeff : c.cls.coeffs())
      if (!coeff.is_constant()) throw NotADivisor("component '" + c.name + "' has a class depending on m");
    for (std::size_t j = 0; j < i; ++j)
      if (components_[j].name == c.name) throw ConfigError("duplicate component name '" + c.name + "'");
    check_multiplicity(c.name, c.mult);
  }
}

std::vector<std::string> NCConfig::names() const {
  std::vector<std::string> out;
  for (const auto& c : components_) out.push_back(c.name);
  return out;
}

std::size_t NCConfig::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].name == name) return i;
  throw ConfigError("unknown component '" + name + "'");
}

Regime NCConfig::regime() const {
  for (const auto& c : components_)
    if (c.mult.value.is_constant() && c.mult.value.constant_value() <= Rational(-1)) return Regime::OutsideLogTerminal;
  return Regime::LogTerminal;
}

NCConfig NCConfig::with_multiplicities(std::vector<Multiplicity> mults) const {
  if (mults.size() != components_.size()) throw std::invalid_argument("one multiplicity per component");
  auto comps = components_;
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i].mult = std::move(mults[i]);
  return NCConfig(ring_, std::move(comps));
}

NCConfig NCConfig::zeta_form() const {
  std::vector<Multiplicity> mults;
  for (const auto& c : components_) {
    if (!c.mult.has_decomposition())
      throw MissingDecomposition("component '" + c.name + "' has no decomposition a*m + k");
    mults.push_back(Multiplicity::decomposed(*c.mult.a, *c.mult.k));
  }
  return with_multiplicities(std::move(mults));
}

NCConfig NCConfig::evaluated(const Rational& x) const {
  std::vector<Multiplicity> mults;
  for (const auto& c : components_) mults.push_back(Multiplicity::of(c.mult.value.evaluate(x)));
  return with_multiplicities(std::move(mults));
}

StratumSelection::StratumSelection(std::vector<std::string> universe, std::set<Subset> strata)
    : universe_(std::move(universe)), strata_(std::move(strata)) {
  check_universe_size(universe_.size());
  for (Subset s : strata_)
    if (s & ~full_mask()) throw ConfigError("stratum uses an undeclared component");
}

Subset StratumSelection::full_mask() const {
  return universe_.empty() ? 0 : static_cast<Subset>((std::uint64_t{1} << universe_.size()) - 1);
}

StratumSelection StratumSelection::whole(std::vector<std::string> universe) {
  StratumSelection s(std::move(universe));
  for (Subset i = 0;; ++i) {
    s.strata_.insert(i);
    if (i == s.full_mask()) break;
  }
  return s;
}

StratumSelection StratumSelection::from_closed(std::vector<std::string> universe, Subset closed) {
  StratumSelection s(std::move(universe));
  if (closed & ~s.full_mask()) throw ConfigError("closed set uses an undeclared component");
  for (Subset i = 0;; ++i) {
    if (i & closed) s.strata_.insert(i);
    if (i == s.full_mask()) break;
  }
  return s;
}

StratumSelection StratumSelection::from_closed(std::vector<std::string> universe,
                                               const std::vector<std::string>& names) {
  Subset closed = 0;
  for (const auto& n : names) {
    auto it = std::find(universe.begin(), universe.end(), n);
    if (it == universe.end()) throw ConfigError("unknown component '" + n + "' in selection");
    closed |= singleton(it - universe.begin());
  }
  return from_closed(std::move(universe), closed);
}

void StratumSelection::require_same_universe(const StratumSelection& o) const {
  if (universe_ != o.universe_) throw UniverseMismatch("selections over different component sets");
}

StratumSelection StratumSelection::operator|(const StratumSelection& o) const {
  require_same_universe(o);
  auto s = strata_;
  s.insert(o.strata_.begin(), o.strata_.end());
  return StratumSelection(universe_, std::move(s));
}

StratumSelection StratumSelection::operator&(const StratumSelection& o) const {
  require_same_universe(o);
  std::set<Subset> s;
  for (Subset i : strata_)
    if (o.contains(i)) s.insert(i);
  return StratumSelection(universe_, std::move(s));
}

StratumSelection StratumSelection::operator-(const StratumSelection& o) const {
  require_same_universe(o);
  std::set<Subset> s;
  for (Subset i : strata_)
    if (!o.contains(i)) s.insert(i);
  return StratumSelection(universe_, std::move(s));
}

StratumSelection StratumSelection::complement() const { return whole(universe_) - *this; }

std::string StratumSelection::subset_name(Subset s) const {
  std::string out = "{";
  for (std::size_t j = 0; j < universe_.size(); ++j) {
    if (!contains_index(s, j)) continue;
    if (out.size() > 1) out += ",";
    out += universe_[j];
  }
  return out + "}";
}

std::string StratumSelection::to_string() const {
  std::string out;
  for (Subset s : strata_) {
    if (!out.empty()) out += ", ";
    out += subset_name(s);
  }
  return out.empty() ? "(empty)" : out;
}

std::size_t DegreeConfig::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw ConfigError("unknown component '" + name + "'");
}

DegreeConfig DegreeConfig::zeta_form() const {
  DegreeConfig out = *this;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!mults[i].has_decomposition())
      throw MissingDecomposition("component '" + names[i] + "' has no decomposition a*m + k");
    out.mults[i] = Multiplicity::decomposed(*mults[i].a, *mults[i].k);
  }
  return out;
}

void DegreeConfig::validate() const {
  check_universe_size(names.size());
  if (mults.size() != names.size()) throw ConfigError("one multiplicity per component");
  if (!chi_closed.count(0)) throw ConfigError("Euler characteristic table needs an entry for V");
  Subset full = names.empty() ? 0 : static_cast<Subset>((std::uint64_t{1} << names.size()) - 1);
  for (const auto& [s, chi] : chi_closed)
    if (s & ~full) throw ConfigError("Euler characteristic entry uses an undeclared component");
  for (std::size_t i = 0; i < names.size(); ++i) check_multiplicity(names[i], mults[i]);
}

std::map<Subset, Rational> chi_mobius(const std::map<Subset, Rational>& closed, std::size_t n) {
  check_universe_size(n);
  std::map<Subset, Rational> open;
  for (const auto& [s, chi] : closed) {
    // E_s contributes to every stratum E_I° with I ⊆ s.
    for (Subset i = s;; i = (i - 1) & s) {
      Rational sign = (subset_size(s) - subset_size(i)) % 2 == 0 ? 1 : -1;
      open[i] += sign * chi;
      if (i == 0) break;
    }
  }
  for (auto it = open.begin(); it != open.end();) it = it->second.is_zero() && it->first != 0 ? open.erase(it) : ++it;
  (void)n;
  return open;
}

std::map<Subset, Rational> chi_closed_from_open(const std::map<Subset, Rational>& open, std::size_t n) {
  check_universe_size(n);
  std::map<Subset, Rational> closed;
  for (const auto& [s, chi] : open) {
    for (Subset i = s;; i = (i - 1) & s) {
      closed[i] += chi;
      if (i == 0) break;
    }
  }
  for (auto it = closed.begin(); it != closed.end();)
    it = it->second.is_zero() && it->first != 0 ? closed.erase(it) : ++it;
  return closed;
}

void FiberedConfig::validate() const {
  check_universe_size(names.size());
  if (mults.size() != names.size()) throw ConfigError("one multiplicity per component");
  Subset full = names.empty() ? 0 : static_cast<Subset>((std::uint64_t{1} << names.size()) - 1);
  for (std::size_t i = 0; i < base_strata.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (base_strata[i].first == base_strata[j].first)
        throw ConfigError("duplicate base stratum '" + base_strata[i].first + "'");
  for (const auto& [key, chi] : fiber_chi) {
    if (key.first >= base_strata.size()) throw ConfigError("fiber entry refers to an unknown base stratum");
    if (key.second & ~full) throw ConfigError("fiber entry uses an undeclared component");
  }
  for (std::size_t i = 0; i < names.size(); ++i) check_multiplicity(names[i], mults[i]);
}

StratumSelection transport_selection(const StratumSelection& sel, Subset contains, const std::string& new_name) {
  std::vector<std::string> universe{new_name};
  universe.insert(universe.end(), sel.universe().begin(), sel.universe().end());
  std::set<Subset> strata;
  for (Subset s : sel.strata()) strata.insert(shift_up(s));
  if (sel.contains(contains)) {
    Subset full_old = sel.full_mask();
    for (Subset s = 0;; ++s) {
      strata.insert(shift_up(s) | 1u);
      if (s == full_old) break;
    }
  }
  return StratumSelection(std::move(universe), std::move(strata));
}

namespace {

std::string fresh_basis_name(const ChowRing& ring, const std::string& wanted) {
  if (!wanted.empty()) return wanted;
  if (!ring.find("e")) return "e";
  for (int k = 1;; ++k) {
    std::string n = "e" + std::to_string(k);
    if (!ring.find(n) && !ring.find(n + "^2")) return n;
  }
}

void check_step(std::size_t n_components, const BlowupStep& step, int d) {
  if (step.contains >> n_components) throw ConfigError("blow-up center refers to an undeclared component");
  if (subset_size(step.contains) > d)
    throw NormalCrossingViolation("more components through the center than the dimension");
}

} // namespace

Transported blowup_transport(const NCConfig& config, const BlowupStep& step, const StratumSelection& sel) {
  if (sel.universe() != config.names()) throw UniverseMismatch("selection does not match the configuration");
  const int d = config.ring()->dimension();
  check_step(config.size(), step, d);
  Blowup b = ring_blowup_point(config.ring(), fresh_basis_name(*config.ring(), step.basis_name));

  std::vector<const Multiplicity*> through;
  for (std::size_t j = 0; j < config.size(); ++j)
    if (contains_index(step.contains, j)) through.push_back(&config.components()[j].mult);

  std::vector<Component> comps;
  comps.push_back({step.name, b.exceptional, center_multiplicity(d, through)});
  for (std::size_t j = 0; j < config.size(); ++j) {
    const auto& c = config.components()[j];
    ChowClass cls = contains_index(step.contains, j) ? proper_transform(*b.map, b.exceptional, c.cls, 1)
                                                     : b.map->pull(c.cls);
    comps.push_back({c.name, std::move(cls), c.mult});
  }
  NCConfig out(b.ring, std::move(comps));
  return {std::move(out), transport_selection(sel, step.contains, step.name), b.map, b.exceptional};
}

TransportedDegree blowup_transport_degree(const DegreeConfig& config, const BlowupStep& step,
                                          const StratumSelection& sel) {
  if (config.dimension != 2) throw UnsupportedCatalog("degree-level blow-up transport is implemented for surfaces");
  if (sel.universe() != config.names) throw UniverseMismatch("selection does not match the configuration");
  check_step(config.names.size(), step, 2);
  auto chi = [&](Subset s) {
    auto it = config.chi_closed.find(s);
    return it == config.chi_closed.end() ? Rational(0) : it->second;
  };
  if (step.contains != 0 && chi(step.contains).is_zero())
    throw NormalCrossingViolation("the components through the center do not meet");

  DegreeConfig out;
  out.dimension = 2;
  out.names.push_back(step.name);
  out.names.insert(out.names.end(), config.names.begin(), config.names.end());
  std::vector<const Multiplicity*> through;
  for (std::size_t j = 0; j < config.names.size(); ++j)
    if (contains_index(step.contains, j)) through.push_back(&config.mults[j]);
  out.mults.push_back(center_multiplicity(2, through));
  out.mults.insert(out.mults.end(), config.mults.begin(), config.mults.end());

  for (const auto& [s, value] : config.chi_closed) out.chi_closed[shift_up(s)] = value;
  out.chi_closed[0] += 1;
  out.chi_closed[1] = 2;
  for (std::size_t j = 0; j < config.names.size(); ++j)
    if (contains_index(step.contains, j)) out.chi_closed[singleton(j + 1) | 1u] = 1;
  if (subset_size(step.contains) == 2) {
    Subset pair = shift_up(step.contains);
    out.chi_closed[pair] -= 1;
    if (out.chi_closed[pair].is_zero()) out.chi_closed.erase(pair);
  }
  out.validate();
  return {std::move(out), transport_selection(sel, step.contains, step.name)};
}

} // namespace celint
