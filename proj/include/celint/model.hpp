#pragma once

#include "celint/chow_class.hpp"
#include "celint/push_forward.hpp"
#include "celint/rational_function.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace celint {

/// Subset of the component index set J, as a bit mask (bit j = component j).
using Subset = std::uint32_t;
inline constexpr std::size_t max_components = 30;

inline bool contains_index(Subset s, std::size_t j) { return (s >> j) & 1u; }
inline Subset singleton(std::size_t j) { return Subset{1} << j; }
int subset_size(Subset s);

/// Multiplicity m_j, optionally with its decomposition a_j*m + k_j (order of
/// the integrand divisor and discrepancy).
struct Multiplicity {
  RationalFunction value;
  std::optional<Rational> a;
  std::optional<Rational> k;

  static Multiplicity of(RationalFunction v) { return {std::move(v), std::nullopt, std::nullopt}; }
  static Multiplicity decomposed(Rational a, Rational k);
  bool has_decomposition() const { return a.has_value() && k.has_value(); }
};

/// Sum used by the blow-up rule m_0 = (d-1) + sum m_j; keeps the
/// decomposition when every summand has one.
Multiplicity center_multiplicity(int d, const std::vector<const Multiplicity*>& through);

enum class Regime { LogTerminal, OutsideLogTerminal };

struct Component {
  std::string name;
  ChowClass cls;
  Multiplicity mult;
};

/// Resolving object: a ring with named normal-crossing components and their
/// multiplicities. Construction rejects non-divisors (NotADivisor), classes
/// from another ring (RingMismatch) and 1 + m_j = 0 (UndefinedMultiplicity).
class NCConfig {
public:
  NCConfig(RingPtr ring, std::vector<Component> components);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  std::vector<std::string> names() const;
  std::size_t index_of(const std::string& name) const;

  /// OutsideLogTerminal when some constant multiplicity is <= -1.
  Regime regime() const;

  /// Same components with multiplicities replaced.
  NCConfig with_multiplicities(std::vector<Multiplicity> mults) const;
  /// Multiplicities a_j*m + k_j; MissingDecomposition if any is absent.
  NCConfig zeta_form() const;
  /// Multiplicities specialized at m = x.
  NCConfig evaluated(const Rational& x) const;

private:
  RingPtr ring_;
  std::vector<Component> components_;
};

/// A constructible set in canonical form: the family of open strata E_I°
/// it consists of. Strata are subsets of the named universe J.
class StratumSelection {
public:
  explicit StratumSelection(std::vector<std::string> universe, std::set<Subset> strata = {});

  static StratumSelection whole(std::vector<std::string> universe);
  /// {I : I meets L}.
  static StratumSelection from_closed(std::vector<std::string> universe, Subset closed);
  static StratumSelection from_closed(std::vector<std::string> universe, const std::vector<std::string>& names);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::set<Subset>& strata() const { return strata_; }
  bool contains(Subset s) const { return strata_.count(s) > 0; }
  bool empty() const { return strata_.empty(); }
  Subset full_mask() const;

  StratumSelection operator|(const StratumSelection& o) const;
  StratumSelection operator&(const StratumSelection& o) const;
  StratumSelection operator-(const StratumSelection& o) const;
  StratumSelection complement() const;
  friend bool operator==(const StratumSelection&, const StratumSelection&) = default;

  /// "{}, {E1}, {E1,E2}" style listing.
  std::string to_string() const;
  std::string subset_name(Subset s) const;

private:
  void require_same_universe(const StratumSelection& o) const;

  std::vector<std::string> universe_;
  std::set<Subset> strata_;
};

/// Purely combinatorial data: multiplicities and Euler characteristics of
/// closed intersections E_I (the empty set standing for V). Missing
/// nonempty entries are empty intersections.
struct DegreeConfig {
  int dimension = 2;
  std::vector<std::string> names;
  std::vector<Multiplicity> mults;
  std::map<Subset, Rational> chi_closed;

  std::size_t index_of(const std::string& name) const;
  DegreeConfig zeta_form() const;
  void validate() const;
};

/// chi(E_I°) = sum over I' containing I of (-1)^{|I'|-|I|} chi(E_I').
std::map<Subset, Rational> chi_mobius(const std::map<Subset, Rational>& closed, std::size_t n);
/// Inverse: chi(E_I) = sum over I' containing I of chi(E_I'°).
std::map<Subset, Rational> chi_closed_from_open(const std::map<Subset, Rational>& open, std::size_t n);

/// Fiberwise data for I_X: base strata T with chi(T), and
/// chi(E_I° ∩ fiber over a point of T). The fiber Euler characteristic is
/// assumed constant along each stratum.
struct FiberedConfig {
  std::vector<std::string> names;
  std::vector<Multiplicity> mults;
  std::vector<std::pair<std::string, Rational>> base_strata;
  std::map<std::pair<std::size_t, Subset>, Rational> fiber_chi;

  void validate() const;
};

/// Blow-up of a point B. `contains` lists the components through B;
/// `name` names the new component 0 and `basis_name` its class in the ring.
struct BlowupStep {
  Subset contains = 0;
  std::string name = "F0";
  std::string basis_name;
};

struct Transported {
  NCConfig config;
  StratumSelection selection;
  MapPtr map;
  ChowClass exceptional;
};

/// Selection on J ∪ {0} (new component first): strata avoiding 0 keep their
/// membership; strata containing 0 lie over B and are selected iff the
/// stratum of B (= contains) is.
StratumSelection transport_selection(const StratumSelection& sel, Subset contains, const std::string& new_name);

Transported blowup_transport(const NCConfig& config, const BlowupStep& step, const StratumSelection& sel);

struct TransportedDegree {
  DegreeConfig config;
  StratumSelection selection;
};

/// Surface-only dual-graph surgery for a point blow-up.
TransportedDegree blowup_transport_degree(const DegreeConfig& config, const BlowupStep& step,
                                          const StratumSelection& sel);

/// The old components with index shifted by one (new component 0 first).
inline Subset shift_up(Subset s) { return s << 1; }

} // namespace celint
