#pragma once

#include "celint/chow_class.hpp"
#include "celint/model.hpp"
#include "celint/push_forward.hpp"
#include "celint/rational_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace celint {

using ManifestationChain = std::vector<MapPtr>;

/// c(TV(-log E)) = c(TV) / prod (1 + E_j).
ChowClass log_chern(const NCConfig& config);

/// c(TV(-log E)) * sum over I in the selection of prod_{i in I} E_i/(1+m_i).
ChowClass integrate_class(const NCConfig& config, const StratumSelection& sel);

/// Push-forward along the chain; the empty chain is the identity.
ChowClass manifest(const ChowClass& c, const ManifestationChain& chain);

/// sum over I in the selection of chi(E_I°) / prod_{i in I} (1+m_i).
RationalFunction integrate_degree(const DegreeConfig& config, const StratumSelection& sel);

struct ZetaClass {
  ChowClass cls;
  RationalFunction degree;
  PoleReport poles;
};
struct ZetaDegree {
  RationalFunction degree;
  PoleReport poles;
};

/// Integrals with multiplicities a_j*m + k_j (MissingDecomposition otherwise).
ZetaClass zeta(const NCConfig& config, const StratumSelection& sel, const ManifestationChain& chain = {});
ZetaDegree zeta(const DegreeConfig& config, const StratumSelection& sel);

/// c_SM(E_I°) = c(TV(-log E)) * prod_{i in I} E_i.
ChowClass csm_stratum(const NCConfig& config, Subset stratum);

/// c_SM of the selected set, pushed along the chain. Multiplicities must be
/// discrepancies (constants; a_j = 0), else PreconditionViolated.
ChowClass csm_set(const NCConfig& config, const StratumSelection& sel, const ManifestationChain& chain);

struct ConstructibleFunction {
  std::vector<std::pair<std::string, RationalFunction>> values;

  const RationalFunction& at(const std::string& stratum) const;
  /// sum chi(T) * value(T) given the strata Euler characteristics.
  RationalFunction integral(const std::vector<std::pair<std::string, Rational>>& strata) const;
  std::string to_string() const;
};

/// I_X(D,S): value on T = sum over I in sel of chi(E_I° ∩ fiber)/prod (1+m_i).
ConstructibleFunction ix_function(const FiberedConfig& config, const StratumSelection& sel);

/// Identity manifestation of the integral of 1(0) over the whole space;
/// same precondition as csm_set.
ChowClass stringy_class(const NCConfig& config, const ManifestationChain& chain);

enum class Flavor { Omega, omega };

/// Closed-form correction coefficient for a hypersurface with an isolated
/// singularity resolved by one blow-up (ambient dimension d, multiplicity k).
Rational stringy_hypersurface_coefficient(int d, int k, Flavor flavor);

/// csm_X + coefficient * cB. NotLogTerminal for the omega flavor when k >= d+1.
ChowClass stringy_hypersurface(int n, int d, int k, const ChowClass& csm_x, const ChowClass& cb, Flavor flavor);

/// div * c for a codimension-1 class div.
ChowClass divisor_action(const ChowClass& div, const ChowClass& c);

/// Whole-space alternatives:
/// sum_I (-1)^|I| prod_{i in I} m_i/(1+m_i) * c(TV) prod_{i in I} E_i/(1+E_i)
ChowClass integrate_alternating(const NCConfig& config);
/// (1/prod_j (1+m_j)) * sum_I prod_{i in I} m_i * c(TV)/prod_{i in I} (1+E_i)
ChowClass integrate_weighted(const NCConfig& config);

/// Discrepancy-only data: every multiplicity is a constant and any
/// decomposition has a = 0.
bool is_discrepancy_only(const NCConfig& config);

} // namespace celint
