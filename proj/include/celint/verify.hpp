#pragma once

#include "celint/celestial.hpp"
#include "celint/ring_json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace celint {

struct CheckReport {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::string context;
};

Json report_to_json(const CheckReport& r);
/// "PASS name: context" or "FAIL name: context: lhs != rhs".
std::string report_line(const CheckReport& r);

/// Equality of classes that may live in different ring objects with the same
/// basis (e.g. the same fixture loaded twice).
bool same_class(const ChowClass& a, const ChowClass& b);

/// Push-forward of the blown-up integral against the original integral.
CheckReport check_key(const NCConfig& config, const StratumSelection& sel, const BlowupStep& step);

/// An integral on a resolving ring together with the chain to the variety
/// it is manifested on.
struct Side {
  NCConfig config;
  ManifestationChain chain;
};

/// Both configurations live on a common resolving ring and carry the same
/// multiplicity divisor sum m_j E_j (the Y side encodes D + K_rho pulled
/// back plus its own relative canonical divisor). Compares the two
/// manifestations on X. PreconditionViolated if the rings or the
/// multiplicity divisors differ.
CheckReport check_cov(const Side& x, const Side& y);

/// Degree sums before and after the blow-up over the selection.
CheckReport check_denloe(const DegreeConfig& config, const StratumSelection& sel, const BlowupStep& step);
/// The same over the blown-up point alone: 1/prod_{j in contains}(1+m_j)
/// against the sum over the strata of the new component.
CheckReport check_denloe_center(const DegreeConfig& config, const BlowupStep& step);

/// The three whole-space forms agree.
CheckReport check_altexp(const NCConfig& config);

struct SpellSide {
  NCConfig config;
  ManifestationChain chain;
  ChowClass d;
  ChowClass k;
};

/// Integrals of 1(D_X), 1(D_Y) at the common ring, and
/// (c1(X) - D_Y)^i and (c1(Y) - D_X)^i times them, with c1 pulled back from
/// the end of each chain. PreconditionViolated unless K_X + D_X = K_Y + D_Y
/// and each configuration's multiplicity divisor is its K + D.
CheckReport check_spell_elgen(const SpellSide& x, const SpellSide& y, int i);

/// Identities (2)-(5) for the blow-up of base at a point; (5) needs a
/// divisor class through the point.
CheckReport check_necfacts(const RingPtr& base, const std::optional<ChowClass>& divisor = std::nullopt);

/// Degrees of the integrals of 1(K) for the given representatives; when
/// cy_chi is set, passes iff the set is {cy_chi}.
CheckReport check_can_degree(const std::vector<Side>& representatives, const std::optional<Rational>& cy_chi);

/// Sum m_j E_j.
ChowClass multiplicity_divisor(const NCConfig& config);

struct SuiteOptions {
  std::uint64_t seed = 0;
  int instances = 100;
  int jobs = 1;
  /// Draw multiplicities from [-5, 5] minus {-1} instead of (-1, 5].
  bool wide = false;
};

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckReport> reports;

  bool passed() const;
  std::size_t failures() const;
};

std::vector<std::string> suite_names();
/// Runs one randomized suite; instances are independent and deterministic
/// in (seed, suite, index), so the result does not depend on jobs.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

/// CELINT_SEED if set, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback = 20240521);

} // namespace celint
