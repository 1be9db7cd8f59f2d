#pragma once

#include "celint/model.hpp"
#include "celint/ring_json.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace celint {

/// Everything a configuration file can describe. Class-level data needs a
/// ring; degree-level and fibered data are purely combinatorial and may
/// appear on their own or next to the class-level data for the same
/// components.
struct Problem {
  std::vector<std::string> names;
  std::optional<LoadedRing> ring;
  std::optional<NCConfig> config;
  std::optional<DegreeConfig> degree;
  std::optional<FiberedConfig> fibered;
  std::optional<StratumSelection> selection;
  /// Named manifestation chains, maps applied in order.
  std::map<std::string, std::vector<MapPtr>> chains;
  Json doc;
  std::filesystem::path dir;

  /// Declared selection, or the whole space.
  StratumSelection selection_or_whole() const;
};

Problem problem_from_json(const Json& j, const std::filesystem::path& dir = {});
Problem load_problem(const std::filesystem::path& path);

/// "m", "1+2*m", 3, "1/2" or {"a": 1, "k": 0}.
Multiplicity multiplicity_from_json(const Json& j);
Json multiplicity_to_json(const Multiplicity& m);

/// {"whole": true}, {"closed": [...]}, {"strata": [[...], ...]}, or the
/// combinators {"union"|"intersection"|"difference": [a, b]},
/// {"complement": a}.
StratumSelection selection_from_json(const Json& j, const std::vector<std::string>& names);

/// Command-line form: "whole", "closed:E1,E2", "strata:E1;E1,E2;" (an empty
/// item is the dense stratum), "none".
StratumSelection selection_from_text(const std::string& text, const std::vector<std::string>& names);

/// "D,E3" -> mask over names; "" is the empty set.
Subset subset_from_text(const std::string& text, const std::vector<std::string>& names);

std::vector<MapPtr> chain_from_json(const Json& j, const LoadedRing& ring, const std::filesystem::path& dir);

} // namespace celint
