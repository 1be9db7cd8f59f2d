#pragma once

#include "celint/chow_class.hpp"
#include "celint/push_forward.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <vector>

namespace celint {

using Json = nlohmann::json;

/// A ring read from JSON. Blow-up rings also carry the composite map to the
/// ring they were built from and their exceptional classes (in creation
/// order).
struct LoadedRing {
  RingPtr ring;
  MapPtr to_base;
  std::vector<ChowClass> exceptionals;
};

/// Reads a ring document. A string value is a path to a ring file, resolved
/// against `dir`. Throws ConfigError or PresentationError.
LoadedRing ring_from_json(const Json& j, const std::filesystem::path& dir = {});

/// Literal form of any ring.
Json ring_to_json(const ChowRing& ring);

/// A literal map {"target": ring, "forward": {...}, "pullback": {...}} out of
/// `source`. Missing forward entries are zero; missing pullback entries are
/// zero except for the fundamental class.
MapPtr map_from_json(const RingPtr& source, const Json& j, const std::filesystem::path& dir = {});
MapPtr map_from_json(const RingPtr& source, const RingPtr& target, const Json& j);

Json class_to_json(const ChowClass& c);
ChowClass class_from_json(const RingPtr& ring, const Json& j);

Json read_json_file(const std::filesystem::path& path);

} // namespace celint
