#include "celint/ring_json.hpp"

#include "celint/catalog.hpp"
#include "celint/errors.hpp"

#include <fstream>

namespace celint {

namespace fs = std::filesystem;

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string(what) + " needs a \"" + key + "\" entry");
  return j.at(key);
}

int require_int(const Json& j, const char* key, const char* what) {
  const Json& v = require(j, key, what);
  if (!v.is_number_integer()) throw ConfigError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string as_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ConfigError(what + " must be a string or an integer");
}

Rational as_rational(const Json& j, const std::string& what) {
  try {
    return Rational::parse(as_string(j, what));
  } catch (const ParseError&) {
    throw ConfigError(what + " is not a rational number");
  }
}

std::string join_terms(const Json& j, const std::string& what) {
  if (!j.is_array()) return as_string(j, what);
  std::string out;
  for (const auto& t : j) {
    if (!out.empty()) out += " + ";
    out += "(" + as_string(t, what) + ")";
  }
  return out.empty() ? "0" : out;
}

RingPtr literal_from_json(const Json& j) {
  LiteralPresentation p;
  p.dimension = require_int(j, "dim", "literal ring");
  const Json& basis = require(j, "basis", "literal ring");
  if (!basis.is_array()) throw ConfigError("literal ring: \"basis\" must be a list per codimension");
  for (const auto& level : basis) {
    std::vector<std::string> names;
    if (level.is_string())
      names.push_back(level.get<std::string>());
    else if (level.is_array())
      for (const auto& n : level) names.push_back(as_string(n, "basis name"));
    else
      throw ConfigError("literal ring: each basis entry must be a list of names");
    p.basis_by_codim.push_back(std::move(names));
  }
  if (j.contains("products")) {
    const Json& prods = j.at("products");
    if (!prods.is_object()) throw ConfigError("literal ring: \"products\" must be an object");
    for (const auto& [left, row] : prods.items()) {
      if (!row.is_object()) throw ConfigError("literal ring: products of '" + left + "' must be an object");
      for (const auto& [right, value] : row.items())
        p.products.push_back({{left, right}, as_string(value, "product " + left + "*" + right)});
    }
  }
  const Json& degree = require(j, "degree", "literal ring");
  if (!degree.is_object()) throw ConfigError("literal ring: \"degree\" must be an object");
  for (const auto& [name, value] : degree.items()) p.degree[name] = as_rational(value, "degree of '" + name + "'");
  p.tangent_chern = join_terms(require(j, "chern", "literal ring"), "chern");
  return ring_literal(p);
}

} // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("'" + path.string() + "': " + e.what());
  }
}

LoadedRing ring_from_json(const Json& j, const fs::path& dir) {
  if (j.is_string()) {
    fs::path path = dir / j.get<std::string>();
    return ring_from_json(read_json_file(path), path.parent_path());
  }
  if (!j.is_object()) throw ConfigError("ring must be an object or a path");
  const std::string type = as_string(require(j, "type", "ring"), "ring type");
  if (type == "projective") {
    std::string var = j.contains("var") ? as_string(j.at("var"), "var") : "h";
    return {ring_projective(require_int(j, "n", "projective ring"), var), nullptr, {}};
  }
  if (type == "point") return {ring_point(), nullptr, {}};
  if (type == "product") {
    const Json& factors = require(j, "factors", "product ring");
    if (!factors.is_array() || factors.empty()) throw ConfigError("product ring needs a nonempty factor list");
    RingPtr acc;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      Json f = factors[k];
      // Unnamed projective factors get distinct variables h1, h2, ...
      if (f.is_object() && f.value("type", "") == "projective" && !f.contains("var"))
        f["var"] = "h" + std::to_string(k + 1);
      RingPtr r = ring_from_json(f, dir).ring;
      acc = acc ? ring_product(acc, r) : r;
    }
    return {acc, nullptr, {}};
  }
  if (type == "blowup_point") {
    LoadedRing base = ring_from_json(require(j, "base", "blowup_point ring"), dir);
    int times = j.contains("times") ? require_int(j, "times", "blowup_point ring") : 1;
    if (times < 1) throw ConfigError("blowup_point: \"times\" must be positive");
    std::vector<std::string> names;
    if (j.contains("names")) {
      for (const auto& n : j.at("names")) names.push_back(as_string(n, "exceptional name"));
      if (static_cast<int>(names.size()) != times) throw ConfigError("blowup_point: one name per blow-up");
    } else {
      for (int k = 1; k <= times; ++k) names.push_back(times == 1 ? "e" : "e" + std::to_string(k));
    }
    LoadedRing out{base.ring, nullptr, {}};
    std::vector<MapPtr> maps;
    for (int k = 0; k < times; ++k) {
      Blowup b = ring_blowup_point(out.ring, names[k]);
      maps.insert(maps.begin(), b.map);
      for (auto& e : out.exceptionals) e = b.map->pull(e);
      out.exceptionals.push_back(b.exceptional);
      out.ring = b.ring;
    }
    out.to_base = compose(maps);
    return out;
  }
  if (type == "literal") return {literal_from_json(j), nullptr, {}};
  throw ConfigError("unknown ring type '" + type + "'");
}

Json ring_to_json(const ChowRing& ring) {
  LiteralPresentation p = to_literal(ring);
  Json j;
  j["type"] = "literal";
  j["dim"] = p.dimension;
  j["basis"] = p.basis_by_codim;
  Json prods = Json::object();
  for (const auto& [pair, value] : p.products) prods[pair.first][pair.second] = value;
  j["products"] = prods;
  Json deg = Json::object();
  for (const auto& [name, value] : p.degree) deg[name] = value.to_string();
  j["degree"] = deg;
  j["chern"] = p.tangent_chern;
  return j;
}

MapPtr map_from_json(const RingPtr& source, const RingPtr& target, const Json& j) {
  std::vector<std::string> src_names, tgt_names;
  for (const auto& b : source->basis()) src_names.push_back(b.name);
  for (const auto& b : target->basis()) tgt_names.push_back(b.name);
  auto table = [](const Json& entries, const RingPtr& from, std::span<const std::string> to_names,
                  const char* what) {
    std::vector<SparseVector> out(from->size());
    if (entries.is_null()) return out;
    if (!entries.is_object()) throw ConfigError(std::string("map: \"") + what + "\" must be an object");
    for (const auto& [name, value] : entries.items()) {
      std::size_t i = from->index_of(name);
      auto v = parse_linear_combination(to_names, 0, as_string(value, std::string(what) + " of '" + name + "'"));
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out[i].push_back({k, v[k]});
    }
    return out;
  };
  auto forward = table(j.value("forward", Json()), source, tgt_names, "forward");
  auto pullback = table(j.value("pullback", Json()), target, src_names, "pullback");
  if (pullback[0].empty()) pullback[0] = {{0, Rational(1)}};
  if (forward[0].empty()) forward[0] = {{0, Rational(1)}};
  return PushForwardMap::create(source, target, std::move(forward), std::move(pullback));
}

MapPtr map_from_json(const RingPtr& source, const Json& j, const fs::path& dir) {
  LoadedRing target = ring_from_json(require(j, "target", "map"), dir);
  return map_from_json(source, target.ring, j);
}

Json class_to_json(const ChowClass& c) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.ring()->size(); ++i) {
    if (c.coeff(i).is_zero()) continue;
    terms.push_back({{"basis", c.ring()->element(i).name}, {"coeff", c.coeff(i).to_string()}});
  }
  return {{"class", c.to_string()}, {"terms", terms}};
}

ChowClass class_from_json(const RingPtr& ring, const Json& j) {
  if (j.is_string()) return ChowClass::parse(ring, j.get<std::string>());
  if (j.is_object() && j.contains("terms")) {
    std::vector<RationalFunction> coeffs(ring->size());
    for (const auto& t : j.at("terms"))
      coeffs[ring->index_of(as_string(require(t, "basis", "term"), "basis"))] +=
          RationalFunction::parse(as_string(require(t, "coeff", "term"), "coeff"));
    return ChowClass(ring, std::move(coeffs));
  }
  if (j.is_object() && j.contains("class")) return ChowClass::parse(ring, j.at("class").get<std::string>());
  throw ConfigError("class must be a string or an object with \"terms\"");
}

} // namespace celint
