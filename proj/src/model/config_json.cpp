#include "celint/config_json.hpp"

#include "celint/errors.hpp"

#include <algorithm>
#include <sstream>

namespace celint {

namespace fs = std::filesystem;

namespace {

std::string scalar_text(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ConfigError(what + " must be a string or an integer");
}

Rational rational_from_json(const Json& j, const std::string& what) {
  try {
    return Rational::parse(scalar_text(j, what));
  } catch (const ParseError&) {
    throw ConfigError(what + " is not a rational number");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Subset subset_from_list(const Json& j, const std::vector<std::string>& names) {
  if (j.is_string()) return subset_from_text(j.get<std::string>(), names);
  if (!j.is_array()) throw ConfigError("a stratum is a list of component names");
  Subset s = 0;
  for (const auto& n : j) s |= subset_from_text(scalar_text(n, "component name"), names);
  return s;
}

std::map<Subset, Rational> chi_table(const Json& j, const std::vector<std::string>& names, const std::string& what) {
  if (!j.is_object()) throw ConfigError(what + " must be an object");
  std::map<Subset, Rational> out;
  for (const auto& [key, value] : j.items()) {
    Subset s = subset_from_text(key, names);
    if (out.count(s)) throw ConfigError(what + ": duplicate entry for '" + key + "'");
    out[s] = rational_from_json(value, what + " entry '" + key + "'");
  }
  return out;
}

} // namespace

Subset subset_from_text(const std::string& text, const std::vector<std::string>& names) {
  Subset s = 0;
  if (trim(text).empty()) return s;
  for (const auto& part : split(text, ',')) {
    std::string n = trim(part);
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ConfigError("unknown component '" + n + "'");
    s |= singleton(it - names.begin());
  }
  return s;
}

Multiplicity multiplicity_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("k")) throw ConfigError("multiplicity object needs \"a\" and \"k\"");
    return Multiplicity::decomposed(rational_from_json(j.at("a"), "a"), rational_from_json(j.at("k"), "k"));
  }
  try {
    return Multiplicity::of(RationalFunction::parse(scalar_text(j, "multiplicity")));
  } catch (const ParseError& e) {
    throw ConfigError(std::string("multiplicity: ") + e.what());
  }
}

Json multiplicity_to_json(const Multiplicity& m) {
  if (m.has_decomposition()) return {{"a", m.a->to_string()}, {"k", m.k->to_string()}};
  return m.value.to_string();
}

StratumSelection selection_from_json(const Json& j, const std::vector<std::string>& names) {
  if (!j.is_object() || j.size() != 1) throw ConfigError("selection must be an object with exactly one key");
  const auto& [key, value] = *j.items().begin();
  if (key == "whole") {
    if (!value.is_boolean() || !value.get<bool>()) throw ConfigError("selection \"whole\" must be true");
    return StratumSelection::whole(names);
  }
  if (key == "closed") return StratumSelection::from_closed(names, subset_from_list(value, names));
  if (key == "strata") {
    if (!value.is_array()) throw ConfigError("selection \"strata\" must be a list");
    std::set<Subset> strata;
    for (const auto& s : value) strata.insert(subset_from_list(s, names));
    return StratumSelection(names, std::move(strata));
  }
  if (key == "complement") return selection_from_json(value, names).complement();
  if (key == "union" || key == "intersection" || key == "difference") {
    if (!value.is_array() || value.empty()) throw ConfigError("selection \"" + key + "\" needs a list");
    StratumSelection acc = selection_from_json(value[0], names);
    for (std::size_t i = 1; i < value.size(); ++i) {
      StratumSelection next = selection_from_json(value[i], names);
      if (key == "union")
        acc = acc | next;
      else if (key == "intersection")
        acc = acc & next;
      else
        acc = acc - next;
    }
    return acc;
  }
  throw ConfigError("unknown selection kind '" + key + "'");
}

StratumSelection selection_from_text(const std::string& text, const std::vector<std::string>& names) {
  if (text == "whole") return StratumSelection::whole(names);
  if (text == "none") return StratumSelection(names);
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("selection must be whole, none, closed:... or strata:...");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "closed") return StratumSelection::from_closed(names, subset_from_text(rest, names));
  if (kind == "strata") {
    std::set<Subset> strata;
    for (const auto& item : split(rest, ';')) strata.insert(subset_from_text(item, names));
    return StratumSelection(names, std::move(strata));
  }
  throw ConfigError("unknown selection kind '" + kind + "'");
}

std::vector<MapPtr> chain_from_json(const Json& j, const LoadedRing& ring, const fs::path& dir) {
  std::vector<MapPtr> out;
  Json items = j.is_array() ? j : Json::array({j});
  RingPtr current = ring.ring;
  for (const auto& item : items) {
    MapPtr map;
    if (item.is_string() && item.get<std::string>() == "base") {
      if (current != ring.ring || !ring.to_base) throw ConfigError("\"base\" map is only available for blow-up rings");
      map = ring.to_base;
    } else if (item.is_object()) {
      map = map_from_json(current, item, dir);
    } else {
      throw ConfigError("a chain entry is \"base\" or a map object");
    }
    current = map->target();
    out.push_back(std::move(map));
  }
  return out;
}

StratumSelection Problem::selection_or_whole() const {
  return selection ? *selection : StratumSelection::whole(names);
}

Problem problem_from_json(const Json& j, const fs::path& dir) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  Problem p;
  p.doc = j;
  p.dir = dir;

  std::vector<Multiplicity> mults;
  std::vector<std::string> class_texts;
  if (j.contains("components")) {
    const Json& comps = j.at("components");
    if (!comps.is_array()) throw ConfigError("\"components\" must be a list");
    for (const auto& c : comps) {
      if (!c.is_object() || !c.contains("name")) throw ConfigError("each component needs a \"name\"");
      p.names.push_back(scalar_text(c.at("name"), "component name"));
      mults.push_back(c.contains("mult") ? multiplicity_from_json(c.at("mult")) : Multiplicity::of(0));
      class_texts.push_back(c.contains("class") ? scalar_text(c.at("class"), "component class") : "");
    }
  }

  if (j.contains("ring")) {
    p.ring = ring_from_json(j.at("ring"), dir);
    std::vector<Component> comps;
    for (std::size_t i = 0; i < p.names.size(); ++i) {
      if (class_texts[i].empty()) throw ConfigError("component '" + p.names[i] + "' needs a \"class\"");
      comps.push_back({p.names[i], ChowClass::parse(p.ring->ring, class_texts[i]), mults[i]});
    }
    p.config.emplace(p.ring->ring, std::move(comps));
    if (j.contains("chains")) {
      const Json& chains = j.at("chains");
      if (!chains.is_object()) throw ConfigError("\"chains\" must be an object");
      for (const auto& [name, value] : chains.items()) p.chains[name] = chain_from_json(value, *p.ring, dir);
    }
  }

  if (j.contains("chi_closed")) {
    DegreeConfig d;
    d.dimension = j.value("dim", p.ring ? p.ring->ring->dimension() : 2);
    d.names = p.names;
    d.mults = mults;
    d.chi_closed = chi_table(j.at("chi_closed"), p.names, "chi_closed");
    d.validate();
    p.degree = std::move(d);
  }

  if (j.contains("fibered")) {
    const Json& f = j.at("fibered");
    FiberedConfig fc;
    fc.names = p.names;
    fc.mults = mults;
    if (!f.contains("base_strata") || !f.at("base_strata").is_array())
      throw ConfigError("fibered data needs a \"base_strata\" list");
    for (const auto& s : f.at("base_strata")) {
      if (!s.is_object() || !s.contains("name") || !s.contains("chi"))
        throw ConfigError("base stratum needs \"name\" and \"chi\"");
      fc.base_strata.emplace_back(scalar_text(s.at("name"), "stratum name"), rational_from_json(s.at("chi"), "chi"));
    }
    if (f.contains("fiber_chi")) {
      const Json& table = f.at("fiber_chi");
      if (!table.is_object()) throw ConfigError("\"fiber_chi\" must be an object keyed by base stratum");
      for (const auto& [stratum, row] : table.items()) {
        std::size_t t = fc.base_strata.size();
        for (std::size_t k = 0; k < fc.base_strata.size(); ++k)
          if (fc.base_strata[k].first == stratum) t = k;
        if (t == fc.base_strata.size()) throw ConfigError("fiber entry for unknown base stratum '" + stratum + "'");
        for (const auto& [key, chi] : chi_table(row, p.names, "fiber_chi")) fc.fiber_chi[{t, key}] = chi;
      }
    }
    fc.validate();
    p.fibered = std::move(fc);
  }

  if (!p.config && !p.degree && !p.fibered)
    throw ConfigError("configuration needs a \"ring\", \"chi_closed\" or \"fibered\" entry");
  if (j.contains("selection")) p.selection = selection_from_json(j.at("selection"), p.names);
  return p;
}

Problem load_problem(const fs::path& path) { return problem_from_json(read_json_file(path), path.parent_path()); }

} // namespace celint
