#include "cli.hpp"

#include "celint/celestial.hpp"
#include "celint/config_json.hpp"
#include "celint/errors.hpp"
#include "celint/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

namespace celint {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string file;
  std::vector<std::string> files;
  std::string select;
  std::string eval;
  std::string manifest;
  std::string format = "text";
  bool degree_only = false;
  // stringy closed form
  int dim = 0;
  int mult = 0;
  std::string flavor = "omega";
  // verify
  std::vector<std::string> suites;
  int instances = 100;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  bool wide = false;
  std::string report;
};

class Failed : public std::runtime_error {
public:
  Failed() : std::runtime_error("verification failed") {}
};

std::optional<Rational> eval_point(const Options& o) {
  if (o.eval.empty()) return std::nullopt;
  auto eq = o.eval.find('=');
  if (eq == std::string::npos || o.eval.substr(0, eq) != "m") throw ConfigError("--eval expects m=VALUE");
  return Rational::parse(o.eval.substr(eq + 1));
}

StratumSelection selection(const Problem& p, const Options& o) {
  if (!o.select.empty()) return selection_from_text(o.select, p.names);
  return p.selection_or_whole();
}

const ManifestationChain& chain(const Problem& p, const Options& o) {
  static const ManifestationChain identity;
  if (o.manifest.empty()) return identity;
  auto it = p.chains.find(o.manifest);
  if (it == p.chains.end()) throw ConfigError("no chain named '" + o.manifest + "'");
  return it->second;
}

const NCConfig& class_config(const Problem& p) {
  if (!p.config) throw ConfigError("this command needs class-level data (\"ring\" and component classes)");
  return *p.config;
}

void warn_regime(const NCConfig& c, std::ostream& err) {
  if (c.regime() == Regime::OutsideLogTerminal)
    err << "warning: some multiplicity is <= -1; the result is a formal value outside the log-terminal range\n";
}

void print_class(const ChowClass& c, const Options& o, std::ostream& out, const Json& extra = Json::object()) {
  if (o.format == "json") {
    Json j = class_to_json(c);
    j["degree"] = c.degree().to_string();
    for (const auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    out << c.to_string() << "\n";
  }
}

void print_value(const std::string& key, const RationalFunction& v, const Options& o, std::ostream& out) {
  if (o.format == "json")
    out << Json{{key, v.to_string()}}.dump(2) << "\n";
  else
    out << v.to_string() << "\n";
}

std::string render_poles(const PoleReport& r) {
  std::string out;
  for (const auto& p : r.poles) out += (out.empty() ? "" : ", ") + p.to_string();
  return out.empty() ? "none" : out;
}

Json poles_json(const PoleReport& r) {
  Json poles = Json::array(), other = Json::array();
  for (const auto& p : r.poles) poles.push_back(p.to_string());
  for (const auto& f : r.nonlinear_factors) other.push_back(RationalFunction(f).to_string());
  return {{"poles", poles}, {"nonlinear_factors", other}};
}

int cmd_ring(const Options& o, std::ostream& out) {
  Json doc = read_json_file(o.file);
  if (doc.is_object() && doc.contains("ring")) doc = doc.at("ring");
  LoadedRing r = ring_from_json(doc, fs::path(o.file).parent_path());
  if (o.format == "json") {
    out << ring_to_json(*r.ring).dump(2) << "\n";
    return 0;
  }
  const auto& ring = *r.ring;
  out << "dimension " << ring.dimension() << "\n";
  for (int k = 0; k <= ring.dimension(); ++k) {
    out << "codim " << k << ":";
    for (const auto& b : ring.basis())
      if (b.codim == k) out << " " << b.name;
    out << "\n";
  }
  out << "c(TV) = " << ring.tangent_chern().to_string() << "\n";
  return 0;
}

int cmd_integrate(const Options& o, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(o.file);
  const NCConfig& c = class_config(p);
  warn_regime(c, err);
  ChowClass result = manifest(integrate_class(c, selection(p, o)), chain(p, o));
  if (auto x = eval_point(o)) result = result.evaluate(*x);
  print_class(result, o, out);
  return 0;
}

int cmd_degree(const Options& o, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(o.file);
  RationalFunction d;
  if (p.degree) {
    d = integrate_degree(*p.degree, selection(p, o));
  } else {
    const NCConfig& c = class_config(p);
    warn_regime(c, err);
    d = integrate_class(c, selection(p, o)).degree();
  }
  if (auto x = eval_point(o)) d = RationalFunction(d.evaluate(*x));
  print_value("degree", d, o, out);
  return 0;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  Problem p = load_problem(o.file);
  std::optional<ZetaClass> zc;
  ZetaDegree zd;
  if (p.config && !(o.degree_only && p.degree)) {
    zc = zeta(*p.config, selection(p, o), chain(p, o));
    zd = {zc->degree, zc->poles};
  } else if (p.degree) {
    zd = zeta(*p.degree, selection(p, o));
  } else {
    throw ConfigError("zeta needs class-level data or an Euler characteristic table");
  }
  if (o.format == "json") {
    Json j = zc && !o.degree_only ? class_to_json(zc->cls) : Json::object();
    j["degree"] = zd.degree.to_string();
    j.update(poles_json(zd.poles));
    out << j.dump(2) << "\n";
    return 0;
  }
  if (zc && !o.degree_only) out << zc->cls.to_string() << "\n";
  out << (o.degree_only ? "" : "degree: ") << zd.degree.to_string() << "\n";
  out << "poles: " << render_poles(zd.poles) << "\n";
  if (!zd.poles.nonlinear_factors.empty()) {
    out << "nonlinear denominator factors:";
    for (const auto& f : zd.poles.nonlinear_factors) out << " " << RationalFunction(f).to_string();
    out << "\n";
  }
  return 0;
}

int cmd_csm(const Options& o, std::ostream& out) {
  Problem p = load_problem(o.file);
  print_class(csm_set(class_config(p), selection(p, o), chain(p, o)), o, out);
  return 0;
}

int cmd_ix(const Options& o, std::ostream& out) {
  Problem p = load_problem(o.file);
  if (!p.fibered) throw ConfigError("ix needs a \"fibered\" section");
  ConstructibleFunction f = ix_function(*p.fibered, selection(p, o));
  if (auto x = eval_point(o))
    for (auto& [name, v] : f.values) v = RationalFunction(v.evaluate(*x));
  RationalFunction total = f.integral(p.fibered->base_strata);
  if (o.format == "json") {
    Json values = Json::object();
    for (const auto& [name, v] : f.values) values[name] = v.to_string();
    out << Json{{"values", values}, {"integral", total.to_string()}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& [name, v] : f.values) out << name << ": " << v.to_string() << "\n";
  out << "integral: " << total.to_string() << "\n";
  return 0;
}

Flavor parse_flavor(const std::string& s) {
  if (s == "Omega") return Flavor::Omega;
  if (s == "omega") return Flavor::omega;
  throw ConfigError("flavor must be Omega or omega");
}

int cmd_stringy(const Options& o, std::ostream& out) {
  if (o.file.empty()) {
    if (o.dim < 1 || o.mult < 1) throw ConfigError("stringy needs a file, or --dim and --mult for the closed form");
    Rational c = stringy_hypersurface_coefficient(o.dim, o.mult, parse_flavor(o.flavor));
    if (o.format == "json")
      out << Json{{"coefficient", c.to_string()}}.dump(2) << "\n";
    else
      out << c.to_string() << "\n";
    return 0;
  }
  Problem p = load_problem(o.file);
  ChowClass s = stringy_class(class_config(p), chain(p, o));
  if (o.format == "json") {
    print_class(s, o, out);
  } else {
    out << s.to_string() << "\n";
    out << "degree: " << s.degree().to_string() << "\n";
  }
  return 0;
}

// ---- verify ----

Subset subset_json(const Json& j, const std::vector<std::string>& names) {
  Subset s = 0;
  if (j.is_null()) return s;
  if (!j.is_array()) throw ConfigError("\"contains\" must be a list of component names");
  for (const auto& n : j) {
    if (!n.is_string()) throw ConfigError("\"contains\" must be a list of component names");
    s |= subset_from_text(n.get<std::string>(), names);
  }
  return s;
}

const ManifestationChain& named_chain(const Problem& p, const Json& j) {
  if (!j.is_string()) throw ConfigError("a chain is referred to by name");
  auto it = p.chains.find(j.get<std::string>());
  if (it == p.chains.end()) throw ConfigError("no chain named '" + j.get<std::string>() + "'");
  return it->second;
}

SpellSide spell_side(const Problem& p, const Json& j) {
  if (!j.is_object()) throw ConfigError("spell sides are objects with chain, D and K");
  const NCConfig& c = class_config(p);
  ManifestationChain ch = j.contains("chain") ? named_chain(p, j.at("chain")) : ManifestationChain{};
  auto cls = [&](const char* key) {
    return j.contains(key) ? ChowClass::parse(c.ring(), j.at(key).get<std::string>()) : c.ring()->zero();
  };
  return {c, std::move(ch), cls("D"), cls("K")};
}

CheckReport run_check(const Problem& p, const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ConfigError("each check needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  auto sel = [&] { return j.contains("selection") ? selection_from_json(j.at("selection"), p.names) : p.selection_or_whole(); };
  std::optional<Rational> at;
  if (j.contains("eval")) at = Rational::parse(j.at("eval").is_string() ? j.at("eval").get<std::string>()
                                                                         : std::to_string(j.at("eval").get<long long>()));
  auto config = [&] { return at ? class_config(p).evaluated(*at) : class_config(p); };

  if (kind == "key") return check_key(config(), sel(), {subset_json(j.value("contains", Json()), p.names), "F", ""});
  if (kind == "altexp") return check_altexp(config());
  if (kind == "denloe" || kind == "denloe_center") {
    if (!p.degree) throw ConfigError("denloe checks need an Euler characteristic table");
    BlowupStep step{subset_json(j.value("contains", Json()), p.names), "F", ""};
    return kind == "denloe" ? check_denloe(*p.degree, sel(), step) : check_denloe_center(*p.degree, step);
  }
  if (kind == "necfacts") {
    const RingPtr& ring = p.ring ? p.ring->ring : throw ConfigError("necfacts needs a ring");
    std::optional<ChowClass> d;
    if (j.contains("divisor")) d = ChowClass::parse(ring, j.at("divisor").get<std::string>());
    return check_necfacts(ring, d);
  }
  if (kind == "cov") {
    NCConfig c = config();
    return check_cov({c, named_chain(p, j.at("x"))}, {c, named_chain(p, j.at("y"))});
  }
  if (kind == "spell") {
    int i = j.value("i", 0);
    return check_spell_elgen(spell_side(p, j.value("x", Json())), spell_side(p, j.value("y", Json())), i);
  }
  if (kind == "can_degree") {
    std::vector<Side> reps;
    Json files = j.value("representatives", Json::array());
    if (files.empty()) reps.push_back({class_config(p), {}});
    for (const auto& f : files) {
      Problem q = load_problem(p.dir / f.get<std::string>());
      ManifestationChain ch = j.contains("chain") ? named_chain(q, j.at("chain")) : ManifestationChain{};
      reps.push_back({class_config(q), std::move(ch)});
    }
    std::optional<Rational> chi;
    if (j.contains("chi")) chi = Rational::parse(j.at("chi").is_string() ? j.at("chi").get<std::string>()
                                                                          : std::to_string(j.at("chi").get<long long>()));
    return check_can_degree(reps, chi);
  }
  throw ConfigError("unknown check kind '" + kind + "'");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const bool json = o.format == "json";
  std::uint64_t seed = o.seed ? *o.seed : seed_from_env();
  Json report{{"seed", seed}, {"checks", Json::array()}, {"suites", Json::array()}};
  std::size_t passed = 0, failed = 0;
  auto record = [&](const CheckReport& r, Json& into) {
    (r.passed ? passed : failed)++;
    if (!json) out << report_line(r) << "\n";
    into.push_back(report_to_json(r));
  };

  for (const auto& f : o.files) {
    Problem p = load_problem(f);
    if (!p.doc.contains("checks") || !p.doc.at("checks").is_array())
      throw ConfigError(f + ": no \"checks\" list");
    for (const auto& c : p.doc.at("checks")) {
      CheckReport r = run_check(p, c);
      r.context = fs::path(f).filename().string() + (r.context.empty() ? "" : ", " + r.context);
      record(r, report["checks"]);
    }
  }

  std::vector<std::string> suites = o.suites;
  if (suites.empty() && o.files.empty()) suites = {"all"};
  if (std::find(suites.begin(), suites.end(), "all") != suites.end()) suites = suite_names();
  SuiteOptions so{seed, o.instances, o.jobs, o.wide};
  for (const auto& name : suites) {
    SuiteResult r = run_suite(name, so);
    Json instances = Json::array();
    for (const auto& rep : r.reports) record(rep, instances);
    report["suites"].push_back({{"name", r.name},
                                {"seed", r.seed},
                                {"instances", r.reports.size()},
                                {"failures", r.failures()},
                                {"reports", instances}});
  }
  report["passed"] = passed;
  report["failed"] = failed;

  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw ConfigError("cannot write report to " + o.report);
    f << report.dump(2) << "\n";
  }
  if (json)
    out << report.dump(2) << "\n";
  else
    out << passed << " passed, " << failed << " failed (seed " << seed << ")\n";
  if (failed > 0) throw Failed();
  return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Chow-ring computations of celestial integrals"};
  app.require_subcommand(1);

  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "Configuration file")->required()->check(CLI::ExistingFile); };
  auto format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"})); };
  auto select = [&](CLI::App* sub) {
    sub->add_option("--select", o.select, "Selection: whole, none, closed:A,B or strata:;A;A,B");
  };
  auto eval = [&](CLI::App* sub) { sub->add_option("--eval", o.eval, "Evaluate at m=VALUE after computing"); };
  auto manifest_opt = [&](CLI::App* sub) { sub->add_option("--manifest", o.manifest, "Named push-forward chain"); };

  auto* ring = app.add_subcommand("ring", "Show a ring");
  file_arg(ring);
  format(ring);

  auto* integrate = app.add_subcommand("integrate", "Integrate over the selection");
  file_arg(integrate);
  select(integrate);
  eval(integrate);
  manifest_opt(integrate);
  format(integrate);

  auto* degree = app.add_subcommand("degree", "Degree of the integral");
  file_arg(degree);
  select(degree);
  eval(degree);
  format(degree);

  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function a_j*m + k_j");
  file_arg(zeta_cmd);
  select(zeta_cmd);
  manifest_opt(zeta_cmd);
  format(zeta_cmd);
  zeta_cmd->add_flag("--degree", o.degree_only, "Print only the degree and its poles");

  auto* csm = app.add_subcommand("csm", "CSM class of the selected set");
  file_arg(csm);
  select(csm);
  manifest_opt(csm);
  format(csm);

  auto* ix = app.add_subcommand("ix", "Constructible function from fiber data");
  file_arg(ix);
  select(ix);
  eval(ix);
  format(ix);

  auto* stringy = app.add_subcommand("stringy", "Stringy class, or the hypersurface closed form");
  stringy->add_option("file", o.file, "Configuration file")->check(CLI::ExistingFile);
  manifest_opt(stringy);
  format(stringy);
  stringy->add_option("--dim", o.dim, "Dimension of the hypersurface");
  stringy->add_option("--mult", o.mult, "Multiplicity of the isolated singularity");
  stringy->add_option("--flavor", o.flavor, "Omega or omega")->check(CLI::IsMember({"Omega", "omega"}));

  auto* verify = app.add_subcommand("verify", "Run checks from files and randomized suites");
  verify->add_option("files", o.files, "Files with a \"checks\" list")->check(CLI::ExistingFile);
  verify->add_option("--suite", o.suites, "Suite name, or all (default when no files are given)");
  verify->add_option("--instances", o.instances, "Instances per suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Seed (default: CELINT_SEED)");
  verify->add_flag("--wide", o.wide, "Draw multiplicities from [-5, 5] minus {-1}");
  verify->add_option("--report", o.report, "Write the JSON report here");
  format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "celint: " << e.what() << "\n";
    return 2;
  }

  try {
    if (ring->parsed()) return cmd_ring(o, out);
    if (integrate->parsed()) return cmd_integrate(o, out, err);
    if (degree->parsed()) return cmd_degree(o, out, err);
    if (zeta_cmd->parsed()) return cmd_zeta(o, out);
    if (csm->parsed()) return cmd_csm(o, out);
    if (ix->parsed()) return cmd_ix(o, out);
    if (stringy->parsed()) return cmd_stringy(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Failed&) {
    return 3;
  } catch (const Error& e) {
    err << "celint: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const Json::exception& e) {
    err << "celint: ConfigError: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace celint
