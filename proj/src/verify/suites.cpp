#include "celint/verify.hpp"

#include "celint/catalog.hpp"
#include "celint/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace celint {

namespace {

class Draw {
public:
  Draw(std::uint64_t seed, std::size_t suite, std::size_t index, bool wide) : wide_(wide) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(index)};
    gen_.seed(seq);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Small rational in (-1, 5], or in [-5, 5] minus {-1} when wide.
  Rational multiplicity() {
    int q = uniform(1, 4);
    for (;;) {
      int p = wide_ ? uniform(-5 * q, 5 * q) : uniform(-q + 1, 5 * q);
      if (p != -q) return Rational(p, q);
    }
  }

  Multiplicity symbolic_multiplicity() {
    Rational a = uniform(0, 2);
    Rational k = multiplicity();
    if (a.is_zero() && k == Rational(-1)) k = 0;
    return Multiplicity::decomposed(a, k);
  }

private:
  std::mt19937_64 gen_;
  bool wide_;
};

RingPtr random_surface(Draw& r) {
  switch (r.uniform(0, 3)) {
  case 0: return ring_projective(2);
  case 1: return ring_product(ring_projective(1, "h1"), ring_projective(1, "h2"));
  case 2: return ring_blowup_point(ring_projective(2)).ring;
  default: return ring_blowup_point(ring_blowup_point(ring_projective(2), "e1").ring, "e2").ring;
  }
}

RingPtr random_threefold(Draw& r) {
  switch (r.uniform(0, 2)) {
  case 0: return ring_projective(3);
  case 1: return ring_product(ring_projective(1, "h1"), ring_projective(2, "h2"));
  default: return ring_blowup_point(ring_projective(3)).ring;
  }
}

ChowClass random_divisor(const RingPtr& ring, Draw& r) {
  std::vector<RationalFunction> coeffs(ring->size());
  for (;;) {
    bool nonzero = false;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (ring->codim(i) != 1) continue;
      int c = r.uniform(-2, 3);
      coeffs[i] = RationalFunction(c);
      nonzero = nonzero || c != 0;
    }
    if (nonzero) return ChowClass(ring, coeffs);
  }
}

NCConfig random_config(const RingPtr& ring, Draw& r, int max_components, bool symbolic) {
  int n = r.uniform(0, max_components);
  std::vector<Component> comps;
  for (int j = 0; j < n; ++j) {
    Multiplicity m = symbolic && r.coin() ? r.symbolic_multiplicity() : Multiplicity::of(r.multiplicity());
    comps.push_back({"E" + std::to_string(j + 1), random_divisor(ring, r), std::move(m)});
  }
  return NCConfig(ring, std::move(comps));
}

StratumSelection random_selection(const std::vector<std::string>& names, Draw& r) {
  StratumSelection all = StratumSelection::whole(names);
  std::set<Subset> picked;
  for (Subset s : all.strata())
    if (r.coin()) picked.insert(s);
  return StratumSelection(names, std::move(picked));
}

CheckReport key_instance(Draw& r) {
  NCConfig config = random_config(random_surface(r), r, 3, false);
  StratumSelection sel = random_selection(config.names(), r);
  Subset contains = 0;
  std::vector<std::size_t> idx(config.size());
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
  int through = config.size() == 0 ? 0 : r.uniform(0, std::min<int>(2, static_cast<int>(config.size())));
  for (int t = 0; t < through; ++t) {
    std::size_t pick = static_cast<std::size_t>(r.uniform(t, static_cast<int>(idx.size()) - 1));
    std::swap(idx[t], idx[pick]);
    contains |= singleton(idx[t]);
  }
  return check_key(config, sel, {contains, "F", ""});
}

CheckReport altexp_instance(Draw& r) {
  RingPtr ring = r.coin() ? random_surface(r) : random_threefold(r);
  return check_altexp(random_config(ring, r, 3, true));
}

CheckReport additivity_instance(Draw& r) {
  RingPtr ring = r.coin() ? random_surface(r) : random_threefold(r);
  NCConfig config = random_config(ring, r, 3, true);
  std::set<Subset> a, b;
  StratumSelection all = StratumSelection::whole(config.names());
  for (Subset s : all.strata()) {
    int where = r.uniform(0, 2);
    if (where == 1) a.insert(s);
    if (where == 2) b.insert(s);
  }
  StratumSelection sa(config.names(), a), sb(config.names(), b);
  ChowClass lhs = integrate_class(config, sa | sb);
  ChowClass rhs = integrate_class(config, sa) + integrate_class(config, sb);
  return {"additivity", lhs == rhs, lhs.to_string(), rhs.to_string(), "S = " + sa.to_string() + " | " + sb.to_string()};
}

CheckReport denloe_instance(Draw& r) {
  DegreeConfig config;
  int lines = r.uniform(0, 3);
  config.chi_closed[0] = 3;
  for (int j = 0; j < lines; ++j) {
    config.names.push_back("L" + std::to_string(j + 1));
    config.mults.push_back(Multiplicity::of(r.multiplicity()));
    config.chi_closed[singleton(j)] = 2;
    for (int i = 0; i < j; ++i) config.chi_closed[singleton(i) | singleton(j)] = 1;
  }
  StratumSelection sel = random_selection(config.names, r);
  int steps = r.uniform(1, 4);
  CheckReport last;
  for (int s = 0; s < steps; ++s) {
    std::vector<Subset> centers{0};
    for (const auto& [mask, chi] : config.chi_closed)
      if (mask != 0 && subset_size(mask) <= 2 && chi.sign() > 0) centers.push_back(mask);
    BlowupStep step{centers[static_cast<std::size_t>(r.uniform(0, static_cast<int>(centers.size()) - 1))],
                    "F" + std::to_string(s + 1), ""};
    last = check_denloe(config, sel, step);
    if (!last.passed) return last;
    CheckReport center = check_denloe_center(config, step);
    if (!center.passed) return center;
    TransportedDegree t = blowup_transport_degree(config, step, sel);
    config = std::move(t.config);
    sel = std::move(t.selection);
  }
  last.context = std::to_string(steps) + " blow-ups of P2 with " + std::to_string(lines) + " lines; " + last.context;
  return last;
}

CheckReport necfacts_instance(Draw& r) {
  RingPtr base = r.coin() ? random_surface(r) : random_threefold(r);
  return check_necfacts(base, random_divisor(base, r));
}

std::string describe_config_for_suite(const NCConfig& config) {
  return std::to_string(config.size()) + " components on a ring of dimension " +
         std::to_string(config.ring()->dimension());
}

CheckReport csm_instance(Draw& r) {
  RingPtr ring = r.coin() ? random_surface(r) : random_threefold(r);
  NCConfig config = random_config(ring, r, 3, false);
  ChowClass total = ring->zero();
  StratumSelection all = StratumSelection::whole(config.names());
  for (Subset s : all.strata()) total += csm_stratum(config, s);
  return {"csm", total == ring->tangent_chern(), total.to_string(), ring->tangent_chern().to_string(),
          describe_config_for_suite(config)};
}

CheckReport specialization_instance(Draw& r) {
  RingPtr ring = r.coin() ? random_surface(r) : random_threefold(r);
  NCConfig config = random_config(ring, r, 3, true);
  StratumSelection sel = random_selection(config.names(), r);
  ChowClass general = integrate_class(config, sel);
  for (;;) {
    Rational x(r.uniform(-12, 12), r.uniform(1, 4));
    try {
      NCConfig special = config.evaluated(x);
      ChowClass lhs = general.evaluate(x);
      ChowClass rhs = integrate_class(special, sel);
      return {"specialization", lhs == rhs, lhs.to_string(), rhs.to_string(), "m = " + x.to_string()};
    } catch (const UndefinedMultiplicity&) {
    } catch (const PoleError&) {
    } catch (const ZeroDenominator&) {
    }
  }
}

struct Suite {
  const char* name;
  std::function<CheckReport(Draw&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"key", key_instance},           {"altexp", altexp_instance},   {"additivity", additivity_instance},
      {"denloe", denloe_instance},     {"necfacts", necfacts_instance}, {"csm", csm_instance},
      {"specialization", specialization_instance},
  };
  return all;
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto& all = suites();
  std::size_t which = all.size();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (name == all[i].name) which = i;
  if (which == all.size()) throw ConfigError("unknown suite '" + name + "'");
  if (opts.instances < 0 || opts.jobs < 1) throw ConfigError("instances must be >= 0 and jobs >= 1");

  SuiteResult result;
  result.name = name;
  result.seed = opts.seed;
  result.reports.resize(static_cast<std::size_t>(opts.instances));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.reports.size(); i = next++) {
      Draw draw(opts.seed, which, i, opts.wide);
      CheckReport rep;
      try {
        rep = all[which].run(draw);
      } catch (const std::exception& e) {
        rep = {name, false, "error", e.what(), ""};
      }
      rep.name = name + "#" + std::to_string(i);
      result.reports[i] = std::move(rep);
    }
  };
  int threads = std::min<int>(opts.jobs, std::max(1, opts.instances));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

} // namespace celint
