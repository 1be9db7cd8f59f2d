#include "celint/catalog.hpp"

#include "celint/errors.hpp"

namespace celint {

namespace {

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::string power_name(const std::string& var, int k) {
  return k == 1 ? var : var + "^" + std::to_string(k);
}

} // namespace

RingPtr ring_projective(int n, const std::string& var) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  RingData d;
  d.dimension = n;
  d.basis.push_back({"[V]", 0});
  for (int k = 1; k <= n; ++k) d.basis.push_back({power_name(var, k), k});
  const std::size_t size = n + 1;
  d.products.resize(size * size);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) d.products[a * size + b] = {{static_cast<std::size_t>(a + b), Rational(1)}};
  d.degree.assign(size, Rational(0));
  d.degree[n] = 1;
  for (int k = 0; k <= n; ++k) d.tangent_chern.push_back(binomial(n + 1, k));
  return ChowRing::create(std::move(d));
}

RingPtr ring_point() { return ring_projective(0); }

RingPtr ring_product(const RingPtr& r1, const RingPtr& r2) {
  const std::size_t n1 = r1->size(), n2 = r2->size();
  RingData d;
  d.dimension = r1->dimension() + r2->dimension();
  // Pairs (i, j) ordered by total codimension, then by decreasing codimension
  // of the first factor, so h1 comes before h2.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (int c = 0; c <= d.dimension; ++c)
    for (std::size_t i = n1; i-- > 0;)
      for (std::size_t j = 0; j < n2; ++j)
        if (r1->codim(i) + r2->codim(j) == c) pairs.emplace_back(i, j);
  std::vector<std::size_t> index(n1 * n2);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [i, j] = pairs[k];
    index[i * n2 + j] = k;
    std::string name;
    if (i == 0 && j == 0)
      name = "[V]";
    else if (i == 0)
      name = r2->element(j).name;
    else if (j == 0)
      name = r1->element(i).name;
    else
      name = r1->element(i).name + "*" + r2->element(j).name;
    d.basis.push_back({name, r1->codim(i) + r2->codim(j)});
  }
  const std::size_t n = pairs.size();
  d.products.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto [i1, j1] = pairs[a];
      auto [i2, j2] = pairs[b];
      SparseVector out;
      for (const auto& s : r1->product(i1, i2))
        for (const auto& t : r2->product(j1, j2)) out.push_back({index[s.index * n2 + t.index], s.coeff * t.coeff});
      d.products[a * n + b] = std::move(out);
    }
  }
  d.degree.assign(n, Rational(0));
  d.tangent_chern.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    auto [i, j] = pairs[k];
    d.degree[k] = r1->degree(i) * r2->degree(j);
    d.tangent_chern[k] = r1->tangent_chern_coeffs()[i] * r2->tangent_chern_coeffs()[j];
  }
  return ChowRing::create(std::move(d));
}

Blowup ring_blowup_point(const RingPtr& base, const std::string& name) {
  const int n = base->dimension();
  if (n < 1) throw UnsupportedCatalog("cannot blow up a point of a zero-dimensional ring");
  auto pt = base->point_class();
  if (!pt) throw UnsupportedCatalog("ring has no designated point class");
  if (n == 1) {
    std::vector<RationalFunction> c(pt->begin(), pt->end());
    return {base, identity_map(base), ChowClass(base, std::move(c))};
  }

  const std::size_t nb = base->size();
  RingData d;
  d.dimension = n;
  std::vector<std::size_t> from_base(nb);
  std::vector<std::size_t> e_index(n); // e_index[k] for 1 <= k <= n-1
  for (int c = 0; c <= n; ++c) {
    for (std::size_t i = 0; i < nb; ++i) {
      if (base->codim(i) != c) continue;
      from_base[i] = d.basis.size();
      d.basis.push_back(base->element(i));
    }
    if (c >= 1 && c <= n - 1) {
      e_index[c] = d.basis.size();
      d.basis.push_back({power_name(name, c), c});
    }
  }
  const std::size_t size = d.basis.size();
  std::vector<bool> is_e(size, false);
  std::vector<int> e_power(size, 0);
  std::vector<std::size_t> to_base(size, 0);
  for (int k = 1; k < n; ++k) {
    is_e[e_index[k]] = true;
    e_power[e_index[k]] = k;
  }
  for (std::size_t i = 0; i < nb; ++i) to_base[from_base[i]] = i;

  SparseVector point;
  for (std::size_t i = 0; i < nb; ++i)
    if (!(*pt)[i].is_zero()) point.push_back({from_base[i], (*pt)[i]});
  const Rational top_sign = (n - 1) % 2 == 0 ? 1 : -1;

  d.products.resize(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      SparseVector out;
      if (!is_e[a] && !is_e[b]) {
        for (const auto& t : base->product(to_base[a], to_base[b])) out.push_back({from_base[t.index], t.coeff});
      } else if (is_e[a] && is_e[b]) {
        int k = e_power[a] + e_power[b];
        if (k < n)
          out.push_back({e_index[k], Rational(1)});
        else if (k == n)
          for (const auto& t : point) out.push_back({t.index, top_sign * t.coeff});
      } else {
        std::size_t other = is_e[a] ? b : a;
        std::size_t e = is_e[a] ? a : b;
        if (d.basis[other].codim == 0) out.push_back({e, Rational(1)});
      }
      d.products[a * size + b] = std::move(out);
    }
  }

  d.degree.assign(size, Rational(0));
  d.tangent_chern.assign(size, Rational(0));
  for (std::size_t i = 0; i < nb; ++i) {
    d.degree[from_base[i]] = base->degree(i);
    d.tangent_chern[from_base[i]] = base->tangent_chern_coeffs()[i];
  }
  // c(TW) = pi^* c(TV) + (1+e)(1-e)^n - 1
  for (int j = 1; j <= n; ++j) {
    Rational sign_j = j % 2 == 0 ? 1 : -1;
    Rational cj = sign_j * binomial(n, j) - sign_j * binomial(n, j - 1);
    if (j < n)
      d.tangent_chern[e_index[j]] += cj;
    else
      for (const auto& t : point) d.tangent_chern[t.index] += cj * top_sign * t.coeff;
  }
  auto ring = ChowRing::create(std::move(d));

  std::vector<SparseVector> forward(size), pullback(nb);
  for (std::size_t a = 0; a < size; ++a)
    if (!is_e[a]) forward[a] = {{to_base[a], Rational(1)}};
  for (std::size_t i = 0; i < nb; ++i) pullback[i] = {{from_base[i], Rational(1)}};
  auto map = PushForwardMap::create(ring, base, std::move(forward), std::move(pullback));
  return {ring, map, ring->basis_class(e_index[1])};
}

} // namespace celint
