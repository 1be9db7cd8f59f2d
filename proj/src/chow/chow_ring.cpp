#include "celint/chow_ring.hpp"

#include "celint/chow_class.hpp"
#include "celint/errors.hpp"

#include <set>

namespace celint {

namespace {

std::vector<Rational> densify(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& t : v) out[t.index] += t.coeff;
  return out;
}

SparseVector sparsify(const std::vector<Rational>& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

bool valid_name(const std::string& name) {
  if (name.empty() || name == "m") return false;
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '/' || c == '(' || c == ')' ||
        c == ',')
      return false;
  return true;
}

} // namespace

ChowRing::ChowRing(RingData data) : data_(std::move(data)) {
  for (std::size_t i = 0; i < data_.basis.size(); ++i) {
    const auto& name = data_.basis[i].name;
    if (!valid_name(name)) throw PresentationError("invalid basis name '" + name + "'");
    if (!by_name_.emplace(name, i).second) throw PresentationError("duplicate basis name '" + name + "'");
  }
}

RingPtr ChowRing::create(RingData data) {
  const std::size_t n = data.basis.size();
  if (data.dimension < 0) throw PresentationError("negative dimension");
  if (n == 0) throw PresentationError("empty basis");
  if (data.products.size() != n * n || data.degree.size() != n || data.tangent_chern.size() != n)
    throw PresentationError("table sizes do not match the basis");
  auto ring = std::shared_ptr<ChowRing>(new ChowRing(std::move(data)));
  ring->validate();
  return ring;
}

void ChowRing::validate() const {
  const std::size_t n = size();
  const int dim = dimension();
  for (std::size_t i = 0; i < n; ++i) {
    int c = codim(i);
    if (c < 0 || c > dim)
      throw PresentationError("grading violation: '" + element(i).name + "' has codimension out of range");
    if (i > 0 && c < codim(i - 1)) throw PresentationError("basis is not sorted by codimension");
    if ((c == 0) != (i == 0))
      throw PresentationError("codimension 0 must consist of the fundamental class alone");
  }
  if (codim(n - 1) != dim) throw PresentationError("no basis element in top codimension");

  auto name = [&](std::size_t i) { return "'" + element(i).name + "'"; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : product(i, j)) {
        if (t.index >= n) throw PresentationError("product refers to an unknown basis index");
        if (t.coeff.is_zero()) continue;
        if (codim(t.index) != codim(i) + codim(j))
          throw PresentationError("grading violation in " + name(i) + "*" + name(j));
      }
      if (densify(product(i, j), n) != densify(product(j, i), n))
        throw PresentationError("non-commutative pair " + name(i) + ", " + name(j));
    }
    auto unit = densify(product(0, i), n);
    std::vector<Rational> expect(n);
    expect[i] = 1;
    if (unit != expect) throw PresentationError("fundamental class is not a unit on " + name(i));
  }

  // (b_i b_j) b_k == b_i (b_j b_k); commutativity reduces this to i <= j <= k
  // up to the choice of which pair is multiplied first.
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (codim(i) + codim(j) > dim) break;
      for (std::size_t k = j; k < n; ++k) {
        if (codim(i) + codim(j) + codim(k) > dim) break;
        std::vector<Rational> left(n), right(n), third(n);
        for (const auto& t : product(i, j))
          for (const auto& u : product(t.index, k)) left[u.index] += t.coeff * u.coeff;
        for (const auto& t : product(j, k))
          for (const auto& u : product(i, t.index)) right[u.index] += t.coeff * u.coeff;
        for (const auto& t : product(i, k))
          for (const auto& u : product(t.index, j)) third[u.index] += t.coeff * u.coeff;
        if (left != right || left != third)
          throw PresentationError("non-associative triple " + name(i) + ", " + name(j) + ", " + name(k));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (codim(i) != dim && !degree(i).is_zero())
      throw PresentationError("degree map is nonzero on " + name(i) + " outside top codimension");
  if (!(data_.tangent_chern[0] == Rational(1)))
    throw PresentationError("tangent Chern class must have codimension-0 coefficient 1");
}

std::optional<std::size_t> ChowRing::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChowRing::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ParseError("unknown basis element '" + std::string(name) + "'");
}

ChowClass ChowRing::tangent_chern() const {
  std::vector<RationalFunction> c;
  for (const auto& r : data_.tangent_chern) c.emplace_back(r);
  return ChowClass(shared_from_this(), std::move(c));
}

ChowClass ChowRing::fundamental_class() const { return basis_class(0); }

ChowClass ChowRing::basis_class(std::size_t i) const {
  std::vector<RationalFunction> c(size());
  c.at(i) = 1;
  return ChowClass(shared_from_this(), std::move(c));
}

ChowClass ChowRing::zero() const { return ChowClass(shared_from_this()); }

std::optional<std::vector<Rational>> ChowRing::point_class() const {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < size(); ++i) {
    if (codim(i) != dimension()) continue;
    if (hit) return std::nullopt;
    hit = i;
  }
  if (!hit || degree(*hit).is_zero()) return std::nullopt;
  std::vector<Rational> pt(size());
  pt[*hit] = Rational(1) / degree(*hit);
  return pt;
}

RingPtr ring_literal(const LiteralPresentation& pres) {
  if (pres.basis_by_codim.size() != static_cast<std::size_t>(pres.dimension) + 1)
    throw PresentationError("basis must list codimensions 0.." + std::to_string(pres.dimension));
  RingData data;
  data.dimension = pres.dimension;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < pres.basis_by_codim.size(); ++c) {
    for (const auto& name : pres.basis_by_codim[c]) {
      data.basis.push_back({name, static_cast<int>(c)});
      names.push_back(name);
    }
  }
  if (pres.basis_by_codim[0].size() != 1)
    throw PresentationError("codimension 0 must consist of the fundamental class alone");
  const std::size_t n = names.size();
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw PresentationError("unknown basis element '" + name + "' in product table");
  };

  std::vector<std::optional<std::vector<Rational>>> table(n * n);
  for (const auto& [pair, value] : pres.products) {
    std::size_t i = index(pair.first), j = index(pair.second);
    std::vector<Rational> v;
    try {
      v = parse_linear_combination(names, 0, value);
    } catch (const ParseError& e) {
      throw PresentationError("product " + pair.first + "*" + pair.second + ": " + e.what());
    }
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      auto& slot = table[a * n + b];
      if (slot && *slot != v)
        throw PresentationError("non-commutative pair '" + pair.first + "', '" + pair.second + "'");
      slot = v;
    }
  }
  data.products.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = table[i * n + j];
      if (!slot && (i == 0 || j == 0)) {
        std::vector<Rational> v(n);
        v[i == 0 ? j : i] = 1;
        slot = v;
      }
      if (slot) data.products[i * n + j] = sparsify(*slot);
    }
  }

  data.degree.assign(n, Rational(0));
  std::set<std::string> seen;
  for (const auto& [name, value] : pres.degree) {
    std::size_t i = index(name);
    data.degree[i] = value;
    seen.insert(name);
  }
  for (const auto& name : pres.basis_by_codim.back())
    if (!seen.count(name)) throw PresentationError("missing degree for '" + name + "'");

  try {
    data.tangent_chern = parse_linear_combination(names, 0, pres.tangent_chern);
  } catch (const ParseError& e) {
    throw PresentationError(std::string("tangent Chern class: ") + e.what());
  }
  return ChowRing::create(std::move(data));
}

LiteralPresentation to_literal(const ChowRing& ring) {
  LiteralPresentation out;
  out.dimension = ring.dimension();
  out.basis_by_codim.resize(ring.dimension() + 1);
  for (const auto& b : ring.basis()) out.basis_by_codim[b.codim].push_back(b.name);
  auto render = [&](std::span<const Rational> v) {
    std::vector<RationalFunction> c(v.begin(), v.end());
    return ChowClass(ring.shared_from_this(), std::move(c)).to_string();
  };
  const std::size_t n = ring.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (ring.product(i, j).empty()) continue;
      out.products.push_back({{ring.element(i).name, ring.element(j).name}, render(densify(ring.product(i, j), n))});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ring.codim(i) == ring.dimension()) out.degree[ring.element(i).name] = ring.degree(i);
  out.tangent_chern = render(ring.tangent_chern_coeffs());
  return out;
}

} // namespace celint
