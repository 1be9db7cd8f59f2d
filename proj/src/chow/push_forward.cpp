#include "celint/push_forward.hpp"

#include "celint/errors.hpp"

namespace celint {

namespace {

std::vector<Rational> dense(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& t : v) out.at(t.index) += t.coeff;
  return out;
}

std::vector<Rational> apply(const std::vector<SparseVector>& matrix, const std::vector<Rational>& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : matrix[i]) out.at(t.index) += v[i] * t.coeff;
  }
  return out;
}

std::vector<Rational> multiply(const ChowRing& ring, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(ring.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      for (const auto& t : ring.product(i, j)) out[t.index] += a[i] * b[j] * t.coeff;
    }
  }
  return out;
}

} // namespace

PushForwardMap::PushForwardMap(RingPtr source, RingPtr target, std::vector<SparseVector> forward,
                               std::vector<SparseVector> pullback)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)),
      pullback_(std::move(pullback)) {}

MapPtr PushForwardMap::create(RingPtr source, RingPtr target, std::vector<SparseVector> forward,
                              std::vector<SparseVector> pullback) {
  if (!source || !target) throw std::invalid_argument("map without source or target");
  if (forward.size() != source->size() || pullback.size() != target->size())
    throw PresentationError("map tables do not match the basis sizes");
  auto map = std::shared_ptr<PushForwardMap>(
      new PushForwardMap(std::move(source), std::move(target), std::move(forward), std::move(pullback)));
  map->validate();
  return map;
}

void PushForwardMap::validate() const {
  const ChowRing& s = *source_;
  const ChowRing& t = *target_;
  const std::size_t ns = s.size(), nt = t.size();
  if (s.dimension() != t.dimension()) throw PresentationError("push-forward between rings of different dimension");

  for (std::size_t i = 0; i < ns; ++i)
    for (const auto& term : forward_[i]) {
      if (term.index >= nt) throw PresentationError("forward image refers to an unknown basis index");
      if (!term.coeff.is_zero() && t.codim(term.index) != s.codim(i))
        throw PresentationError("forward does not preserve codimension on '" + s.element(i).name + "'");
    }
  for (std::size_t j = 0; j < nt; ++j)
    for (const auto& term : pullback_[j]) {
      if (term.index >= ns) throw PresentationError("pullback image refers to an unknown basis index");
      if (!term.coeff.is_zero() && s.codim(term.index) != t.codim(j))
        throw PresentationError("pullback does not preserve codimension on '" + t.element(j).name + "'");
    }

  std::vector<std::vector<Rational>> pulled(nt);
  for (std::size_t j = 0; j < nt; ++j) {
    pulled[j] = dense(pullback_[j], ns);
    std::vector<Rational> unit(nt);
    unit[j] = 1;
    if (apply(forward_, pulled[j], nt) != unit)
      throw PresentationError("forward(pullback('" + t.element(j).name + "')) is not the identity");
  }
  std::vector<Rational> one(ns);
  one[0] = 1;
  if (pulled[0] != one) throw PresentationError("pullback of the fundamental class is not the fundamental class");

  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = a; b < nt; ++b) {
      auto lhs = multiply(s, pulled[a], pulled[b]);
      auto rhs = apply(pullback_, dense(t.product(a, b), nt), ns);
      if (lhs != rhs)
        throw PresentationError("pullback is not multiplicative on '" + t.element(a).name + "', '" +
                                t.element(b).name + "'");
    }
  }

  for (std::size_t a = 0; a < nt; ++a) {
    for (std::size_t b = 0; b < ns; ++b) {
      std::vector<Rational> unit(ns);
      unit[b] = 1;
      auto lhs = apply(forward_, multiply(s, pulled[a], unit), nt);
      auto rhs = multiply(t, dense({{a, Rational(1)}}, nt), dense(forward_[b], nt));
      if (lhs != rhs)
        throw PresentationError("projection formula fails for '" + t.element(a).name + "', '" + s.element(b).name +
                                "'");
    }
  }
}

ChowClass PushForwardMap::push(const ChowClass& c) const {
  if (c.ring() != source_) throw RingMismatch("class does not live in the source of the push-forward");
  std::vector<RationalFunction> coeffs(target_->size());
  for (std::size_t i = 0; i < source_->size(); ++i) {
    if (c.coeff(i).is_zero()) continue;
    for (const auto& t : forward_[i]) coeffs[t.index] += c.coeff(i) * RationalFunction(t.coeff);
  }
  return ChowClass(target_, std::move(coeffs));
}

ChowClass PushForwardMap::pull(const ChowClass& c) const {
  if (c.ring() != target_) throw RingMismatch("class does not live in the target of the pull-back");
  std::vector<RationalFunction> coeffs(source_->size());
  for (std::size_t j = 0; j < target_->size(); ++j) {
    if (c.coeff(j).is_zero()) continue;
    for (const auto& t : pullback_[j]) coeffs[t.index] += c.coeff(j) * RationalFunction(t.coeff);
  }
  return ChowClass(source_, std::move(coeffs));
}

MapPtr identity_map(const RingPtr& ring) {
  std::vector<SparseVector> id(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) id[i] = {{i, Rational(1)}};
  return PushForwardMap::create(ring, ring, id, id);
}

MapPtr compose(const std::vector<MapPtr>& maps) {
  if (maps.empty()) throw std::invalid_argument("compose needs at least one map");
  MapPtr acc = maps.front();
  for (std::size_t k = 1; k < maps.size(); ++k) {
    const auto& next = maps[k];
    if (acc->target() != next->source()) throw RingMismatch("maps in the chain do not compose");
    const std::size_t ns = acc->source()->size(), nm = acc->target()->size(), nt = next->target()->size();
    std::vector<SparseVector> next_fwd(nm), acc_pb(nm);
    for (std::size_t i = 0; i < nm; ++i) {
      next_fwd[i] = next->forward(i);
      acc_pb[i] = acc->pullback(i);
    }
    auto sparse = [](const std::vector<Rational>& v) {
      SparseVector out;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.push_back({i, v[i]});
      return out;
    };
    std::vector<SparseVector> fwd(ns), pb(nt);
    for (std::size_t i = 0; i < ns; ++i) fwd[i] = sparse(apply(next_fwd, dense(acc->forward(i), nm), nt));
    for (std::size_t j = 0; j < nt; ++j) pb[j] = sparse(apply(acc_pb, dense(next->pullback(j), nm), ns));
    acc = PushForwardMap::create(acc->source(), next->target(), std::move(fwd), std::move(pb));
  }
  return acc;
}

ChowClass proper_transform(const PushForwardMap& f, const ChowClass& exceptional, const ChowClass& divisor_class,
                           const Rational& center_multiplicity) {
  if (!divisor_class.is_pure_codim(1)) throw NotADivisor("proper transform needs a codimension-1 class");
  ChowClass pulled = f.pull(divisor_class);
  if (exceptional.ring() != pulled.ring()) throw RingMismatch("exceptional class does not live in the blow-up");
  return pulled - exceptional * RationalFunction(center_multiplicity);
}

} // namespace celint
