#pragma once

#include "celint/chow_class.hpp"
#include "celint/chow_ring.hpp"

#include <memory>
#include <vector>

namespace celint {

class PushForwardMap;
using MapPtr = std::shared_ptr<const PushForwardMap>;

/// Proper birational push-forward between rings of equal dimension, paired
/// with its pull-back algebra map. `create` checks the projection formula on
/// all basis pairs, forward(pullback(x)) = x, codimension preservation and
/// multiplicativity of the pull-back; violations raise PresentationError.
class PushForwardMap {
public:
  /// forward[i]: image of source basis element i in the target.
  /// pullback[j]: image of target basis element j in the source.
  static MapPtr create(RingPtr source, RingPtr target, std::vector<SparseVector> forward,
                       std::vector<SparseVector> pullback);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const SparseVector& forward(std::size_t i) const { return forward_[i]; }
  const SparseVector& pullback(std::size_t j) const { return pullback_[j]; }

  ChowClass push(const ChowClass& c) const;
  ChowClass pull(const ChowClass& c) const;

private:
  PushForwardMap(RingPtr source, RingPtr target, std::vector<SparseVector> forward,
                 std::vector<SparseVector> pullback);
  void validate() const;

  RingPtr source_;
  RingPtr target_;
  std::vector<SparseVector> forward_;
  std::vector<SparseVector> pullback_;
};

inline ChowClass push_forward_class(const PushForwardMap& f, const ChowClass& c) { return f.push(c); }
inline ChowClass pull_back_class(const PushForwardMap& f, const ChowClass& c) { return f.pull(c); }

/// Identity map of a ring.
MapPtr identity_map(const RingPtr& ring);

/// Composite of maps applied left to right (maps[0] first).
MapPtr compose(const std::vector<MapPtr>& maps);

/// pull_back(divisor) - center_multiplicity * exceptional.
ChowClass proper_transform(const PushForwardMap& f, const ChowClass& exceptional, const ChowClass& divisor_class,
                           const Rational& center_multiplicity);

} // namespace celint
