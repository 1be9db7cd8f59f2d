#pragma once

#include "celint/chow_class.hpp"
#include "celint/push_forward.hpp"

#include <string>

namespace celint {

/// A^*P^n = Q[h]/(h^{n+1}); n = 0 gives the point ring.
RingPtr ring_projective(int n, const std::string& var = "h");

/// The point: basis {[V]}, degree 1.
RingPtr ring_point();

/// Tensor product. Basis names are "a*b" with the fundamental class of
/// either factor dropped; clashing names raise PresentationError.
RingPtr ring_product(const RingPtr& r1, const RingPtr& r2);

struct Blowup {
  RingPtr ring;
  MapPtr map;      // blow-up -> base
  ChowClass exceptional;
};

/// Blow-up of a point. The base needs a point class (A_0 of rank 1 with a
/// nonzero degree). For dim n >= 2 the new basis elements are e, e^2, ...,
/// e^{n-1} named from `name`; e^n = (-1)^{n-1} [pt]. In dimension 1 the
/// blow-up is an isomorphism and the exceptional divisor is the point.
Blowup ring_blowup_point(const RingPtr& base, const std::string& name = "e");

} // namespace celint
