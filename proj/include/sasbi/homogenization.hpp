#pragma once

#include "sasbi/ordering.hpp"
#include "sasbi/polynomial.hpp"

namespace sasbi {

/// A local ring and its homogenized lift. The lift has the extra variable t
/// at position 0 and the block matrix
///
///   ( 1 1 ... 1 )
///   ( 0    M    )
///
/// which is a global ordering.
struct HomogenizedContext {
  RingContext base;
  RingContext lifted;
};

/// Multiplies each term by t^(deg f - deg term); t becomes variable 0.
/// Throws on the zero polynomial.
Polynomial homogenize(const Polynomial& f);

/// Sets t (variable 0) to 1.
Polynomial dehomogenize(const Polynomial& F);

/// Requires a local base ordering.
HomogenizedContext lift_ordering(const RingContext& base);

}  // namespace sasbi
