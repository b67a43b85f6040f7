#pragma once

#include <algorithm>
#include <cstddef>

namespace coreline {

// Numeric tolerances shared by every module.
//   det   relative unimodularity / algebraic identity tolerance
//   cls   band around t^2 = 4 and Im t = 0 used by classification
//   geo   geometric residuals (fixed points, orthogonality)
struct Tolerances {
  double det = 1e-12;
  double cls = 1e-9;
  double geo = 1e-6;

  // Geometric tolerance for quantities built from a product of `length` matrices.
  double geo_for_length(std::size_t length) const {
    return geo * static_cast<double>(std::max<std::size_t>(1, length));
  }
};

}  // namespace coreline
