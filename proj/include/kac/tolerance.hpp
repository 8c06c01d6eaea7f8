#pragma once

#include "kac/errors.hpp"

namespace kac {

/// Global tolerance policy.  A singular value sigma is treated as zero iff
/// sigma <= rank_tol * max(1, sigma_max).  Quantities expected to be integers
/// are rounded and rejected if farther than integer_tol from the nearest one.
struct Tolerance {
  double rank_tol = 1e-8;
  double integer_tol = 1e-6;

  void check() const {
    if (!(rank_tol > 0) || !(integer_tol > 0))
      throw InputError("Tolerance: rank_tol and integer_tol must be positive");
  }

  bool is_zero_singular(double sigma, double sigma_max) const {
    return sigma <= rank_tol * (sigma_max > 1.0 ? sigma_max : 1.0);
  }
};

}  // namespace kac
