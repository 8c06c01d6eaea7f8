#pragma once

#include "kac/semiring.hpp"

namespace kac {

/// Exact rational p/q with small denominator, recovered from a double.
struct Rational {
  long num = 0;
  long den = 1;

  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  bool operator<(const Rational& o) const {
    return num * o.den < o.num * den;
  }
};

Rational to_rational(double v, long max_den, const Tolerance& tol);

/// Isomorphism-invariant presentation of the Cuntz semiring of a Hopf
/// algebra: block dimensions, Haar weights, fusion rules and the unit.
struct SemiringSignature {
  int k = 0;
  std::vector<int> d;
  std::vector<Rational> weights;
  FusionTensor N;
  int unit = 0;
};

SemiringSignature signature(const HopfAlgebra& H, const Tolerance& tol = {});

bool is_commutative_semiring(const FusionTensor& N);

/// Result of a semiring comparison.  verdict is one of "both", "isomorphic",
/// "anti_isomorphic", "distinct"; the perm fields hold witnesses i -> perm[i].
struct CompareResult {
  std::string verdict;
  bool iso = false;
  bool anti = false;
  std::vector<int> iso_perm;
  std::vector<int> anti_perm;
};

/// Searches for a unit- and weight-preserving bijection of blocks matching
/// the fusion rules (iso) or the flipped rules (anti).  With match_weights
/// false, only block dimensions constrain the search.
CompareResult compare_semirings(const SemiringSignature& A,
                                const SemiringSignature& B,
                                bool match_weights = true);

}  // namespace kac
