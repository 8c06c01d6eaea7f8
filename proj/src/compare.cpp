#include "kac/compare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace kac {

Rational to_rational(double v, long max_den, const Tolerance& tol) {
  for (long q = 1; q <= max_den; ++q) {
    double pq = v * q;
    long p = std::lround(pq);
    if (std::abs(pq - p) < tol.integer_tol * q) {
      long g = std::gcd(std::abs(p), q);
      if (g == 0) g = 1;
      return {p / g, q / g};
    }
  }
  throw ToleranceError("to_rational: no small-denominator fraction nearby");
}

SemiringSignature signature(const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  SemiringSignature S;
  S.k = B.k;
  S.d = B.d;
  std::vector<double> w = haar_weights(H, tol);
  long max_den = (long)H.dim() * H.dim();
  for (double v : w) S.weights.push_back(to_rational(v, max_den, tol));
  S.N = fusion_tensor(H, tol);
  S.unit = unit_class_index(H, tol);
  return S;
}

bool is_commutative_semiring(const FusionTensor& N) {
  for (int i = 0; i < N.k; ++i)
    for (int j = 0; j < i; ++j)
      for (int l = 0; l < N.k; ++l)
        if (N.at(i, j, l) != N.at(j, i, l)) return false;
  return true;
}

namespace {

bool same_class(const SemiringSignature& A, int i, const SemiringSignature& B,
                int j, bool match_weights) {
  if (A.d[i] != B.d[j]) return false;
  if (match_weights && !(A.weights[i] == B.weights[j])) return false;
  return true;
}

// Depth-first search over block bijections constrained to compatible classes
// and fixing the unit; checks the full tensor identity at the leaves.
bool search(const SemiringSignature& A, const SemiringSignature& B,
            bool match_weights, bool anti, std::vector<int>& perm) {
  const int k = A.k;
  perm.assign(k, -1);
  std::vector<bool> used(k, false);
  perm[A.unit] = B.unit;
  used[B.unit] = true;
  if (!same_class(A, A.unit, B, B.unit, match_weights)) return false;

  std::vector<int> order;
  for (int i = 0; i < k; ++i)
    if (i != A.unit) order.push_back(i);

  auto full_check = [&]() {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
          long lhs = B.N.at(perm[i], perm[j], perm[l]);
          long rhs = anti ? A.N.at(j, i, l) : A.N.at(i, j, l);
          if (lhs != rhs) return false;
        }
    return true;
  };

  std::function<bool(size_t)> go = [&](size_t pos) {
    if (pos == order.size()) return full_check();
    int i = order[pos];
    for (int j = 0; j < k; ++j) {
      if (used[j] || !same_class(A, i, B, j, match_weights)) continue;
      perm[i] = j;
      used[j] = true;
      if (go(pos + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace

CompareResult compare_semirings(const SemiringSignature& A,
                                const SemiringSignature& B,
                                bool match_weights) {
  CompareResult R;
  if (A.k == B.k) {
    R.iso = search(A, B, match_weights, false, R.iso_perm);
    R.anti = search(A, B, match_weights, true, R.anti_perm);
  }
  if (!R.iso) R.iso_perm.clear();
  if (!R.anti) R.anti_perm.clear();
  R.verdict = R.iso && R.anti ? "both"
              : R.iso         ? "isomorphic"
              : R.anti        ? "anti_isomorphic"
                              : "distinct";
  return R;
}

}  // namespace kac
