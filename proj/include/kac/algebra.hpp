#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kac/tolerance.hpp"

namespace kac {

using cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// A finite-dimensional *-algebra given by structure constants over a basis
/// x_0 ... x_{n-1}:
///   x_i x_j = sum_k m[i][j][k] x_k
///   x_i^*   = sum_j star(j,i) x_j       (star applied antilinearly)
struct Algebra {
  std::string name;
  int n = 0;
  std::vector<std::string> basis_labels;
  std::vector<cx> mult;  // flat [i*n*n + j*n + k]
  Vec unit;
  Mat star;

  cx m(int i, int j, int k) const { return mult[(i * n + j) * n + k]; }
  cx& m(int i, int j, int k) { return mult[(i * n + j) * n + k]; }

  /// Product of two elements given by coefficient vectors.
  Vec multiply(const Vec& a, const Vec& b) const;

  /// Adjoint of an element (antilinear).
  Vec star_of(const Vec& a) const;

  /// Left regular representation L_a in the coefficient basis.
  Mat left_mult(const Vec& a) const;

  /// Right multiplication operator R_a, b -> b a.
  Mat right_mult(const Vec& a) const;

  /// Product in A (x) A of elements given as n x n coefficient matrices.
  Mat tensor_multiply(const Mat& T, const Mat& U) const;

  /// Sanity-checks array sizes; throws InputError on mismatch.
  void check_shape() const;
};

struct CheckItem {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct Report {
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  double max_residual() const {
    double r = 0.0;
    for (const auto& it : items) r = std::max(r, it.residual);
    return r;
  }
  void add(const std::string& name, double residual, double tol) {
    items.push_back({name, residual, residual < tol});
  }
};

/// Wedderburn data: minimal central projections z_k, block dimensions d_k and
/// irreducible characters chi_k (as vectors of chi_k(x_i)).  Blocks are in the
/// canonical order: ascending d_k, ties broken lexicographically on the
/// rounded character vector (Re chi(x_0), Im chi(x_0), Re chi(x_1), ...).
struct Blocks {
  int k = 0;
  std::vector<Vec> z;
  std::vector<int> d;
  std::vector<Vec> chi;
};

/// Checks associativity, unit law, the involution axioms and (when a Haar
/// vector is supplied) positive-definiteness of <a,b> = tau(a* b).
/// Failures are report entries, not exceptions.
Report validate_algebra(const Algebra& A, const Tolerance& tol,
                        const Vec* haar = nullptr);

/// Minimal central projections via the kernel of the commutator map, split by
/// a seeded random self-adjoint central element.
Blocks block_decomposition(const Algebra& A, const Tolerance& tol);

/// tau applied to an element given the vector of tau(x_i).
cx functional(const Vec& phi, const Vec& a);

/// Gram matrix G[i][j] = tau(x_i^* x_j).  Throws if not positive definite.
Mat gram_matrix(const Algebra& A, const Vec& haar, const Tolerance& tol);
Mat gram_matrix_unchecked(const Algebra& A, const Vec& haar);

/// Spectral projection of a positive element onto its nonzero eigenvalues,
/// returned as an element of A.  Throws DomainError if a is not positive.
Vec support_projection(const Vec& a, const Algebra& A, const Vec& haar,
                       const Tolerance& tol);

/// Numerical rank under the tolerance policy.
int numerical_rank(const Mat& M, const Tolerance& tol);

/// Round to a nearby integer; throws ToleranceError if too far.
long round_integer(double v, const Tolerance& tol, const std::string& what);

}  // namespace kac
