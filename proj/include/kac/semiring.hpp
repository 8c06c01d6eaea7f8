#pragma once

#include "kac/hopf.hpp"

namespace kac {

/// A Cuntz class as the multiplicity of each block's simple module.
using MultVec = std::vector<long>;

/// Structure constants of the box product on classes:
/// e_i [x] e_j = sum_k N[i][j][k] e_k.
struct FusionTensor {
  int k = 0;
  std::vector<long> N;  // flat [i*k*k + j*k + l]

  long at(int i, int j, int l) const { return N[(i * k + j) * k + l]; }
  long& at(int i, int j, int l) { return N[(i * k + j) * k + l]; }
};

/// Blockwise rank of the support projection of a positive element.
MultVec class_of(const Vec& a, const HopfAlgebra& H, const Tolerance& tol = {});

/// N[i][j][l] = (chi_i (x) chi_j)(Delta(z_l)) / d_l, rounded to integers.
FusionTensor fusion_tensor(const HopfAlgebra& H, const Tolerance& tol = {});

/// Bilinear extension of the fusion product to multiplicity vectors.
MultVec box(const MultVec& x, const MultVec& y, const FusionTensor& N);

/// Class of the counit support projection; the two-sided unit of the product.
MultVec unit_class(const HopfAlgebra& H, const Tolerance& tol = {});
int unit_class_index(const HopfAlgebra& H, const Tolerance& tol = {});

/// Coordinatewise Cuntz order.
bool cuntz_leq(const MultVec& x, const MultVec& y);

/// Haar weights per minimal projection, from tau = sum_k t_k chi_k.
std::vector<double> haar_weights(const HopfAlgebra& H, const Tolerance& tol = {});

/// Dimension function D(x) = sum_k x_k w_k induced by the Haar state.
double dimension_function(const MultVec& x, const HopfAlgebra& H,
                          const Tolerance& tol = {});

/// K0 of a finite-dimensional algebra is Z^k with the fusion product.
struct K0Ring {
  int k = 0;
  FusionTensor product;
  MultVec unit;
};

K0Ring k0_ring(const HopfAlgebra& H, const Tolerance& tol = {});

/// Bilinear product of (possibly negative) K0 vectors.
std::vector<long> k0_multiply(const std::vector<long>& xi,
                              const std::vector<long>& eta,
                              const FusionTensor& N);

}  // namespace kac
