#include "kac/semiring.hpp"

#include <cmath>

namespace kac {

MultVec class_of(const Vec& a, const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  Vec p = support_projection(a, H.algebra, H.hopf.haar, tol);
  MultVec m(B.k);
  for (int j = 0; j < B.k; ++j) {
    cx chi_p = functional(B.chi[j], p);
    if (std::abs(chi_p.imag()) > tol.integer_tol)
      throw ToleranceError("class_of: blockwise rank is not real");
    long r = round_integer(chi_p.real(), tol, "class_of: blockwise rank");
    if (r < 0) throw ToleranceError("class_of: negative blockwise rank");
    m[j] = r;
  }
  return m;
}

FusionTensor fusion_tensor(const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  const int k = B.k;
  FusionTensor N;
  N.k = k;
  N.N.assign(k * k * k, 0);
  for (int l = 0; l < k; ++l) {
    Mat T = H.coproduct_of(B.z[l]);  // Delta(z_l) as a coefficient matrix
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        // (chi_i (x) chi_j)(Delta(z_l)) / d_l
        cx v = (B.chi[i].transpose() * T * B.chi[j]).value() / (double)B.d[l];
        if (std::abs(v.imag()) > tol.integer_tol)
          throw ToleranceError("fusion_tensor: non-real multiplicity");
        long r = round_integer(v.real(), tol, "fusion_tensor: multiplicity");
        if (r < 0) throw ToleranceError("fusion_tensor: negative multiplicity");
        N.at(i, j, l) = r;
      }
  }
  return N;
}

MultVec box(const MultVec& x, const MultVec& y, const FusionTensor& N) {
  const int k = N.k;
  if ((int)x.size() != k || (int)y.size() != k)
    throw InputError("box: dimension mismatch");
  MultVec out(k, 0);
  for (int i = 0; i < k; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < k; ++j) {
      if (!y[j]) continue;
      for (int l = 0; l < k; ++l) out[l] += x[i] * y[j] * N.at(i, j, l);
    }
  }
  return out;
}

int unit_class_index(const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  for (int j = 0; j < B.k; ++j) {
    if (B.d[j] != 1) continue;
    if ((B.chi[j] - H.hopf.counit).cwiseAbs().maxCoeff() < tol.integer_tol)
      return j;
  }
  throw ConstructionError("unit_class: counit is not a block character");
}

MultVec unit_class(const HopfAlgebra& H, const Tolerance& tol) {
  MultVec u(H.blocks(tol).k, 0);
  u[unit_class_index(H, tol)] = 1;
  return u;
}

bool cuntz_leq(const MultVec& x, const MultVec& y) {
  if (x.size() != y.size()) throw InputError("cuntz_leq: dimension mismatch");
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::vector<double> haar_weights(const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  const int n = H.dim();
  // Solve tau = sum_k t_k chi_k in least squares; the chi_k are independent.
  Mat X(n, B.k);
  for (int j = 0; j < B.k; ++j) X.col(j) = B.chi[j];
  Vec t = X.colPivHouseholderQr().solve(H.hopf.haar);
  std::vector<double> w(B.k);
  for (int j = 0; j < B.k; ++j) {
    if (std::abs(t[j].imag()) > tol.integer_tol || t[j].real() <= 0)
      throw ToleranceError("haar_weights: weight not positive real");
    w[j] = t[j].real();
  }
  return w;
}

double dimension_function(const MultVec& x, const HopfAlgebra& H,
                          const Tolerance& tol) {
  std::vector<double> w = haar_weights(H, tol);
  if (x.size() != w.size())
    throw InputError("dimension_function: dimension mismatch");
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * w[i];
  return s;
}

K0Ring k0_ring(const HopfAlgebra& H, const Tolerance& tol) {
  K0Ring R;
  R.product = fusion_tensor(H, tol);
  R.k = R.product.k;
  R.unit = unit_class(H, tol);
  return R;
}

std::vector<long> k0_multiply(const std::vector<long>& xi,
                              const std::vector<long>& eta,
                              const FusionTensor& N) {
  const int k = N.k;
  if ((int)xi.size() != k || (int)eta.size() != k)
    throw InputError("k0_multiply: dimension mismatch");
  std::vector<long> out(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!xi[i] || !eta[j]) continue;
      for (int l = 0; l < k; ++l) out[l] += xi[i] * eta[j] * N.at(i, j, l);
    }
  return out;
}

}  // namespace kac
