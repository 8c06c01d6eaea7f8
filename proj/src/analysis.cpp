#include "kac/analysis.hpp"

#include <cmath>

namespace kac {

Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

Mat GnsSpace::frame_op(const Vec& a) const {
  // Binv and B are set in gns(); L_a in the frame is Binv L_a B, but Binv
  // alone does not know the algebra.  Rebuild from the basis operators.
  Mat M = Mat::Zero(B.rows(), B.rows());
  for (int i = 0; i < (int)L.size(); ++i) M += a[i] * L[i];
  return M;
}

Vec GnsSpace::element_of(const Mat& M, double* residual) const {
  const int n = (int)L.size();
  Mat K(n * n, n);
  for (int i = 0; i < n; ++i)
    K.col(i) = Eigen::Map<const Vec>(L[i].data(), n * n);
  Vec rhs = Eigen::Map<const Vec>(M.data(), n * n);
  Vec a = K.colPivHouseholderQr().solve(rhs);
  if (residual) *residual = (K * a - rhs).norm();
  return a;
}

GnsSpace gns(const HopfAlgebra& H, const Tolerance& tol) {
  const Algebra& A = H.algebra;
  Mat G = gram_matrix(A, H.hopf.haar, tol);
  Eigen::LLT<Mat> llt(G);
  if (llt.info() != Eigen::Success)
    throw DegeneracyError("gns: Gram matrix is not positive definite");
  Mat Lc = llt.matrixL();  // G = Lc Lc^*
  GnsSpace S;
  // Orthonormal frame b_j = sum_i B(i,j) x_i with B = (Lc^*)^{-1}.
  S.B = Lc.adjoint()
            .triangularView<Eigen::Upper>()
            .solve(Mat::Identity(A.n, A.n));
  S.Binv = Lc.adjoint();
  S.L.reserve(A.n);
  for (int i = 0; i < A.n; ++i) {
    Vec e = Vec::Zero(A.n);
    e[i] = 1.0;
    S.L.push_back(S.Binv * A.left_mult(e) * S.B);
  }
  return S;
}

MultUnitary multiplicative_unitary(const HopfAlgebra& H, const GnsSpace& G,
                                   const Tolerance& tol) {
  const Algebra& A = H.algebra;
  const HopfData& D = H.hopf;
  const int n = A.n;
  const int n2 = n * n;
  // T(x_p (x) x_q) = Delta(x_p)(x_q (x) 1); index (first,second) = first*n+second.
  Mat Tc = Mat::Zero(n2, n2);
  Mat Vc = Mat::Zero(n2, n2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const int col = p * n + q;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          cx cpab = D.c(n, p, a, b);
          if (cpab != cx(0.0)) {
            for (int r = 0; r < n; ++r) {
              cx v = cpab * A.m(a, q, r);
              if (v != cx(0.0)) Tc(r * n + b, col) += v;
            }
          }
          // V(x_p (x) x_q) = sum (x_q)_(2) (x) S((x_q)_(1)) x_p
          cx cqab = D.c(n, q, a, b);
          if (cqab != cx(0.0)) {
            for (int s = 0; s < n; ++s) {
              cx w = cqab * D.antipode(s, a);
              if (w == cx(0.0)) continue;
              for (int r = 0; r < n; ++r) {
                cx v = w * A.m(s, p, r);
                if (v != cx(0.0)) Vc(b * n + r, col) += v;
              }
            }
          }
        }
    }
  Mat BB = kron(G.B, G.B);
  Mat BBinv = kron(G.Binv, G.Binv);
  MultUnitary U;
  U.V = BBinv * Vc * BB;
  U.T = BBinv * Tc * BB;
  U.vt_residual = (U.V * U.T - Mat::Identity(n2, n2)).cwiseAbs().maxCoeff();
  if (U.vt_residual > 1e3 * tol.rank_tol)
    throw ConstructionError("multiplicative_unitary: V T != Id");
  U.Vinv = U.T;
  return U;
}

double twisted_linearity_residual(const HopfAlgebra& H, const GnsSpace& G,
                                  const MultUnitary& U) {
  const int n = H.dim();
  Mat I = Mat::Identity(n, n);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    Mat T = H.coproduct_of(e);
    // Frame operator of multiplication by Delta(x_i) on A (x) A.
    Mat Md = Mat::Zero(n * n, n * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (T(j, k) != cx(0.0)) Md += T(j, k) * kron(G.L[j], G.L[k]);
    Mat lhs = U.V * Md;
    Mat rhs = kron(G.L[i], I) * U.V;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

Mat fourier_matrix(const HopfAlgebra& H) {
  const Algebra& A = H.algebra;
  const int n = A.n;
  Mat F(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cx v = 0.0;
      for (int k = 0; k < n; ++k) v += A.m(i, j, k) * H.hopf.haar[k];
      F(i, j) = v;
    }
  return F;
}

Vec fourier(const Vec& b, const HopfAlgebra& H) {
  return fourier_matrix(H) * b;
}

Vec inverse_fourier(const Vec& phi, const HopfAlgebra& H) {
  return fourier_matrix(H).colPivHouseholderQr().solve(phi);
}

Vec convolve(const Vec& a, const Vec& b, const HopfAlgebra& H) {
  const Algebra& A = H.algebra;
  const int n = A.n;
  // a * b = (tau (x) Id)[((S (x) Id) Delta(b)) (a (x) 1)]
  Mat T2 = H.hopf.antipode * H.coproduct_of(b);
  Vec u(n);  // u_p = tau(x_p a)
  for (int p = 0; p < n; ++p) {
    Vec e = Vec::Zero(n);
    e[p] = 1.0;
    u[p] = H.haar_of(A.multiply(e, a));
  }
  return T2.transpose() * u;
}

BoxConvolveReport verify_box_convolve(const Vec& l1, const Vec& l2,
                                      const HopfAlgebra& H, const GnsSpace& G,
                                      const MultUnitary& U,
                                      const Tolerance& tol) {
  const int n = H.dim();
  Mat Op = U.V * kron(G.frame_op(l1), G.frame_op(l2)) * U.Vinv;
  // Partial trace over the second factor.
  Mat M1 = Mat::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p < n; ++p) {
      cx v = 0.0;
      for (int b = 0; b < n; ++b) v += Op(r * n + b, p * n + b);
      M1(r, p) = v;
    }
  BoxConvolveReport rep;
  rep.lhs = G.element_of(M1, &rep.readback_residual);
  rep.rhs = convolve(l1, l2, H);
  double nn = rep.rhs.squaredNorm();
  if (nn < tol.rank_tol * tol.rank_tol) {
    if (rep.lhs.norm() > 1e2 * tol.rank_tol)
      throw ToleranceError("verify_box_convolve: zero convolution, nonzero trace");
    rep.scale = 0.0;
    rep.residual = rep.lhs.norm();
    return rep;
  }
  rep.scale = (rep.rhs.dot(rep.lhs)).real() / nn;
  double denom = std::max(1.0, rep.scale * std::sqrt(nn));
  rep.residual = (rep.lhs - rep.scale * rep.rhs).norm() / denom;
  return rep;
}

MultVec box_class_via_unitary(const Vec& p, const Vec& q, const HopfAlgebra& H,
                              const GnsSpace& G, const MultUnitary& U,
                              const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  const int n = H.dim();
  Vec sp = support_projection(p, H.algebra, H.hopf.haar, tol);
  Vec sq = support_projection(q, H.algebra, H.hopf.haar, tol);
  Mat P = U.V * kron(G.frame_op(sp), G.frame_op(sq)) * U.Vinv;
  Mat I = Mat::Identity(n, n);
  MultVec out(B.k);
  for (int l = 0; l < B.k; ++l) {
    Mat Zl = kron(G.frame_op(B.z[l]), I) * P;
    int r = numerical_rank(Zl, tol);
    if (r % (B.d[l]) != 0)
      throw ToleranceError("box_class: rank not a multiple of block dimension");
    out[l] = r / B.d[l];
  }
  return out;
}

bool support_convolution_check(const Vec& a, const HopfAlgebra& H,
                               const Tolerance& tol) {
  Vec c = convolve(H.algebra.unit, a, H);
  Vec s = support_projection(c, H.algebra, H.hopf.haar, tol);
  return (s - H.algebra.unit).cwiseAbs().maxCoeff() < tol.integer_tol;
}

bool support_pair_check(const Vec& p, const Vec& q, const HopfAlgebra& H,
                        const Tolerance& tol) {
  const Algebra& A = H.algebra;
  Vec sp = support_projection(p, A, H.hopf.haar, tol);
  Vec sq = support_projection(q, A, H.hopf.haar, tol);
  Vec s1 = support_projection(convolve(p, q, H), A, H.hopf.haar, tol);
  Vec s2 = support_projection(convolve(sp, sq, H), A, H.hopf.haar, tol);
  return (s1 - s2).cwiseAbs().maxCoeff() < tol.integer_tol;
}

}  // namespace kac
