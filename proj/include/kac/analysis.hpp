#pragma once

#include "kac/semiring.hpp"

namespace kac {

/// GNS space of (A, tau): orthonormal frame change and the left regular
/// representation expressed in that frame.
struct GnsSpace {
  Mat B;     // columns: orthonormal basis elements as coefficient vectors
  Mat Binv;  // coefficient -> frame coordinates
  std::vector<Mat> L;  // frame matrix of left multiplication by x_i

  /// Frame operator of left multiplication by an element.
  Mat frame_op(const Vec& a) const;

  /// Recovers a from its frame operator; *residual (if given) receives the
  /// distance of M from the image of the regular representation.
  Vec element_of(const Mat& M, double* residual = nullptr) const;
};

GnsSpace gns(const HopfAlgebra& H, const Tolerance& tol = {});

/// The multiplicative unitary on H (x) H in the orthonormal frame, with
/// T(a (x) b) = Delta(a)(b (x) 1) and V built independently from the
/// algebraic inverse formula.
struct MultUnitary {
  Mat V;     // frame, n^2 x n^2
  Mat Vinv;
  Mat T;     // frame matrix of the inverse map
  double vt_residual = 0.0;  // ||VT - Id||
};

MultUnitary multiplicative_unitary(const HopfAlgebra& H, const GnsSpace& G,
                                   const Tolerance& tol = {});

/// Fourier transform F with beta(a, F(b)) = tau(ab); columns of the returned
/// matrix are F(x_j) in dual-basis coordinates.
Mat fourier_matrix(const HopfAlgebra& H);
Vec fourier(const Vec& b, const HopfAlgebra& H);
Vec inverse_fourier(const Vec& phi, const HopfAlgebra& H);

/// Convolution a * b = (tau (x) Id)[((S (x) Id) Delta(b)) (a (x) 1)];
/// satisfies F(a * b) = F(a) F(b).
Vec convolve(const Vec& a, const Vec& b, const HopfAlgebra& H);

/// Checks (Id (x) Tr) V (l1 (x) l2) V^{-1} = c * (l1 * l2) with one fitted
/// positive scale c.
struct BoxConvolveReport {
  Vec lhs;
  Vec rhs;
  double scale = 0.0;
  double residual = 0.0;
  double readback_residual = 0.0;
};

BoxConvolveReport verify_box_convolve(const Vec& l1, const Vec& l2,
                                      const HopfAlgebra& H, const GnsSpace& G,
                                      const MultUnitary& U,
                                      const Tolerance& tol = {});

/// Cuntz class of p [x] q computed through the unitary route:
/// blockwise rank of V (L_p (x) L_q) V^{-1}.
MultVec box_class_via_unitary(const Vec& p, const Vec& q, const HopfAlgebra& H,
                              const GnsSpace& G, const MultUnitary& U,
                              const Tolerance& tol = {});

/// support(1 * a) = 1 for positive nonzero a.
bool support_convolution_check(const Vec& a, const HopfAlgebra& H,
                               const Tolerance& tol = {});

/// Convolution only sees supports: supp(p * q) = supp(supp(p) * supp(q)).
bool support_pair_check(const Vec& p, const Vec& q, const HopfAlgebra& H,
                        const Tolerance& tol = {});

/// Worst-case residual of V(Delta(a) x) = (a (x) 1) V(x) over basis a.
double twisted_linearity_residual(const HopfAlgebra& H, const GnsSpace& G,
                                  const MultUnitary& U);

/// Kronecker product helper used throughout the frame computations.
Mat kron(const Mat& A, const Mat& B);

}  // namespace kac
