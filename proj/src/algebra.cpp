#include "kac/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace kac {

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != n || b.size() != n)
    throw InputError("multiply: coefficient vector has wrong length");
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == cx(0)) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == cx(0)) continue;
      const cx aibj = a[i] * b[j];
      for (int k = 0; k < n; ++k) out[k] += aibj * m(i, j, k);
    }
  }
  return out;
}

Vec Algebra::star_of(const Vec& a) const {
  if (a.size() != n) throw InputError("star_of: wrong length");
  return star * a.conjugate();
}

Mat Algebra::left_mult(const Vec& a) const {
  Mat L = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == cx(0)) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) L(k, j) += a[i] * m(i, j, k);
  }
  return L;
}

Mat Algebra::right_mult(const Vec& a) const {
  Mat R = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (a[j] == cx(0)) continue;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) R(k, i) += a[j] * m(i, j, k);
  }
  return R;
}

Mat Algebra::tensor_multiply(const Mat& T, const Mat& U) const {
  Mat out = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (T(a, b) == cx(0)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (U(c, d) == cx(0)) continue;
          const cx coeff = T(a, b) * U(c, d);
          for (int p = 0; p < n; ++p) {
            const cx mac = m(a, c, p);
            if (mac == cx(0)) continue;
            for (int q = 0; q < n; ++q) out(p, q) += coeff * mac * m(b, d, q);
          }
        }
    }
  return out;
}

void Algebra::check_shape() const {
  if (n <= 0) throw InputError("algebra dimension must be positive");
  if ((int)basis_labels.size() != n)
    throw InputError("algebra '" + name + "': expected " + std::to_string(n) +
                     " basis labels");
  if ((int)mult.size() != n * n * n)
    throw InputError("algebra '" + name + "': multiplication tensor size");
  if (unit.size() != n) throw InputError("algebra '" + name + "': unit vector size");
  if (star.rows() != n || star.cols() != n)
    throw InputError("algebra '" + name + "': star matrix must be " +
                     std::to_string(n) + "x" + std::to_string(n));
}

cx functional(const Vec& phi, const Vec& a) {
  if (phi.size() != a.size()) throw InputError("functional: size mismatch");
  return (phi.array() * a.array()).sum();  // bilinear, no conjugation
}

Report validate_algebra(const Algebra& A, const Tolerance& tol,
                        const Vec* haar) {
  tol.check();
  A.check_shape();
  Report rep;
  const int n = A.n;

  auto e = [&](int i) {
    Vec v = Vec::Zero(n);
    v[i] = 1.0;
    return v;
  };

  // (x_i x_j) x_k == x_i (x_j x_k)
  double assoc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = A.multiply(e(i), e(j));
      for (int k = 0; k < n; ++k) {
        Vec lhs = A.multiply(ij, e(k));
        Vec rhs = A.multiply(e(i), A.multiply(e(j), e(k)));
        assoc = std::max(assoc, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
  rep.add("associativity", assoc, tol.rank_tol);

  double unitlaw = 0.0;
  for (int i = 0; i < n; ++i) {
    unitlaw = std::max(unitlaw,
                       (A.multiply(A.unit, e(i)) - e(i)).cwiseAbs().maxCoeff());
    unitlaw = std::max(unitlaw,
                       (A.multiply(e(i), A.unit) - e(i)).cwiseAbs().maxCoeff());
  }
  rep.add("unit_law", unitlaw, tol.rank_tol);

  // (x*)* = x  <=>  star * conj(star) = Id
  double invol = (A.star * A.star.conjugate() - Mat::Identity(n, n))
                     .cwiseAbs()
                     .maxCoeff();
  rep.add("star_involution", invol, tol.rank_tol);

  // (x_i x_j)* = x_j* x_i*
  double antihom = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = A.star_of(A.multiply(e(i), e(j)));
      Vec rhs = A.multiply(A.star_of(e(j)), A.star_of(e(i)));
      antihom = std::max(antihom, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  rep.add("star_antihomomorphism", antihom, tol.rank_tol);

  if (haar) {
    Mat G = gram_matrix_unchecked(A, *haar);
    double herm = (G - G.adjoint()).cwiseAbs().maxCoeff();
    rep.add("haar_form_hermitian", herm, tol.rank_tol);
    Eigen::SelfAdjointEigenSolver<Mat> es((G + G.adjoint()) / 2.0);
    double lmin = es.eigenvalues().minCoeff();
    double lmax = es.eigenvalues().maxCoeff();
    // residual is the margin by which positive-definiteness fails
    double resid = std::max(0.0, tol.rank_tol * std::max(1.0, lmax) - lmin);
    rep.add("haar_form_positive_definite", resid, tol.rank_tol);
  }
  return rep;
}

Mat gram_matrix_unchecked(const Algebra& A, const Vec& haar) {
  const int n = A.n;
  Mat G(n, n);
  for (int i = 0; i < n; ++i) {
    Vec xi_star = A.star_of(Vec::Unit(n, i));
    for (int j = 0; j < n; ++j)
      G(i, j) = functional(haar, A.multiply(xi_star, Vec::Unit(n, j)));
  }
  return G;
}

Mat gram_matrix(const Algebra& A, const Vec& haar, const Tolerance& tol) {
  Mat G = gram_matrix_unchecked(A, haar);
  Eigen::SelfAdjointEigenSolver<Mat> es((G + G.adjoint()) / 2.0);
  double lmin = es.eigenvalues().minCoeff();
  double lmax = es.eigenvalues().maxCoeff();
  if (lmin <= tol.rank_tol * std::max(1.0, lmax))
    throw DomainError("gram_matrix: form tau(a* b) is not positive definite "
                      "(min eigenvalue " + std::to_string(lmin) + ")");
  return G;
}

int numerical_rank(const Mat& M, const Tolerance& tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(M);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (!tol.is_zero_singular(s[i], smax)) ++r;
  return r;
}

long round_integer(double v, const Tolerance& tol, const std::string& what) {
  double r = std::round(v);
  if (std::abs(v - r) > tol.integer_tol)
    throw ToleranceError(what + ": value " + std::to_string(v) +
                         " is not within integer_tol of an integer");
  return (long)r;
}

namespace {

// Orthonormal kernel basis of M (columns), under the tolerance policy.
Mat kernel_basis(const Mat& M, const Tolerance& tol) {
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < s.size(); ++i)
    if (!tol.is_zero_singular(s[i], smax)) ++rank;
  return svd.matrixV().rightCols(M.cols() - rank);
}

}  // namespace

Blocks block_decomposition(const Algebra& A, const Tolerance& tol) {
  tol.check();
  const int n = A.n;

  // Center = kernel of a -> ((L_i - R_i) a)_i.
  Mat C(n * n, n);
  for (int i = 0; i < n; ++i) {
    Vec ei = Vec::Unit(n, i);
    C.middleRows(i * n, n) = A.left_mult(ei) - A.right_mult(ei);
  }
  Mat Z = kernel_basis(C, tol);  // n x k, columns span the center
  const int k = (int)Z.cols();
  if (k == 0) throw DegeneracyError("block_decomposition: trivial center");

  // Seeded random self-adjoint central element.
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  Vec w = Vec::Zero(n);
  for (int j = 0; j < k; ++j) w += cx(ud(rng), ud(rng)) * Z.col(j);
  Vec z0 = w + A.star_of(w);

  // Multiplication by z0 restricted to the center, in the coordinates of Z.
  Mat Lz = A.left_mult(z0);
  Mat Mc = Z.adjoint() * (Lz * Z);  // Z has orthonormal columns

  Eigen::ComplexEigenSolver<Mat> es(Mc);
  if (es.info() != Eigen::Success)
    throw DegeneracyError("block_decomposition: eigen solver failed on center");

  // Eigenvalue separation check: simultaneous splitting needs distinct ones.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(es.eigenvalues()[i] - es.eigenvalues()[j]) <
          1e3 * tol.rank_tol) {
        std::ostringstream os;
        os << "block_decomposition: central splitting degenerate, eigenvalues "
           << es.eigenvalues()[i] << " and " << es.eigenvalues()[j];
        throw DegeneracyError(os.str());
      }

  Blocks B;
  B.k = k;
  for (int j = 0; j < k; ++j) {
    Vec v = Z * es.eigenvectors().col(j);  // central element of A
    // Eigenspaces are one-dimensional, so v = alpha * (minimal idempotent).
    Vec v2 = A.multiply(v, v);
    cx alpha = v.dot(v2) / v.dot(v);  // least-squares v2 ~ alpha v
    if (std::abs(alpha) < tol.rank_tol)
      throw DegeneracyError("block_decomposition: nilpotent central direction");
    Vec z = v / alpha;
    // Polish: symmetrize and one idempotent refinement step.
    for (int it = 0; it < 2; ++it) {
      z = (z + A.star_of(z)) / 2.0;
      Vec z2 = A.multiply(z, z);
      z = 3.0 * z2 - 2.0 * A.multiply(z2, z);
    }
    B.z.push_back(z);
  }

  // Block dimensions from rank(L_z) = d^2 and characters from the regular trace.
  for (int j = 0; j < k; ++j) {
    int r = numerical_rank(A.left_mult(B.z[j]), tol);
    double d = std::sqrt((double)r);
    B.d.push_back((int)round_integer(d, tol, "block dimension"));
  }
  int sumsq = 0;
  for (int d : B.d) sumsq += d * d;
  if (sumsq != n)
    throw DegeneracyError("block_decomposition: sum of d_k^2 != n");

  for (int j = 0; j < k; ++j) {
    Vec chi(n);
    for (int i = 0; i < n; ++i) {
      Vec zx = A.multiply(B.z[j], Vec::Unit(n, i));
      chi[i] = A.left_mult(zx).trace() / (double)B.d[j];
    }
    B.chi.push_back(chi);
  }

  // Canonical order: ascending d, then lex on the rounded character vector.
  std::vector<int> idx(k);
  for (int j = 0; j < k; ++j) idx[j] = j;
  auto rounded = [](double v) { return std::round(v * 1e6) / 1e6; };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (B.d[a] != B.d[b]) return B.d[a] < B.d[b];
    for (int i = 0; i < n; ++i) {
      double ra = rounded(B.chi[a][i].real()), rb = rounded(B.chi[b][i].real());
      if (ra != rb) return ra < rb;
      double ia = rounded(B.chi[a][i].imag()), ib = rounded(B.chi[b][i].imag());
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  Blocks out;
  out.k = k;
  for (int j : idx) {
    out.z.push_back(B.z[j]);
    out.d.push_back(B.d[j]);
    out.chi.push_back(B.chi[j]);
  }

  // Consistency of the polished projections.
  Vec zsum = Vec::Zero(n);
  for (const Vec& z : out.z) zsum += z;
  double resid = (zsum - A.unit).cwiseAbs().maxCoeff();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec zz = A.multiply(out.z[i], out.z[j]);
      Vec expect = (i == j) ? out.z[i] : Vec(Vec::Zero(n));
      resid = std::max(resid, (zz - expect).cwiseAbs().maxCoeff());
    }
  if (resid > 1e3 * tol.rank_tol)
    throw DegeneracyError(
        "block_decomposition: central idempotents fail orthogonality, residual " +
        std::to_string(resid));
  return out;
}

Vec support_projection(const Vec& a, const Algebra& A, const Vec& haar,
                       const Tolerance& tol) {
  const int n = A.n;
  if (a.size() != n) throw InputError("support_projection: wrong length");

  // Orthonormal GNS frame so that L_a is Hermitian for self-adjoint a.
  Mat G = gram_matrix(A, haar, tol);
  Eigen::LLT<Mat> llt((G + G.adjoint()) / 2.0);
  Mat Lchol = llt.matrixL();
  // frame op of b: Lchol^* L_b Lchol^{-*}
  Mat La = A.left_mult(a);
  Mat Af = Lchol.adjoint() * La *
           Lchol.adjoint().triangularView<Eigen::Upper>().solve(
               Mat::Identity(n, n));

  double herm = (Af - Af.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e2 * tol.rank_tol)
    throw DomainError("support_projection: element is not self-adjoint");

  Eigen::SelfAdjointEigenSolver<Mat> es((Af + Af.adjoint()) / 2.0);
  double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  if (es.eigenvalues().minCoeff() < -tol.rank_tol * std::max(1.0, lmax))
    throw DomainError("support_projection: element has negative spectrum");

  Mat P = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (!tol.is_zero_singular(std::abs(es.eigenvalues()[i]), lmax))
      P += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();

  // Back to the coefficient basis; the projection lies in L(A), so applying
  // it to the unit recovers the element p with L_p = P.
  Mat Pcoeff = Lchol.adjoint().triangularView<Eigen::Upper>().solve(
                   Mat::Identity(n, n)) *
               P * Lchol.adjoint();
  // Pcoeff = Lchol^{-*} P Lchol^{*}
  return Pcoeff * A.unit;
}

}  // namespace kac
