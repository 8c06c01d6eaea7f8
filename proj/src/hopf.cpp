#include "kac/hopf.hpp"

#include <cmath>

namespace kac {

HopfAlgebra::HopfAlgebra(Algebra alg, HopfData h, const Tolerance& tol)
    : algebra(std::move(alg)), hopf(std::move(h)) {
  algebra.check_shape();
  const int n = algebra.n;
  if ((int)hopf.coproduct.size() != n * n * n)
    throw InputError("hopf '" + algebra.name + "': coproduct tensor size");
  if (hopf.counit.size() != n || hopf.haar.size() != n)
    throw InputError("hopf '" + algebra.name + "': counit/haar vector size");
  if (hopf.antipode.rows() != n || hopf.antipode.cols() != n)
    throw InputError("hopf '" + algebra.name + "': antipode matrix size");
  double s2 = (hopf.antipode * hopf.antipode - Mat::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff();
  if (s2 > tol.rank_tol)
    throw ConstructionError("hopf '" + algebra.name +
                            "': S^2 != Id (non-Kac input), residual " +
                            std::to_string(s2));
}

Mat HopfAlgebra::coproduct_of(const Vec& a) const {
  const int n = algebra.n;
  if (a.size() != n) throw InputError("coproduct_of: wrong length");
  Mat T = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == cx(0)) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) T(j, k) += a[i] * hopf.c(n, i, j, k);
  }
  return T;
}

const Blocks& HopfAlgebra::blocks(const Tolerance& tol) const {
  std::call_once(cache_->flag, [&] {
    cache_->blocks = block_decomposition(algebra, tol);
  });
  return *cache_->blocks;
}

Report check_hopf_axioms(const HopfAlgebra& H, const Tolerance& tol) {
  tol.check();
  const Algebra& A = H.algebra;
  const HopfData& D = H.hopf;
  const int n = A.n;
  Report rep;
  auto e = [&](int i) { return Vec(Vec::Unit(n, i)); };

  // Delta is a unital homomorphism.
  double r = (H.coproduct_of(A.unit) - A.unit * A.unit.transpose())
                 .cwiseAbs()
                 .maxCoeff();
  rep.add("coproduct_unital", r, tol.rank_tol);

  r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lhs = H.coproduct_of(A.multiply(e(i), e(j)));
      Mat rhs = A.tensor_multiply(H.coproduct_of(e(i)), H.coproduct_of(e(j)));
      r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  rep.add("coproduct_homomorphism", r, tol.rank_tol);

  // Delta is a *-map: Delta(x*) = (* (x) *) Delta(x).
  r = 0.0;
  for (int i = 0; i < n; ++i) {
    Mat lhs = H.coproduct_of(A.star_of(e(i)));
    Mat rhs = A.star * H.coproduct_of(e(i)).conjugate() * A.star.transpose();
    r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  rep.add("coproduct_star_map", r, tol.rank_tol);

  // Coassociativity.
  r = 0.0;
  for (int i = 0; i < n; ++i) {
    std::vector<cx> left(n * n * n, cx(0)), right(n * n * n, cx(0));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cx cijk = D.c(n, i, j, k);
        if (cijk == cx(0)) continue;
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            left[(p * n + q) * n + k] += cijk * D.c(n, j, p, q);
            right[(j * n + p) * n + q] += cijk * D.c(n, k, p, q);
          }
      }
    for (int t = 0; t < n * n * n; ++t)
      r = std::max(r, std::abs(left[t] - right[t]));
  }
  rep.add("coassociativity", r, tol.rank_tol);

  // Counit laws (eps (x) Id) Delta = Id = (Id (x) eps) Delta.
  r = 0.0;
  for (int i = 0; i < n; ++i) {
    Mat T = H.coproduct_of(e(i));
    Vec left = T.transpose() * D.counit;   // sum_j eps_j T(j,k)
    Vec right = T * D.counit;              // sum_k eps_k T(j,k)
    r = std::max(r, (left - e(i)).cwiseAbs().maxCoeff());
    r = std::max(r, (right - e(i)).cwiseAbs().maxCoeff());
  }
  rep.add("counit_law", r, tol.rank_tol);

  // Counit is a *-homomorphism with eps(1) = 1.
  r = std::abs(functional(D.counit, A.unit) - cx(1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      r = std::max(r, std::abs(functional(D.counit, A.multiply(e(i), e(j))) -
                               D.counit[i] * D.counit[j]));
    r = std::max(r, std::abs(functional(D.counit, A.star_of(e(i))) -
                             std::conj(D.counit[i])));
  }
  rep.add("counit_homomorphism", r, tol.rank_tol);

  // Antipode law m(S (x) Id)Delta = eps(.)1 = m(Id (x) S)Delta.
  r = 0.0;
  for (int i = 0; i < n; ++i) {
    Mat T = H.coproduct_of(e(i));
    Vec left = Vec::Zero(n), right = Vec::Zero(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (T(j, k) == cx(0)) continue;
        left += T(j, k) * A.multiply(D.antipode * e(j), e(k));
        right += T(j, k) * A.multiply(e(j), D.antipode * e(k));
      }
    Vec expect = D.counit[i] * A.unit;
    r = std::max(r, (left - expect).cwiseAbs().maxCoeff());
    r = std::max(r, (right - expect).cwiseAbs().maxCoeff());
  }
  rep.add("antipode_law", r, tol.rank_tol);

  // S(ab) = S(b)S(a).
  r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = D.antipode * A.multiply(e(i), e(j));
      Vec rhs = A.multiply(D.antipode * e(j), D.antipode * e(i));
      r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  rep.add("antipode_antihomomorphism", r, tol.rank_tol);

  r = (D.antipode * D.antipode - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  rep.add("antipode_involutive", r, tol.rank_tol);

  // S(x*) = S(x)* (Kac form of S(x*) = S^{-1}(x)*).
  r = (D.antipode * A.star - A.star * D.antipode.conjugate())
          .cwiseAbs()
          .maxCoeff();
  rep.add("antipode_star_compatibility", r, tol.rank_tol);

  return rep;
}

Report check_haar(const HopfAlgebra& H, const Tolerance& tol) {
  tol.check();
  const Algebra& A = H.algebra;
  const HopfData& D = H.hopf;
  const int n = A.n;
  Report rep;
  auto e = [&](int i) { return Vec(Vec::Unit(n, i)); };

  double r = std::abs(functional(D.haar, A.unit) - cx(1));
  rep.add("haar_normalized", r, tol.rank_tol);

  // (Id (x) tau)Delta(a) = tau(a)1 = (tau (x) Id)Delta(a).
  r = 0.0;
  for (int i = 0; i < n; ++i) {
    Mat T = H.coproduct_of(e(i));
    Vec left = T * D.haar;             // slice tau on the second leg
    Vec right = T.transpose() * D.haar;  // slice tau on the first leg
    Vec expect = D.haar[i] * A.unit;
    r = std::max(r, (left - expect).cwiseAbs().maxCoeff());
    r = std::max(r, (right - expect).cwiseAbs().maxCoeff());
  }
  rep.add("haar_invariance", r, tol.rank_tol);

  r = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r = std::max(r, std::abs(functional(D.haar, A.multiply(e(i), e(j))) -
                               functional(D.haar, A.multiply(e(j), e(i)))));
  rep.add("haar_tracial", r, tol.rank_tol);

  r = (D.antipode.transpose() * D.haar - D.haar).cwiseAbs().maxCoeff();
  rep.add("haar_antipode_invariant", r, tol.rank_tol);

  // Faithfulness: Gram matrix positive definite.
  Mat G = gram_matrix_unchecked(A, D.haar);
  Eigen::SelfAdjointEigenSolver<Mat> es((G + G.adjoint()) / 2.0);
  double lmin = es.eigenvalues().minCoeff();
  double lmax = es.eigenvalues().maxCoeff();
  rep.add("haar_faithful",
          std::max(0.0, tol.rank_tol * std::max(1.0, lmax) - lmin),
          tol.rank_tol);
  return rep;
}

cx pairing(const Vec& a, const Vec& phi) {
  if (a.size() != phi.size())
    throw InputError("pairing: element and functional have mismatched dual "
                     "dimensions");
  return (a.array() * phi.array()).sum();
}

Vec counit_support_projection(const HopfAlgebra& H, const Tolerance& tol) {
  const Blocks& B = H.blocks(tol);
  for (int j = 0; j < B.k; ++j) {
    if (B.d[j] != 1) continue;
    if ((B.chi[j] - H.hopf.counit).cwiseAbs().maxCoeff() < tol.integer_tol)
      return B.z[j];
  }
  throw ConstructionError("counit_support_projection: no block carries the "
                          "counit character (malformed input)");
}

HopfAlgebra co_opposite(const HopfAlgebra& H, const Tolerance& tol) {
  const int n = H.dim();
  Algebra A = H.algebra;
  A.name = "cop(" + H.algebra.name + ")";
  HopfData D = H.hopf;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        D.coproduct[(i * n + j) * n + k] = H.hopf.c(n, i, k, j);
  return HopfAlgebra(std::move(A), std::move(D), tol);
}

HopfAlgebra dual_hopf(const HopfAlgebra& H, const Tolerance& tol) {
  const int n = H.dim();
  const Algebra& A = H.algebra;
  const HopfData& D = H.hopf;

  Algebra dualA;
  dualA.name = "dual(" + A.name + ")";
  dualA.n = n;
  for (int i = 0; i < n; ++i)
    dualA.basis_labels.push_back(A.basis_labels[i] + "^");

  // beta(x_l, x^i x^j) = (beta (x) beta)(Delta(x_l), x^i (x) x^j)
  dualA.mult.assign(n * n * n, cx(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        dualA.mult[(i * n + j) * n + l] = D.c(n, l, i, j);

  dualA.unit = D.counit;

  // (x^i)* determined by beta(x, phi*) = conj(beta(S(x)*, phi)).
  dualA.star = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cx s(0);
      for (int k = 0; k < n; ++k)
        s += D.antipode(k, j) * std::conj(A.star(i, k));
      dualA.star(j, i) = s;
    }

  HopfData dualD;
  // beta(x_j x_l, x^i) transposes the multiplication tensor of A.
  dualD.coproduct.assign(n * n * n, cx(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        dualD.coproduct[(i * n + j) * n + l] = A.m(j, l, i);

  dualD.counit = A.unit;  // evaluation at 1_A
  dualD.antipode = D.antipode.transpose();

  // Haar functional of the dual: evaluation at the Haar element of A, which
  // is the support projection of the counit.
  Vec h = counit_support_projection(H, tol);
  dualD.haar = h;
  cx norm = functional(dualA.unit, h);  // tau^(1^) = eps(h)
  if (std::abs(norm) < tol.rank_tol)
    throw ConstructionError("dual_hopf: degenerate dual Haar normalization");
  dualD.haar /= norm;

  HopfAlgebra dual(std::move(dualA), std::move(dualD), tol);
  Report haar_rep = check_haar(dual, tol);
  if (!haar_rep.pass())
    throw ConstructionError(
        "dual_hopf: dual Haar state fails invariance/traciality/faithfulness "
        "(non-Kac input), worst residual " +
        std::to_string(haar_rep.max_residual()));
  return dual;
}

}  // namespace kac
