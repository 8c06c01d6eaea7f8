#include <doctest.h>

#include <random>

#include "kac/analysis.hpp"
#include "kac/builders.hpp"

using namespace kac;

namespace {

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = cx(g(rng), g(rng));
  return v;
}

Vec random_positive(const Algebra& A, std::mt19937_64& rng) {
  Vec v = random_vec(A.n, rng);
  return A.multiply(A.star_of(v), v);
}

const char* kNames[] = {"group:Z3", "group:S3", "fun:S3", "group:Q8", "kp8"};

}  // namespace

TEST_CASE("gns frame is orthonormal and multiplicative") {
  std::mt19937_64 rng(3);
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    GnsSpace G = gns(H);
    const int n = H.dim();
    // Gram matrix of the frame columns is the identity.
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram(i, j) = H.haar_of(
            H.algebra.multiply(H.algebra.star_of(G.B.col(i)), G.B.col(j)));
    CHECK((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
    // frame_op is an algebra homomorphism.
    Vec a = random_vec(n, rng), b = random_vec(n, rng);
    Mat lhs = G.frame_op(H.algebra.multiply(a, b));
    Mat rhs = G.frame_op(a) * G.frame_op(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    // element_of inverts frame_op.
    double res = 1.0;
    Vec back = G.element_of(G.frame_op(a), &res);
    CHECK(res < 1e-9);
    CHECK((back - a).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("multiplicative unitary is unitary and twisted linear") {
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    GnsSpace G = gns(H);
    MultUnitary U = multiplicative_unitary(H, G);
    const int n2 = H.dim() * H.dim();
    CHECK((U.V.adjoint() * U.V - Mat::Identity(n2, n2)).cwiseAbs().maxCoeff() <
          1e-9);
    CHECK(U.vt_residual < 1e-9);
    CHECK(twisted_linearity_residual(H, G, U) < 1e-9);
  }
}

TEST_CASE("fourier transform is invertible and multiplicative") {
  std::mt19937_64 rng(5);
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    const int n = H.dim();
    for (int t = 0; t < 50; ++t) {
      Vec a = random_vec(n, rng), b = random_vec(n, rng);
      CHECK((inverse_fourier(fourier(a, H), H) - a).cwiseAbs().maxCoeff() <
            1e-9);
      // F(a * b) = F(a) F(b) in the dual algebra.
      Vec Fa = fourier(a, H), Fb = fourier(b, H);
      Vec Fab = fourier(convolve(a, b, H), H);
      Vec prod = Vec::Zero(n);
      for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k)
            prod[l] += Fa[i] * Fb[k] * H.hopf.c(n, l, i, k);
      CHECK((Fab - prod).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("convolution on a function algebra is group convolution") {
  CayleyTable G = builtin_group("S3");
  HopfAlgebra H = function_algebra(G);
  const int n = G.order;
  // ev_g * ev_h = (1/|G|) ev_{gh}.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Vec c = convolve(Vec::Unit(n, g), Vec::Unit(n, h), H);
      Vec expect = Vec::Zero(n);
      expect[G.mul(g, h)] = 1.0 / n;
      CHECK((c - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("haar state is convolution multiplicative") {
  std::mt19937_64 rng(9);
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    for (int t = 0; t < 100; ++t) {
      Vec a = random_vec(H.dim(), rng), b = random_vec(H.dim(), rng);
      cx lhs = H.haar_of(convolve(a, b, H));
      CHECK(std::abs(lhs - H.haar_of(a) * H.haar_of(b)) < 1e-9);
    }
  }
}

TEST_CASE("partial trace of the conjugated tensor is a scaled convolution") {
  std::mt19937_64 rng(17);
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    GnsSpace G = gns(H);
    MultUnitary U = multiplicative_unitary(H, G);
    double scale = 0.0;
    for (int t = 0; t < 20; ++t) {
      Vec p = random_positive(H.algebra, rng);
      Vec q = random_positive(H.algebra, rng);
      BoxConvolveReport r = verify_box_convolve(p, q, H, G, U);
      CHECK(r.residual < 1e-8);
      CHECK(r.readback_residual < 1e-8);
      if (t == 0)
        scale = r.scale;
      else
        CHECK(r.scale == doctest::Approx(scale).epsilon(1e-8));
    }
    // The scale is the algebra dimension.
    CHECK(scale == doctest::Approx((double)H.dim()).epsilon(1e-8));
  }
}

TEST_CASE("unitary route and fusion route agree on box classes") {
  for (const char* name : kNames) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    GnsSpace G = gns(H);
    MultUnitary U = multiplicative_unitary(H, G);
    const Blocks& B = H.blocks();
    FusionTensor N = fusion_tensor(H);
    for (int i = 0; i < B.k; ++i)
      for (int j = 0; j < B.k; ++j) {
        MultVec via_u = box_class_via_unitary(B.z[i], B.z[j], H, G, U);
        MultVec via_f = box(class_of(B.z[i], H), class_of(B.z[j], H), N);
        CHECK(via_u == via_f);
      }
  }
}

TEST_CASE("convolution sees only supports") {
  std::mt19937_64 rng(21);
  for (const char* name : {"fun:S3", "group:S3", "kp8"}) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    for (int t = 0; t < 10; ++t) {
      Vec a = random_positive(H.algebra, rng);
      CHECK(support_convolution_check(a, H));
      Vec b = random_positive(H.algebra, rng);
      CHECK(support_pair_check(a, b, H));
    }
  }
}
