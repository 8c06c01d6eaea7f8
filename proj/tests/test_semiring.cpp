#include <doctest.h>

#include <random>

#include "kac/semiring.hpp"
#include "kac/builders.hpp"
#include "oracle.hpp"

using namespace kac;

namespace {

// Match library blocks of a group algebra to oracle characters by their
// character vectors; returns perm[oracle index] = library index.
std::vector<int> match_blocks(const HopfAlgebra& H,
                              const oracle::CharacterTable& T) {
  const Blocks& B = H.blocks();
  REQUIRE((int)T.chi.size() == B.k);
  std::vector<int> perm(B.k, -1);
  for (int a = 0; a < B.k; ++a) {
    for (int b = 0; b < B.k; ++b) {
      double dev = 0.0;
      for (int g = 0; g < H.dim(); ++g)
        dev = std::max(dev, std::abs(B.chi[b][g] - T.chi[a][g]));
      if (dev < 1e-6) {
        perm[a] = b;
        break;
      }
    }
    REQUIRE(perm[a] >= 0);
  }
  return perm;
}

MultVec random_mult_vec(int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(0, 5);
  MultVec v(k);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("group algebra fusion equals the representation ring") {
  for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"}) {
    CAPTURE(g);
    CayleyTable G = builtin_group(g);
    HopfAlgebra H = group_algebra(G);
    auto T = oracle::character_table(G);
    auto No = oracle::fusion_from_characters(G, T);
    auto perm = match_blocks(H, T);
    FusionTensor N = fusion_tensor(H);
    const int k = N.k;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          CHECK(N.at(perm[a], perm[b], perm[c]) ==
                No[(a * k + b) * k + c]);
  }
}

TEST_CASE("sigma box sigma in the S3 representation ring") {
  HopfAlgebra H = builtin_hopf("group:S3");
  const Blocks& B = H.blocks();
  FusionTensor N = fusion_tensor(H);
  int sigma = -1;
  for (int i = 0; i < B.k; ++i)
    if (B.d[i] == 2) sigma = i;
  REQUIRE(sigma >= 0);
  MultVec s(B.k, 0);
  s[sigma] = 1;
  MultVec out = box(s, s, N);
  CHECK(out == MultVec{1, 1, 1});
}

TEST_CASE("function algebra fusion is the Cayley table") {
  for (const char* g : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    CAPTURE(g);
    CayleyTable G = builtin_group(g);
    HopfAlgebra H = function_algebra(G);
    const Blocks& B = H.blocks();
    // Block i is the point ev_{elem[i]}.
    std::vector<int> elem(B.k, -1);
    for (int i = 0; i < B.k; ++i) {
      for (int x = 0; x < G.order; ++x)
        if (std::abs(B.z[i][x] - cx(1.0)) < 1e-9) elem[i] = x;
      REQUIRE(elem[i] >= 0);
    }
    FusionTensor N = fusion_tensor(H);
    for (int i = 0; i < B.k; ++i)
      for (int j = 0; j < B.k; ++j)
        for (int l = 0; l < B.k; ++l)
          CHECK(N.at(i, j, l) ==
                (G.mul(elem[i], elem[j]) == elem[l] ? 1 : 0));
  }
}

TEST_CASE("class_of reads off blockwise ranks") {
  HopfAlgebra H = builtin_hopf("group:S3");
  const Blocks& B = H.blocks();
  // The unit has class (1, 1, ..., 1) with multiplicity d_k per block.
  MultVec cls = class_of(H.algebra.unit, H);
  for (int i = 0; i < B.k; ++i) CHECK(cls[i] == B.d[i]);
  for (int i = 0; i < B.k; ++i) {
    MultVec zi = class_of(B.z[i], H);
    for (int j = 0; j < B.k; ++j) CHECK(zi[j] == (i == j ? B.d[i] : 0));
  }
}

TEST_CASE("unit class is a two-sided unit") {
  std::mt19937_64 rng(7);
  for (const auto& name : builtin_hopf_names()) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    FusionTensor N = fusion_tensor(H);
    MultVec u = unit_class(H);
    for (int t = 0; t < 50; ++t) {
      MultVec x = random_mult_vec(N.k, rng);
      CHECK(box(u, x, N) == x);
      CHECK(box(x, u, N) == x);
    }
  }
}

TEST_CASE("box is monotone, associative and distributive") {
  std::mt19937_64 rng(11);
  for (const char* name : {"group:S3", "fun:S3", "kp8", "group:Q8"}) {
    CAPTURE(name);
    HopfAlgebra H = builtin_hopf(name);
    FusionTensor N = fusion_tensor(H);
    const int k = N.k;
    for (int t = 0; t < 200; ++t) {
      MultVec x = random_mult_vec(k, rng), y = random_mult_vec(k, rng),
              z = random_mult_vec(k, rng);
      // Monotone: x <= x + z implies x [x] y <= (x + z) [x] y.
      MultVec xz = x;
      for (int i = 0; i < k; ++i) xz[i] += z[i];
      CHECK(cuntz_leq(box(x, y, N), box(xz, y, N)));
      // Associative and distributive.
      CHECK(box(box(x, y, N), z, N) == box(x, box(y, z, N), N));
      MultVec yz = y;
      for (int i = 0; i < k; ++i) yz[i] += z[i];
      MultVec lhs = box(x, yz, N);
      MultVec rhs = box(x, y, N);
      MultVec rhs2 = box(x, z, N);
      for (int i = 0; i < k; ++i) rhs[i] += rhs2[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("haar weights recover the dimension over the total dimension") {
  // For C[G]: tau = (1/|G|) sum_k d_k chi_k, so t_k = d_k / |G|.
  HopfAlgebra H = builtin_hopf("group:S3");
  const Blocks& B = H.blocks();
  auto w = haar_weights(H);
  for (int i = 0; i < B.k; ++i)
    CHECK(w[i] == doctest::Approx((double)B.d[i] / 6.0).epsilon(1e-9));
  // For fun:G all points weigh 1/|G|.
  HopfAlgebra F = builtin_hopf("fun:S3");
  for (double v : haar_weights(F)) CHECK(v == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("dimension function is additive and order preserving") {
  HopfAlgebra H = builtin_hopf("kp8");
  std::mt19937_64 rng(13);
  const int k = H.blocks().k;
  for (int t = 0; t < 100; ++t) {
    MultVec x = random_mult_vec(k, rng), y = random_mult_vec(k, rng);
    MultVec s = x;
    for (int i = 0; i < k; ++i) s[i] += y[i];
    CHECK(dimension_function(s, H) ==
          doctest::Approx(dimension_function(x, H) +
                          dimension_function(y, H)));
    if (cuntz_leq(x, y))
      CHECK(dimension_function(x, H) <= dimension_function(y, H) + 1e-12);
  }
}

TEST_CASE("k0 ring extends the semiring with signs") {
  HopfAlgebra H = builtin_hopf("group:S3");
  K0Ring R = k0_ring(H);
  // (e_sigma - e_triv)^2 = e_sigma^2 - 2 e_sigma e_triv + e_triv^2.
  std::vector<long> sigma(R.k, 0), unit(R.unit.begin(), R.unit.end());
  for (int i = 0; i < R.k; ++i)
    if (H.blocks().d[i] == 2) sigma[i] = 1;
  std::vector<long> diff(R.k);
  for (int i = 0; i < R.k; ++i) diff[i] = sigma[i] - unit[i];
  std::vector<long> sq = k0_multiply(diff, diff, R.product);
  std::vector<long> expect = k0_multiply(sigma, sigma, R.product);
  std::vector<long> cross = k0_multiply(sigma, unit, R.product);
  for (int i = 0; i < R.k; ++i)
    expect[i] += -2 * cross[i] + (i == (int)(std::find(unit.begin(),
                                                       unit.end(), 1) -
                                            unit.begin())
                                      ? 1
                                      : 0);
  CHECK(sq == expect);
}
