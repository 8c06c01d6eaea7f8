#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "kac/algebra.hpp"

namespace kac {

/// Coalgebra + antipode + Haar data over an Algebra:
///   Delta(x_i) = sum_{jk} coproduct[i][j][k] x_j (x) x_k
///   S(x_j)     = sum_k antipode(k,j) x_k
struct HopfData {
  std::vector<cx> coproduct;  // flat [i*n*n + j*n + k]
  Vec counit;
  Mat antipode;
  Vec haar;

  cx c(int n, int i, int j, int k) const {
    return coproduct[(i * n + j) * n + k];
  }
};

class HopfAlgebra {
 public:
  Algebra algebra;
  HopfData hopf;

  HopfAlgebra() = default;
  /// Validates shapes and rejects non-Kac input (S^2 != Id).
  HopfAlgebra(Algebra alg, HopfData h, const Tolerance& tol = {});

  int dim() const { return algebra.n; }
  const std::string& name() const { return algebra.name; }

  /// Coproduct of an element as an n x n coefficient matrix T with
  /// Delta(a) = sum_{jk} T(j,k) x_j (x) x_k.
  Mat coproduct_of(const Vec& a) const;

  cx counit_of(const Vec& a) const { return functional(hopf.counit, a); }
  cx haar_of(const Vec& a) const { return functional(hopf.haar, a); }
  Vec antipode_of(const Vec& a) const { return hopf.antipode * a; }

  /// Block decomposition, computed once and cached; safe under concurrent
  /// first access.
  const Blocks& blocks(const Tolerance& tol = {}) const;

 private:
  struct Cache {
    std::once_flag flag;
    std::optional<Blocks> blocks;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Tensor-identity checks of the bialgebra/antipode axioms on the basis.
Report check_hopf_axioms(const HopfAlgebra& H, const Tolerance& tol = {});

/// Invariance, traciality, normalization, faithfulness and S-invariance of
/// the Haar state.
Report check_haar(const HopfAlgebra& H, const Tolerance& tol = {});

/// Dual-basis pairing beta(sum a_i x_i, sum phi_j x^j) = sum a_i phi_i.
cx pairing(const Vec& a, const Vec& phi);

/// The dual Hopf algebra on the dual basis x^i.  Throws ConstructionError if
/// the resulting Haar state is not faithful and tracial.
HopfAlgebra dual_hopf(const HopfAlgebra& H, const Tolerance& tol = {});

/// Same algebra with the flipped coproduct (and unchanged antipode; Kac).
HopfAlgebra co_opposite(const HopfAlgebra& H, const Tolerance& tol = {});

/// The minimal central projection carrying the counit character.
Vec counit_support_projection(const HopfAlgebra& H, const Tolerance& tol = {});

}  // namespace kac
