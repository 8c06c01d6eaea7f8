#pragma once

#include <string>
#include <vector>

#include "kac/hopf.hpp"

namespace kac {

/// A finite group as an explicit multiplication table of element indices.
struct CayleyTable {
  std::string name;
  int order = 0;
  std::vector<int> table;  // table[g*order + h] = index of g*h
  int identity = 0;
  std::vector<std::string> labels;

  int mul(int g, int h) const { return table[g * order + h]; }
  int inverse(int g) const;

  /// Identity, Latin-square and associativity checks; throws InputError.
  void validate() const;
};

CayleyTable cyclic_group(int order);
CayleyTable direct_product(const CayleyTable& G, const CayleyTable& H);
CayleyTable symmetric_group_s3();
CayleyTable dihedral_group_d4();
CayleyTable quaternion_group_q8();

/// Lookup of the built-in tables: Z2, Z3, Z4, Z2xZ2, S3, D4, Q8.
CayleyTable builtin_group(const std::string& name);

/// The group algebra C[G]: basis delta_g, Delta(g) = g (x) g, tau = coeff of e.
HopfAlgebra group_algebra(const CayleyTable& G);

/// The function algebra C(G): basis ev_g, pointwise product, uniform tau.
HopfAlgebra function_algebra(const CayleyTable& G);

/// The 8-dimensional Kac-Paljutkin algebra (the unique 8-dimensional Kac
/// algebra that is neither commutative nor cocommutative), built from its
/// generators-and-relations presentation.
HopfAlgebra kac_paljutkin8();

/// Builders addressable by CLI-style names:
///   group:<G>, fun:<G>, kp8, dual:<name>, cop:<name>.
HopfAlgebra builtin_hopf(const std::string& name);
std::vector<std::string> builtin_hopf_names();

/// Canonical JSON serialization of a Hopf algebra (see README for the schema).
std::string emit_spec(const HopfAlgebra& H);

/// Parses and fully validates a spec document; throws InputError on syntax or
/// schema problems and ConstructionError (with residual info) on axiom
/// failures.
HopfAlgebra parse_spec(const std::string& text, const Tolerance& tol = {});

/// Syntax/shape parsing only (plus the S^2 = Id constructor check); callers
/// run the axiom reports themselves.
HopfAlgebra parse_spec_unchecked(const std::string& text,
                                 const Tolerance& tol = {});

}  // namespace kac
