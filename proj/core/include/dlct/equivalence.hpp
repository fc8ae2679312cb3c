#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlct/bitmatrix.hpp"
#include "dlct/check.hpp"
#include "dlct/vbf.hpp"

namespace dlct {

// x -> M x + c over GF(2).
struct AffineMap {
  BitMatrix linear;
  Word constant = 0;

  unsigned dim_in() const noexcept { return linear.cols(); }
  unsigned dim_out() const noexcept { return linear.rows(); }
  Word apply(Word x) const noexcept { return linear.apply(x) ^ constant; }
  Word operator()(Word x) const noexcept { return apply(x); }
  bool is_invertible() const { return linear.is_invertible(); }
  // Throws NotInvertible.
  AffineMap inverse() const;

  static AffineMap identity(unsigned dim) { return {BitMatrix::identity(dim), 0}; }
  static AffineMap zero(unsigned dim_in, unsigned dim_out) { return {BitMatrix(dim_out, dim_in), 0}; }
};

// Invertible linear part by rejection on rank, uniform constant; deterministic per seed.
AffineMap random_invertible(unsigned dim, std::uint64_t seed);
// Arbitrary (possibly singular) affine map.
AffineMap random_affine(unsigned dim_in, unsigned dim_out, std::uint64_t seed);

// F'(x) = A1(F(A2(x))) + A(x). Throws NotInvertible if A1 or A2 is not a permutation.
Vbf ea_transform(const Vbf& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a);

// F^{-1}. Throws NotPermutation.
Vbf compositional_inverse(const Vbf& f);

// Delta_{F'}(u,v) = (-1)^{v.L(u)} Delta_F(L2 u, L1^T v) for every (u,v), where L, L1, L2 are the
// linear parts of A, A1, A2 and F' = ea_transform(F, A1, A2, A).
bool ea_sign_relation_holds(const Vbf& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a);

// Spectrum multiset preserved under `trials` random affine pairs (A = 0).
std::vector<CheckResult> verify_affine_invariance(const Vbf& f, const std::string& instance, unsigned trials,
                                                  std::uint64_t seed);
// DLU preserved under `trials` random EA transforms with a random nonzero A.
std::vector<CheckResult> verify_ea_invariance(const Vbf& f, const std::string& instance, unsigned trials,
                                              std::uint64_t seed);

}  // namespace dlct
