#include "dlct/equivalence.hpp"

#include <string>

#include "dlct/analysis.hpp"
#include "dlct/error.hpp"
#include "dlct/spectra.hpp"

namespace dlct {

AffineMap AffineMap::inverse() const {
  auto inv = linear.inverse();
  if (!inv) throw Error(Errc::NotInvertible, "affine map has a singular linear part");
  // y = Mx + c  =>  x = M^{-1} y + M^{-1} c
  return {*inv, inv->apply(constant)};
}

AffineMap random_invertible(unsigned dim, std::uint64_t seed) {
  if (dim < 1) throw Error(Errc::DomainError, "dimension must be positive");
  Rng rng(seed);
  BitMatrix m = BitMatrix::random(dim, dim, rng);
  while (!m.is_invertible()) m = BitMatrix::random(dim, dim, rng);
  const Word c = static_cast<Word>(rng.below(std::uint64_t{1} << dim));
  return {std::move(m), c};
}

AffineMap random_affine(unsigned dim_in, unsigned dim_out, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix m = BitMatrix::random(dim_out, dim_in, rng);
  const Word c = static_cast<Word>(rng.below(std::uint64_t{1} << dim_out));
  return {std::move(m), c};
}

Vbf ea_transform(const Vbf& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a) {
  if (a1.dim_in() != f.m() || a1.dim_out() != f.m() || !a1.is_invertible()) {
    throw Error(Errc::NotInvertible, "A1 must be an invertible map on m bits");
  }
  if (a2.dim_in() != f.n() || a2.dim_out() != f.n() || !a2.is_invertible()) {
    throw Error(Errc::NotInvertible, "A2 must be an invertible map on n bits");
  }
  if (a.dim_in() != f.n() || a.dim_out() != f.m()) {
    throw Error(Errc::LengthMismatch, "A must map n bits to m bits");
  }
  std::vector<Word> lut(f.size());
  for (std::size_t x = 0; x < lut.size(); ++x) {
    const Word w = static_cast<Word>(x);
    lut[x] = a1(f(a2(w))) ^ a(w);
  }
  return Vbf::from_lut(f.n(), f.m(), std::move(lut));
}

Vbf compositional_inverse(const Vbf& f) {
  if (!f.is_permutation()) throw Error(Errc::NotPermutation, "only permutations have a compositional inverse");
  std::vector<Word> lut(f.size());
  for (std::size_t x = 0; x < lut.size(); ++x) lut[f(static_cast<Word>(x))] = static_cast<Word>(x);
  return Vbf::from_lut(f.n(), f.m(), std::move(lut));
}

bool ea_sign_relation_holds(const Vbf& f, const AffineMap& a1, const AffineMap& a2, const AffineMap& a) {
  const Vbf g = ea_transform(f, a1, a2, a);
  const SpectralTable before = autocorrelation_table(f);
  const SpectralTable after = autocorrelation_table(g);
  const BitMatrix l1t = a1.linear.transpose();
  for (std::size_t u = 0; u < after.rows(); ++u) {
    const Word uu = static_cast<Word>(u);
    const Word lu = a.linear.apply(uu);
    const Word l2u = a2.linear.apply(uu);
    for (std::size_t v = 0; v < after.cols(); ++v) {
      const Word vv = static_cast<Word>(v);
      const Value sign = dot(vv, lu) ? -1 : 1;
      if (after.at(u, v) != sign * before.at(l2u, l1t.apply(vv))) return false;
    }
  }
  return true;
}

std::vector<CheckResult> verify_affine_invariance(const Vbf& f, const std::string& instance, unsigned trials,
                                                  std::uint64_t seed) {
  const Spectrum reference = spectrum_of(dlct_from_ddt(f));
  std::vector<CheckResult> out;
  for (unsigned t = 0; t < trials; ++t) {
    const AffineMap a1 = random_invertible(f.m(), seed + 2 * t);
    const AffineMap a2 = random_invertible(f.n(), seed + 2 * t + 1);
    const Spectrum got = spectrum_of(dlct_from_ddt(ea_transform(f, a1, a2, AffineMap::zero(f.n(), f.m()))));
    out.push_back({"affine-spectrum-invariance", instance + " trial " + std::to_string(t), got == reference,
                   got.max_abs(), reference.max_abs()});
  }
  return out;
}

std::vector<CheckResult> verify_ea_invariance(const Vbf& f, const std::string& instance, unsigned trials,
                                              std::uint64_t seed) {
  const Value reference = uniformity(dlct_from_ddt(f));
  std::vector<CheckResult> out;
  for (unsigned t = 0; t < trials; ++t) {
    const AffineMap a1 = random_invertible(f.m(), seed + 3 * t);
    const AffineMap a2 = random_invertible(f.n(), seed + 3 * t + 1);
    AffineMap a = random_affine(f.n(), f.m(), seed + 3 * t + 2);
    for (std::uint64_t bump = 1; a.linear == BitMatrix(f.m(), f.n()); ++bump) {
      a = random_affine(f.n(), f.m(), seed + 3 * t + 2 + (bump << 32));
    }
    const Value got = uniformity(dlct_from_ddt(ea_transform(f, a1, a2, a)));
    out.push_back({"ea-dlu-invariance", instance + " trial " + std::to_string(t), got == reference, got, reference});
  }
  return out;
}

}  // namespace dlct
