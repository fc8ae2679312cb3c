#include "dlct/vbf.hpp"

#include <string>

#include "dlct/error.hpp"
#include "dlct/wht.hpp"

namespace dlct {

BoolFun::BoolFun(unsigned n, std::vector<std::uint8_t> truth) : n_(n), truth_(std::move(truth)) {
  if (n > kMaxLutDimension) throw Error(Errc::TooLarge, "Boolean function on " + std::to_string(n) + " bits");
  if (truth_.size() != (std::size_t{1} << n)) {
    throw Error(Errc::LengthMismatch, "truth table of length " + std::to_string(truth_.size()) +
                                          " for n = " + std::to_string(n));
  }
  for (auto& bit : truth_) bit &= 1U;
}

std::vector<Value> BoolFun::signs() const {
  std::vector<Value> out(truth_.size());
  for (std::size_t x = 0; x < truth_.size(); ++x) out[x] = truth_[x] ? -1 : 1;
  return out;
}

std::vector<Value> BoolFun::walsh() const {
  auto out = signs();
  wht_inplace(out);
  return out;
}

Vbf Vbf::from_lut(unsigned n, unsigned m, std::vector<Word> table) {
  if (n > kMaxLutDimension || m > kMaxLutDimension) {
    throw Error(Errc::TooLarge, "(" + std::to_string(n) + "," + std::to_string(m) + ")-function exceeds 16 bits");
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(Errc::LengthMismatch,
                "table length " + std::to_string(table.size()) + " != 2^" + std::to_string(n));
  }
  const Word limit = Word{1} << m;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (table[x] >= limit) {
      throw Error(Errc::EntryOutOfRange, "entry " + std::to_string(table[x]) + " at index " +
                                             std::to_string(x) + " is not below 2^" + std::to_string(m));
    }
  }
  return Vbf(n, m, std::move(table));
}

Vbf Vbf::from_univariate(const FieldCtx& ctx, std::span<const Term> terms) {
  const unsigned n = ctx.n();
  if (n > kMaxLutDimension) {
    throw Error(Errc::TooLarge, "lookup table over GF(2^" + std::to_string(n) + ")");
  }
  std::vector<Word> lut(ctx.order(), 0);
  for (const Term& term : terms) {
    if (term.coefficient > ctx.mask()) {
      throw Error(Errc::EntryOutOfRange, "coefficient " + std::to_string(term.coefficient));
    }
    if (term.coefficient == 0) continue;
    for (std::size_t x = 0; x < lut.size(); ++x) {
      lut[x] ^= ctx.mul(term.coefficient, ctx.pow(static_cast<Word>(x), term.exponent));
    }
  }
  Vbf f(n, n, std::move(lut));
  f.field_ = ctx;
  f.terms_.assign(terms.begin(), terms.end());
  return f;
}

Vbf Vbf::monomial(const FieldCtx& ctx, std::uint64_t exponent) {
  const Term term{1, exponent};
  return from_univariate(ctx, std::span<const Term>(&term, 1));
}

std::optional<std::uint64_t> Vbf::monomial_exponent() const noexcept {
  std::optional<std::uint64_t> exponent;
  for (const Term& t : terms_) {
    if (t.coefficient == 0) continue;
    if (exponent) return std::nullopt;
    exponent = t.exponent;
  }
  return exponent;
}

BoolFun Vbf::component(Word v) const {
  if (v == 0) throw Error(Errc::ZeroMask, "component mask must be nonzero");
  if (v >> m_) throw Error(Errc::EntryOutOfRange, "mask " + std::to_string(v) + " wider than m");
  std::vector<std::uint8_t> truth(lut_.size());
  for (std::size_t x = 0; x < lut_.size(); ++x) truth[x] = static_cast<std::uint8_t>(dot(v, lut_[x]));
  return BoolFun(n_, std::move(truth));
}

Vbf Vbf::derivative(Word u) const {
  if (u == 0) throw Error(Errc::ZeroDirection, "derivative direction must be nonzero");
  if (u >> n_) throw Error(Errc::EntryOutOfRange, "direction " + std::to_string(u) + " wider than n");
  std::vector<Word> out(lut_.size());
  for (std::size_t x = 0; x < lut_.size(); ++x) out[x] = lut_[x] ^ lut_[x ^ u];
  return Vbf(n_, m_, std::move(out));
}

bool Vbf::is_permutation() const {
  if (n_ != m_) return false;
  std::vector<bool> seen(lut_.size(), false);
  for (Word y : lut_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace dlct
