#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlct/field.hpp"
#include "dlct/types.hpp"

namespace dlct {

inline constexpr unsigned kMaxLutDimension = 16;

// One term c * x^e of a univariate polynomial over GF(2^n).
struct Term {
  Word coefficient;
  std::uint64_t exponent;

  bool operator==(const Term&) const = default;
};

// A Boolean function on n bits stored as its truth table.
class BoolFun {
 public:
  BoolFun(unsigned n, std::vector<std::uint8_t> truth);

  unsigned n() const noexcept { return n_; }
  std::size_t size() const noexcept { return truth_.size(); }
  int operator()(Word x) const noexcept { return truth_[x]; }
  std::span<const std::uint8_t> truth() const noexcept { return truth_; }

  // (-1)^{f(x)} for every x.
  std::vector<Value> signs() const;
  // W_f(w) = sum_x (-1)^{f(x) + w.x}, for every w.
  std::vector<Value> walsh() const;

 private:
  unsigned n_;
  std::vector<std::uint8_t> truth_;
};

// An (n,m)-function stored as a dense lookup table of 2^n output words.
class Vbf {
 public:
  // Throws LengthMismatch / EntryOutOfRange / TooLarge.
  static Vbf from_lut(unsigned n, unsigned m, std::vector<Word> table);

  // x -> sum of c_i x^{e_i} over the field, with 0^0 = 1. The context stays attached.
  static Vbf from_univariate(const FieldCtx& ctx, std::span<const Term> terms);
  static Vbf monomial(const FieldCtx& ctx, std::uint64_t exponent);

  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  std::size_t size() const noexcept { return lut_.size(); }
  Word operator()(Word x) const noexcept { return lut_[x]; }
  std::span<const Word> lut() const noexcept { return lut_; }

  const std::optional<FieldCtx>& field() const noexcept { return field_; }
  // Polynomial terms when built from a univariate polynomial; empty otherwise.
  std::span<const Term> terms() const noexcept { return terms_; }
  // The exponent d when this is c * x^d with c != 0.
  std::optional<std::uint64_t> monomial_exponent() const noexcept;

  // f_v(x) = v.F(x). Throws ZeroMask for v = 0.
  BoolFun component(Word v) const;
  // D_u F(x) = F(x) + F(x + u). Throws ZeroDirection for u = 0.
  Vbf derivative(Word u) const;
  bool is_permutation() const;

  // Equality compares dimensions and tables only.
  bool operator==(const Vbf& other) const noexcept {
    return n_ == other.n_ && m_ == other.m_ && lut_ == other.lut_;
  }

 private:
  Vbf(unsigned n, unsigned m, std::vector<Word> lut) : n_(n), m_(m), lut_(std::move(lut)) {}

  unsigned n_;
  unsigned m_;
  std::vector<Word> lut_;
  std::optional<FieldCtx> field_;
  std::vector<Term> terms_;
};

}  // namespace dlct
