#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlct/types.hpp"

namespace dlct {

inline constexpr unsigned kMaxFieldDimension = 24;

// Lexicographically smallest irreducible polynomial of degree n over GF(2),
// bit i holding the coefficient of x^i. Valid for 1 <= n <= 24.
std::uint64_t default_modulus(unsigned n);

// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint64_t poly);

// Carry-less product of two polynomials whose product fits in 64 bits.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept;

// GF(2^n) in the polynomial basis: element bit i is the coefficient of x^i, addition is XOR.
// Immutable after construction.
class FieldCtx {
 public:
  explicit FieldCtx(unsigned n, std::optional<std::uint64_t> modulus = std::nullopt);

  unsigned n() const noexcept { return n_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  // Number of elements, 2^n.
  std::uint64_t order() const noexcept { return std::uint64_t{1} << n_; }
  Word mask() const noexcept { return static_cast<Word>(order() - 1); }

  Word add(Word a, Word b) const noexcept { return a ^ b; }
  Word mul(Word a, Word b) const noexcept;
  Word square(Word a) const noexcept { return mul(a, a); }
  // a^e with 0^0 = 1.
  Word pow(Word a, std::uint64_t e) const noexcept;
  // Throws ZeroInverse for a = 0.
  Word inv(Word a) const;

  // Absolute trace to GF(2), a value in {0, 1}.
  int trace(Word a) const noexcept { return dot(trace_form_, a); }
  // Same value, computed as the XOR of the n Frobenius conjugates.
  int trace_by_conjugates(Word a) const noexcept;

  // The mask t(a) such that trace(a*y) = t(a).y for every y. Bijective on the field, so
  // it converts the trace-form pairing into the bit-parity pairing.
  Word trace_mask(Word a) const noexcept;

  // K(a) = sum over nonzero x of (-1)^{trace(1/x + a x)}.
  Value kloosterman(Word a) const;

  bool operator==(const FieldCtx& other) const noexcept {
    return n_ == other.n_ && modulus_ == other.modulus_;
  }

 private:
  unsigned n_;
  std::uint64_t modulus_;
  Word trace_form_ = 0;
};

// K(a) for every a in one Walsh-Hadamard pass, indexed by a.
std::vector<Value> kloosterman_all(const FieldCtx& ctx);

}  // namespace dlct
