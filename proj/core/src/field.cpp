#include "dlct/field.hpp"

#include <array>
#include <bit>
#include <string>

#include "dlct/error.hpp"
#include "dlct/wht.hpp"

namespace dlct {
namespace {

// Smallest irreducible polynomial per degree, generated by exhaustive trial division.
constexpr std::array<std::uint64_t, kMaxFieldDimension + 1> kDefaultModuli = {
    0x0,      0x2,      0x7,      0xb,       0x13,      0x25,     0x43,
    0x83,     0x11b,    0x203,    0x409,     0x805,     0x1009,   0x201b,
    0x4021,   0x8003,   0x1002b,  0x20009,   0x40009,   0x80027,  0x100009,
    0x200005, 0x400003, 0x800021, 0x100001b,
};

int degree(std::uint64_t p) noexcept { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) noexcept {
  const int db = degree(b);
  for (int da = degree(a); a != 0 && da >= db; da = degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

std::uint64_t default_modulus(unsigned n) {
  if (n < 1 || n > kMaxFieldDimension) {
    throw Error(Errc::DimensionOutOfRange, "field dimension " + std::to_string(n));
  }
  return kDefaultModuli[n];
}

bool is_irreducible(std::uint64_t poly) {
  if (poly < 2) return false;
  const int n = degree(poly);
  // Every degree 1..n/2 polynomial is tried, including reducible ones; cheap at n <= 24.
  const std::uint64_t limit = std::uint64_t{1} << (n / 2 + 1);
  for (std::uint64_t divisor = 2; divisor < limit; ++divisor) {
    if (poly_mod(poly, divisor) == 0) return false;
  }
  return true;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t product = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    product ^= a << i;
    b &= b - 1;
  }
  return product;
}

FieldCtx::FieldCtx(unsigned n, std::optional<std::uint64_t> modulus) : n_(n) {
  if (n < 1 || n > kMaxFieldDimension) {
    throw Error(Errc::DimensionOutOfRange, "field dimension " + std::to_string(n));
  }
  modulus_ = modulus.value_or(kDefaultModuli[n]);
  if (degree(modulus_) != static_cast<int>(n)) {
    throw Error(Errc::DimensionOutOfRange,
                "modulus " + std::to_string(modulus_) + " does not have degree " + std::to_string(n));
  }
  if (!is_irreducible(modulus_)) {
    throw Error(Errc::ReducibleModulus, "modulus " + std::to_string(modulus_));
  }
  Word form = 0;
  for (unsigned i = 0; i < n_; ++i) {
    form |= static_cast<Word>(trace_by_conjugates(Word{1} << i)) << i;
  }
  trace_form_ = form;
}

Word FieldCtx::mul(Word a, Word b) const noexcept {
  std::uint64_t p = clmul(a, b);
  for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
    if ((p >> i) & 1U) p ^= modulus_ << (i - static_cast<int>(n_));
  }
  return static_cast<Word>(p);
}

Word FieldCtx::pow(Word a, std::uint64_t e) const noexcept {
  Word result = 1;
  Word base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Word FieldCtx::inv(Word a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "0 has no multiplicative inverse");
  return pow(a, order() - 2);
}

int FieldCtx::trace_by_conjugates(Word a) const noexcept {
  Word sum = 0;
  Word conj = a;
  for (unsigned i = 0; i < n_; ++i) {
    sum ^= conj;
    conj = mul(conj, conj);
  }
  // The sum lies in GF(2), i.e. is 0 or 1.
  return static_cast<int>(sum & 1U);
}

Word FieldCtx::trace_mask(Word a) const noexcept {
  Word result = 0;
  Word term = a;  // a * x^i
  for (unsigned i = 0; i < n_; ++i) {
    result |= static_cast<Word>(trace(term)) << i;
    term = mul(term, 2);
  }
  return result;
}

Value FieldCtx::kloosterman(Word a) const {
  Value sum = 0;
  for (std::uint64_t x = 1; x < order(); ++x) {
    const Word w = static_cast<Word>(x);
    sum += (trace(inv(w)) ^ trace(mul(a, w))) ? -1 : 1;
  }
  return sum;
}

std::vector<Value> kloosterman_all(const FieldCtx& ctx) {
  // With g(x) = trace(1/x) (g(0) = 0): K(a) = W_g(t(a)) - 1, the -1 removing x = 0.
  const std::size_t size = ctx.order();
  std::vector<Value> signs(size);
  signs[0] = 1;
  for (std::size_t x = 1; x < size; ++x) {
    signs[x] = ctx.trace(ctx.inv(static_cast<Word>(x))) ? -1 : 1;
  }
  wht_inplace(signs);
  std::vector<Value> result(size);
  for (std::size_t a = 0; a < size; ++a) {
    result[a] = signs[ctx.trace_mask(static_cast<Word>(a))] - 1;
  }
  return result;
}

}  // namespace dlct
