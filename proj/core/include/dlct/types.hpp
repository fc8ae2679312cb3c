#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace dlct {

// An n-bit word: a field element, an input/output of an (n,m)-function or a mask.
using Word = std::uint32_t;

// Signed table entry. Magnitudes stay below 2^48 within the supported caps.
using Value = std::int64_t;

struct ComputeOptions {
  // Rows (or columns) are split into this many contiguous blocks, one worker each.
  unsigned threads = 1;
};

inline constexpr int parity(Word x) noexcept { return std::popcount(x) & 1; }

// Inner product a.b over GF(2) of two bit vectors.
inline constexpr int dot(Word a, Word b) noexcept { return parity(a & b); }

inline constexpr bool is_power_of_two(std::size_t x) noexcept { return std::has_single_bit(x); }

}  // namespace dlct
