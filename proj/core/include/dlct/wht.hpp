#pragma once

#include <span>

#include "dlct/types.hpp"

namespace dlct {

// In-place fast Walsh-Hadamard transform:
//   out[w] = sum_x (-1)^{w.x} in[x].
// Applying it twice multiplies the input by the length. Throws LengthNotPowerOfTwo.
void wht_inplace(std::span<Value> values);

}  // namespace dlct
