#include "dlct/wht.hpp"

#include "dlct/error.hpp"

namespace dlct {

void wht_inplace(std::span<Value> values) {
  const std::size_t len = values.size();
  if (!is_power_of_two(len)) {
    throw Error(Errc::LengthNotPowerOfTwo, "transform length " + std::to_string(len));
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    for (std::size_t block = 0; block < len; block += half << 1) {
      for (std::size_t i = block; i < block + half; ++i) {
        const Value a = values[i];
        const Value b = values[i + half];
        values[i] = a + b;
        values[i + half] = a - b;
      }
    }
  }
}

}  // namespace dlct
