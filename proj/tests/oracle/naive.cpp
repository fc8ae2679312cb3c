#include "naive.hpp"

#include <bit>

#include "dlct/error.hpp"

namespace dlct::oracle {
namespace {

int bit_parity(std::uint64_t x) { return std::popcount(x) & 1; }

void require_small(const Vbf& f) {
  if (f.n() > kMaxOracleDimension) throw Error(Errc::TooLarge, "oracle limited to n <= 12");
}

}  // namespace

Value naive_walsh(const Vbf& f, Word u, Word v) {
  require_small(f);
  Value sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n()); ++x) {
    const int e = bit_parity(u & x) ^ bit_parity(v & f(static_cast<Word>(x)));
    sum += e ? -1 : 1;
  }
  return sum;
}

Value naive_dlct(const Vbf& f, Word u, Word v) {
  require_small(f);
  Value count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n()); ++x) {
    const Word y = static_cast<Word>(x);
    if (bit_parity(v & f(y)) == bit_parity(v & f(y ^ u))) ++count;
  }
  return count - (Value{1} << (f.n() - 1));
}

Value naive_autocorrelation(const Vbf& f, Word u, Word v) {
  require_small(f);
  Value sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n()); ++x) {
    const Word y = static_cast<Word>(x);
    sum += bit_parity(v & (f(y) ^ f(y ^ u))) ? -1 : 1;
  }
  return sum;
}

Value naive_ddt(const Vbf& f, Word u, Word w) {
  require_small(f);
  Value count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n()); ++x) {
    const Word y = static_cast<Word>(x);
    if ((f(y) ^ f(y ^ u)) == w) ++count;
  }
  return count;
}

std::vector<Value> naive_dlct_table(const Vbf& f) {
  std::vector<Value> out;
  out.reserve(std::size_t{1} << (f.n() + f.m()));
  for (Word u = 0; u < (Word{1} << f.n()); ++u) {
    for (Word v = 0; v < (Word{1} << f.m()); ++v) out.push_back(naive_dlct(f, u, v));
  }
  return out;
}

std::vector<Value> naive_walsh_table(const Vbf& f) {
  std::vector<Value> out;
  out.reserve(std::size_t{1} << (f.n() + f.m()));
  for (Word u = 0; u < (Word{1} << f.n()); ++u) {
    for (Word v = 0; v < (Word{1} << f.m()); ++v) out.push_back(naive_walsh(f, u, v));
  }
  return out;
}

Word schoolbook_mul(Word a, Word b, unsigned n, std::uint64_t modulus) {
  std::uint64_t result = 0;
  std::uint64_t shifted = a;
  for (unsigned i = 0; i < n; ++i) {
    if ((b >> i) & 1U) result ^= shifted;
    shifted <<= 1;
    if ((shifted >> n) & 1U) shifted ^= modulus;
  }
  return static_cast<Word>(result);
}

}  // namespace dlct::oracle
