#include "dlct/bitmatrix.hpp"

#include <string>
#include <utility>

#include "dlct/error.hpp"

namespace dlct {

BitMatrix::BitMatrix(unsigned rows, unsigned cols) : rows_(rows), cols_(cols), data_(rows, 0) {
  if (rows > 32 || cols > 32) throw Error(Errc::TooLarge, "bit matrices are limited to 32 x 32");
}

BitMatrix::BitMatrix(unsigned rows, unsigned cols, std::vector<Word> row_bits)
    : rows_(rows), cols_(cols), data_(std::move(row_bits)) {
  if (rows > 32 || cols > 32) throw Error(Errc::TooLarge, "bit matrices are limited to 32 x 32");
  if (data_.size() != rows) throw Error(Errc::LengthMismatch, "expected " + std::to_string(rows) + " rows");
  const Word mask = cols == 32 ? ~Word{0} : (Word{1} << cols) - 1;
  for (Word r : data_) {
    if (r & ~mask) throw Error(Errc::EntryOutOfRange, "row wider than " + std::to_string(cols) + " columns");
  }
}

BitMatrix BitMatrix::identity(unsigned dim) {
  BitMatrix m(dim, dim);
  for (unsigned i = 0; i < dim; ++i) m.data_[i] = Word{1} << i;
  return m;
}

BitMatrix BitMatrix::random(unsigned rows, unsigned cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (auto& r : m.data_) r = static_cast<Word>(rng.below(std::uint64_t{1} << cols));
  return m;
}

void BitMatrix::set(unsigned i, unsigned j, int bit) noexcept {
  if (bit) {
    data_[i] |= Word{1} << j;
  } else {
    data_[i] &= ~(Word{1} << j);
  }
}

Word BitMatrix::apply(Word x) const noexcept {
  Word y = 0;
  for (unsigned i = 0; i < rows_; ++i) y |= static_cast<Word>(dot(data_[i], x)) << i;
  return y;
}

unsigned BitMatrix::rank() const {
  auto rows = data_;
  unsigned rank = 0;
  for (unsigned col = 0; col < cols_ && rank < rows_; ++col) {
    const Word bit = Word{1} << col;
    unsigned pivot = rank;
    while (pivot < rows_ && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned i = 0; i < rows_; ++i) {
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto left = data_;
  auto right = identity(rows_).data_;
  for (unsigned col = 0; col < cols_; ++col) {
    const Word bit = Word{1} << col;
    unsigned pivot = col;
    while (pivot < rows_ && !(left[pivot] & bit)) ++pivot;
    if (pivot == rows_) return std::nullopt;
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);
    for (unsigned i = 0; i < rows_; ++i) {
      if (i != col && (left[i] & bit)) {
        left[i] ^= left[col];
        right[i] ^= right[col];
      }
    }
  }
  return BitMatrix(rows_, cols_, std::move(right));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i) {
    for (unsigned j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::LengthMismatch, "matrix product dimension mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    Word acc = 0;
    for (unsigned k = 0; k < cols_; ++k) {
      if ((data_[i] >> k) & 1U) acc ^= rhs.data_[k];
    }
    out.data_[i] = acc;
  }
  return out;
}

}  // namespace dlct
