#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlct/random.hpp"
#include "dlct/types.hpp"

namespace dlct {

// A rows x cols matrix over GF(2); row i is stored as a word whose bit j is entry (i, j).
// Applying it to a word x yields the word whose bit i is row_i . x.
class BitMatrix {
 public:
  BitMatrix(unsigned rows, unsigned cols);
  BitMatrix(unsigned rows, unsigned cols, std::vector<Word> row_bits);

  static BitMatrix identity(unsigned dim);
  static BitMatrix random(unsigned rows, unsigned cols, Rng& rng);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }
  Word row(unsigned i) const noexcept { return data_[i]; }
  int at(unsigned i, unsigned j) const noexcept { return static_cast<int>((data_[i] >> j) & 1U); }
  void set(unsigned i, unsigned j, int bit) noexcept;

  Word apply(Word x) const noexcept;
  unsigned rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  // Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<BitMatrix> inverse() const;
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<Word> data_;
};

}  // namespace dlct
