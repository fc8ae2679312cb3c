#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dlct/types.hpp"
#include "dlct/vbf.hpp"
#include "dlct/wht.hpp"

namespace dlct {

// Full 2^n x 2^m tables are materialized only up to this dimension.
inline constexpr unsigned kMaxTableDimension = 13;

enum class TableKind { Ddt, Walsh, Dlct, Autocorrelation };

std::string_view to_string(TableKind kind) noexcept;

// A 2^n x 2^m matrix of exact integers, row index u (input side), column index v (output side).
class SpectralTable {
 public:
  SpectralTable(TableKind kind, unsigned n, unsigned m);
  SpectralTable(TableKind kind, unsigned n, unsigned m, std::vector<Value> data);

  TableKind kind() const noexcept { return kind_; }
  unsigned n() const noexcept { return n_; }
  unsigned m() const noexcept { return m_; }
  std::size_t rows() const noexcept { return std::size_t{1} << n_; }
  std::size_t cols() const noexcept { return std::size_t{1} << m_; }

  Value at(std::size_t u, std::size_t v) const noexcept { return data_[u * cols() + v]; }
  Value& at(std::size_t u, std::size_t v) noexcept { return data_[u * cols() + v]; }
  std::span<const Value> row(std::size_t u) const noexcept { return {data_.data() + u * cols(), cols()}; }
  std::span<Value> row(std::size_t u) noexcept { return {data_.data() + u * cols(), cols()}; }
  std::span<const Value> data() const noexcept { return data_; }

  bool operator==(const SpectralTable&) const = default;

 private:
  TableKind kind_;
  unsigned n_;
  unsigned m_;
  std::vector<Value> data_;
};

struct SpectrumEntry {
  Value value;
  std::uint64_t multiplicity;

  bool operator==(const SpectrumEntry&) const = default;
};

// Multiset of table values, ascending by value.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  static Spectrum from_values(std::span<const Value> values);

  std::span<const SpectrumEntry> entries() const noexcept { return entries_; }
  std::vector<Value> distinct_values() const;
  std::uint64_t total() const noexcept;
  Value max_abs() const noexcept;
  bool empty() const noexcept { return entries_.empty(); }
  // Every distinct value appears in `allowed`.
  bool contained_in(std::span<const Value> allowed) const;
  // Multiplies all multiplicities by k.
  Spectrum scaled(std::uint64_t k) const;

  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

// W_F(u,v) for all u and v, v = 0 included.
SpectralTable walsh_table(const Vbf& f, const ComputeOptions& opts = {});
// DDT_F(u,w) = #{x : F(x) + F(x+u) = w}.
SpectralTable ddt(const Vbf& f, const ComputeOptions& opts = {});

// Three independent routes to the DLCT:
//   direct:    #{x : v.F(x) = v.F(x+u)} - 2^{n-1}, counted per entry
//   from ddt:  half the Walsh-Hadamard transform of each DDT row
//   from walsh: 2^{-(n+1)} times the transform of each squared Walsh column
SpectralTable dlct_direct(const Vbf& f, const ComputeOptions& opts = {});
SpectralTable dlct_from_ddt(const Vbf& f, const ComputeOptions& opts = {});
SpectralTable dlct_from_walsh(const Vbf& f, const ComputeOptions& opts = {});
inline SpectralTable dlct(const Vbf& f, const ComputeOptions& opts = {}) { return dlct_from_ddt(f, opts); }

// Delta_F(u,v) = sum_x (-1)^{v.(F(x)+F(x+u))} = 2 DLCT_F(u,v).
SpectralTable autocorrelation_table(const Vbf& f, const ComputeOptions& opts = {});

// Single DLCT row (fixed u, every v) or column (fixed v, every u), for n up to 16.
std::vector<Value> dlct_row(const Vbf& f, Word u);
std::vector<Value> dlct_column(const Vbf& f, Word v);

// Values at u != 0, v != 0.
Spectrum spectrum_of(const SpectralTable& table);

}  // namespace dlct
