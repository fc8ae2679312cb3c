#include "dlct/spectra.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dlct/error.hpp"
#include "parallel.hpp"

namespace dlct {
namespace {

void require_table_caps(const Vbf& f) {
  if (f.n() < 1 || f.m() < 1) throw Error(Errc::DomainError, "tables need n, m >= 1");
  if (f.n() > kMaxTableDimension || f.m() > kMaxTableDimension) {
    throw Error(Errc::TooLarge, "full tables need n, m <= 13, got (" + std::to_string(f.n()) + "," +
                                    std::to_string(f.m()) + ")");
  }
}

std::vector<Value> component_signs(const Vbf& f, Word v) {
  std::vector<Value> s(f.size());
  for (std::size_t x = 0; x < s.size(); ++x) s[x] = dot(v, f(static_cast<Word>(x))) ? -1 : 1;
  return s;
}

std::vector<Value> ddt_row(const Vbf& f, Word u) {
  std::vector<Value> row(std::size_t{1} << f.m(), 0);
  for (std::size_t x = 0; x < f.size(); ++x) {
    ++row[f(static_cast<Word>(x)) ^ f(static_cast<Word>(x) ^ u)];
  }
  return row;
}

// Delta(., v) for every u: (1/2^n) WHT(W_F(., v)^2).
std::vector<Value> autocorrelation_column(const Vbf& f, Word v) {
  auto col = component_signs(f, v);
  wht_inplace(col);
  for (auto& w : col) w *= w;
  wht_inplace(col);
  for (auto& w : col) w >>= f.n();
  return col;
}

}  // namespace

std::string_view to_string(TableKind kind) noexcept {
  switch (kind) {
    case TableKind::Ddt: return "ddt";
    case TableKind::Walsh: return "walsh";
    case TableKind::Dlct: return "dlct";
    case TableKind::Autocorrelation: return "ac";
  }
  return "unknown";
}

SpectralTable::SpectralTable(TableKind kind, unsigned n, unsigned m)
    : kind_(kind), n_(n), m_(m), data_((std::size_t{1} << n) * (std::size_t{1} << m), 0) {}

SpectralTable::SpectralTable(TableKind kind, unsigned n, unsigned m, std::vector<Value> data)
    : kind_(kind), n_(n), m_(m), data_(std::move(data)) {
  if (data_.size() != rows() * cols()) {
    throw Error(Errc::LengthMismatch, "table data of size " + std::to_string(data_.size()));
  }
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
}

Spectrum Spectrum::from_values(std::span<const Value> values) {
  std::map<Value, std::uint64_t> counts;
  for (Value v : values) ++counts[v];
  std::vector<SpectrumEntry> entries;
  entries.reserve(counts.size());
  for (const auto& [value, count] : counts) entries.push_back({value, count});
  return Spectrum(std::move(entries));
}

std::vector<Value> Spectrum::distinct_values() const {
  std::vector<Value> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

std::uint64_t Spectrum::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& e : entries_) sum += e.multiplicity;
  return sum;
}

Value Spectrum::max_abs() const noexcept {
  Value best = 0;
  for (const auto& e : entries_) best = std::max(best, e.value < 0 ? -e.value : e.value);
  return best;
}

bool Spectrum::contained_in(std::span<const Value> allowed) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const SpectrumEntry& e) {
    return std::find(allowed.begin(), allowed.end(), e.value) != allowed.end();
  });
}

Spectrum Spectrum::scaled(std::uint64_t k) const {
  auto entries = entries_;
  for (auto& e : entries) e.multiplicity *= k;
  return Spectrum(std::move(entries));
}

SpectralTable walsh_table(const Vbf& f, const ComputeOptions& opts) {
  require_table_caps(f);
  SpectralTable table(TableKind::Walsh, f.n(), f.m());
  detail::parallel_for(table.cols(), opts.threads, [&](std::size_t v) {
    auto col = component_signs(f, static_cast<Word>(v));
    wht_inplace(col);
    for (std::size_t u = 0; u < col.size(); ++u) table.at(u, v) = col[u];
  });
  return table;
}

SpectralTable ddt(const Vbf& f, const ComputeOptions& opts) {
  require_table_caps(f);
  SpectralTable table(TableKind::Ddt, f.n(), f.m());
  detail::parallel_for(table.rows(), opts.threads, [&](std::size_t u) {
    auto out = table.row(u);
    for (std::size_t x = 0; x < f.size(); ++x) {
      ++out[f(static_cast<Word>(x)) ^ f(static_cast<Word>(x ^ u))];
    }
  });
  return table;
}

SpectralTable dlct_direct(const Vbf& f, const ComputeOptions& opts) {
  require_table_caps(f);
  SpectralTable table(TableKind::Dlct, f.n(), f.m());
  const Value half = Value{1} << (f.n() - 1);
  detail::parallel_for(table.rows(), opts.threads, [&](std::size_t u) {
    std::vector<Word> diff(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      diff[x] = f(static_cast<Word>(x)) ^ f(static_cast<Word>(x ^ u));
    }
    auto out = table.row(u);
    for (std::size_t v = 0; v < table.cols(); ++v) {
      Value agree = 0;
      for (Word d : diff) agree += 1 - dot(static_cast<Word>(v), d);
      out[v] = agree - half;
    }
  });
  return table;
}

SpectralTable dlct_from_ddt(const Vbf& f, const ComputeOptions& opts) {
  SpectralTable table = ddt(f, opts);
  SpectralTable out(TableKind::Dlct, f.n(), f.m());
  detail::parallel_for(table.rows(), opts.threads, [&](std::size_t u) {
    auto row = out.row(u);
    std::copy(table.row(u).begin(), table.row(u).end(), row.begin());
    wht_inplace(row);
    for (auto& w : row) w /= 2;
  });
  return out;
}

SpectralTable dlct_from_walsh(const Vbf& f, const ComputeOptions& opts) {
  require_table_caps(f);
  SpectralTable out(TableKind::Dlct, f.n(), f.m());
  detail::parallel_for(out.cols(), opts.threads, [&](std::size_t v) {
    auto col = component_signs(f, static_cast<Word>(v));
    wht_inplace(col);
    for (auto& w : col) w *= w;
    wht_inplace(col);
    for (std::size_t u = 0; u < col.size(); ++u) out.at(u, v) = col[u] >> (f.n() + 1);
  });
  return out;
}

SpectralTable autocorrelation_table(const Vbf& f, const ComputeOptions& opts) {
  SpectralTable d = dlct_from_ddt(f, opts);
  std::vector<Value> data(d.data().begin(), d.data().end());
  for (auto& w : data) w *= 2;
  return SpectralTable(TableKind::Autocorrelation, f.n(), f.m(), std::move(data));
}

std::vector<Value> dlct_row(const Vbf& f, Word u) {
  if (u >> f.n()) throw Error(Errc::EntryOutOfRange, "row index " + std::to_string(u));
  auto row = ddt_row(f, u);
  wht_inplace(row);
  for (auto& w : row) w /= 2;
  return row;
}

std::vector<Value> dlct_column(const Vbf& f, Word v) {
  if (v >> f.m()) throw Error(Errc::EntryOutOfRange, "column index " + std::to_string(v));
  auto col = autocorrelation_column(f, v);
  for (auto& w : col) w /= 2;
  return col;
}

Spectrum spectrum_of(const SpectralTable& table) {
  std::map<Value, std::uint64_t> counts;
  for (std::size_t u = 1; u < table.rows(); ++u) {
    for (std::size_t v = 1; v < table.cols(); ++v) ++counts[table.at(u, v)];
  }
  std::vector<SpectrumEntry> entries;
  for (const auto& [value, count] : counts) entries.push_back({value, count});
  return Spectrum(std::move(entries));
}

}  // namespace dlct
