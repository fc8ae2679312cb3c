#include "dlct/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "dlct/catalog.hpp"
#include "dlct/error.hpp"

namespace dlct {
namespace {

Value abs_value(Value x) { return x < 0 ? -x : x; }

bool is_bent_table(const SpectralTable& walsh) {
  const unsigned n = walsh.n();
  if (n % 2 != 0) return false;
  const Value flat = Value{1} << (n / 2);
  for (std::size_t u = 0; u < walsh.rows(); ++u) {
    for (std::size_t v = 1; v < walsh.cols(); ++v) {
      if (abs_value(walsh.at(u, v)) != flat) return false;
    }
  }
  return true;
}

// Accumulates a per-index identity: keeps the first mismatch (or the first index).
class IdentityRecorder {
 public:
  IdentityRecorder(std::string check, std::string instance) {
    result_.check = std::move(check);
    result_.instance = std::move(instance);
    result_.pass = true;
  }

  void observe(Value lhs, Value rhs) {
    if (!seen_) {
      result_.lhs = lhs;
      result_.rhs = rhs;
      seen_ = true;
    }
    if (lhs != rhs && result_.pass) {
      result_.pass = false;
      result_.lhs = lhs;
      result_.rhs = rhs;
    }
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
  bool seen_ = false;
};

}  // namespace

Value uniformity(const SpectralTable& table) {
  Value best = 0;
  for (std::size_t u = 1; u < table.rows(); ++u) {
    for (std::size_t v = 1; v < table.cols(); ++v) best = std::max(best, abs_value(table.at(u, v)));
  }
  return best;
}

std::optional<std::vector<unsigned>> plateaued_amplitudes(const SpectralTable& walsh) {
  std::vector<unsigned> exponents;
  exponents.reserve(walsh.cols() - 1);
  for (std::size_t v = 1; v < walsh.cols(); ++v) {
    Value amplitude = 0;
    for (std::size_t u = 0; u < walsh.rows(); ++u) {
      const Value a = abs_value(walsh.at(u, v));
      if (a == 0) continue;
      if (amplitude == 0) {
        amplitude = a;
      } else if (a != amplitude) {
        return std::nullopt;
      }
    }
    if (!std::has_single_bit(static_cast<std::uint64_t>(amplitude))) return std::nullopt;
    exponents.push_back(static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(amplitude))));
  }
  return exponents;
}

AnalysisReport analyze(const Vbf& f, const ComputeOptions& opts) {
  const SpectralTable walsh = walsh_table(f, opts);
  const SpectralTable diff = ddt(f, opts);
  const SpectralTable table = dlct_from_ddt(f, opts);

  AnalysisReport r;
  r.n = f.n();
  r.m = f.m();

  for (std::size_t u = 1; u < diff.rows(); ++u) {
    for (std::size_t w = 0; w < diff.cols(); ++w) r.diff_uniformity = std::max(r.diff_uniformity, diff.at(u, w));
  }

  Value max_walsh = 0;
  for (std::size_t u = 0; u < walsh.rows(); ++u) {
    for (std::size_t v = 1; v < walsh.cols(); ++v) max_walsh = std::max(max_walsh, abs_value(walsh.at(u, v)));
  }
  r.nonlinearity = (Value{1} << (f.n() - 1)) - max_walsh / 2;

  r.dlu = uniformity(table);
  r.absolute_indicator = 2 * r.dlu;
  for (Value x : table.data()) r.sum_of_squares += 4 * x * x;

  r.flags.is_permutation = f.is_permutation();
  r.flags.is_apn = r.diff_uniformity == 2;
  r.flags.is_bent = is_bent_table(walsh);
  if (auto amplitudes = plateaued_amplitudes(walsh)) {
    r.flags.is_plateaued = true;
    const unsigned ab = (f.n() + 1) / 2;
    r.flags.is_ab = f.n() == f.m() && f.n() % 2 == 1 &&
                    std::all_of(amplitudes->begin(), amplitudes->end(), [&](unsigned e) { return e == ab; });
    r.amplitude_exponents = std::move(*amplitudes);
  }
  r.dlct_spectrum = spectrum_of(table);
  return r;
}

double DluBound::value() const {
  return std::sqrt(static_cast<double>(numerator) / static_cast<double>(denominator));
}

bool DluBound::admits(Value dlu) const {
  if (dlu * dlu * denominator < numerator) return false;
  return !even_bound || dlu >= *even_bound;
}

DluBound dlu_lower_bound(unsigned n, unsigned m) {
  if (n < 1 || m < 1 || m + 1 < n) {
    throw Error(Errc::DomainError, "bound needs m >= n - 1, got (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  if (n > 20 || m > 20) throw Error(Errc::TooLarge, "bound evaluated for n, m <= 20");
  DluBound b;
  b.n = n;
  b.m = m;
  b.numerator = (Value{1} << (m + n + 1)) - (Value{1} << (2 * n));
  b.denominator = 4 * ((Value{1} << m) - 1);
  if (n == m && n % 2 == 0) {
    // DLU is even and strictly above 2^{n/2-1}; for n = 2 that leaves 2.
    b.even_bound = n >= 4 ? (Value{1} << (n / 2 - 1)) + 2 : 2;
  }
  return b;
}

Value dlct_square_sum_floor(unsigned n, unsigned m) {
  return (Value{1} << (2 * n + m - 1)) + (Value{1} << (2 * n - 2)) - (Value{1} << (3 * n - 2)) -
         (Value{1} << (n + m - 1));
}

Value nonzero_square_sum(const SpectralTable& table) {
  Value sum = 0;
  for (std::size_t u = 1; u < table.rows(); ++u) {
    for (std::size_t v = 1; v < table.cols(); ++v) sum += table.at(u, v) * table.at(u, v);
  }
  return sum;
}

Spectrum monomial_spectrum(const Vbf& f) {
  if (!f.field() || !f.monomial_exponent()) throw Error(Errc::NotMonomial, "expected c x^d with a field attached");
  const auto row = dlct_row(f, 1);
  return Spectrum::from_values(std::span<const Value>(row).subspan(1)).scaled(f.size() - 1);
}

std::optional<Spectrum> monomial_column_spectrum(const Vbf& f) {
  if (!f.field() || !f.monomial_exponent()) throw Error(Errc::NotMonomial, "expected c x^d with a field attached");
  const std::uint64_t group = f.field()->order() - 1;
  if (std::gcd(*f.monomial_exponent(), group) != 1) return std::nullopt;
  const auto col = dlct_column(f, 1);
  return Spectrum::from_values(std::span<const Value>(col).subspan(1)).scaled(f.size() - 1);
}

bool apn_dual_check(const Vbf& f, const ComputeOptions& opts) {
  if (f.n() != f.m()) throw Error(Errc::NotApn, "APN dual check needs n = m");
  const SpectralTable diff = ddt(f, opts);
  for (std::size_t u = 1; u < diff.rows(); ++u) {
    for (Value c : diff.row(u)) {
      if (c > 2) throw Error(Errc::NotApn, "differential uniformity exceeds 2");
    }
  }
  const SpectralTable table = dlct_from_walsh(f, opts);
  const std::size_t half = f.size() / 2;
  for (std::size_t u = 1; u < f.size(); ++u) {
    const Vbf d = f.derivative(static_cast<Word>(u));
    std::vector<std::uint8_t> image(f.size(), 0);
    for (Word y : d.lut()) image[y] = 1;
    if (static_cast<std::size_t>(std::count(image.begin(), image.end(), 1)) != half) return false;
    const auto w = BoolFun(f.n(), std::move(image)).walsh();
    for (std::size_t v = 1; v < f.size(); ++v) {
      if (2 * table.at(u, v) != -w[v]) return false;
    }
  }
  return true;
}

bool plateaued_dual_check(const Vbf& f, const ComputeOptions& opts) {
  const SpectralTable walsh = walsh_table(f, opts);
  const auto amplitudes = plateaued_amplitudes(walsh);
  if (!amplitudes) throw Error(Errc::NotPlateaued, "some component has more than one nonzero |Walsh| value");
  const SpectralTable table = dlct_from_ddt(f, opts);
  const unsigned n = f.n();
  const bool ab = n == f.m() && n % 2 == 1 &&
                  std::all_of(amplitudes->begin(), amplitudes->end(), [&](unsigned e) { return e == (n + 1) / 2; });
  for (std::size_t v = 1; v < walsh.cols(); ++v) {
    const unsigned r = (*amplitudes)[v - 1];
    std::vector<std::uint8_t> support(walsh.rows());
    for (std::size_t b = 0; b < walsh.rows(); ++b) support[b] = walsh.at(b, v) != 0;
    const auto w = BoolFun(n, std::move(support)).walsh();
    // 4 DLCT = -2^{2r-n} W; Parseval forces 2r >= n.
    for (std::size_t u = 1; u < walsh.rows(); ++u) {
      if (4 * table.at(u, v) != -(w[u] << (2 * r - n))) return false;
      if (ab && 2 * table.at(u, v) != -w[u]) return false;
    }
  }
  return true;
}

KasamiResult kasami_optimality_check(unsigned n, unsigned k) {
  const Vbf f = make_kasami(n, k);
  const SpectralTable table = dlct_from_ddt(f);
  KasamiResult r;
  r.spectrum = spectrum_of(table);
  r.dlu = r.spectrum.max_abs();
  const Value a = Value{1} << ((n - 1) / 2);
  r.optimal = r.spectrum.distinct_values() == std::vector<Value>{-a, 0, a} && r.dlu == a;
  return r;
}

std::vector<CheckResult> verify_identities(const Vbf& f, const std::string& instance, const ComputeOptions& opts) {
  const SpectralTable walsh = walsh_table(f, opts);
  const SpectralTable diff = ddt(f, opts);
  const SpectralTable table = dlct_from_ddt(f, opts);
  const unsigned n = f.n();
  const unsigned m = f.m();
  const Value half = Value{1} << (n - 1);

  std::vector<CheckResult> out;

  IdentityRecorder borders("dlct-borders", instance);
  for (std::size_t v = 0; v < table.cols(); ++v) borders.observe(table.at(0, v), half);
  for (std::size_t u = 0; u < table.rows(); ++u) borders.observe(table.at(u, 0), half);
  out.push_back(borders.result());

  IdentityRecorder row_sum("walsh-row-sum", instance);
  IdentityRecorder fourth("walsh-fourth-moment", instance);
  IdentityRecorder parseval("parseval", instance);
  for (std::size_t v = 0; v < table.cols(); ++v) {
    Value sum = 0;
    Value squares = 0;
    Value fourth_power = 0;
    Value energy = 0;
    for (std::size_t u = 0; u < table.rows(); ++u) {
      sum += table.at(u, v);
      squares += table.at(u, v) * table.at(u, v);
      const Value w2 = walsh.at(u, v) * walsh.at(u, v);
      fourth_power += w2 * w2;
      energy += w2;
    }
    row_sum.observe(2 * sum, walsh.at(0, v) * walsh.at(0, v));
    fourth.observe(squares << (n + 2), fourth_power);
    if (v != 0) parseval.observe(energy, Value{1} << (2 * n));
  }
  out.push_back(row_sum.result());
  out.push_back(fourth.result());
  out.push_back(parseval.result());

  IdentityRecorder col_sum("ddt-column-sum", instance);
  IdentityRecorder second("ddt-second-moment", instance);
  Value total = 0;
  for (std::size_t u = 0; u < table.rows(); ++u) {
    Value sum = 0;
    Value squares = 0;
    Value ddt_squares = 0;
    for (std::size_t v = 0; v < table.cols(); ++v) {
      sum += table.at(u, v);
      squares += table.at(u, v) * table.at(u, v);
      ddt_squares += diff.at(u, v) * diff.at(u, v);
    }
    total += sum;
    col_sum.observe(sum, diff.at(u, 0) << (m - 1));
    second.observe(4 * squares, ddt_squares << m);
  }
  out.push_back(col_sum.result());
  out.push_back(second.result());

  if (f.is_permutation()) {
    IdentityRecorder zero("permutation-row-zero", instance);
    for (std::size_t u = 1; u < table.rows(); ++u) {
      Value sum = 0;
      for (Value x : table.row(u)) sum += x;
      zero.observe(sum, 0);
    }
    out.push_back(zero.result());
  }

  // The global sum is 2^{m-1} sum_y |F^{-1}(y)|^2, which is 2^{m+n-1} exactly for injective F.
  std::vector<Value> preimages(std::size_t{1} << m, 0);
  for (Word y : f.lut()) ++preimages[y];
  Value collisions = 0;
  for (Value c : preimages) collisions += c * c;
  IdentityRecorder global("global-sum", instance);
  global.observe(total, collisions << (m - 1));
  out.push_back(global.result());

  const bool apn = [&] {
    for (std::size_t u = 1; u < diff.rows(); ++u) {
      for (Value c : diff.row(u)) {
        if (c > 2) return false;
      }
    }
    return true;
  }();
  CheckResult bound;
  bound.check = "square-sum-bound";
  bound.instance = instance;
  bound.lhs = nonzero_square_sum(table);
  bound.rhs = dlct_square_sum_floor(n, m);
  bound.pass = bound.lhs >= bound.rhs && ((bound.lhs == bound.rhs) == apn);
  out.push_back(bound);

  return out;
}

std::vector<CheckResult> verify_bounds(const Vbf& f, const std::string& instance, const ComputeOptions& opts) {
  std::vector<CheckResult> out;
  if (f.m() + 1 < f.n()) return out;
  const Value dlu = uniformity(dlct_from_ddt(f, opts));
  const DluBound b = dlu_lower_bound(f.n(), f.m());
  CheckResult squared{"dlu-lower-bound", instance, dlu * dlu * b.denominator >= b.numerator,
                      dlu * dlu * b.denominator, b.numerator};
  out.push_back(squared);
  if (b.even_bound) {
    out.push_back({"dlu-even-bound", instance, dlu >= *b.even_bound, dlu, *b.even_bound});
  }
  return out;
}

}  // namespace dlct
