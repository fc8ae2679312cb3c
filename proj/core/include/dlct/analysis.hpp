#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlct/check.hpp"
#include "dlct/spectra.hpp"
#include "dlct/vbf.hpp"

namespace dlct {

struct AnalysisFlags {
  bool is_permutation = false;
  bool is_apn = false;
  bool is_bent = false;
  bool is_plateaued = false;
  bool is_ab = false;
};

struct AnalysisReport {
  unsigned n = 0;
  unsigned m = 0;
  Value dlu = 0;
  Value diff_uniformity = 0;
  Value nonlinearity = 0;
  // max |Delta_F(u,v)| over u, v != 0; always 2 * dlu.
  Value absolute_indicator = 0;
  // Sum of Delta_F(u,v)^2 over all (u,v), zero rows and columns included.
  Value sum_of_squares = 0;
  AnalysisFlags flags;
  // r_v for v = 1 .. 2^m - 1 (index v - 1), filled only when the function is plateaued.
  std::vector<unsigned> amplitude_exponents;
  Spectrum dlct_spectrum;
};

AnalysisReport analyze(const Vbf& f, const ComputeOptions& opts = {});

// Component-wise Walsh amplitude exponents r_v (|W| in {0, 2^{r_v}}) for v != 0, or nullopt
// when some component is not plateaued.
std::optional<std::vector<unsigned>> plateaued_amplitudes(const SpectralTable& walsh);

// max |entry| over u != 0, v != 0.
Value uniformity(const SpectralTable& table);

// Lower bound on the DLU of an (n,m)-function with m >= n - 1, kept as the exact ratio
//   bound^2 = (2^{m+n+1} - 2^{2n}) / (4 (2^m - 1)).
struct DluBound {
  unsigned n = 0;
  unsigned m = 0;
  Value numerator = 0;
  Value denominator = 0;
  // Integer bound for n = m even: 2^{n/2-1} + 2 for n >= 4, and 2 for n = 2.
  std::optional<Value> even_bound;

  double value() const;
  // dlu^2 * denominator >= numerator, plus the even bound when present.
  bool admits(Value dlu) const;
};

DluBound dlu_lower_bound(unsigned n, unsigned m);

// Right-hand side of the inequality
//   sum_{u,v != 0} DLCT(u,v)^2 >= 2^{2n+m-1} + 2^{2n-2} - 2^{3n-2} - 2^{n+m-1},
// which holds with equality exactly for APN functions.
Value dlct_square_sum_floor(unsigned n, unsigned m);
Value nonzero_square_sum(const SpectralTable& table);

// Full DLCT spectrum of c x^d from the single row u = 1: every other row is a permutation of it.
// Throws NotMonomial.
Spectrum monomial_spectrum(const Vbf& f);
// The same spectrum from the single column v = 1, available only when gcd(d, 2^n - 1) = 1.
std::optional<Spectrum> monomial_column_spectrum(const Vbf& f);

// DLCT(u,v) = -1/2 W_{g_u}(v) for u, v != 0 where g_u indicates the derivative image.
// Throws NotApn.
bool apn_dual_check(const Vbf& f, const ComputeOptions& opts = {});

// DLCT(u,v) = -2^{2 r_v - n - 2} W_{h_v}(u) for u, v != 0 where h_v indicates the Walsh
// support of f_v; AB inputs also get the -1/2 specialization. Throws NotPlateaued.
bool plateaued_dual_check(const Vbf& f, const ComputeOptions& opts = {});

struct KasamiResult {
  Spectrum spectrum;
  Value dlu = 0;
  // Spectrum is {0, +-2^{(n-1)/2}} and dlu = 2^{(n-1)/2}.
  bool optimal = false;
};

// Builds x^{2^{2k} - 2^k + 1} over GF(2^n). Throws BadParameters unless n is odd,
// gcd(n, 3) = 1 and 3k = 1 mod n.
KasamiResult kasami_optimality_check(unsigned n, unsigned k);

// The Walsh/DDT identities relating the four tables, plus the squared-sum inequality.
std::vector<CheckResult> verify_identities(const Vbf& f, const std::string& instance,
                                           const ComputeOptions& opts = {});

// dlu against dlu_lower_bound (when m >= n - 1).
std::vector<CheckResult> verify_bounds(const Vbf& f, const std::string& instance,
                                       const ComputeOptions& opts = {});

}  // namespace dlct
