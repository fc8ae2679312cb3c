#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dlct/field.hpp"
#include "dlct/spectra.hpp"
#include "dlct/vbf.hpp"

namespace dlct {

enum class Exactness { ExactSet, ContainmentOnly };

// Distinct DLCT values (u, v != 0) and DLU that a closed-form result predicts for a family.
struct PredictedSpectrum {
  std::string family;
  std::vector<Value> values;
  std::optional<Value> dlu;
  Exactness exactness = Exactness::ExactSet;

  bool satisfied_by(const Spectrum& measured) const;
};

// x -> x^{2^n - 2}, i.e. 1/x with 0 -> 0.
Vbf make_inverse(const FieldCtx& ctx);
// Per-v values (K(v) - 1)/2 + (-1)^{tr(v)} of row u = 1 in the trace pairing, indexed by v
// (entry 0 holds 2^{n-1}).
std::vector<Value> inverse_row_prediction(const FieldCtx& ctx);
PredictedSpectrum predict_inverse(const FieldCtx& ctx);

// x^{2^i + 1}, 1 <= i < n.
Vbf make_gold(const FieldCtx& ctx, unsigned i);
PredictedSpectrum predict_gold(const FieldCtx& ctx, unsigned i);

// a_ij x^{2^i + 2^j}, 0 <= i < j < n.
struct QuadraticTerm {
  unsigned i;
  unsigned j;
  Word coefficient;
};
Vbf make_quadratic(const FieldCtx& ctx, std::span<const QuadraticTerm> terms);
PredictedSpectrum predict_quadratic(const FieldCtx& ctx);
// `term_count` distinct (i, j) pairs with random nonzero coefficients, deterministic per seed.
std::vector<QuadraticTerm> random_quadratic_terms(const FieldCtx& ctx, unsigned term_count,
                                                  std::uint64_t seed);

// x^{q^2 + q + 1} over GF(q^4), q = 2^k. Lookup tables need 4k <= 16.
FieldCtx bracken_leander_field(unsigned k);
std::uint64_t bracken_leander_exponent(unsigned k);
Vbf make_bracken_leander(unsigned k);
// DLCT values in {0, +-q^3/2}: the autocorrelation Delta_F = 2 DLCT_F reaches q^3.
PredictedSpectrum predict_bracken_leander(unsigned k);

// 2^{2k} - 2^k + 1; throws BadParameters unless n is odd, gcd(n, 3) = 1 and 3k = 1 (mod n).
std::uint64_t kasami_exponent(unsigned n, unsigned k);
Vbf make_kasami(unsigned n, unsigned k);
PredictedSpectrum predict_kasami(unsigned n, unsigned k);

inline constexpr unsigned kOptimalSboxCount = 16;

// Representatives of the 16 affine classes of optimal 4-bit S-boxes.
Vbf optimal_sbox(unsigned index);
// Expected DLCT spectrum of each representative: {-4, 0, 4} or {-8, -4, 0, 4, 8}.
PredictedSpectrum predict_optimal_sbox(unsigned index);

struct NamedFunction {
  std::string name;
  Vbf function;
};

// Every catalog family instantiated at every feasible dimension up to max_n.
std::vector<NamedFunction> catalog_instances(unsigned max_n);

}  // namespace dlct
