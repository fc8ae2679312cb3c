#include "dlct/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "dlct/error.hpp"
#include "dlct/random.hpp"

namespace dlct {
namespace {

// Leander-Poschmann representatives of the 16 affine classes of optimal 4-bit S-boxes.
constexpr std::array<std::array<Word, 16>, kOptimalSboxCount> kOptimalSboxes = {{
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 5, 9, 10, 12},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 10, 12, 5, 9},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 5, 3, 10, 14, 11, 9},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 9, 11, 10, 14, 5, 3},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 3, 5},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 5, 3},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 14, 11, 10, 9, 3, 5},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 9, 5, 10, 11, 3, 12},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 3, 5, 9, 10, 12},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 5, 10, 9, 3, 12},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 5, 9, 12, 3},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 9, 3, 12, 5},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 9, 5, 11, 10, 3},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 3, 9, 5, 10},
    {0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 9, 3, 10, 5},
}};

// Classes whose DLCT spectrum is {-4, 0, 4}; the rest reach +-8.
constexpr std::array<unsigned, 8> kDlu4Classes = {3, 4, 5, 6, 7, 11, 12, 13};

Value half_order(unsigned n) { return Value{1} << (n - 1); }

std::vector<Value> sorted_unique(std::vector<Value> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string dim_suffix(unsigned n) { return "/GF(2^" + std::to_string(n) + ")"; }

}  // namespace

bool PredictedSpectrum::satisfied_by(const Spectrum& measured) const {
  const auto got = measured.distinct_values();
  const bool values_ok = exactness == Exactness::ExactSet ? got == values : measured.contained_in(values);
  const bool dlu_ok = !dlu || measured.max_abs() == *dlu;
  return values_ok && dlu_ok;
}

Vbf make_inverse(const FieldCtx& ctx) { return Vbf::monomial(ctx, ctx.order() - 2); }

std::vector<Value> inverse_row_prediction(const FieldCtx& ctx) {
  const auto k = kloosterman_all(ctx);
  std::vector<Value> row(ctx.order());
  row[0] = half_order(ctx.n());
  for (std::size_t v = 1; v < row.size(); ++v) {
    const Value sign = ctx.trace(static_cast<Word>(v)) ? -1 : 1;
    row[v] = (k[v] - 1) / 2 + sign;
  }
  return row;
}

PredictedSpectrum predict_inverse(const FieldCtx& ctx) {
  const auto row = inverse_row_prediction(ctx);
  PredictedSpectrum p;
  p.family = "inverse" + dim_suffix(ctx.n());
  p.values = sorted_unique({row.begin() + 1, row.end()});
  if (ctx.n() % 2 == 0 && ctx.n() >= 4) {
    p.dlu = Value{1} << (ctx.n() / 2);
  } else {
    Value best = 0;
    for (Value x : p.values) best = std::max(best, x < 0 ? -x : x);
    p.dlu = best;
  }
  p.exactness = Exactness::ExactSet;
  return p;
}

Vbf make_gold(const FieldCtx& ctx, unsigned i) {
  if (i < 1 || i >= ctx.n()) throw Error(Errc::BadParameters, "Gold exponent needs 1 <= i < n");
  return Vbf::monomial(ctx, (std::uint64_t{1} << i) + 1);
}

PredictedSpectrum predict_gold(const FieldCtx& ctx, unsigned i) {
  const unsigned n = ctx.n();
  if (i < 1 || i >= n) throw Error(Errc::BadParameters, "Gold exponent needs 1 <= i < n");
  const unsigned d = std::gcd(i, n);
  const unsigned n_prime = n / d;
  const Value h = half_order(n);
  PredictedSpectrum p;
  p.family = "gold(i=" + std::to_string(i) + ")" + dim_suffix(n);
  if (n_prime % 2 == 0) {
    p.values = {0, h};
  } else if (d == 1) {
    p.values = {-h, 0};
  } else {
    p.values = {-h, 0, h};
  }
  p.dlu = h;
  p.exactness = Exactness::ExactSet;
  return p;
}

Vbf make_quadratic(const FieldCtx& ctx, std::span<const QuadraticTerm> terms) {
  std::vector<Term> poly;
  for (const auto& t : terms) {
    if (t.i >= t.j || t.j >= ctx.n()) {
      throw Error(Errc::BadParameters, "quadratic term needs 0 <= i < j < n");
    }
    if (t.coefficient != 0) {
      poly.push_back({t.coefficient, (std::uint64_t{1} << t.i) + (std::uint64_t{1} << t.j)});
    }
  }
  if (poly.empty()) throw Error(Errc::AllZeroCoefficients, "quadratic needs a nonzero coefficient");
  return Vbf::from_univariate(ctx, poly);
}

PredictedSpectrum predict_quadratic(const FieldCtx& ctx) {
  const Value h = half_order(ctx.n());
  return {"quadratic" + dim_suffix(ctx.n()), {-h, 0, h}, h, Exactness::ContainmentOnly};
}

std::vector<QuadraticTerm> random_quadratic_terms(const FieldCtx& ctx, unsigned term_count,
                                                  std::uint64_t seed) {
  const unsigned n = ctx.n();
  const unsigned pairs = n * (n - 1) / 2;
  if (n < 2 || term_count < 1 || term_count > pairs) {
    throw Error(Errc::BadParameters, "cannot draw " + std::to_string(term_count) +
                                         " quadratic terms for n = " + std::to_string(n));
  }
  Rng rng(seed);
  std::set<std::pair<unsigned, unsigned>> used;
  std::vector<QuadraticTerm> terms;
  while (terms.size() < term_count) {
    unsigned i = static_cast<unsigned>(rng.below(n));
    unsigned j = static_cast<unsigned>(rng.below(n));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (!used.insert({i, j}).second) continue;
    const Word c = static_cast<Word>(1 + rng.below(ctx.order() - 1));
    terms.push_back({i, j, c});
  }
  return terms;
}

FieldCtx bracken_leander_field(unsigned k) {
  if (k < 1 || 4 * k > kMaxFieldDimension) throw Error(Errc::BadParameters, "Bracken-Leander needs 1 <= k <= 6");
  return FieldCtx(4 * k);
}

std::uint64_t bracken_leander_exponent(unsigned k) {
  const std::uint64_t q = std::uint64_t{1} << k;
  return q * q + q + 1;
}

Vbf make_bracken_leander(unsigned k) {
  return Vbf::monomial(bracken_leander_field(k), bracken_leander_exponent(k));
}

PredictedSpectrum predict_bracken_leander(unsigned k) {
  if (k < 1) throw Error(Errc::BadParameters, "Bracken-Leander needs k >= 1");
  // |Delta_F(u,v)| is 0 or q^3, so DLCT entries are 0 or +-q^3/2.
  const Value h = Value{1} << (3 * k - 1);
  return {"bracken-leander(k=" + std::to_string(k) + ")", {-h, 0, h}, h, Exactness::ContainmentOnly};
}

std::uint64_t kasami_exponent(unsigned n, unsigned k) {
  if (n < 1 || n % 2 == 0 || n % 3 == 0 || k < 1 || (3 * k) % n != 1 % n || 2 * k >= 63) {
    throw Error(Errc::BadParameters, "Kasami needs n odd, gcd(n,3) = 1, 3k = 1 mod n; got n = " +
                                         std::to_string(n) + ", k = " + std::to_string(k));
  }
  return (std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << k) + 1;
}

Vbf make_kasami(unsigned n, unsigned k) {
  const auto d = kasami_exponent(n, k);
  return Vbf::monomial(FieldCtx(n), d);
}

PredictedSpectrum predict_kasami(unsigned n, unsigned k) {
  kasami_exponent(n, k);
  const Value a = Value{1} << ((n - 1) / 2);
  return {"kasami(k=" + std::to_string(k) + ")" + dim_suffix(n), {-a, 0, a}, a, Exactness::ExactSet};
}

Vbf optimal_sbox(unsigned index) {
  if (index >= kOptimalSboxCount) {
    throw Error(Errc::IndexOutOfRange, "optimal S-box index " + std::to_string(index) + " not in 0..15");
  }
  const auto& row = kOptimalSboxes[index];
  return Vbf::from_lut(4, 4, std::vector<Word>(row.begin(), row.end()));
}

PredictedSpectrum predict_optimal_sbox(unsigned index) {
  if (index >= kOptimalSboxCount) {
    throw Error(Errc::IndexOutOfRange, "optimal S-box index " + std::to_string(index) + " not in 0..15");
  }
  const bool low = std::find(kDlu4Classes.begin(), kDlu4Classes.end(), index) != kDlu4Classes.end();
  PredictedSpectrum p;
  p.family = "optimal-sbox-" + std::to_string(index);
  p.values = low ? std::vector<Value>{-4, 0, 4} : std::vector<Value>{-8, -4, 0, 4, 8};
  p.dlu = low ? 4 : 8;
  p.exactness = Exactness::ExactSet;
  return p;
}

std::vector<NamedFunction> catalog_instances(unsigned max_n) {
  std::vector<NamedFunction> out;
  const unsigned top = std::min(max_n, kMaxTableDimension);
  for (unsigned n = 3; n <= top; ++n) {
    const FieldCtx ctx(n);
    out.push_back({"inverse" + dim_suffix(n), make_inverse(ctx)});
    out.push_back({"gold(i=1)" + dim_suffix(n), make_gold(ctx, 1)});
    if (n >= 4) {
      const auto terms = random_quadratic_terms(ctx, 3, 1000 + n);
      out.push_back({"quadratic(seed=" + std::to_string(1000 + n) + ")" + dim_suffix(n), make_quadratic(ctx, terms)});
    }
  }
  if (top >= 4) {
    for (unsigned i = 0; i < kOptimalSboxCount; ++i) {
      out.push_back({"optimal-sbox-" + std::to_string(i), optimal_sbox(i)});
    }
    out.push_back({"bracken-leander(k=1)", make_bracken_leander(1)});
  }
  if (top >= 5) out.push_back({"kasami(k=2)" + dim_suffix(5), make_kasami(5, 2)});
  if (top >= 6) {
    const FieldCtx ctx(6);
    out.push_back({"x^13" + dim_suffix(6), Vbf::monomial(ctx, 13)});
    out.push_back({"x^34" + dim_suffix(6), Vbf::monomial(ctx, 34)});
    out.push_back({"gold(i=2)" + dim_suffix(6), make_gold(ctx, 2)});
  }
  if (top >= 7) {
    const FieldCtx ctx(7);
    const std::array<Term, 2> terms = {Term{1, ctx.order() - 2}, Term{1, 1}};
    out.push_back({"inverse+x" + dim_suffix(7), Vbf::from_univariate(ctx, terms)});
    out.push_back({"kasami(k=5)" + dim_suffix(7), make_kasami(7, 5)});
  }
  if (top >= 8) out.push_back({"bracken-leander(k=2)", make_bracken_leander(2)});
  return out;
}

}  // namespace dlct
