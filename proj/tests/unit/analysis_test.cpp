#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "dlct/analysis.hpp"
#include "dlct/catalog.hpp"
#include "dlct/error.hpp"
#include "test_functions.hpp"

namespace dlct {
namespace {

using testing::random_permutation;
using testing::random_vbf;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::ParseError;
}

TEST(Analyze, OptimalSboxes) {
  for (unsigned i = 0; i < kOptimalSboxCount; ++i) {
    const AnalysisReport r = analyze(optimal_sbox(i));
    EXPECT_EQ(r.diff_uniformity, 4) << i;
    EXPECT_EQ(r.nonlinearity, 4) << i;
    EXPECT_TRUE(r.flags.is_permutation);
    EXPECT_FALSE(r.flags.is_apn);
    EXPECT_EQ(r.absolute_indicator, 2 * r.dlu);
  }
}

TEST(Analyze, CubeOverGf32IsAlmostBent) {
  const AnalysisReport r = analyze(Vbf::monomial(FieldCtx(5), 3));
  EXPECT_TRUE(r.flags.is_apn);
  EXPECT_TRUE(r.flags.is_plateaued);
  EXPECT_TRUE(r.flags.is_ab);
  EXPECT_TRUE(r.flags.is_permutation);
  EXPECT_FALSE(r.flags.is_bent);
  EXPECT_EQ(r.diff_uniformity, 2);
  EXPECT_EQ(r.nonlinearity, 12);
  // Quadratic: every derivative is affine, so entries are 0 or -16.
  EXPECT_EQ(r.dlu, 16);
  EXPECT_EQ(r.dlct_spectrum.distinct_values(), (std::vector<Value>{-16, 0}));
  ASSERT_EQ(r.amplitude_exponents.size(), 31u);
  for (unsigned e : r.amplitude_exponents) EXPECT_EQ(e, 3u);
}

TEST(Analyze, KasamiOverGf32HasOptimalDlu) {
  const AnalysisReport r = analyze(make_kasami(5, 2));
  EXPECT_TRUE(r.flags.is_apn);
  EXPECT_EQ(r.dlu, 4);
}

TEST(Analyze, BentFunctionsHaveZeroDlu) {
  for (const Vbf& f : {testing::bent_4_2(), testing::bent_6_3()}) {
    const AnalysisReport r = analyze(f);
    EXPECT_TRUE(r.flags.is_bent);
    EXPECT_EQ(r.dlu, 0);
    EXPECT_EQ(r.dlct_spectrum.distinct_values(), (std::vector<Value>{0}));
    EXPECT_EQ(r.nonlinearity, (Value{1} << (f.n() - 1)) - (Value{1} << (f.n() / 2 - 1)));
  }
}

TEST(Analyze, SumOfSquaresCountsAutocorrelation) {
  const Vbf f = random_vbf(5, 3, 41);
  const AnalysisReport r = analyze(f);
  const SpectralTable a = autocorrelation_table(f);
  Value expected = 0;
  for (Value x : a.data()) expected += x * x;
  EXPECT_EQ(r.sum_of_squares, expected);
}

TEST(Analyze, NonPlateauedHasNoExponents) {
  const AnalysisReport r = analyze(make_inverse(FieldCtx(6)));
  EXPECT_FALSE(r.flags.is_plateaued);
  EXPECT_TRUE(r.amplitude_exponents.empty());
  EXPECT_EQ(r.dlu, 8);
}

TEST(Bounds, ExactRatio) {
  const DluBound b = dlu_lower_bound(4, 4);
  EXPECT_EQ(b.numerator, 256);
  EXPECT_EQ(b.denominator, 60);
  ASSERT_TRUE(b.even_bound.has_value());
  EXPECT_EQ(*b.even_bound, 4);
  EXPECT_FALSE(b.admits(2));
  EXPECT_TRUE(b.admits(4));
  EXPECT_NEAR(b.value(), std::sqrt(256.0 / 60.0), 1e-12);
}

TEST(Bounds, VanishesAtMEqualsNMinusOne) {
  for (unsigned n = 2; n <= 12; ++n) {
    const DluBound b = dlu_lower_bound(n, n - 1);
    EXPECT_EQ(b.numerator, 0);
    EXPECT_TRUE(b.admits(0));
    EXPECT_EQ(b.value(), 0.0);
  }
}

TEST(Bounds, EvenBoundAtTwo) {
  const DluBound b = dlu_lower_bound(2, 2);
  ASSERT_TRUE(b.even_bound.has_value());
  EXPECT_EQ(*b.even_bound, 2);
  // Every (2,2)-function has DLU 2.
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const AnalysisReport r = analyze(random_permutation(2, seed));
    EXPECT_EQ(r.dlu, 2);
  }
}

TEST(Bounds, OddDimensionsHaveNoEvenBound) {
  EXPECT_FALSE(dlu_lower_bound(5, 5).even_bound.has_value());
  EXPECT_FALSE(dlu_lower_bound(6, 7).even_bound.has_value());
}

TEST(Bounds, DomainErrors) {
  EXPECT_EQ(code_of([] { dlu_lower_bound(6, 3); }), Errc::DomainError);
  EXPECT_EQ(code_of([] { dlu_lower_bound(21, 21); }), Errc::TooLarge);
}

TEST(Bounds, HoldForRandomFunctions) {
  for (unsigned n = 3; n <= 7; ++n) {
    for (unsigned m = n - 1; m <= n + 1; ++m) {
      const Vbf f = random_vbf(n, m, 100 * n + m);
      EXPECT_TRUE(all_pass(verify_bounds(f, "random")));
    }
  }
}

TEST(SquareSum, EqualityExactlyForApn) {
  for (unsigned n : {3u, 5u, 7u}) {
    const SpectralTable t = dlct(Vbf::monomial(FieldCtx(n), 3));
    EXPECT_EQ(nonzero_square_sum(t), dlct_square_sum_floor(n, n));
  }
  EXPECT_EQ(nonzero_square_sum(dlct(Vbf::monomial(FieldCtx(6), 3))), dlct_square_sum_floor(6, 6));
  const SpectralTable inv = dlct(make_inverse(FieldCtx(6)));
  EXPECT_GT(nonzero_square_sum(inv), dlct_square_sum_floor(6, 6));
  const SpectralTable rnd = dlct(random_vbf(6, 6, 1));
  EXPECT_GT(nonzero_square_sum(rnd), dlct_square_sum_floor(6, 6));
}

TEST(MonomialSpectrum, MatchesFullTable) {
  const FieldCtx ctx(6);
  for (std::uint64_t d : {3u, 5u, 7u, 13u, 34u, 62u}) {
    const Vbf f = Vbf::monomial(ctx, d);
    EXPECT_EQ(monomial_spectrum(f), spectrum_of(dlct(f))) << d;
  }
  const std::array<Term, 1> term = {Term{5, 11}};
  const Vbf scaled = Vbf::from_univariate(ctx, term);
  EXPECT_EQ(monomial_spectrum(scaled), spectrum_of(dlct(scaled)));
}

TEST(MonomialSpectrum, ColumnReductionNeedsCoprimeExponent) {
  const FieldCtx ctx(6);
  const Vbf f = Vbf::monomial(ctx, 13);
  const auto col = monomial_column_spectrum(f);
  ASSERT_TRUE(col.has_value());
  EXPECT_EQ(*col, spectrum_of(dlct(f)));
  EXPECT_FALSE(monomial_column_spectrum(Vbf::monomial(ctx, 9)).has_value());
}

TEST(MonomialSpectrum, RejectsNonMonomials) {
  EXPECT_EQ(code_of([] { monomial_spectrum(random_vbf(4, 4, 1)); }), Errc::NotMonomial);
  const FieldCtx ctx(5);
  const std::array<Term, 2> terms = {Term{1, 3}, Term{1, 5}};
  EXPECT_EQ(code_of([&] { monomial_spectrum(Vbf::from_univariate(ctx, terms)); }), Errc::NotMonomial);
}

TEST(InverseRow, KloostermanFormulaPointwise) {
  for (unsigned n = 3; n <= 10; ++n) {
    const FieldCtx ctx(n);
    const auto predicted = inverse_row_prediction(ctx);
    const auto measured = dlct_row(make_inverse(ctx), 1);
    for (Word v = 1; v < ctx.order(); ++v) {
      ASSERT_EQ(measured[ctx.trace_mask(v)], predicted[v]) << "n=" << n << " v=" << v;
    }
  }
}

TEST(DualChecks, ApnFunctions) {
  EXPECT_TRUE(apn_dual_check(Vbf::monomial(FieldCtx(5), 3)));
  EXPECT_TRUE(apn_dual_check(Vbf::monomial(FieldCtx(7), 3)));
  EXPECT_TRUE(apn_dual_check(Vbf::monomial(FieldCtx(6), 3)));
  EXPECT_TRUE(apn_dual_check(make_inverse(FieldCtx(5))));
  EXPECT_TRUE(apn_dual_check(make_kasami(7, 5)));
}

TEST(DualChecks, ApnRejectsNonApn) {
  EXPECT_EQ(code_of([] { apn_dual_check(make_inverse(FieldCtx(4))); }), Errc::NotApn);
  EXPECT_EQ(code_of([] { apn_dual_check(random_vbf(4, 3, 2)); }), Errc::NotApn);
}

TEST(DualChecks, PlateauedFunctions) {
  EXPECT_TRUE(plateaued_dual_check(Vbf::monomial(FieldCtx(5), 3)));
  EXPECT_TRUE(plateaued_dual_check(Vbf::monomial(FieldCtx(7), 3)));
  EXPECT_TRUE(plateaued_dual_check(Vbf::monomial(FieldCtx(6), 5)));
  EXPECT_TRUE(plateaued_dual_check(make_kasami(5, 2)));
  EXPECT_TRUE(plateaued_dual_check(testing::bent_6_3()));
  const FieldCtx ctx(6);
  EXPECT_TRUE(plateaued_dual_check(make_quadratic(ctx, random_quadratic_terms(ctx, 3, 7))));
}

TEST(DualChecks, PlateauedRejectsInverse) {
  EXPECT_EQ(code_of([] { plateaued_dual_check(make_inverse(FieldCtx(6))); }), Errc::NotPlateaued);
}

TEST(Kasami, OptimalForAdmissibleParameters) {
  const KasamiResult a = kasami_optimality_check(5, 2);
  EXPECT_TRUE(a.optimal);
  EXPECT_EQ(a.dlu, 4);
  const KasamiResult b = kasami_optimality_check(7, 5);
  EXPECT_TRUE(b.optimal);
  EXPECT_EQ(b.dlu, 8);
  EXPECT_EQ(b.spectrum.distinct_values(), (std::vector<Value>{-8, 0, 8}));
}

TEST(Kasami, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { kasami_optimality_check(6, 1); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { kasami_optimality_check(9, 3); }), Errc::BadParameters);
  EXPECT_EQ(code_of([] { kasami_optimality_check(5, 1); }), Errc::BadParameters);
}

TEST(Identities, HoldAcrossFunctionShapes) {
  for (unsigned n = 1; n <= 7; ++n) {
    for (unsigned m = 1; m <= 7; ++m) {
      const auto results = verify_identities(random_vbf(n, m, 7 * n + m), "random");
      for (const auto& c : results) EXPECT_TRUE(c.pass) << c.check << " n=" << n << " m=" << m;
    }
  }
}

TEST(Identities, PermutationsIncludeZeroRowCheck) {
  const auto results = verify_identities(random_permutation(5, 3), "perm");
  bool saw = false;
  for (const auto& c : results) {
    EXPECT_TRUE(c.pass) << c.check;
    saw = saw || c.check == "permutation-row-zero";
  }
  EXPECT_TRUE(saw);
}

TEST(Identities, GlobalSumForInjectiveFunctions) {
  // Injective F: sum over all (u,v) equals 2^{m+n-1}.
  const FieldCtx ctx(4);
  const std::array<Term, 1> t = {Term{1, 7}};
  const Vbf f = Vbf::from_univariate(ctx, t);
  ASSERT_TRUE(f.is_permutation());
  Value sum = 0;
  for (Value x : dlct(f).data()) sum += x;
  EXPECT_EQ(sum, Value{1} << 7);
}

TEST(Uniformity, IgnoresBorders) {
  SpectralTable t(TableKind::Dlct, 2, 2);
  t.at(0, 1) = 100;
  t.at(1, 0) = 100;
  t.at(2, 3) = -6;
  EXPECT_EQ(uniformity(t), 6);
}

}  // namespace
}  // namespace dlct
