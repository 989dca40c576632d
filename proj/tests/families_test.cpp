#include <gtest/gtest.h>

#include "lcv/errors.hpp"
#include "lcv/families.hpp"
#include "test_support.hpp"

namespace lcv {
namespace {

const FamilyOptions kFast{Route::Exponential, 1};

IntPolynomial ints(std::vector<long> c) {
  std::vector<ExactInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

TEST(Counts, SmallValues) {
  EXPECT_EQ(u_count(1, 1), 1);
  EXPECT_EQ(u_count(2, 3), 5);
  EXPECT_EQ(u_count(3, 3), 6);
  EXPECT_EQ(v_count(1, 3), 5);
  EXPECT_EQ(v_count(2, 3), 14);
  EXPECT_EQ(v_count(3, 3), 15);
}

TEST(Counts, ZeroRowConvention) {
  const auto u = u_table(4);
  EXPECT_EQ(u[0][0], 1);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(u[0][n], 0);
  EXPECT_THROW(u_count(0, 3), DomainError);
}

TEST(Counts, UOneIsOne) {
  for (int n = 1; n <= 18; ++n) EXPECT_EQ(u_count(1, n, kFast), 1) << "n=" << n;
}

TEST(Counts, VOneIsCatalan) {
  const auto v = v_table(15, kFast);
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(v[1][n], catalan(n)) << "n=" << n;
}

TEST(Counts, SaturationAndMonotonicity) {
  const auto u = u_table(9);
  const auto v = v_table(8);
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= 9; ++k) {
      EXPECT_GE(u[k][n], u[k - 1][n]);
      if (k >= n) EXPECT_EQ(u[k][n], factorial(n));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 8; ++k) {
      EXPECT_GE(v[k][n], v[k - 1][n]);
      if (k >= n) EXPECT_EQ(v[k][n], double_factorial_odd(n));
    }
  }
}

TEST(Normalization, ExponentialScalingSendsKOneToCatalan) {
  for (int n = 1; n <= 6; ++n) {
    const auto det = matching_determinant(1, 2 * n);
    const ExactRat scale = ExactRat(catalan(n)) / det.coefficient(2 * n);
    EXPECT_EQ(scale, ExactRat(matching_normalization(n))) << "n=" << n;
    EXPECT_EQ(matching_normalization(n), factorial(2 * n));
  }
}

TEST(Polynomials, PrintedExamples) {
  EXPECT_EQ(p_polynomial(1), ints({0, 1}));
  EXPECT_EQ(p_polynomial(3), ints({0, 1, 4, 1}));
  EXPECT_EQ(p_polynomial(4), ints({0, 1, 13, 9, 1}));
  EXPECT_EQ(m_polynomial(1), ints({0, 1}));
  EXPECT_EQ(m_polynomial(3), ints({0, 5, 9, 1}));
  EXPECT_EQ(m_polynomial(4), ints({0, 14, 70, 20, 1}));
  EXPECT_EQ(p_polynomial(10, kFast).coeff(5), 1100902);
  EXPECT_EQ(p_polynomial(18, kFast).coeff(4), ExactInt("207591285198178"));
  EXPECT_EQ(m_polynomial(10, kFast).coeff(3), 298110266);
}

TEST(Polynomials, RowSumsMonicAndLinearTerm) {
  const auto ps = lis_polynomials(18, kFast);
  const auto ms = matching_polynomials(15, kFast);
  for (int n = 1; n <= 18; ++n) {
    const auto& p = ps[n - 1];
    ExactInt sum = 0;
    for (const auto& c : p.coeffs()) sum += c;
    EXPECT_EQ(sum, factorial(n)) << "n=" << n;
    EXPECT_EQ(p.degree(), n);
    EXPECT_EQ(p.coeff(n), 1);
    EXPECT_EQ(p.coeff(1), 1);
    EXPECT_EQ(p.coeff(0), 0);
  }
  for (int n = 1; n <= 15; ++n) {
    const auto& m = ms[n - 1];
    ExactInt sum = 0;
    for (const auto& c : m.coeffs()) sum += c;
    EXPECT_EQ(sum, double_factorial_odd(n)) << "n=" << n;
    EXPECT_EQ(m.degree(), n);
    EXPECT_EQ(m.coeff(n), 1);
    EXPECT_EQ(m.coeff(1), catalan(n));
  }
}

TEST(Polynomials, RoutesAgree) {
  EXPECT_EQ(lis_polynomials(12, {Route::Rational, 1}), lis_polynomials(12, {Route::Exponential, 1}));
  EXPECT_EQ(matching_polynomials(10, {Route::Rational, 1}),
            matching_polynomials(10, {Route::Exponential, 1}));
}

TEST(Polynomials, JobsDoNotChangeResults) {
  EXPECT_EQ(lis_polynomials(14, {Route::Exponential, 1}), lis_polynomials(14, {Route::Exponential, 4}));
  EXPECT_EQ(matching_polynomials(12, {Route::Rational, 1}),
            matching_polynomials(12, {Route::Rational, 3}));
}

TEST(Polynomials, BatchMatchesSingle) {
  const auto ps = lis_polynomials(7);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(ps[n - 1], p_polynomial(n));
}

// Rows computed without any determinant: RSK plus the hook length formula.
TEST(IndependentOracle, HookLengthAgreesWithLisRows) {
  const auto ps = lis_polynomials(18, kFast);
  for (int n = 1; n <= 18; ++n) {
    const auto row = testing::hook_length_lis_row(n);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(ps[n - 1].coeff(k), row[k]) << "n=" << n << " k=" << k;
    }
  }
  EXPECT_EQ(ps[12].coeff(6), ExactInt("1477363967"));
  EXPECT_EQ(ps[16].coeff(9), ExactInt("4142847526101"));
}

// Counts computed without any determinant: walks in the Weyl chamber.
TEST(IndependentOracle, WalkCountsAgreeWithMatchingTable) {
  const auto v = v_table(10, kFast);
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      EXPECT_EQ(v[k][n], testing::weyl_walk_count(k, n)) << "k=" << k << " n=" << n;
    }
  }
}

TEST(IndependentOracle, WalkCountPinsMatchingCell) {
  // M_{20,4} = v_4(10) - v_3(10).
  const ExactInt cell = testing::weyl_walk_count(4, 10) - testing::weyl_walk_count(3, 10);
  EXPECT_EQ(cell, ExactInt("250367636"));
  EXPECT_EQ(m_polynomial(10, kFast).coeff(4), cell);
}

TEST(BorosMoll, Examples) {
  EXPECT_EQ(boros_moll_coeff(0, 0), 1);
  EXPECT_EQ(boros_moll_coeff(0, 1), make_rat(3, 2));
  EXPECT_EQ(boros_moll_coeff(1, 1), 1);
  EXPECT_EQ(boros_moll_coeff(2, 2), make_rat(3, 2));
  EXPECT_EQ(boros_moll_coeff(0, 2), make_rat(21, 8));
  EXPECT_EQ(boros_moll_polynomial(0), RatPolynomial({ExactRat(1)}));
  EXPECT_THROW(boros_moll_coeff(3, 2), DomainError);
  EXPECT_THROW(boros_moll_coeff(-1, 2), DomainError);
}

TEST(BorosMoll, PositiveCoefficientsAndDegree) {
  const auto bm = boros_moll_polynomials(30);
  ASSERT_EQ(bm.size(), 31u);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(bm[n].degree(), n);
    for (int i = 0; i <= n; ++i) EXPECT_GT(bm[n].coeff(i), 0) << "n=" << n << " i=" << i;
  }
}

TEST(BorosMoll, LeadingCoefficientClosedForm) {
  // d_n(n) = 2^{-n} C(2n, n).
  for (int n = 0; n <= 20; ++n) {
    ExactRat expected(binomial(2 * n, n));
    expected /= ExactRat(ExactInt(1) << n);
    EXPECT_EQ(boros_moll_coeff(n, n), expected) << "n=" << n;
  }
}

TEST(Helpers, CombinatorialNumbers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(double_factorial_odd(0), 1);
  EXPECT_EQ(double_factorial_odd(4), 105);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(parse_family("boros-moll"), FamilyId::BorosMoll);
  EXPECT_FALSE(parse_family("nope").has_value());
  EXPECT_EQ(family_name(FamilyId::Matching), "matching");
}

}  // namespace
}  // namespace lcv
