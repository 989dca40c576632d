#include <gtest/gtest.h>

#include <string>

#include "lcv/errors.hpp"
#include "lcv/families.hpp"
#include "lcv/golden.hpp"

namespace lcv {
namespace {

const FamilyOptions kFast{Route::Exponential, 1};

// Freezes the transcription: any edit to the data files changes these.
TEST(GoldenData, ChecksumsAreFrozen) {
  EXPECT_EQ(golden::fnv1a64(golden::embedded_lis_text()), 0x7aa29ebbc798e024ULL)
      << std::hex << golden::fnv1a64(golden::embedded_lis_text());
  EXPECT_EQ(golden::fnv1a64(golden::embedded_matching_text()), 0xf460619284ebac32ULL)
      << std::hex << golden::fnv1a64(golden::embedded_matching_text());
}

TEST(GoldenData, CoversPrintedRanges) {
  const auto& lis = golden::embedded_table(FamilyId::Lis);
  const auto& matching = golden::embedded_table(FamilyId::Matching);
  EXPECT_EQ(lis.rows.size(), 18u);
  EXPECT_EQ(golden::max_row(lis), 18);
  EXPECT_EQ(matching.rows.size(), 15u);
  EXPECT_EQ(golden::max_row(matching), 15);
  EXPECT_EQ(lis.find(10)->coeffs[4], "1100902");
  EXPECT_EQ(lis.find(18)->coeffs[3], "207591285198178");
  EXPECT_EQ(matching.find(10)->coeffs[2], "298110266");
  EXPECT_THROW(golden::embedded_table(FamilyId::BorosMoll), DomainError);
}

TEST(GoldenParser, ParsesPrintedForms) {
  const auto t = golden::parse_table(FamilyId::Matching,
                                     "# comment\nM_2(x) = x\nM_6(x) = 5x + 9x^2 + x^3\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[1].n, 3);
  EXPECT_EQ(t.rows[1].coeffs, (std::vector<std::string>{"5", "9", "1"}));
  EXPECT_THROW(golden::parse_table(FamilyId::Lis, "P_3(x) = x + 4y^2\n"), DomainError);
  EXPECT_THROW(golden::parse_table(FamilyId::Lis, "garbage\n"), DomainError);
  EXPECT_THROW(golden::parse_table(FamilyId::Matching, "M_3(x) = x\n"), DomainError);
}

TEST(GoldenDiff, StrictComparisonFindsTheMisprintedCells) {
  const auto lis = golden::diff(golden::embedded_table(FamilyId::Lis), lis_polynomials(18, kFast));
  EXPECT_EQ(lis.rows_checked, 18);
  EXPECT_EQ(lis.rows_matching, 16);
  ASSERT_EQ(lis.mismatches.size(), 2u);
  EXPECT_EQ(lis.mismatches[0].n, 13);
  EXPECT_EQ(lis.mismatches[0].degree, 6);
  EXPECT_EQ(lis.mismatches[0].expected, "1477313976");
  EXPECT_EQ(lis.mismatches[0].got, "1477363967");
  EXPECT_EQ(lis.mismatches[1].n, 17);
  EXPECT_EQ(lis.mismatches[1].degree, 9);
  EXPECT_TRUE(lis.all_certified_misprints());

  const auto m = golden::diff(golden::embedded_table(FamilyId::Matching),
                              matching_polynomials(15, kFast));
  EXPECT_EQ(m.rows_checked, 15);
  ASSERT_EQ(m.mismatches.size(), 1u);
  EXPECT_EQ(m.mismatches[0].n, 10);
  EXPECT_EQ(m.mismatches[0].degree, 4);
  EXPECT_EQ(m.mismatches[0].got, "250367636");
  EXPECT_TRUE(m.all_certified_misprints());
  EXPECT_EQ(m.misprints[0].implied_value, ExactInt("250367636"));
}

TEST(GoldenDiff, TamperedDigitIsNamedAndNotCertified) {
  std::string text(golden::embedded_lis_text());
  const auto pos = text.find("P_4(x) = x + 13x^2");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 18, "P_4(x) = x + 14x^2");
  const auto table = golden::parse_table(FamilyId::Lis, text);
  const auto d = golden::diff(table, lis_polynomials(6));
  EXPECT_EQ(d.rows_checked, 6);
  ASSERT_EQ(d.mismatches.size(), 1u);
  EXPECT_EQ(d.mismatches[0].n, 4);
  EXPECT_EQ(d.mismatches[0].degree, 2);
  EXPECT_EQ(d.mismatches[0].expected, "14");
  EXPECT_EQ(d.mismatches[0].got, "13");
  // 14 is off by one, so the implied value 13 does match: a single-cell
  // typo is certifiable. A second wrong cell in the row is not.
  EXPECT_TRUE(d.misprints[0].certified);

  const auto row = text.find("P_4(x)");
  text.replace(row, text.find('\n', row) - row, "P_4(x) = x + 14x^2 + 8x^3 + x^4");
  const auto d2 = golden::diff(golden::parse_table(FamilyId::Lis, text), lis_polynomials(6));
  EXPECT_EQ(d2.mismatches.size(), 2u);
  EXPECT_FALSE(d2.all_certified_misprints());
}

TEST(GoldenDiff, RowTotals) {
  EXPECT_EQ(golden::row_total(FamilyId::Lis, 5), 120);
  EXPECT_EQ(golden::row_total(FamilyId::Matching, 5), 945);
}

}  // namespace
}  // namespace lcv
