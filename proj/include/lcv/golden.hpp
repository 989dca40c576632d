#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/families.hpp"
#include "lcv/polynomial.hpp"

namespace lcv::golden {

/// One printed polynomial: coefficients of x^1 .. x^n as decimal strings.
struct GoldenRow {
  int n = 0;
  std::vector<std::string> coeffs;
};

struct GoldenTable {
  FamilyId family = FamilyId::Lis;
  std::vector<GoldenRow> rows;

  const GoldenRow* find(int n) const;
};

/// Text of data/golden_lis.txt and data/golden_matching.txt as compiled in.
std::string_view embedded_lis_text();
std::string_view embedded_matching_text();

/// Parses lines such as "P_3(x) = x + 4x^2 + x^3" or "M_6(x) = 5x + 9x^2 + x^3"
/// (the subscript of M is 2n). Throws DomainError on malformed input.
GoldenTable parse_table(FamilyId family, std::string_view text);

/// The compiled-in table for Lis or Matching; DomainError for Boros-Moll.
const GoldenTable& embedded_table(FamilyId family);

std::uint64_t fnv1a64(std::string_view bytes);

struct Mismatch {
  int n = 0;
  int degree = 0;
  std::string expected;
  std::string got;
};

/// A mismatch is certified as a misprint when it is the only mismatch in its
/// row, the printed row violates the row-sum identity (n! or (2n-1)!!), and
/// the single value that would restore the identity equals the computed one.
struct MisprintCheck {
  bool certified = false;
  ExactInt printed_sum;
  ExactInt expected_sum;
  ExactInt implied_value;
};

struct DiffResult {
  FamilyId family = FamilyId::Lis;
  int rows_checked = 0;
  int rows_matching = 0;
  std::vector<Mismatch> mismatches;
  /// Parallel to `mismatches`.
  std::vector<MisprintCheck> misprints;

  bool exact() const { return mismatches.empty(); }
  bool all_certified_misprints() const;
};

/// Row identity total: n! for Lis, (2n-1)!! for Matching.
ExactInt row_total(FamilyId family, int n);

/// Compares computed[n - 1] against every table row with n <= computed.size().
DiffResult diff(const GoldenTable& table, const std::vector<IntPolynomial>& computed);

/// Highest n the table covers.
int max_row(const GoldenTable& table);

}  // namespace lcv::golden
