#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lcv/families.hpp"
#include "lcv/golden.hpp"
#include "lcv/oracles.hpp"
#include "lcv/positivity.hpp"

namespace lcv {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { Text, Json, Csv };
std::optional<Format> parse_format(std::string_view name);

/// A computed coefficient row: coefficients of x^lowest .. x^(lowest + size - 1).
struct CoefficientRow {
  int n = 0;
  int lowest = 0;
  std::vector<std::string> coeffs;
};

std::vector<CoefficientRow> rows_of(FamilyId family, const std::vector<IntPolynomial>& polys);
std::vector<CoefficientRow> rows_of(const std::vector<RatPolynomial>& boros_moll);

void render_rows(FamilyId family, const std::vector<CoefficientRow>& rows, Format format,
                 std::ostream& out);

/// One predicate evaluation. Row suites have `n`; window suites have a window.
struct VerdictEntry {
  std::optional<int> n;
  std::optional<int> window_lo;
  std::optional<int> window_hi;
  Verdict verdict = Verdict::pass();
  double seconds = 0.0;
};

struct Report {
  FamilyId family = FamilyId::Lis;
  std::string suite;
  int n_min = 1;
  int n_max = 1;
  std::optional<int> depth;
  bool exploratory = false;
  std::vector<VerdictEntry> verdicts;

  bool all_hold() const;
};

/// Timings are emitted only when requested so that reports stay byte-stable.
nlohmann::ordered_json to_json(const Report& report, bool with_timings);
void render_report(const Report& report, Format format, bool with_timings, std::ostream& out);

nlohmann::ordered_json to_json(const golden::DiffResult& diff);
void render_golden_diff(const golden::DiffResult& diff, bool errata, Format format,
                        std::ostream& out);

struct OracleComparison {
  int n = 0;
  Histogram oracle;
  std::vector<std::string> polynomial;  // coefficients of x^1 .. x^n
  bool matches = false;
};

void render_oracle_check(FamilyId family, const std::vector<OracleComparison>& rows,
                         Format format, std::ostream& out);

}  // namespace lcv
