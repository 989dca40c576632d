#include "lcv/golden.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lcv/errors.hpp"

namespace lcv::golden {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void malformed(int line_no, const std::string& why) {
  throw DomainError("golden table line " + std::to_string(line_no) + ": " + why);
}

GoldenRow parse_line(FamilyId family, const std::string& line, int line_no) {
  const char letter = family == FamilyId::Lis ? 'P' : 'M';
  const auto eq = line.find('=');
  if (eq == std::string::npos) malformed(line_no, "missing '='");
  const std::string lhs = trim(std::string_view(line).substr(0, eq));
  if (lhs.size() < 6 || lhs[0] != letter || lhs[1] != '_' || !lhs.ends_with("(x)")) {
    malformed(line_no, "expected " + std::string(1, letter) + "_<n>(x)");
  }
  const std::string subscript = lhs.substr(2, lhs.size() - 5);
  if (!all_digits(subscript)) malformed(line_no, "bad subscript");
  int n = std::stoi(subscript);
  if (family == FamilyId::Matching) {
    if (n % 2 != 0) malformed(line_no, "matching subscript must be even");
    n /= 2;
  }
  if (n < 1) malformed(line_no, "subscript out of range");

  GoldenRow row;
  row.n = n;
  row.coeffs.assign(static_cast<std::size_t>(n), "");
  std::stringstream terms(std::string(line.substr(eq + 1)));
  std::string term;
  while (std::getline(terms, term, '+')) {
    term = trim(term);
    const auto x = term.find('x');
    if (x == std::string::npos) malformed(line_no, "term without x: '" + term + "'");
    std::string coeff = term.substr(0, x);
    if (coeff.empty()) coeff = "1";
    if (!all_digits(coeff)) malformed(line_no, "bad coefficient '" + coeff + "'");
    int degree = 1;
    const std::string tail = term.substr(x + 1);
    if (!tail.empty()) {
      if (tail[0] != '^' || !all_digits(tail.substr(1))) malformed(line_no, "bad exponent");
      degree = std::stoi(tail.substr(1));
    }
    if (degree < 1 || degree > n) malformed(line_no, "degree out of range");
    if (!row.coeffs[degree - 1].empty()) malformed(line_no, "repeated degree");
    row.coeffs[degree - 1] = coeff;
  }
  for (auto& c : row.coeffs) {
    if (c.empty()) c = "0";
  }
  return row;
}

}  // namespace

const GoldenRow* GoldenTable::find(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

GoldenTable parse_table(FamilyId family, std::string_view text) {
  if (family == FamilyId::BorosMoll) throw DomainError("no golden table for boros-moll");
  GoldenTable table;
  table.family = family;
  std::stringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    GoldenRow row = parse_line(family, line, line_no);
    if (table.find(row.n)) malformed(line_no, "duplicate row");
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const GoldenRow& a, const GoldenRow& b) { return a.n < b.n; });
  return table;
}

const GoldenTable& embedded_table(FamilyId family) {
  static const GoldenTable lis = parse_table(FamilyId::Lis, embedded_lis_text());
  static const GoldenTable matching = parse_table(FamilyId::Matching, embedded_matching_text());
  switch (family) {
    case FamilyId::Lis:
      return lis;
    case FamilyId::Matching:
      return matching;
    case FamilyId::BorosMoll:
      break;
  }
  throw DomainError("no golden table for boros-moll");
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool DiffResult::all_certified_misprints() const {
  return std::all_of(misprints.begin(), misprints.end(),
                     [](const MisprintCheck& m) { return m.certified; });
}

ExactInt row_total(FamilyId family, int n) {
  return family == FamilyId::Lis ? factorial(n) : double_factorial_odd(n);
}

int max_row(const GoldenTable& table) { return table.rows.empty() ? 0 : table.rows.back().n; }

DiffResult diff(const GoldenTable& table, const std::vector<IntPolynomial>& computed) {
  DiffResult result;
  result.family = table.family;
  for (const auto& row : table.rows) {
    if (row.n > static_cast<int>(computed.size())) continue;
    const IntPolynomial& poly = computed[row.n - 1];
    ++result.rows_checked;

    std::vector<Mismatch> row_mismatches;
    const int top = std::max(poly.degree(), row.n);
    for (int d = 0; d <= top; ++d) {
      const std::string expected = (d >= 1 && d <= row.n) ? row.coeffs[d - 1] : "0";
      const std::string got = poly.coeff(d).get_str();
      if (expected != got) row_mismatches.push_back({row.n, d, expected, got});
    }
    if (row_mismatches.empty()) {
      ++result.rows_matching;
      continue;
    }

    ExactInt printed_sum = 0;
    for (const auto& c : row.coeffs) printed_sum += ExactInt(c);
    const ExactInt expected_sum = row_total(table.family, row.n);
    for (const auto& m : row_mismatches) {
      MisprintCheck check;
      check.printed_sum = printed_sum;
      check.expected_sum = expected_sum;
      if (row_mismatches.size() == 1 && m.degree >= 1 && m.degree <= row.n) {
        check.implied_value = expected_sum - (printed_sum - ExactInt(m.expected));
        check.certified = printed_sum != expected_sum && check.implied_value == ExactInt(m.got);
      }
      result.mismatches.push_back(m);
      result.misprints.push_back(check);
    }
  }
  return result;
}

}  // namespace lcv::golden
