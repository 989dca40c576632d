#include "lcv/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "lcv/errors.hpp"
#include "lcv/golden.hpp"
#include "lcv/report.hpp"
#include "lcv/version.hpp"

namespace lcv {

namespace {

bool well_formed(FamilyId family, int n, const IntPolynomial& poly) {
  if (poly.degree() != n || poly.coeff(0) != 0 || poly.coeff(n) != 1) return false;
  ExactInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (poly.coeff(d) <= 0) return false;
    sum += poly.coeff(d);
  }
  return sum == golden::row_total(family, n);
}

}  // namespace

FamilyCache::FamilyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<FamilyCache> FamilyCache::resolve(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return FamilyCache(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return FamilyCache(env);
  return std::nullopt;
}

std::filesystem::path FamilyCache::path_for(FamilyId family, int n) const {
  return dir_ / (std::string(family_name(family)) + "-n" + std::to_string(n) + "-v" +
                 std::string(tool_version()) + ".json");
}

std::optional<IntPolynomial> FamilyCache::load(FamilyId family, int n) const {
  if (family == FamilyId::BorosMoll) return std::nullopt;
  std::ifstream in(path_for(family, n));
  if (!in) return std::nullopt;
  const auto j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("schema_version", 0) != kReportSchemaVersion ||
      j.value("tool_version", "") != tool_version() ||
      j.value("family", "") != family_name(family) || j.value("n", -1) != n ||
      !j.contains("coeffs") || !j["coeffs"].is_array()) {
    return std::nullopt;
  }
  std::vector<ExactInt> coeffs{0};
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) return std::nullopt;
    ExactInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) return std::nullopt;
    coeffs.push_back(v);
  }
  IntPolynomial poly(std::move(coeffs));
  if (!well_formed(family, n, poly) || !consistent_with_golden(family, n, poly)) {
    return std::nullopt;
  }
  return poly;
}

void FamilyCache::store(FamilyId family, int n, const IntPolynomial& poly) const {
  if (family == FamilyId::BorosMoll) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = std::string(tool_version());
  j["family"] = std::string(family_name(family));
  j["n"] = n;
  std::vector<std::string> coeffs;
  for (int d = 1; d <= poly.degree(); ++d) coeffs.push_back(poly.coeff(d).get_str());
  j["coeffs"] = coeffs;
  // Write-then-rename so concurrent readers never see a partial file.
  const auto target = path_for(family, n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target, ec);
}

bool consistent_with_golden(FamilyId family, int n, const IntPolynomial& poly) {
  if (family == FamilyId::BorosMoll) return true;
  const auto& table = golden::embedded_table(family);
  const auto* row = table.find(n);
  if (!row) return true;
  golden::GoldenTable single{family, {*row}};
  std::vector<IntPolynomial> padded(static_cast<std::size_t>(n));
  padded[n - 1] = poly;
  const auto result = golden::diff(single, padded);
  return result.all_certified_misprints();
}

std::vector<IntPolynomial> load_or_compute(FamilyId family, int n_max, const FamilyOptions& options,
                                           const FamilyCache* cache) {
  if (family == FamilyId::BorosMoll) {
    throw DomainError("boros-moll rows are rational; not served by the integer family cache");
  }
  if (cache) {
    std::vector<IntPolynomial> hits;
    for (int n = 1; n <= n_max; ++n) {
      auto p = cache->load(family, n);
      if (!p) break;
      hits.push_back(std::move(*p));
    }
    if (static_cast<int>(hits.size()) == n_max) return hits;
  }
  auto rows = family == FamilyId::Lis ? lis_polynomials(n_max, options)
                                      : matching_polynomials(n_max, options);
  if (cache) {
    for (int n = 1; n <= n_max; ++n) cache->store(family, n, rows[n - 1]);
  }
  return rows;
}

}  // namespace lcv
