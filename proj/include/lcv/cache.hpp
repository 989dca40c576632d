#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lcv/families.hpp"
#include "lcv/polynomial.hpp"

namespace lcv {

/// Environment variable naming the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "LCV_CACHE_DIR";

/// On-disk JSON cache of Lis / Matching polynomials keyed by
/// (family, n, tool_version). A hit is returned only if the stored row is
/// well formed, sums to n! or (2n-1)!!, and agrees with the golden table
/// wherever the table covers n (certified misprints excepted).
class FamilyCache {
 public:
  explicit FamilyCache(std::filesystem::path dir);

  /// `flag` wins over the environment; nullopt when neither is set.
  static std::optional<FamilyCache> resolve(const std::optional<std::string>& flag);

  std::filesystem::path path_for(FamilyId family, int n) const;
  std::optional<IntPolynomial> load(FamilyId family, int n) const;
  void store(FamilyId family, int n, const IntPolynomial& poly) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// True when no golden row covers n, or every disagreement with it is a
/// certified misprint.
bool consistent_with_golden(FamilyId family, int n, const IntPolynomial& poly);

/// Lis or Matching rows 1..n_max, served from the cache when every row hits.
std::vector<IntPolynomial> load_or_compute(FamilyId family, int n_max, const FamilyOptions& options,
                                           const FamilyCache* cache);

}  // namespace lcv
