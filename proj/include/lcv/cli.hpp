#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcv/cache.hpp"
#include "lcv/families.hpp"
#include "lcv/report.hpp"

namespace lcv::cli {

/// Exit codes: every check held / a counterexample was found / usage or
/// internal error. Finding a counterexample is a successful run.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitError = 2;

/// Depth budget for the infinite-order suites when --depth is absent.
inline constexpr int kDefaultInfinityDepth = 6;

enum class Suite {
  LogConcave,
  KLogConcave,
  InfLogConcave,
  QLogConvex,
  QLogConcave,
  StrongQLogConvex,
  StrongQLogConcave,
  KQLogConvex,
  OrderKLogConcave,
  InfQLogConvex,
  InfOrderLogConcave,
};

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::vector<std::string> suite_names();
/// Row suites test each coefficient row on its own; the rest test the
/// polynomial sequence over the window as a whole.
bool is_row_suite(Suite suite);
bool needs_depth(Suite suite);
bool is_exploratory(FamilyId family, Suite suite);

struct VerifyRequest {
  FamilyId family = FamilyId::Lis;
  Suite suite = Suite::LogConcave;
  int n_min = 1;
  int n_max = 1;
  std::optional<int> depth;
  FamilyOptions options;
  const FamilyCache* cache = nullptr;
};

/// Runs one suite. Throws WindowError / DomainError on requests the predicate
/// cannot evaluate.
Report verify(const VerifyRequest& request);

/// Entry point shared by the `lcv` binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcv::cli
