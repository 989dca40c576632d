#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lcv/exact.hpp"

namespace lcv {

inline constexpr int kPermutationOracleCap = 9;
inline constexpr int kMatchingOracleCap = 7;

/// Statistic value -> number of objects attaining it.
using Histogram = std::map<int, ExactInt>;

/// One-line notation of a permutation of 1..n.
class Permutation {
 public:
  /// Throws DomainError unless `one_line` contains each of 1..n exactly once.
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const { return one_line_; }

 private:
  std::vector<int> one_line_;
};

/// Perfect matching of [2n] as arcs (a, b) with a < b.
class Matching {
 public:
  /// Throws DomainError unless the arcs are disjoint and cover 1..2n.
  explicit Matching(std::vector<std::pair<int, int>> arcs);

  int size() const { return static_cast<int>(arcs_.size()); }
  /// Sorted by left endpoint.
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

 private:
  std::vector<std::pair<int, int>> arcs_;
};

/// Longest strictly increasing subsequence, by patience sorting.
int lis_length(const Permutation& p);

/// Largest set of mutually crossing arcs. A noncrossing matching has crossing
/// number 1.
int crossing_number(const Matching& m);

/// Histogram of lis_length over all n! permutations, enumerated in
/// lexicographic order and sharded by first letter across `jobs` threads.
/// Throws CapExceeded above kPermutationOracleCap unless allow_large.
Histogram perm_lis_histogram(int n, bool allow_large = false, int jobs = 1);

/// Streams all (2n-1)!! matchings of [2n] to `visit`: the smallest unmatched
/// point is paired with each larger free point in turn. Throws CapExceeded
/// above kMatchingOracleCap unless allow_large.
template <class Visitor>
void enumerate_matchings(int n, Visitor&& visit, bool allow_large = false);

/// Histogram of crossing_number over all matchings of [2n].
Histogram matching_crossing_histogram(int n, bool allow_large = false, int jobs = 1);

ExactInt histogram_total(const Histogram& h);

namespace detail {

void check_matching_cap(int n, bool allow_large);

/// `partner` is 0 for free points; `arcs` receives pairs in creation order.
template <class Visitor>
void extend_matching(std::vector<int>& partner, std::vector<std::pair<int, int>>& arcs,
                     Visitor& visit) {
  const int points = static_cast<int>(partner.size()) - 1;
  int first = 1;
  while (first <= points && partner[first] != 0) ++first;
  if (first > points) {
    visit(Matching(arcs));
    return;
  }
  for (int second = first + 1; second <= points; ++second) {
    if (partner[second] != 0) continue;
    partner[first] = second;
    partner[second] = first;
    arcs.emplace_back(first, second);
    extend_matching(partner, arcs, visit);
    arcs.pop_back();
    partner[first] = 0;
    partner[second] = 0;
  }
}

}  // namespace detail

template <class Visitor>
void enumerate_matchings(int n, Visitor&& visit, bool allow_large) {
  detail::check_matching_cap(n, allow_large);
  std::vector<int> partner(static_cast<std::size_t>(2 * n) + 1, 0);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  detail::extend_matching(partner, arcs, visit);
}

}  // namespace lcv
