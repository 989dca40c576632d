#include "lcv/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcv/errors.hpp"
#include "lcv/parallel.hpp"

namespace lcv {

namespace {

void merge_into(Histogram& into, const Histogram& from) {
  for (const auto& [k, count] : from) into[k] += count;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Matching::Matching(std::vector<std::pair<int, int>> arcs) : arcs_(std::move(arcs)) {
  const int points = 2 * size();
  std::vector<bool> seen(static_cast<std::size_t>(points) + 1, false);
  for (auto& [a, b] : arcs_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > points || a == b || seen[a] || seen[b]) {
      throw DomainError("arcs do not form a perfect matching of [" + std::to_string(points) + "]");
    }
    seen[a] = seen[b] = true;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

int lis_length(const Permutation& p) {
  if (p.size() == 0) throw DomainError("lis_length needs n >= 1");
  // tops[j] is the smallest possible last value of an increasing run of length j + 1.
  std::vector<int> tops;
  for (int v : p.one_line()) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

int crossing_number(const Matching& m) {
  if (m.size() == 0) throw DomainError("crossing_number needs n >= 1");
  // Arcs e_1..e_t (sorted by left end) cross pairwise iff
  // a_1 < ... < a_t < b_1 < ... < b_t. Fix the first arc s; the rest form a
  // chain with increasing right ends and left ends below b_s.
  const auto& arcs = m.arcs();
  const int n = m.size();
  int best = 1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> chain(static_cast<std::size_t>(n), 0);
    chain[s] = 1;
    for (int j = s + 1; j < n; ++j) {
      if (arcs[j].first > arcs[s].second || arcs[j].second < arcs[s].second) continue;
      for (int i = s; i < j; ++i) {
        if (chain[i] > 0 && arcs[i].second < arcs[j].second) {
          chain[j] = std::max(chain[j], chain[i] + 1);
        }
      }
      best = std::max(best, chain[j]);
    }
  }
  return best;
}

Histogram perm_lis_histogram(int n, bool allow_large, int jobs) {
  if (n < 1) throw DomainError("permutation oracle needs n >= 1");
  if (n > kPermutationOracleCap && !allow_large) {
    throw CapExceeded("permutation oracle is capped at n = " +
                      std::to_string(kPermutationOracleCap) + "; pass an override for n = " +
                      std::to_string(n));
  }
  std::vector<Histogram> shards(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t shard) {
    const int first = static_cast<int>(shard) + 1;
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
      if (v != first) rest.push_back(v);
    }
    std::vector<int> line(static_cast<std::size_t>(n));
    line[0] = first;
    Histogram& h = shards[shard];
    do {
      std::copy(rest.begin(), rest.end(), line.begin() + 1);
      ++h[lis_length(Permutation(line))];
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  Histogram total;
  for (const auto& h : shards) merge_into(total, h);
  return total;
}

namespace detail {

void check_matching_cap(int n, bool allow_large) {
  if (n < 1) throw DomainError("matching enumeration needs n >= 1");
  if (n > kMatchingOracleCap && !allow_large) {
    throw CapExceeded("matching oracle is capped at n = " + std::to_string(kMatchingOracleCap) +
                      "; pass an override for n = " + std::to_string(n));
  }
}

}  // namespace detail

Histogram matching_crossing_histogram(int n, bool allow_large, int jobs) {
  detail::check_matching_cap(n, allow_large);
  // Shard on the partner of point 1.
  const int points = 2 * n;
  std::vector<Histogram> shards(static_cast<std::size_t>(points - 1));
  parallel_for(shards.size(), jobs, [&](std::size_t shard) {
    const int second = static_cast<int>(shard) + 2;
    std::vector<int> partner(static_cast<std::size_t>(points) + 1, 0);
    partner[1] = second;
    partner[second] = 1;
    std::vector<std::pair<int, int>> arcs{{1, second}};
    Histogram& h = shards[shard];
    auto visit = [&](const Matching& m) { ++h[crossing_number(m)]; };
    detail::extend_matching(partner, arcs, visit);
  });
  Histogram total;
  for (const auto& h : shards) merge_into(total, h);
  return total;
}

ExactInt histogram_total(const Histogram& h) {
  ExactInt total = 0;
  for (const auto& [k, count] : h) total += count;
  return total;
}

}  // namespace lcv
