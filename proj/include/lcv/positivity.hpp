#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/polynomial.hpp"

namespace lcv {

/// Where a predicate failed. `value` is the offending negative quantity; the
/// other coordinates locate it so it can be recomputed independently.
struct Witness {
  enum class Kind {
    /// Entry `index` of L^depth(s) is negative.
    SequenceEntry,
    /// Coefficient of q^degree in a compared difference is negative. For
    /// operator checks the polynomial is entry `index` of H^depth; for
    /// pairwise checks it is the (index, partner) = (m, n) difference.
    Coefficient,
    /// Coefficient row of entry `index` of H^depth is not log-concave at `degree`.
    RowLogConcavity,
  };

  Kind kind = Kind::SequenceEntry;
  int depth = 0;
  std::optional<int> index;
  std::optional<int> partner;
  std::optional<int> degree;
  ExactRat value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(Witness::Kind kind);
std::string describe(const Witness& w);

/// Outcome of a predicate check. holds() is false exactly when a witness is
/// present. depth_reached is the deepest operator iterate that was examined
/// (0 for predicates without an operator).
class Verdict {
 public:
  static Verdict pass(int depth_reached = 0) { return Verdict(std::nullopt, depth_reached); }
  static Verdict fail(Witness w, int depth_reached) { return Verdict(std::move(w), depth_reached); }

  bool holds() const { return !witness_.has_value(); }
  const std::optional<Witness>& witness() const { return witness_; }
  int depth_reached() const { return depth_reached_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict(std::optional<Witness> w, int depth) : witness_(std::move(w)), depth_reached_(depth) {}

  std::optional<Witness> witness_;
  int depth_reached_ = 0;
};

/// Finite number sequence occupying indices lo .. lo + size - 1.
class NumberSequence {
 public:
  NumberSequence(int lo, std::vector<ExactRat> values);
  static NumberSequence from_integers(int lo, const std::vector<ExactInt>& values);
  /// Coefficients of degrees lowest..degree of p, with lo = lowest.
  static NumberSequence coefficient_row(const RatPolynomial& p, int lowest);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
  std::size_t size() const { return values_.size(); }
  /// Zero outside the window.
  ExactRat at(int index) const;
  const std::vector<ExactRat>& values() const { return values_; }

  friend bool operator==(const NumberSequence&, const NumberSequence&) = default;

 private:
  int lo_;
  std::vector<ExactRat> values_;
};

/// Finite polynomial sequence occupying indices lo .. lo + size - 1.
class PolySequence {
 public:
  PolySequence(int lo, std::vector<RatPolynomial> polys);
  static PolySequence from_integer_polys(int lo, const std::vector<IntPolynomial>& polys);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(polys_.size()) - 1; }
  std::size_t size() const { return polys_.size(); }
  const RatPolynomial& at(int index) const;
  const std::vector<RatPolynomial>& polys() const { return polys_; }

  friend bool operator==(const PolySequence&, const PolySequence&) = default;

 private:
  int lo_;
  std::vector<RatPolynomial> polys_;
};

/// b_i = a_i^2 - a_{i-1} a_{i+1}, zero padding outside the window; the
/// output keeps the input window.
NumberSequence l_operator(const NumberSequence& s);

/// L^1 s .. L^k s are all nonnegative. Witness: first (depth, index) that is negative.
Verdict k_log_concave(const NumberSequence& s, int k);

/// Depth-budgeted stand-in for infinite log-concavity: k_log_concave with k = budget.
Verdict infinity_log_concave(const NumberSequence& s, int budget);

/// f - g has only nonnegative coefficients. Witness: lowest negative degree.
Verdict q_geq(const RatPolynomial& f, const RatPolynomial& g);

/// B_i = A_{i-1} A_{i+1} - A_i^2 over the interior of the window, so the
/// output window is [lo + 1, hi - 1]. Throws WindowError below length 3.
PolySequence h_operator(const PolySequence& ps);

/// f_{m+1} f_{m-1} >=_q f_m^2 at every interior m.
Verdict q_log_convex(const PolySequence& ps);
/// f_m^2 >=_q f_{m+1} f_{m-1} at every interior m.
Verdict q_log_concave_seq(const PolySequence& ps);

/// f_{m-1} f_{n+1} >=_q f_m f_n for all lo < m <= n < hi.
Verdict strong_q_log_convex(const PolySequence& ps);
/// f_m f_n >=_q f_{m-1} f_{n+1} for all lo < m <= n < hi.
Verdict strong_q_log_concave(const PolySequence& ps);

/// Every polynomial of H^1 .. H^k is q-positive. Throws WindowError unless
/// the window holds at least 2k + 1 polynomials.
Verdict k_q_log_convex(const PolySequence& ps, int k);

/// k_q_log_convex(ps, k) and every polynomial of H^k has a log-concave
/// coefficient row.
Verdict log_concave_of_order_k(const PolySequence& ps, int k);

/// Depth-budgeted infinite q-log-convexity: k_q_log_convex at the largest
/// depth min(budget, (size - 1) / 2) the window admits.
Verdict infinity_q_log_convex(const PolySequence& ps, int budget);

/// Depth-budgeted "log-concave of every order": at each depth j up to
/// min(budget, (size - 1) / 2), H^j is q-positive with log-concave rows.
Verdict infinity_order_log_concave(const PolySequence& ps, int budget);

/// Deepest H iterate a window of this size admits.
int max_h_depth(std::size_t window_size);

}  // namespace lcv
