#include "lcv/positivity.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lcv/errors.hpp"

namespace lcv {

namespace {

/// First negative coefficient of `diff`, tagged with the given coordinates.
std::optional<Witness> first_negative_coefficient(const RatPolynomial& diff, int depth,
                                                  std::optional<int> index,
                                                  std::optional<int> partner) {
  for (int d = 0; d <= diff.degree(); ++d) {
    if (sgn(diff.coeffs()[d]) < 0) {
      return Witness{Witness::Kind::Coefficient, depth, index, partner, d, diff.coeffs()[d]};
    }
  }
  return std::nullopt;
}

void require_depth(int k) {
  if (k < 1) throw DomainError("operator depth must be at least 1");
}

void require_window_for_depth(const PolySequence& ps, int k) {
  if (ps.size() < static_cast<std::size_t>(2 * k + 1)) {
    throw WindowError("depth " + std::to_string(k) + " needs a window of at least " +
                      std::to_string(2 * k + 1) + " polynomials, got " +
                      std::to_string(ps.size()));
  }
}

std::optional<Witness> negative_in_iterate(const PolySequence& iterate, int depth) {
  for (int i = iterate.lo(); i <= iterate.hi(); ++i) {
    if (auto w = first_negative_coefficient(iterate.at(i), depth, i, std::nullopt)) return w;
  }
  return std::nullopt;
}

std::optional<Witness> non_log_concave_row(const PolySequence& iterate, int depth) {
  for (int i = iterate.lo(); i <= iterate.hi(); ++i) {
    const RatPolynomial& p = iterate.at(i);
    if (p.is_zero()) continue;
    const NumberSequence image = l_operator(NumberSequence::coefficient_row(p, 0));
    for (int d = image.lo(); d <= image.hi(); ++d) {
      if (sgn(image.at(d)) < 0) {
        return Witness{Witness::Kind::RowLogConcavity, depth, i, std::nullopt, d, image.at(d)};
      }
    }
  }
  return std::nullopt;
}

enum class Direction { Convex, Concave };

Verdict consecutive_check(const PolySequence& ps, Direction dir) {
  for (int m = ps.lo() + 1; m < ps.hi(); ++m) {
    const RatPolynomial outer = ps.at(m - 1) * ps.at(m + 1);
    const RatPolynomial inner = ps.at(m) * ps.at(m);
    const RatPolynomial diff = dir == Direction::Convex ? outer - inner : inner - outer;
    if (auto w = first_negative_coefficient(diff, 1, m, std::nullopt)) {
      return Verdict::fail(std::move(*w), 1);
    }
  }
  return Verdict::pass(1);
}

Verdict strong_check(const PolySequence& ps, Direction dir) {
  for (int m = ps.lo() + 1; m < ps.hi(); ++m) {
    for (int n = m; n < ps.hi(); ++n) {
      const RatPolynomial outer = ps.at(m - 1) * ps.at(n + 1);
      const RatPolynomial inner = ps.at(m) * ps.at(n);
      const RatPolynomial diff = dir == Direction::Convex ? outer - inner : inner - outer;
      if (auto w = first_negative_coefficient(diff, 0, m, n)) {
        return Verdict::fail(std::move(*w), 0);
      }
    }
  }
  return Verdict::pass(0);
}

}  // namespace

std::string to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::SequenceEntry:
      return "sequence-entry";
    case Witness::Kind::Coefficient:
      return "coefficient";
    case Witness::Kind::RowLogConcavity:
      return "row-log-concavity";
  }
  return "unknown";
}

std::string describe(const Witness& w) {
  std::string out = to_string(w.kind) + " depth=" + std::to_string(w.depth);
  if (w.index) out += " index=" + std::to_string(*w.index);
  if (w.partner) out += " partner=" + std::to_string(*w.partner);
  if (w.degree) out += " degree=" + std::to_string(*w.degree);
  out += " value=" + lcv::to_string(w.value);
  return out;
}

NumberSequence::NumberSequence(int lo, std::vector<ExactRat> values)
    : lo_(lo), values_(std::move(values)) {
  if (values_.empty()) throw WindowError("number sequence window must be nonempty");
}

NumberSequence NumberSequence::from_integers(int lo, const std::vector<ExactInt>& values) {
  return NumberSequence(lo, std::vector<ExactRat>(values.begin(), values.end()));
}

NumberSequence NumberSequence::coefficient_row(const RatPolynomial& p, int lowest) {
  std::vector<ExactRat> row;
  for (int d = lowest; d <= std::max(p.degree(), lowest); ++d) row.push_back(p.coeff(d));
  return NumberSequence(lowest, std::move(row));
}

ExactRat NumberSequence::at(int index) const {
  if (index < lo_ || index > hi()) return ExactRat(0);
  return values_[index - lo_];
}

PolySequence::PolySequence(int lo, std::vector<RatPolynomial> polys)
    : lo_(lo), polys_(std::move(polys)) {
  if (polys_.empty()) throw WindowError("polynomial sequence window must be nonempty");
}

PolySequence PolySequence::from_integer_polys(int lo, const std::vector<IntPolynomial>& polys) {
  std::vector<RatPolynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(to_rational(p));
  return PolySequence(lo, std::move(out));
}

const RatPolynomial& PolySequence::at(int index) const {
  if (index < lo_ || index > hi()) {
    throw ContractError("polynomial index " + std::to_string(index) + " outside window");
  }
  return polys_[index - lo_];
}

NumberSequence l_operator(const NumberSequence& s) {
  std::vector<ExactRat> out;
  out.reserve(s.size());
  for (int i = s.lo(); i <= s.hi(); ++i) {
    const ExactRat a = s.at(i);
    out.push_back(a * a - s.at(i - 1) * s.at(i + 1));
  }
  return NumberSequence(s.lo(), std::move(out));
}

Verdict k_log_concave(const NumberSequence& s, int k) {
  require_depth(k);
  NumberSequence current = s;
  for (int depth = 1; depth <= k; ++depth) {
    current = l_operator(current);
    for (int i = current.lo(); i <= current.hi(); ++i) {
      if (sgn(current.at(i)) < 0) {
        return Verdict::fail(
            Witness{Witness::Kind::SequenceEntry, depth, i, std::nullopt, std::nullopt,
                    current.at(i)},
            depth);
      }
    }
  }
  return Verdict::pass(k);
}

Verdict infinity_log_concave(const NumberSequence& s, int budget) {
  return k_log_concave(s, budget);
}

Verdict q_geq(const RatPolynomial& f, const RatPolynomial& g) {
  if (auto w = first_negative_coefficient(f - g, 0, std::nullopt, std::nullopt)) {
    return Verdict::fail(std::move(*w), 0);
  }
  return Verdict::pass();
}

PolySequence h_operator(const PolySequence& ps) {
  if (ps.size() < 3) {
    throw WindowError("H operator needs a window of at least 3 polynomials");
  }
  std::vector<RatPolynomial> out;
  out.reserve(ps.size() - 2);
  for (int i = ps.lo() + 1; i < ps.hi(); ++i) {
    out.push_back(ps.at(i - 1) * ps.at(i + 1) - ps.at(i) * ps.at(i));
  }
  return PolySequence(ps.lo() + 1, std::move(out));
}

Verdict q_log_convex(const PolySequence& ps) { return consecutive_check(ps, Direction::Convex); }

Verdict q_log_concave_seq(const PolySequence& ps) {
  return consecutive_check(ps, Direction::Concave);
}

Verdict strong_q_log_convex(const PolySequence& ps) { return strong_check(ps, Direction::Convex); }

Verdict strong_q_log_concave(const PolySequence& ps) {
  return strong_check(ps, Direction::Concave);
}

Verdict k_q_log_convex(const PolySequence& ps, int k) {
  require_depth(k);
  require_window_for_depth(ps, k);
  PolySequence current = ps;
  for (int depth = 1; depth <= k; ++depth) {
    current = h_operator(current);
    if (auto w = negative_in_iterate(current, depth)) return Verdict::fail(std::move(*w), depth);
  }
  return Verdict::pass(k);
}

Verdict log_concave_of_order_k(const PolySequence& ps, int k) {
  require_depth(k);
  require_window_for_depth(ps, k);
  PolySequence current = ps;
  for (int depth = 1; depth <= k; ++depth) {
    current = h_operator(current);
    if (auto w = negative_in_iterate(current, depth)) return Verdict::fail(std::move(*w), depth);
  }
  if (auto w = non_log_concave_row(current, k)) return Verdict::fail(std::move(*w), k);
  return Verdict::pass(k);
}

int max_h_depth(std::size_t window_size) {
  return window_size == 0 ? 0 : static_cast<int>((window_size - 1) / 2);
}

Verdict infinity_q_log_convex(const PolySequence& ps, int budget) {
  require_depth(budget);
  const int depth = std::min(budget, max_h_depth(ps.size()));
  if (depth == 0) return Verdict::pass(0);
  return k_q_log_convex(ps, depth);
}

Verdict infinity_order_log_concave(const PolySequence& ps, int budget) {
  require_depth(budget);
  const int reach = std::min(budget, max_h_depth(ps.size()));
  PolySequence current = ps;
  for (int depth = 1; depth <= reach; ++depth) {
    current = h_operator(current);
    if (auto w = negative_in_iterate(current, depth)) return Verdict::fail(std::move(*w), depth);
    if (auto w = non_log_concave_row(current, depth)) return Verdict::fail(std::move(*w), depth);
  }
  return Verdict::pass(reach);
}

}  // namespace lcv
