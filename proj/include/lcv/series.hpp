#pragma once

#include <span>
#include <vector>

#include "lcv/berkowitz.hpp"
#include "lcv/exact.hpp"

namespace lcv {

/// Formal power series over the rationals, truncated after x^order.
///
/// Binary operations require both operands to carry the same order and throw
/// ContractError otherwise.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);
  /// `coeffs` must hold exactly order + 1 entries.
  TruncatedSeries(int order, std::vector<ExactRat> coeffs);

  static TruncatedSeries constant(int order, const ExactRat& c);
  static TruncatedSeries monomial(int order, int degree, const ExactRat& c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const ExactRat> coeffs() const { return coeffs_; }
  /// Checked access; throws ContractError when degree is outside 0..order.
  const ExactRat& coefficient(int degree) const;
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// acc += a * b (truncated), without materializing the product.
  friend void multiply_add(TruncatedSeries& acc, const TruncatedSeries& a,
                           const TruncatedSeries& b);

 private:
  std::vector<ExactRat> coeffs_;
};

using SeriesMatrix = Matrix<TruncatedSeries>;

/// Exact coefficient of x^degree; throws ContractError past the truncation order.
inline const ExactRat& coefficient(const TruncatedSeries& s, int degree) {
  return s.coefficient(degree);
}

/// I_i(2x) = sum_{n>=0} x^{2n+i} / (n! (n+i)!) truncated at `order`, with
/// 1/m! = 0 for m < 0, so bessel_series(-i, D) == bessel_series(i, D).
TruncatedSeries bessel_series(int i, int order);

/// Determinant over the truncated-series ring, computed division-free.
/// All entries must share one truncation order. The empty matrix has det 1
/// and needs the order supplied explicitly.
TruncatedSeries series_determinant(const SeriesMatrix& m);
TruncatedSeries series_determinant(const SeriesMatrix& m, int order);

}  // namespace lcv
