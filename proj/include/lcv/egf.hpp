#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lcv/berkowitz.hpp"
#include "lcv/exact.hpp"
#include "lcv/series.hpp"

namespace lcv {

/// Pascal triangle rows 0..order, shared read-only between series.
class BinomialTable {
 public:
  explicit BinomialTable(int order);
  int order() const { return static_cast<int>(rows_.size()) - 1; }
  const ExactInt& operator()(int n, int k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<ExactInt>> rows_;
};

/// Integer fast path for the determinant pipeline.
///
/// A truncated series s is stored through its exponential coefficients
/// e_m = m! [x^m] s. Under this map the Cauchy product becomes the binomial
/// convolution c_m = sum_i C(m,i) a_i b_{m-i}, and every Bessel generator
/// I_i(2x) has integer exponential coefficients C(m, n) with m = 2n + i. The
/// whole determinant therefore stays in the integers.
class EgfSeries {
 public:
  explicit EgfSeries(std::shared_ptr<const BinomialTable> binomials);
  EgfSeries(std::shared_ptr<const BinomialTable> binomials, std::vector<ExactInt> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// m! times the ordinary coefficient of x^m.
  const ExactInt& egf_coefficient(int degree) const;
  std::span<const ExactInt> egf_coeffs() const { return coeffs_; }

  EgfSeries& operator+=(const EgfSeries& other);
  EgfSeries& operator-=(const EgfSeries& other);
  EgfSeries operator-() const;

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);
  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend void multiply_add(EgfSeries& acc, const EgfSeries& a, const EgfSeries& b);

  /// Back to ordinary rational coefficients.
  TruncatedSeries to_series() const;
  static EgfSeries from_series(std::shared_ptr<const BinomialTable> binomials,
                               const TruncatedSeries& s);

 private:
  void require_same_order(const EgfSeries& other) const;

  std::shared_ptr<const BinomialTable> binomials_;
  std::vector<ExactInt> coeffs_;
};

/// Exponential-coefficient form of bessel_series(i, order).
EgfSeries egf_bessel(int i, const std::shared_ptr<const BinomialTable>& binomials);

EgfSeries egf_determinant(const Matrix<EgfSeries>& m,
                          const std::shared_ptr<const BinomialTable>& binomials);

}  // namespace lcv
