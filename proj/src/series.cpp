#include "lcv/series.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "lcv/errors.hpp"

namespace lcv {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw ContractError("truncation order mismatch: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
  }
}

ExactInt factorial_int(int n) {
  ExactInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) {
    throw ContractError("truncation order must be nonnegative");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<ExactRat> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (order < 0 || coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw ContractError("series of order " + std::to_string(order) + " needs exactly " +
                        std::to_string(order + 1) + " coefficients");
  }
}

TruncatedSeries TruncatedSeries::constant(int order, const ExactRat& c) {
  return monomial(order, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const ExactRat& c) {
  TruncatedSeries s(order);
  if (degree < 0) {
    throw ContractError("negative degree");
  }
  if (degree <= order) {
    s.coeffs_[degree] = c;
  }
  return s;
}

const ExactRat& TruncatedSeries::coefficient(int degree) const {
  if (degree < 0 || degree > order()) {
    throw ContractError("coefficient of x^" + std::to_string(degree) +
                        " requested from a series truncated at order " + std::to_string(order()));
  }
  return coeffs_[degree];
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) {
    mpq_neg(c.get_mpq_t(), c.get_mpq_t());
  }
  return r;
}

void multiply_add(TruncatedSeries& acc, const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(acc, a);
  require_same_order(acc, b);
  const int order = acc.order();
  ExactRat term;
  for (int i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      acc.coeffs_[i + j] += term;
    }
  }
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries product(a.order());
  multiply_add(product, a, b);
  return product;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  *this = *this * other;
  return *this;
}

TruncatedSeries bessel_series(int i, int order) {
  TruncatedSeries s(order);
  std::vector<ExactRat> coeffs(static_cast<std::size_t>(order) + 1);
  const int shift = std::abs(i);
  // x^{2n+i}/(n!(n+i)!); for negative i the first |i| terms vanish and the
  // survivors reindex onto the i > 0 series.
  for (int n = 0; 2 * n + shift <= order; ++n) {
    coeffs[2 * n + shift] = make_rat(1, factorial_int(n) * factorial_int(n + shift));
  }
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries series_determinant(const SeriesMatrix& m, int order) {
  for (const auto& row : m) {
    for (const auto& entry : row) {
      if (entry.order() != order) {
        throw ContractError("determinant entries must share one truncation order");
      }
    }
  }
  return berkowitz_determinant(m, TruncatedSeries(order),
                               TruncatedSeries::constant(order, ExactRat(1)));
}

TruncatedSeries series_determinant(const SeriesMatrix& m) {
  if (m.empty()) {
    throw ContractError("empty matrix: truncation order is undetermined");
  }
  if (m[0].empty()) {
    throw ContractError("determinant requires a square matrix");
  }
  return series_determinant(m, m[0][0].order());
}

}  // namespace lcv
