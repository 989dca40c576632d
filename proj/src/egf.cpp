#include "lcv/egf.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "lcv/errors.hpp"

namespace lcv {

BinomialTable::BinomialTable(int order) {
  if (order < 0) {
    throw ContractError("truncation order must be nonnegative");
  }
  rows_.resize(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    rows_[n].resize(static_cast<std::size_t>(n) + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (int k = 1; k < n; ++k) {
      rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
}

EgfSeries::EgfSeries(std::shared_ptr<const BinomialTable> binomials)
    : binomials_(std::move(binomials)) {
  coeffs_.resize(static_cast<std::size_t>(binomials_->order()) + 1);
}

EgfSeries::EgfSeries(std::shared_ptr<const BinomialTable> binomials, std::vector<ExactInt> coeffs)
    : binomials_(std::move(binomials)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(binomials_->order()) + 1) {
    throw ContractError("coefficient count does not match the binomial table order");
  }
}

const ExactInt& EgfSeries::egf_coefficient(int degree) const {
  if (degree < 0 || degree > order()) {
    throw ContractError("coefficient of x^" + std::to_string(degree) +
                        " requested from a series truncated at order " + std::to_string(order()));
  }
  return coeffs_[degree];
}

void EgfSeries::require_same_order(const EgfSeries& other) const {
  if (order() != other.order()) {
    throw ContractError("truncation order mismatch: " + std::to_string(order()) + " vs " +
                        std::to_string(other.order()));
  }
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

EgfSeries& EgfSeries::operator-=(const EgfSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  return *this;
}

EgfSeries EgfSeries::operator-() const {
  EgfSeries r(*this);
  for (auto& c : r.coeffs_) {
    mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

void multiply_add(EgfSeries& acc, const EgfSeries& a, const EgfSeries& b) {
  acc.require_same_order(a);
  acc.require_same_order(b);
  const int order = acc.order();
  const BinomialTable& binom = *acc.binomials_;
  ExactInt term;
  for (int i = 0; i <= order; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpz_mul(term.get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      mpz_addmul(acc.coeffs_[i + j].get_mpz_t(), binom(i + j, i).get_mpz_t(), term.get_mpz_t());
    }
  }
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
  a.require_same_order(b);
  EgfSeries product(a.binomials_);
  multiply_add(product, a, b);
  return product;
}

TruncatedSeries EgfSeries::to_series() const {
  std::vector<ExactRat> coeffs(coeffs_.size());
  ExactInt fact = 1;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    coeffs[m] = make_rat(coeffs_[m], fact);
  }
  return TruncatedSeries(order(), std::move(coeffs));
}

EgfSeries EgfSeries::from_series(std::shared_ptr<const BinomialTable> binomials,
                                 const TruncatedSeries& s) {
  if (s.order() != binomials->order()) {
    throw ContractError("truncation order mismatch converting to exponential form");
  }
  std::vector<ExactInt> coeffs(s.coeffs().size());
  ExactInt fact = 1;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    const ExactRat scaled = s.coeffs()[m] * fact;
    if (!is_integer(scaled)) {
      throw DomainError("series has a non-integral exponential coefficient at x^" +
                        std::to_string(m));
    }
    coeffs[m] = scaled.get_num();
  }
  return EgfSeries(std::move(binomials), std::move(coeffs));
}

EgfSeries egf_bessel(int i, const std::shared_ptr<const BinomialTable>& binomials) {
  const int order = binomials->order();
  const int shift = std::abs(i);
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(order) + 1);
  // m! / (n! (n+|i|)!) = C(m, n) with m = 2n + |i|.
  for (int n = 0; 2 * n + shift <= order; ++n) {
    coeffs[2 * n + shift] = (*binomials)(2 * n + shift, n);
  }
  return EgfSeries(binomials, std::move(coeffs));
}

EgfSeries egf_determinant(const Matrix<EgfSeries>& m,
                          const std::shared_ptr<const BinomialTable>& binomials) {
  for (const auto& row : m) {
    for (const auto& entry : row) {
      if (entry.order() != binomials->order()) {
        throw ContractError("determinant entries must share one truncation order");
      }
    }
  }
  std::vector<ExactInt> unit(static_cast<std::size_t>(binomials->order()) + 1);
  unit[0] = 1;
  return berkowitz_determinant(m, EgfSeries(binomials), EgfSeries(binomials, std::move(unit)));
}

}  // namespace lcv
