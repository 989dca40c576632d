#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "lcv/exact.hpp"

namespace lcv {

/// Dense univariate polynomial, coeffs()[d] is the coefficient of x^d.
/// Trailing zeros are trimmed so the leading coefficient is nonzero unless the
/// polynomial is zero (degree -1).
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int degree, const Coeff& c) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  /// Zero outside 0..degree.
  Coeff coeff(int d) const {
    if (d < 0 || d > degree()) return Coeff(0);
    return coeffs_[d];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<ExactInt>;
using RatPolynomial = Polynomial<ExactRat>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<ExactRat> c(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(c));
}

/// Human-readable form in x, e.g. "x + 4x^2 + x^3"; coefficients print as
/// decimal integers or num/den.
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p, char var = 'x') {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    const Coeff& c = p.coeffs()[d];
    if (sgn(c) == 0) continue;
    Coeff mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const std::string m = mag.get_str();
    if (d == 0) {
      out += m;
      continue;
    }
    if (m != "1") out += m;
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace lcv
