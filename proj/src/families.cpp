#include "lcv/families.hpp"

#include <memory>
#include <string>

#include "lcv/egf.hpp"
#include "lcv/errors.hpp"

namespace lcv {

namespace {

enum class Kind { Lis, Matching };

// Entry (i, j), 1-based, of the determinant for u_k (Lis) or v_k (Matching).
// Entries do not depend on k, so the k x k matrices are nested.
template <class Series, class Bessel>
Matrix<Series> gessel_matrix(Kind kind, int size, Bessel&& bessel) {
  Matrix<Series> m;
  m.reserve(static_cast<std::size_t>(size));
  for (int i = 1; i <= size; ++i) {
    std::vector<Series> row;
    row.reserve(static_cast<std::size_t>(size));
    for (int j = 1; j <= size; ++j) {
      Series entry = bessel(i - j);
      if (kind == Kind::Matching) entry -= bessel(i + j);
      row.push_back(std::move(entry));
    }
    m.push_back(std::move(row));
  }
  return m;
}

std::string cell_name(Kind kind, int k, int n) {
  return std::string(kind == Kind::Lis ? "u_" : "v_") + std::to_string(k) + "(" +
         std::to_string(n) + ")";
}

ExactInt exact_quotient(const ExactInt& num, const ExactInt& den, Kind kind, int k, int n) {
  ExactInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw ConsistencyError("non-integral extraction for " + cell_name(kind, k, n));
  }
  return q;
}

// counts[k - 1][n] for 1 <= k <= k_max, 0 <= n <= n_max, read off the leading
// principal minors of one k_max x k_max determinant truncated at x^{2 n_max}.
std::vector<std::vector<ExactInt>> determinant_counts(Kind kind, int k_max, int n_max,
                                                      const FamilyOptions& options) {
  const int order = 2 * n_max;
  std::vector<std::vector<ExactInt>> counts(static_cast<std::size_t>(k_max));
  if (k_max == 0) return counts;

  if (options.route == Route::Exponential) {
    auto binomials = std::make_shared<const BinomialTable>(order);
    auto m = gessel_matrix<EgfSeries>(kind, k_max, [&](int i) { return egf_bessel(i, binomials); });
    std::vector<ExactInt> unit(static_cast<std::size_t>(order) + 1);
    unit[0] = 1;
    const auto minors = berkowitz_leading_minors(m, EgfSeries(binomials),
                                                 EgfSeries(binomials, unit), options.jobs);
    for (int k = 1; k <= k_max; ++k) {
      for (int n = 0; n <= n_max; ++n) {
        const ExactInt& e = minors[k].egf_coefficient(2 * n);
        // Lis: n!^2 [x^{2n}] = e_{2n} / C(2n, n); Matching: (2n)! [x^{2n}] = e_{2n}.
        counts[k - 1].push_back(kind == Kind::Lis
                                    ? exact_quotient(e, (*binomials)(2 * n, n), kind, k, n)
                                    : e);
      }
    }
    return counts;
  }

  auto m = gessel_matrix<TruncatedSeries>(kind, k_max,
                                          [&](int i) { return bessel_series(i, order); });
  const auto minors = berkowitz_leading_minors(
      m, TruncatedSeries(order), TruncatedSeries::constant(order, ExactRat(1)), options.jobs);
  for (int k = 1; k <= k_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const ExactInt fact = factorial(n);
      const ExactInt scale = kind == Kind::Lis ? ExactInt(fact * fact) : matching_normalization(n);
      const ExactRat value = minors[k].coefficient(2 * n) * scale;
      if (!is_integer(value)) {
        throw ConsistencyError("non-integral extraction for " + cell_name(kind, k, n));
      }
      counts[k - 1].push_back(value.get_num());
    }
  }
  return counts;
}

ExactInt saturated_count(Kind kind, int n) {
  return kind == Kind::Lis ? factorial(n) : double_factorial_odd(n);
}

void check_domain(int k, int n) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (n < 0) throw DomainError("n must be nonnegative");
}

ExactInt single_count(Kind kind, int k, int n, const FamilyOptions& options) {
  check_domain(k, n);
  return determinant_counts(kind, k, n, options).back()[n];
}

CountTable count_table(Kind kind, int n_max, const FamilyOptions& options) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  CountTable table(static_cast<std::size_t>(n_max) + 1);
  table[0].assign(static_cast<std::size_t>(n_max) + 1, ExactInt(0));
  table[0][0] = 1;

  // For k >= n_max every cell is saturated, so only k < n_max needs a determinant.
  const int k_max = n_max > 0 ? n_max - 1 : 0;
  auto counts = determinant_counts(kind, k_max, n_max, options);
  for (int k = 1; k <= n_max; ++k) {
    if (k <= k_max) {
      table[k] = std::move(counts[k - 1]);
    } else {
      for (int n = 0; n <= n_max; ++n) table[k].push_back(saturated_count(kind, n));
    }
  }

  for (int k = 1; k <= n_max; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const ExactInt& value = table[k][n];
      if (value <= 0) {
        throw ConsistencyError(cell_name(kind, k, n) + " is not positive");
      }
      if (value < table[k - 1][n]) {
        throw ConsistencyError(cell_name(kind, k, n) + " decreases in k");
      }
      if (k >= n && value != saturated_count(kind, n)) {
        throw ConsistencyError(cell_name(kind, k, n) + " does not saturate for k >= n");
      }
    }
  }
  return table;
}

IntPolynomial row_polynomial(Kind kind, const CountTable& table, int n) {
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    coeffs[k] = table[k][n] - table[k - 1][n];
    if (coeffs[k] <= 0) {
      throw ConsistencyError(std::string(kind == Kind::Lis ? "P_" : "M_") +
                             std::to_string(kind == Kind::Lis ? n : 2 * n) +
                             " has a non-positive coefficient at x^" + std::to_string(k));
    }
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<IntPolynomial> family_rows(Kind kind, int n_max, const FamilyOptions& options) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const CountTable table = count_table(kind, n_max, options);
  std::vector<IntPolynomial> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) rows.push_back(row_polynomial(kind, table, n));
  return rows;
}

}  // namespace

std::string_view family_name(FamilyId family) {
  switch (family) {
    case FamilyId::Lis:
      return "lis";
    case FamilyId::Matching:
      return "matching";
    case FamilyId::BorosMoll:
      return "boros-moll";
  }
  return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  if (name == "lis") return FamilyId::Lis;
  if (name == "matching") return FamilyId::Matching;
  if (name == "boros-moll") return FamilyId::BorosMoll;
  return std::nullopt;
}

int default_cap(FamilyId family) {
  switch (family) {
    case FamilyId::Lis:
      return kLisCap;
    case FamilyId::Matching:
      return kMatchingCap;
    case FamilyId::BorosMoll:
      return kBorosMollCap;
  }
  return 0;
}

ExactInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  ExactInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

ExactInt double_factorial_odd(int n) {
  if (n < 0) throw DomainError("double factorial of a negative number");
  ExactInt f = 1;
  for (int j = 1; j <= 2 * n - 1; j += 2) f *= j;
  return f;
}

ExactInt binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  ExactInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

ExactInt catalan(int n) {
  if (n < 0) throw DomainError("catalan of a negative number");
  return binomial(2 * n, n) / (n + 1);
}

TruncatedSeries lis_determinant(int k, int order) {
  if (k < 1) throw DomainError("k must be at least 1");
  auto m = gessel_matrix<TruncatedSeries>(Kind::Lis, k,
                                          [&](int i) { return bessel_series(i, order); });
  return series_determinant(m);
}

TruncatedSeries matching_determinant(int k, int order) {
  if (k < 1) throw DomainError("k must be at least 1");
  auto m = gessel_matrix<TruncatedSeries>(Kind::Matching, k,
                                          [&](int i) { return bessel_series(i, order); });
  return series_determinant(m);
}

ExactInt matching_normalization(int n) { return factorial(2 * n); }

ExactInt u_count(int k, int n, const FamilyOptions& options) {
  return single_count(Kind::Lis, k, n, options);
}

ExactInt v_count(int k, int n, const FamilyOptions& options) {
  return single_count(Kind::Matching, k, n, options);
}

CountTable u_table(int n_max, const FamilyOptions& options) {
  return count_table(Kind::Lis, n_max, options);
}

CountTable v_table(int n_max, const FamilyOptions& options) {
  return count_table(Kind::Matching, n_max, options);
}

IntPolynomial p_polynomial(int n, const FamilyOptions& options) {
  if (n < 1) throw DomainError("P_n needs n >= 1");
  return row_polynomial(Kind::Lis, count_table(Kind::Lis, n, options), n);
}

IntPolynomial m_polynomial(int n, const FamilyOptions& options) {
  if (n < 1) throw DomainError("M_{2n} needs n >= 1");
  return row_polynomial(Kind::Matching, count_table(Kind::Matching, n, options), n);
}

std::vector<IntPolynomial> lis_polynomials(int n_max, const FamilyOptions& options) {
  return family_rows(Kind::Lis, n_max, options);
}

std::vector<IntPolynomial> matching_polynomials(int n_max, const FamilyOptions& options) {
  return family_rows(Kind::Matching, n_max, options);
}

ExactRat boros_moll_coeff(int i, int n) {
  if (n < 0 || i < 0 || i > n) {
    throw DomainError("Boros-Moll coefficient d_" + std::to_string(i) + "(" + std::to_string(n) +
                      ") needs 0 <= i <= n");
  }
  ExactInt sum = 0;
  for (int k = i; k <= n; ++k) {
    ExactInt term = binomial(2 * n - 2 * k, n - k) * binomial(n + k, k) * binomial(k, i);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k));
    sum += term;
  }
  ExactInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(2 * n));
  return make_rat(sum, den);
}

RatPolynomial boros_moll_polynomial(int n) {
  if (n < 0) throw DomainError("Boros-Moll P_n needs n >= 0");
  std::vector<ExactRat> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) coeffs.push_back(boros_moll_coeff(i, n));
  return RatPolynomial(std::move(coeffs));
}

std::vector<RatPolynomial> boros_moll_polynomials(int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  std::vector<RatPolynomial> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(boros_moll_polynomial(n));
  return out;
}

}  // namespace lcv
