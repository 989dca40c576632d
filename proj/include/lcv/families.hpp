#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lcv/exact.hpp"
#include "lcv/polynomial.hpp"
#include "lcv/series.hpp"

namespace lcv {

enum class FamilyId { Lis, Matching, BorosMoll };

std::string_view family_name(FamilyId family);
std::optional<FamilyId> parse_family(std::string_view name);

/// Default size caps; larger sizes need an explicit override.
inline constexpr int kLisCap = 24;
inline constexpr int kMatchingCap = 20;
inline constexpr int kBorosMollCap = 100;
int default_cap(FamilyId family);

/// Which arithmetic backs the series determinants. `Rational` is the reference
/// route over TruncatedSeries; `Exponential` is the integer EGF fast path.
/// Both give identical counts.
enum class Route { Exponential, Rational };

struct FamilyOptions {
  Route route = Route::Rational;
  int jobs = 1;
};

ExactInt factorial(int n);
/// (2n-1)!! = 1 * 3 * ... * (2n-1); equals 1 for n = 0.
ExactInt double_factorial_odd(int n);
/// Zero when k < 0 or k > n.
ExactInt binomial(int n, int k);
ExactInt catalan(int n);

/// det(I_{i-j}(2x))_{i,j=1..k} truncated at `order`.
TruncatedSeries lis_determinant(int k, int order);
/// det(I_{i-j}(2x) - I_{i+j}(2x))_{i,j=1..k} truncated at `order`.
TruncatedSeries matching_determinant(int k, int order);

/// Factor c_n with v_k(n) = c_n [x^{2n}] det(I_{i-j}(2x) - I_{i+j}(2x)).
/// The exponential normalization x^{2n}/(2n)! is the one that sends k = 1 to
/// the Catalan numbers, so c_n = (2n)!.
ExactInt matching_normalization(int n);

/// u_k(n): permutations of [n] whose longest increasing subsequence is <= k.
ExactInt u_count(int k, int n, const FamilyOptions& options = {});
/// v_k(n): matchings on [2n] with crossing number <= k.
ExactInt v_count(int k, int n, const FamilyOptions& options = {});

/// table[k][n] for 0 <= k, n <= n_max, with row k = 0 following u_0(0) = 1,
/// u_0(n) = 0 (same for v).
using CountTable = std::vector<std::vector<ExactInt>>;
CountTable u_table(int n_max, const FamilyOptions& options = {});
CountTable v_table(int n_max, const FamilyOptions& options = {});

/// P_n(x) = sum_k P_{n,k} x^k with P_{n,k} = u_k(n) - u_{k-1}(n).
IntPolynomial p_polynomial(int n, const FamilyOptions& options = {});
/// M_{2n}(x) = sum_k M_{2n,k} x^k with M_{2n,k} = v_k(n) - v_{k-1}(n).
IntPolynomial m_polynomial(int n, const FamilyOptions& options = {});

/// P_1 .. P_{n_max} (element 0 is P_1) from a single determinant pass.
std::vector<IntPolynomial> lis_polynomials(int n_max, const FamilyOptions& options = {});
/// M_2 .. M_{2 n_max} (element 0 is M_2).
std::vector<IntPolynomial> matching_polynomials(int n_max, const FamilyOptions& options = {});

/// Boros-Moll coefficient
///   d_i(n) = 2^{-2n} sum_{k=i}^{n} 2^k C(2n-2k, n-k) C(n+k, k) C(k, i).
/// Throws DomainError unless 0 <= i <= n.
ExactRat boros_moll_coeff(int i, int n);
RatPolynomial boros_moll_polynomial(int n);
/// P_0 .. P_{n_max} (element 0 is P_0).
std::vector<RatPolynomial> boros_moll_polynomials(int n_max);

}  // namespace lcv
