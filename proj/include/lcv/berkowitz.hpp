#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lcv/errors.hpp"
#include "lcv/parallel.hpp"

namespace lcv {

template <class Ring>
using Matrix = std::vector<std::vector<Ring>>;

namespace detail {

// Rings may provide a fused `multiply_add(acc, a, b)` found by ADL; otherwise
// fall back to `acc += a * b`.
template <class Ring>
void accumulate_product(Ring& acc, const Ring& a, const Ring& b) {
  if constexpr (requires { multiply_add(acc, a, b); }) {
    multiply_add(acc, a, b);
  } else {
    acc += a * b;
  }
}

}  // namespace detail

/// Leading principal minors det(A_1), ..., det(A_k) of a square matrix over a
/// commutative ring, without any division; element 0 of the result is `one`.
///
/// Berkowitz's algorithm: the characteristic polynomial of A_{r+1} is obtained
/// from that of A_r by multiplying with a lower-triangular Toeplitz matrix whose
/// first column is (1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C), where R and
/// C are the new row and column. O(k^4) ring products. Every intermediate
/// characteristic polynomial yields one leading minor for free.
///
/// `zero` and `one` supply the ring identities (series rings need them to
/// carry their truncation order). With jobs > 1 the matrix-vector products are
/// split by row across threads; results do not depend on `jobs`.
template <class Ring>
std::vector<Ring> berkowitz_leading_minors(const Matrix<Ring>& a, const Ring& zero,
                                           const Ring& one, int jobs = 1) {
  const std::size_t k = a.size();
  for (const auto& row : a) {
    if (row.size() != k) {
      throw ContractError("determinant requires a square matrix");
    }
  }
  std::vector<Ring> minors{one};
  if (k == 0) {
    return minors;
  }
  minors.reserve(k + 1);
  minors.push_back(a[0][0]);

  // Coefficients of det(x I - A_r), leading coefficient first.
  std::vector<Ring> charpoly{one, -a[0][0]};
  for (std::size_t r = 1; r < k; ++r) {
    std::vector<Ring> column(r, zero);
    for (std::size_t i = 0; i < r; ++i) {
      column[i] = a[i][r];
    }

    std::vector<Ring> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.push_back(one);
    toeplitz.push_back(-a[r][r]);
    for (std::size_t power = 0; power < r; ++power) {
      Ring dot = zero;
      for (std::size_t j = 0; j < r; ++j) {
        detail::accumulate_product(dot, a[r][j], column[j]);
      }
      toeplitz.push_back(-dot);
      if (power + 1 < r) {
        std::vector<Ring> next(r, zero);
        parallel_for(r, jobs, [&](std::size_t i) {
          for (std::size_t j = 0; j < r; ++j) {
            detail::accumulate_product(next[i], a[i][j], column[j]);
          }
        });
        column = std::move(next);
      }
    }

    std::vector<Ring> next_poly(r + 2, zero);
    parallel_for(r + 2, jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j <= i && j <= r; ++j) {
        if (i == j) {
          next_poly[i] += charpoly[j];  // toeplitz[0] is one
        } else {
          detail::accumulate_product(next_poly[i], toeplitz[i - j], charpoly[j]);
        }
      }
    });
    charpoly = std::move(next_poly);

    // det(A_{r+1}) = (-1)^{r+1} * charpoly(0)
    minors.push_back(r % 2 == 0 ? -charpoly[r + 1] : charpoly[r + 1]);
  }
  return minors;
}

template <class Ring>
Ring berkowitz_determinant(const Matrix<Ring>& a, const Ring& zero, const Ring& one,
                           int jobs = 1) {
  return std::move(berkowitz_leading_minors(a, zero, one, jobs).back());
}

}  // namespace lcv
