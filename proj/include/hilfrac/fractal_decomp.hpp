#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hilfrac/bigint.hpp"

namespace hilfrac {

/// The d-fractal decomposition a = C(k_d, d) + ... + C(k_2, 2) + C(k_1, 1)
/// with k_d > k_{d-1} > ... > k_2 >= k_1 >= 1. Unlike the Macaulay expansion,
/// leading binomials may vanish (k_t = t - 1).
///
/// Both vectors are stored highest degree first: ks[0] = k_d, ks[d-1] = k_1.
/// coeffs are the shifted values c_t = k_t - t + 2 (t >= 2), c_1 = k_1; they
/// read as a weakly decreasing list of positive integers and name the
/// variables of the a-th degree-d monomial.
struct FractalDecomposition {
  BigInt a;
  std::size_t d = 0;
  std::vector<BigInt> ks;
  std::vector<BigInt> coeffs;

  /// k_1, the last coefficient.
  const BigInt& last() const { return coeffs.back(); }
};

/// Throws InvalidArgument unless a >= 1 and d >= 1.
FractalDecomposition fractal_decompose(const BigInt& a, std::size_t d);

/// Lexicographic comparison of the d-fractal coefficient vectors of a and b.
/// Always agrees with comparing a and b as integers.
std::strong_ordering compare_by_coeffs(const BigInt& a, const BigInt& b, std::size_t d);

/// The (d+1)-fractal coefficients of a^<d>, obtained by repeating c_1.
std::vector<BigInt> growth_coeffs(const BigInt& a, std::size_t d);

/// Sum of the first a entries of [n]^d for any n with a <= |[n]^d|,
/// computed as sum_t C(k_t + 1, t + 1) over the d-fractal decomposition.
/// prefix_sum(0, d) = 0. Requires d >= 1: level 0 is (n) and depends on n.
BigInt prefix_sum(const BigInt& a, std::size_t d);

}  // namespace hilfrac
