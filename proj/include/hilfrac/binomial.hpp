#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hilfrac/bigint.hpp"

namespace hilfrac {

/// C(n, k), zero whenever n < k.
BigInt binomial(std::size_t n, std::size_t k);
BigInt binomial(const BigInt& n, std::size_t k);

/// One summand C(top, index) of an i-binomial expansion.
struct BinomialTerm {
  BigInt top;
  std::size_t index = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The unique greedy expansion h = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j)
/// with m_i > m_{i-1} > ... > m_j >= j >= 1.
struct MacaulayExpansion {
  BigInt h;
  std::size_t degree = 0;
  std::vector<BinomialTerm> terms;  // strictly decreasing index

  BigInt value() const;
};

/// Throws InvalidArgument for h == 0 or i == 0.
MacaulayExpansion macaulay_expansion(const BigInt& h, std::size_t i);

/// h^<i>: every term of the i-binomial expansion shifted up by one. 0^<i> = 0.
BigInt macaulay_upper(const BigInt& h, std::size_t i);

struct OSequenceVerdict {
  bool accepted = true;
  /// First violating index. Only meaningful when rejected.
  std::size_t index = 0;
  /// h_{index-1}^<index-1>; absent for rejections at index 0 (h_0 != 1).
  std::optional<BigInt> bound;

  explicit operator bool() const { return accepted; }
};

/// Finite-prefix Macaulay check: h_0 = 1 and h_{d+1} <= h_d^<d> for d >= 1.
/// Negative entries throw InvalidArgument.
OSequenceVerdict is_o_sequence(std::span<const BigInt> values);

}  // namespace hilfrac
