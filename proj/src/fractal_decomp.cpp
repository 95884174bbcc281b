#include "hilfrac/fractal_decomp.hpp"

#include "hilfrac/binomial.hpp"

namespace hilfrac {

namespace {

// Largest k >= t - 1 with C(k, t) < bound, for bound >= 1 and t >= 2.
BigInt largest_top_below(const BigInt& bound, std::size_t t) {
  BigInt lo = t - 1;  // C(t-1, t) = 0 < bound
  BigInt step = 1;
  while (binomial(lo + step, t) < bound) {
    lo += step;
    step *= 2;
  }
  BigInt hi = lo + step;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, t) < bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

FractalDecomposition fractal_decompose(const BigInt& a, std::size_t d) {
  if (a < 1) throw InvalidArgument("fractal_decompose: a must be positive");
  if (d < 1) throw InvalidArgument("fractal_decompose: d must be positive");
  FractalDecomposition out{a, d, {}, {}};
  out.ks.reserve(d);
  out.coeffs.reserve(d);
  BigInt rest = a;
  for (std::size_t t = d; t >= 2; --t) {
    BigInt k = largest_top_below(rest, t);
    rest -= binomial(k, t);
    out.coeffs.push_back(k - t + 2);
    out.ks.push_back(std::move(k));
  }
  // rest >= 1 here because every step kept C(k, t) < rest.
  out.coeffs.push_back(rest);
  out.ks.push_back(std::move(rest));
  return out;
}

std::strong_ordering compare_by_coeffs(const BigInt& a, const BigInt& b, std::size_t d) {
  const auto ca = fractal_decompose(a, d).coeffs;
  const auto cb = fractal_decompose(b, d).coeffs;
  for (std::size_t t = 0; t < d; ++t) {
    if (ca[t] < cb[t]) return std::strong_ordering::less;
    if (ca[t] > cb[t]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<BigInt> growth_coeffs(const BigInt& a, std::size_t d) {
  auto coeffs = fractal_decompose(a, d).coeffs;
  coeffs.push_back(coeffs.back());
  return coeffs;
}

BigInt prefix_sum(const BigInt& a, std::size_t d) {
  if (a == 0) return 0;
  const auto dec = fractal_decompose(a, d);
  BigInt sum = 0;
  for (std::size_t pos = 0; pos < d; ++pos) {
    const std::size_t t = d - pos;
    sum += binomial(dec.ks[pos] + 1, t + 1);
  }
  return sum;
}

}  // namespace hilfrac
