#include "hilfrac/binomial.hpp"

#include <string>

namespace hilfrac {

BigInt binomial(const BigInt& n, std::size_t k) {
  if (n < k) return 0;
  // Use the shorter of the two product chains.
  const BigInt n_minus_k = n - k;
  if (n_minus_k < k) {
    const std::size_t kk = static_cast<std::size_t>(n_minus_k);
    return binomial(n, kk);
  }
  BigInt result = 1;
  for (std::size_t t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;  // exact: result holds C(n-k+t, t)
  }
  return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
  return binomial(BigInt(n), k);
}

BigInt MacaulayExpansion::value() const {
  BigInt sum = 0;
  for (const auto& term : terms) sum += binomial(term.top, term.index);
  return sum;
}

namespace {

// Largest m with C(m, t) <= bound, for bound >= 1 (so m >= t).
BigInt largest_top_not_above(const BigInt& bound, std::size_t t) {
  BigInt lo = t;
  BigInt step = 1;
  while (binomial(lo + step, t) <= bound) {
    lo += step;
    step *= 2;
  }
  // C(lo, t) <= bound < C(lo + step, t)
  BigInt hi = lo + step;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, t) <= bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

MacaulayExpansion macaulay_expansion(const BigInt& h, std::size_t i) {
  if (h <= 0) throw InvalidArgument("macaulay_expansion: h must be positive");
  if (i == 0) throw InvalidArgument("macaulay_expansion: degree must be positive");
  MacaulayExpansion out{h, i, {}};
  BigInt rest = h;
  for (std::size_t t = i; t >= 1 && rest > 0; --t) {
    BigInt top = largest_top_not_above(rest, t);
    rest -= binomial(top, t);
    out.terms.push_back({std::move(top), t});
  }
  if (rest != 0) {
    throw ConsistencyError("macaulay_expansion: remainder " + rest.str());
  }
  return out;
}

BigInt macaulay_upper(const BigInt& h, std::size_t i) {
  if (h == 0) return 0;
  BigInt sum = 0;
  for (const auto& term : macaulay_expansion(h, i).terms) {
    sum += binomial(term.top + 1, term.index + 1);
  }
  return sum;
}

OSequenceVerdict is_o_sequence(std::span<const BigInt> values) {
  for (const auto& v : values) {
    if (v < 0) throw InvalidArgument("is_o_sequence: negative entry " + v.str());
  }
  if (values.empty() || values[0] != 1) return {false, 0, std::nullopt};
  for (std::size_t d = 1; d + 1 < values.size(); ++d) {
    BigInt bound = macaulay_upper(values[d], d);
    if (values[d + 1] > bound) return {false, d + 1, std::move(bound)};
  }
  return {};
}

}  // namespace hilfrac
