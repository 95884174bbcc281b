#include <doctest.h>

#include <vector>

#include "hilfrac/binomial.hpp"
#include "oracles.hpp"

using hilfrac::BigInt;
using hilfrac::binomial;
using hilfrac::is_o_sequence;
using hilfrac::macaulay_expansion;
using hilfrac::macaulay_upper;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> pairs(const hilfrac::MacaulayExpansion& e) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& t : e.terms) out.emplace_back(static_cast<std::size_t>(t.top), t.index);
  return out;
}

std::vector<BigInt> seq(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("binomial small values and the a < b convention") {
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
}

TEST_CASE("binomial agrees with Pascal's triangle") {
  CHECK(binomial(40, 20) == oracle::choose(40, 20));
  CHECK(oracle::choose(40, 20) == BigInt("137846528820"));
  for (std::size_t n = 0; n <= 70; ++n) {
    for (std::size_t k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
  }
}

TEST_CASE("binomial does not wrap past 64 bits") {
  // C(100, 50) = 100891344545564193334812497256
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(binomial(BigInt("1000000000000000000000"), 2) ==
        BigInt("499999999999999999999500000000000000000000"));
}

TEST_CASE("macaulay_expansion worked examples") {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(pairs(macaulay_expansion(7, 3)) == P{{4, 3}, {3, 2}});
  for (std::size_t d = 1; d <= 6; ++d) CHECK(pairs(macaulay_expansion(1, d)) == P{{d, d}});
  // 9 = C(5,4) + C(4,3); the brute-force enumeration confirms it is the only one.
  CHECK(pairs(macaulay_expansion(9, 4)) == P{{5, 4}, {4, 3}});
  const auto all = oracle::macaulay_expansions(9, 4);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == P{{5, 4}, {4, 3}});
}

TEST_CASE("macaulay_expansion rejects h = 0 and i = 0") {
  CHECK_THROWS_AS(macaulay_expansion(0, 3), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(macaulay_expansion(5, 0), hilfrac::InvalidArgument);
}

TEST_CASE("macaulay_expansion is the unique expansion (brute force)") {
  for (std::size_t h = 1; h <= 100; ++h) {
    for (std::size_t i = 1; i <= 4; ++i) {
      const auto all = oracle::macaulay_expansions(h, i);
      REQUIRE(all.size() == 1);
      CHECK(pairs(macaulay_expansion(h, i)) == all[0]);
    }
  }
}

TEST_CASE("macaulay_expansion invariants on a grid") {
  for (std::size_t h = 1; h <= 10000; h += (h < 300 ? 1 : 37)) {
    for (std::size_t i = 1; i <= 10; ++i) {
      const auto e = macaulay_expansion(h, i);
      CHECK(e.value() == h);
      REQUIRE_FALSE(e.terms.empty());
      CHECK(e.terms.front().index == i);
      for (std::size_t k = 0; k < e.terms.size(); ++k) {
        CHECK(e.terms[k].top >= e.terms[k].index);
        CHECK(e.terms[k].index >= 1);
        if (k > 0) {
          CHECK(e.terms[k].top < e.terms[k - 1].top);
          CHECK(e.terms[k].index + 1 == e.terms[k - 1].index);
        }
      }
    }
  }
}

TEST_CASE("macaulay_upper values") {
  CHECK(macaulay_upper(7, 3) == 9);
  CHECK(macaulay_upper(0, 5) == 0);
  CHECK(macaulay_upper(3, 1) == 6);
  // 3^<1> is the number of degree-2 monomials in 3 variables.
  CHECK(macaulay_upper(3, 1) == oracle::sorted_monomials(3, 2).size());
  CHECK(macaulay_upper(9, 4) == 11);
}

TEST_CASE("macaulay_upper is monotone in h") {
  for (std::size_t i = 1; i <= 10; ++i) {
    BigInt prev = 0;
    for (std::size_t h = 0; h <= 2000; ++h) {
      const BigInt cur = macaulay_upper(h, i);
      CHECK(prev <= cur);
      prev = cur;
    }
  }
}

TEST_CASE("macaulay_upper of full degree pieces is the next full piece") {
  // C(n+d-1, d)^<d> = C(n+d, d+1): maximal growth of the polynomial ring.
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t d = 1; d <= 8; ++d) {
      CHECK(macaulay_upper(oracle::choose(n + d - 1, d), d) == oracle::choose(n + d, d + 1));
    }
  }
}

TEST_CASE("is_o_sequence") {
  CHECK(is_o_sequence(seq({1, 3, 3, 4})).accepted);
  const auto bad = is_o_sequence(seq({1, 3, 5, 8}));
  CHECK_FALSE(bad.accepted);
  CHECK(bad.index == 3);
  REQUIRE(bad.bound);
  CHECK(*bad.bound == 7);

  const auto root = is_o_sequence(seq({2, 1}));
  CHECK_FALSE(root.accepted);
  CHECK(root.index == 0);
  CHECK_FALSE(root.bound);

  const auto empty = is_o_sequence(std::vector<BigInt>{});
  CHECK_FALSE(empty.accepted);
  CHECK(empty.index == 0);

  CHECK(is_o_sequence(seq({1})).accepted);
  CHECK(is_o_sequence(seq({1, 0})).accepted);
  CHECK(is_o_sequence(seq({1, 100})).accepted);
  CHECK_THROWS_AS(is_o_sequence(seq({1, -1})), hilfrac::InvalidArgument);
}

TEST_CASE("is_o_sequence reports the first nonzero after a zero") {
  const auto v = is_o_sequence(seq({1, 2, 0, 0, 1}));
  CHECK_FALSE(v.accepted);
  CHECK(v.index == 4);
  REQUIRE(v.bound);
  CHECK(*v.bound == 0);
}

TEST_CASE("polynomial ring Hilbert functions are O-sequences") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<BigInt> h;
    for (std::size_t d = 0; d <= 8; ++d) h.push_back(oracle::choose(n + d - 1, d));
    CHECK(is_o_sequence(h).accepted);
    h.back() += 1;
    CHECK_FALSE(is_o_sequence(h).accepted);
  }
}
