#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "hilfrac/error.hpp"
#include "hilfrac/ferrers.hpp"

using hilfrac::FerrersMatrix;
using L = std::vector<std::size_t>;

namespace {

bool weakly_decreasing(const L& v) { return std::is_sorted(v.rbegin(), v.rend()); }

// Every 0/1 staircase under `bound` with the given area, by trying all
// length vectors in [0, cols]^rows.
std::vector<L> brute_sub_ferrers(const FerrersMatrix& bound, std::size_t area) {
  std::vector<L> out;
  L cur(bound.rows(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t r) {
    if (r == bound.rows()) {
      std::size_t sum = 0;
      for (auto x : cur) sum += x;
      bool under = true;
      for (std::size_t k = 0; k < cur.size(); ++k) under &= cur[k] <= bound.row_lengths()[k];
      if (sum == area && under && weakly_decreasing(cur)) out.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x <= bound.cols(); ++x) {
      cur[r] = x;
      go(r + 1);
    }
  };
  go(0);
  std::sort(out.rbegin(), out.rend());
  return out;
}

FerrersMatrix random_ferrers(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<std::size_t> len(0, cols);
  L v(rows);
  for (auto& x : v) x = len(rng);
  std::sort(v.rbegin(), v.rend());
  return FerrersMatrix(rows, cols, v);
}

}  // namespace

TEST_CASE("construction and validation") {
  const FerrersMatrix m(4, 3, {3, 2, 2, 1});
  CHECK(m.area() == 8);
  CHECK(m.at(0, 2));
  CHECK_FALSE(m.at(3, 1));
  CHECK(FerrersMatrix(4, 3, {2}).row_lengths() == L{2, 0, 0, 0});
  CHECK(FerrersMatrix(4, 3, {2}).partition() == L{2});
  CHECK(FerrersMatrix::full(2, 3).row_lengths() == L{3, 3});
  CHECK(FerrersMatrix::zero(2, 3).area() == 0);
  CHECK_THROWS_AS(FerrersMatrix(2, 3, {1, 2}), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(FerrersMatrix(2, 3, {4}), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(FerrersMatrix(1, 3, {1, 1}), hilfrac::InvalidArgument);
}

TEST_CASE("row and column expansion") {
  const FerrersMatrix m(4, 3, {3, 2, 2, 1});
  const auto r = hilfrac::row_expand(m, L{2, 1, 0, 3});
  CHECK(r.rows() == 6);
  CHECK(r.cols() == 3);
  CHECK(r.row_lengths() == L{3, 3, 2, 1, 1, 1});
  const auto c = hilfrac::col_expand(m, L{3, 1, 3});
  CHECK(c.rows() == 4);
  CHECK(c.cols() == 7);
  CHECK(c.row_lengths() == L{7, 4, 4, 3});

  CHECK(hilfrac::row_expand(m, L{1, 1, 1, 1}) == m);
  CHECK(hilfrac::col_expand(m, L{1, 1, 1}) == m);
  CHECK(hilfrac::row_expand(m, L{0, 0, 0, 0}).rows() == 0);
  CHECK(hilfrac::col_expand(FerrersMatrix(3, 1, {1, 1}), L{5}).row_lengths() == L{5, 5, 0});

  CHECK_THROWS_AS(hilfrac::row_expand(m, L{1, 1}), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(hilfrac::col_expand(m, L{1}), hilfrac::InvalidArgument);
}

TEST_CASE("expansion agrees with dense repetition and keeps the staircase shape") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 6), mult(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = random_ferrers(rng, dim(rng), dim(rng));
    L v(m.rows()), w(m.cols());
    for (auto& x : v) x = mult(rng);
    for (auto& x : w) x = mult(rng);

    // Dense reference: build the 0/1 grid and repeat rows / columns.
    std::vector<std::vector<bool>> dense;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < v[r]; ++k) {
        std::vector<bool> row;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          for (std::size_t t = 0; t < w[c]; ++t) row.push_back(m.at(r, c));
        }
        dense.push_back(row);
      }
    }
    const auto both = hilfrac::col_expand(hilfrac::row_expand(m, v), w);
    CHECK(both == hilfrac::row_expand(hilfrac::col_expand(m, w), v));
    REQUIRE(both.rows() == dense.size());
    CHECK(weakly_decreasing(both.row_lengths()));
    for (std::size_t r = 0; r < dense.size(); ++r) {
      REQUIRE(both.cols() == dense[r].size());
      for (std::size_t c = 0; c < dense[r].size(); ++c) CHECK(both.at(r, c) == dense[r][c]);
    }
  }
}

TEST_CASE("order and meet") {
  const FerrersMatrix a(2, 3, {3, 1}), b(2, 3, {2, 2});
  CHECK(hilfrac::ferrers_meet(a, b).row_lengths() == L{2, 1});
  CHECK_FALSE(hilfrac::ferrers_leq(b, a));
  CHECK_FALSE(hilfrac::ferrers_leq(a, b));
  CHECK(hilfrac::ferrers_leq(a, a));
  CHECK(hilfrac::ferrers_leq(hilfrac::ferrers_meet(a, b), a));
  CHECK_THROWS_AS(hilfrac::ferrers_meet(a, FerrersMatrix(3, 3)), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(hilfrac::ferrers_leq(a, FerrersMatrix(2, 4)), hilfrac::InvalidArgument);
}

TEST_CASE("enumerate_sub_ferrers") {
  const FerrersMatrix bound(4, 3, {3, 2, 2, 1});
  std::vector<L> got;
  for (const auto& f : hilfrac::enumerate_sub_ferrers(bound, 4)) got.push_back(f.partition());
  CHECK(got == std::vector<L>{{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

  const auto empty = hilfrac::enumerate_sub_ferrers(bound, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].area() == 0);
  const auto whole = hilfrac::enumerate_sub_ferrers(bound, 8);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == bound);
  CHECK(hilfrac::enumerate_sub_ferrers(bound, 9).empty());
}

TEST_CASE("enumerate_sub_ferrers matches brute force") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto bound = random_ferrers(rng, dim(rng), dim(rng));
    for (std::size_t area = 0; area <= bound.area() + 1; ++area) {
      std::vector<L> got;
      for (const auto& f : hilfrac::enumerate_sub_ferrers(bound, area)) {
        CHECK(f.rows() == bound.rows());
        CHECK(f.cols() == bound.cols());
        got.push_back(f.row_lengths());
      }
      CHECK(got == brute_sub_ferrers(bound, area));
    }
  }
}
