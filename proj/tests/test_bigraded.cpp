#include <doctest.h>

#include <random>
#include <vector>

#include "hilfrac/bigraded.hpp"
#include "hilfrac/error.hpp"
#include "oracles.hpp"

using hilfrac::BigradedMonomial;
using hilfrac::BigradedTable;
using hilfrac::CertifyMode;
using hilfrac::CertifyOptions;
using hilfrac::FerrersMatrix;
using hilfrac::Monomial;
using hilfrac::MonomialSet;

namespace {

const BigradedTable kExample(2, 2, {{1, 2, 3, 0}, {2, 4, 3, 0}, {3, 3, 3, 0}, {0, 0, 0, 0}});

CertifyOptions with_mode(CertifyMode mode, std::size_t jobs = 1) {
  CertifyOptions o;
  o.mode = mode;
  o.jobs = jobs;
  return o;
}

Monomial mono(std::initializer_list<unsigned> e) { return Monomial{{e.begin(), e.end()}}; }

std::vector<FerrersMatrix> all_ferrers(std::size_t rows, std::size_t cols) {
  std::vector<FerrersMatrix> out;
  const auto full = FerrersMatrix::full(rows, cols);
  for (std::size_t area = 0; area <= rows * cols; ++area) {
    for (auto& f : hilfrac::enumerate_sub_ferrers(full, area)) out.push_back(std::move(f));
  }
  return out;
}

void check_sound(const BigradedTable& table, const hilfrac::Certificate& cert) {
  CHECK(hilfrac::validate_certificate(table, cert).ok);
  const auto ideal = hilfrac::certificate_to_ideal(cert);
  CHECK(hilfrac::bigraded_hilbert(ideal) == table);
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      CHECK(hilfrac::is_bilex_set(ideal.piece(i, j), i, j, table.n(), table.m()));
    }
  }
}

}  // namespace

TEST_CASE("table construction") {
  CHECK(kExample.alpha(2) == 3);
  CHECK(kExample.beta(3) == 4);
  CHECK(hilfrac::graded_dim(3, 2) == 6);
  CHECK(hilfrac::graded_dim(1, 9) == 1);
  CHECK(BigradedTable::full(2, 2, 2, 2).values() ==
        std::vector<std::vector<std::size_t>>{{1, 2}, {2, 4}});
  CHECK_THROWS_AS(BigradedTable(0, 2, {{1}}), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(BigradedTable(1, 1, {{1, 0}, {0}}), hilfrac::InvalidArgument);
  CHECK_THROWS_AS(BigradedTable(1, 1, {}), hilfrac::InvalidArgument);
}

TEST_CASE("worked example has exactly three certificates") {
  const auto first = hilfrac::certify_fractal(kExample);
  CHECK(first.accepted);
  CHECK(first.count == 1);
  CHECK(first.window == hilfrac::WindowLabel::kExact);

  const auto counted = hilfrac::certify_fractal(kExample, with_mode(CertifyMode::kCount));
  CHECK(counted.accepted);
  CHECK(counted.count == 3);
  REQUIRE(counted.certificates.size() == 1);
  CHECK(counted.certificates[0] == first.certificates[0]);

  const auto all = hilfrac::certify_fractal(kExample, with_mode(CertifyMode::kEnumerate));
  REQUIRE(all.certificates.size() == 3);
  for (const auto& cert : all.certificates) {
    check_sound(kExample, cert);
    CHECK(cert.at(0, 0).row_lengths() == std::vector<std::size_t>{1});
    // H(2,2) = 3: the complement of I_(2,2) has three monomials.
    const auto ideal = hilfrac::certificate_to_ideal(cert);
    CHECK(ideal.piece(2, 2).size() == 9 - 3);
  }
  CHECK(all.certificates[0] != all.certificates[1]);
  CHECK(all.certificates[1] != all.certificates[2]);
  CHECK(all.certificates[0] == first.certificates[0]);
}

TEST_CASE("full growth has a single certificate") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto table = BigradedTable::full(n, m, 4, 4);
      const auto r = hilfrac::certify_fractal(table, with_mode(CertifyMode::kEnumerate));
      CHECK(r.accepted);
      CHECK(r.count == 1);
      CHECK(r.window == hilfrac::WindowLabel::kNecessary);
      REQUIRE(r.certificates.size() == 1);
      const auto ideal = hilfrac::certificate_to_ideal(r.certificates[0]);
      CHECK(ideal.minimal_generators().empty());
      check_sound(table, r.certificates[0]);
    }
  }
}

TEST_CASE("rejections") {
  const auto bad_root = hilfrac::certify_fractal(BigradedTable(2, 2, {{2, 1}, {1, 0}}));
  CHECK_FALSE(bad_root.accepted);
  REQUIRE(bad_root.witness);
  CHECK(*bad_root.witness == hilfrac::Position{0, 0});

  // Once H(1,0) = 0 every later x-degree must vanish.
  const auto regrowth = hilfrac::certify_fractal(BigradedTable(1, 1, {{1}, {0}, {1}}));
  CHECK_FALSE(regrowth.accepted);
  REQUIRE(regrowth.witness);
  CHECK(*regrowth.witness == hilfrac::Position{2, 0});

  const auto too_big = hilfrac::certify_fractal(BigradedTable(2, 1, {{1, 1}, {3, 1}}));
  CHECK_FALSE(too_big.accepted);
  REQUIRE(too_big.witness);
  CHECK(*too_big.witness == hilfrac::Position{1, 0});

  // 2 in degree 1 cannot grow to 4 in degree 2 for n = 2 (max is 3).
  const auto macaulay = hilfrac::certify_fractal(BigradedTable(2, 1, {{1}, {2}, {4}}));
  CHECK_FALSE(macaulay.accepted);
}

TEST_CASE("resource limits") {
  CertifyOptions tight;
  tight.limits.max_cells = 5;
  CHECK_THROWS_AS(hilfrac::certify_fractal(kExample, tight), hilfrac::ResourceLimit);

  CertifyOptions few_nodes = with_mode(CertifyMode::kCount);
  few_nodes.limits.max_search_nodes = 3;
  CHECK_THROWS_AS(hilfrac::certify_fractal(kExample, few_nodes), hilfrac::SearchLimitExceeded);
}

TEST_CASE("lambda and mu") {
  // M_12 with rows (3; 0): the zero row is x-rank 2.
  const FerrersMatrix m12(2, 3, {3, 0});
  const auto set = hilfrac::lambda(m12, 1, 2, 2, 2);
  CHECK(set == MonomialSet{{mono({0, 1}), mono({2, 0})},
                           {mono({0, 1}), mono({1, 1})},
                           {mono({0, 1}), mono({0, 2})}});
  CHECK(hilfrac::mu(set, 1, 2, 2, 2) == m12);
  CHECK(hilfrac::lambda(FerrersMatrix::full(2, 3), 1, 2, 2, 2).empty());
  CHECK(hilfrac::lambda(FerrersMatrix::zero(2, 3), 1, 2, 2, 2).size() == 6);
  CHECK(hilfrac::mu({}, 1, 2, 2, 2) == FerrersMatrix::full(2, 3));
  CHECK_THROWS_AS(hilfrac::lambda(FerrersMatrix(3, 3), 1, 2, 2, 2), hilfrac::InvalidArgument);

  const MonomialSet not_bilex{{mono({1, 0}), mono({1, 0})}};
  CHECK_THROWS_WITH_AS(hilfrac::mu(not_bilex, 1, 1, 2, 2), doctest::Contains("not bilex"),
                       hilfrac::InvalidArgument);
}

TEST_CASE("is_bilex_set") {
  const MonomialSet lone{{mono({1, 0, 1}), mono({1})}};
  CHECK_FALSE(hilfrac::is_bilex_set(lone, 2, 1, 3, 1));
  CHECK(hilfrac::is_bilex_set({}, 2, 1, 3, 1));
  MonomialSet everything;
  for (const auto& x : oracle::sorted_monomials(3, 2)) everything.insert({x, mono({1})});
  CHECK(hilfrac::is_bilex_set(everything, 2, 1, 3, 1));
}

TEST_CASE("lambda/mu bijection is exhaustive on small bidegrees") {
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; j <= 2; ++j) {
      const auto mats = all_ferrers(i + 1, j + 1);
      std::set<MonomialSet> images;
      for (const auto& mat : mats) {
        const auto set = hilfrac::lambda(mat, i, j, 2, 2);
        CHECK(hilfrac::is_bilex_set(set, i, j, 2, 2));
        CHECK(hilfrac::mu(set, i, j, 2, 2) == mat);
        images.insert(set);
      }
      // Every bilex subset is hit: compare with the subsets passing the test.
      std::vector<BigradedMonomial> all;
      for (const auto& x : oracle::sorted_monomials(2, i)) {
        for (const auto& y : oracle::sorted_monomials(2, j)) all.push_back({x, y});
      }
      std::size_t bilex_count = 0;
      for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        MonomialSet s;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (mask >> k & 1) s.insert(all[k]);
        }
        if (hilfrac::is_bilex_set(s, i, j, 2, 2)) {
          ++bilex_count;
          CHECK(images.count(s) == 1);
          CHECK(hilfrac::lambda(hilfrac::mu(s, i, j, 2, 2), i, j, 2, 2) == s);
        }
      }
      CHECK(bilex_count == mats.size());
    }
  }
}

TEST_CASE("lambda/mu round trip on random larger matrices") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> vars(1, 3), deg(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = vars(rng), m = vars(rng), i = deg(rng), j = deg(rng);
    const auto rows = hilfrac::graded_dim(n, i), cols = hilfrac::graded_dim(m, j);
    std::uniform_int_distribution<std::size_t> area(0, rows * cols);
    const auto options = hilfrac::enumerate_sub_ferrers(FerrersMatrix::full(rows, cols), area(rng));
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    const auto& mat = options[pick(rng)];
    const auto set = hilfrac::lambda(mat, i, j, n, m);
    CHECK(hilfrac::is_bilex_set(set, i, j, n, m));
    CHECK(hilfrac::mu(set, i, j, n, m) == mat);
  }
}

TEST_CASE("bigraded_hilbert trivia") {
  const auto zero = hilfrac::bigraded_hilbert({}, 2, 2, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(zero.value(i, j) == (i + 1) * (j + 1));
  }
  const std::vector<BigradedMonomial> x1{{mono({1}), mono({0})}};
  const auto h = hilfrac::bigraded_hilbert(x1, 1, 1, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(h.value(i, j) == (i == 0 ? 1u : 0u));
  }
  CHECK(to_string(BigradedMonomial{mono({1, 0}), mono({0, 1})}) == "x1y2");
}

TEST_CASE("Hilbert tables of random monomial ideals are certified") {
  std::mt19937_64 rng(101);
  int exact = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 2, m = 1 + (trial / 2) % 2;
    const auto gens = oracle::random_generators(rng, n, m, 4, 4);
    const auto table = hilfrac::bigraded_hilbert(gens, n, m, 4, 4);
    const auto r = hilfrac::certify_fractal(table);
    CHECK(r.accepted);
    REQUIRE(r.certificates.size() == 1);
    check_sound(table, r.certificates[0]);
    exact += r.window == hilfrac::WindowLabel::kExact;

    // The bilex closure reproduces a bilex ideal; its table is certified too.
    const auto closed = oracle::bilex_closure(gens, n, m, 4, 4);
    const auto closed_table = hilfrac::bigraded_hilbert(closed);
    CHECK(hilfrac::certify_fractal(closed_table).accepted);
  }
  CHECK(exact > 0);
}

TEST_CASE("parallel search matches sequential search") {
  std::mt19937_64 rng(55);
  std::vector<BigradedTable> tables{kExample, BigradedTable::full(2, 2, 3, 3),
                                    BigradedTable(2, 2, {{1, 2, 3}, {2, 4, 6}, {3, 5, 9}}),
                                    BigradedTable(2, 1, {{1}, {2}, {4}})};
  for (int k = 0; k < 10; ++k) {
    tables.push_back(hilfrac::bigraded_hilbert(oracle::random_generators(rng, 2, 2, 4, 4), 2, 2, 4, 4));
  }
  for (const auto& table : tables) {
    for (auto mode : {CertifyMode::kFirst, CertifyMode::kCount, CertifyMode::kEnumerate}) {
      const auto seq = hilfrac::certify_fractal(table, with_mode(mode, 1));
      const auto par = hilfrac::certify_fractal(table, with_mode(mode, 4));
      CHECK(seq.accepted == par.accepted);
      CHECK(seq.count == par.count);
      CHECK(seq.certificates == par.certificates);
      CHECK(seq.witness == par.witness);
      if (!seq.accepted) CHECK(seq.witness.has_value());
    }
  }
}

TEST_CASE("validate_certificate catches tampering") {
  const auto r = hilfrac::certify_fractal(kExample);
  REQUIRE(r.accepted);
  auto cert = r.certificates[0];
  CHECK(hilfrac::validate_certificate(kExample, cert));

  auto wrong_area = cert;
  wrong_area.grid[1][1] = FerrersMatrix(2, 2, {2, 1});
  const auto c1 = hilfrac::validate_certificate(kExample, wrong_area);
  CHECK_FALSE(c1.ok);
  CHECK(c1.position == hilfrac::Position{1, 1});

  auto wrong_root = cert;
  wrong_root.grid[0][0] = FerrersMatrix(1, 1, {0});
  CHECK_FALSE(hilfrac::validate_certificate(kExample, wrong_root).ok);

  // Same area, but outside the bound inherited from M_10 = (1, 0).
  const BigradedTable narrow(2, 2, {{1, 2}, {1, 2}});
  const auto nr = hilfrac::certify_fractal(narrow, with_mode(CertifyMode::kEnumerate));
  REQUIRE(nr.certificates.size() == 1);
  CHECK(nr.certificates[0].at(1, 1).row_lengths() == std::vector<std::size_t>{2, 0});
  auto escaped = nr.certificates[0];
  escaped.grid[1][1] = FerrersMatrix(2, 2, {1, 1});
  const auto c2 = hilfrac::validate_certificate(narrow, escaped);
  CHECK_FALSE(c2.ok);
  CHECK(c2.position == hilfrac::Position{1, 1});
}
