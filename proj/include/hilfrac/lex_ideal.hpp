#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilfrac/bigint.hpp"
#include "hilfrac/fractal_seq.hpp"

namespace hilfrac {

/// Monomial x_1^{e_1} ... x_n^{e_n}; exps[0] is the exponent of x_1.
struct Monomial {
  std::vector<unsigned> exps;

  std::size_t vars() const { return exps.size(); }
  std::size_t degree() const;
  /// Smallest variable index (1-based) dividing the monomial, 0 for 1.
  std::size_t min_var() const;
  /// Largest variable index (1-based) dividing the monomial, 0 for 1.
  std::size_t max_var() const;
  bool divides(const Monomial& other) const;
  Monomial times_var(std::size_t v) const;  // v is 1-based

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// "x1x3", "x3^2", "1".
std::string to_string(const Monomial& u);

/// Degree-lex comparison with x_n > ... > x_1, independent of ranking.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Every degree-d monomial in n variables, in no particular order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d);

/// C(n+d-1, d), the number of degree-d monomials in n variables.
BigInt monomial_count(std::size_t n, std::size_t d);

/// The monomial at position a (1-based, increasing lex order with
/// x_n > ... > x_1) among degree-d monomials in n variables. Position 1 is
/// x_1^d and position C(n+d-1, d) is x_n^d. Built from the d-fractal
/// coefficients of a. Throws InvalidArgument when a is out of range.
Monomial monomial_unrank(const BigInt& a, std::size_t d, std::size_t n);

/// Inverse of monomial_unrank within its degree. The monomial 1 has rank 1.
BigInt monomial_rank(const Monomial& u);

/// Lex segment ideal given by one rank cutoff per degree: I_d is spanned by
/// the degree-d monomials of rank > cutoffs[d]. Beyond top_degree() the ideal
/// has no new generators.
class GradedMonomialIdeal {
 public:
  GradedMonomialIdeal(std::size_t n, std::vector<BigInt> cutoffs);

  std::size_t vars() const { return n_; }
  std::size_t top_degree() const { return cutoffs_.size() - 1; }
  const std::vector<BigInt>& cutoffs() const { return cutoffs_; }
  bool contains(const Monomial& u) const;
  /// H(d) = cutoffs[d] up to top_degree, maximal growth beyond.
  BigInt hilbert(std::size_t d) const;

 private:
  std::size_t n_;
  std::vector<BigInt> cutoffs_;
};

/// Lex segment ideal of a coherent growth: cutoff t_d = |tau_d|. Throws
/// InvalidArgument carrying the validate_growth message on invalid input.
/// Closure under multiplication by variables is checked constructively.
GradedMonomialIdeal build_lex_ideal(const CoherentGrowth& growth);

/// Minimal generator ranks per degree j = 0..top_degree: the window
/// (t_j, sum(tau_{j-1})].
std::vector<std::vector<BigInt>> minimal_generators(const GradedMonomialIdeal& ideal);

/// minimal_generators unranked into monomials, degree order then rank order.
std::vector<Monomial> minimal_generator_monomials(const GradedMonomialIdeal& ideal);

/// Graded Betti numbers beta_{i,D} of S/I for homological index i >= 1.
class BettiTable {
 public:
  BigInt at(std::size_t i, std::size_t degree) const;
  void add(std::size_t i, std::size_t degree, const BigInt& rank);
  const std::map<std::pair<std::size_t, std::size_t>, BigInt>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t max_index() const;
  std::size_t max_degree() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<std::size_t, std::size_t>, BigInt> entries_;  // nonzero only
};

std::string to_string(const BettiTable& table);

/// Eliahou-Kervaire Betti numbers of a lex segment ideal. Variables are
/// ordered x_n > ... > x_1, so a generator u of degree D contributes
/// C(n - c_1(u), i - 1) to beta_{i, D+i-1}, c_1(u) being its smallest
/// variable index (the last d-fractal coefficient of its rank).
BettiTable ek_betti(const GradedMonomialIdeal& ideal);

/// w[D][k-1]: how many minimal generators of degree D have smallest
/// variable index k.
std::vector<std::vector<BigInt>> ek_histogram(const GradedMonomialIdeal& ideal);

/// Limits for the Koszul oracle.
struct OracleLimits {
  std::size_t max_vars = 4;
  std::size_t max_monomials_per_degree = 200;
};

/// Betti numbers of S/I (I generated by `gens` in n variables) as Koszul
/// homology dimensions, i = 1..up_to_hom and internal degree <= up_to_deg.
/// Ranks come from fraction-free elimination over the integers. Throws
/// ResourceLimit when the instance is larger than `limits`.
BettiTable koszul_betti_oracle(std::span<const Monomial> gens, std::size_t n,
                               std::size_t up_to_hom, std::size_t up_to_deg,
                               const OracleLimits& limits = {});

/// H(d) for d = 0..up_to_deg: degree-d monomials divisible by no generator.
std::vector<BigInt> hilbert_by_enumeration(std::span<const Monomial> gens, std::size_t n,
                                           std::size_t up_to_deg);

/// Rank of an integer matrix by Bareiss elimination. Exposed for testing.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace hilfrac
