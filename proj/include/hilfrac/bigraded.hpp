#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hilfrac/bigint.hpp"
#include "hilfrac/ferrers.hpp"
#include "hilfrac/lex_ideal.hpp"
#include "hilfrac/limits.hpp"

namespace hilfrac {

/// alpha_i = C(n+i-1, n-1): monomials of degree i in n variables.
std::size_t graded_dim(std::size_t vars, std::size_t degree);

struct Position {
  std::size_t i = 0;
  std::size_t j = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// H(i, j) for 0 <= i < rows, 0 <= j < cols over k[x_1..x_n, y_1..y_m] with
/// deg x = (1,0), deg y = (0,1). Values above alpha_i * beta_j are allowed
/// here; the certifier rejects them.
class BigradedTable {
 public:
  BigradedTable(std::size_t n, std::size_t m, std::vector<std::vector<std::size_t>> values);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t rows() const { return values_.size(); }
  std::size_t cols() const { return values_.front().size(); }
  std::size_t value(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const std::vector<std::vector<std::size_t>>& values() const { return values_; }
  std::size_t alpha(std::size_t i) const { return graded_dim(n_, i); }
  std::size_t beta(std::size_t j) const { return graded_dim(m_, j); }

  /// H(i,j) = alpha_i * beta_j on the window.
  static BigradedTable full(std::size_t n, std::size_t m, std::size_t rows, std::size_t cols);

  friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> values_;
};

/// One Ferrers matrix of size alpha_i x beta_j per window position.
struct Certificate {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::vector<FerrersMatrix>> grid;

  std::size_t rows() const { return grid.size(); }
  std::size_t cols() const { return grid.empty() ? 0 : grid.front().size(); }
  const FerrersMatrix& at(std::size_t i, std::size_t j) const { return grid[i][j]; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class CertifyMode { kFirst, kCount, kEnumerate };

/// kExact: the last row and column of the window vanish, so the verdict holds
/// for the table extended by zeros. kNecessary: constraints from outside the
/// window were not imposed.
enum class WindowLabel { kExact, kNecessary };

const char* to_string(CertifyMode mode);
const char* to_string(WindowLabel label);

struct CertifyOptions {
  CertifyMode mode = CertifyMode::kFirst;
  std::size_t jobs = 1;
  Limits limits = {};
};

struct CertifyResult {
  bool accepted = false;
  WindowLabel window = WindowLabel::kNecessary;
  /// Certificates found. kFirst stops at one.
  std::uint64_t count = 0;
  /// kEnumerate: all certificates in search order. kFirst and kCount: the
  /// first one, if any.
  std::vector<Certificate> certificates;
  /// On rejection: the deepest position (in search order) with no candidate.
  std::optional<Position> witness;
  std::uint64_t nodes = 0;
};

/// Raised when the certifier's node budget runs out; carries what was found.
class SearchLimitExceeded : public ResourceLimit {
 public:
  SearchLimitExceeded(const std::string& what, std::uint64_t partial_count)
      : ResourceLimit(what), partial_count_(partial_count) {}
  std::uint64_t partial_count() const { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

/// Depth-first search for a grid of Ferrers matrices M_ij with area H(i,j),
/// M_00 = (1), M_ij <= row expansion of M_{i-1,j} by [n]^{i-1} and
/// M_ij <= column expansion of M_{i,j-1} by [m]^{j-1}. Positions are visited
/// by increasing i+j, then i; candidates in decreasing lex order, so results
/// do not depend on `jobs`.
CertifyResult certify_fractal(const BigradedTable& table, const CertifyOptions& options = {});

struct CertificateCheck {
  bool ok = true;
  Position position;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks every condition the certifier imposes, independently of the search.
CertificateCheck validate_certificate(const BigradedTable& table, const Certificate& cert);

/// Monomial x^a y^b of bidegree (deg a, deg b).
struct BigradedMonomial {
  Monomial x;
  Monomial y;

  Position bidegree() const { return {x.degree(), y.degree()}; }
  bool divides(const BigradedMonomial& other) const {
    return x.divides(other.x) && y.divides(other.y);
  }

  friend auto operator<=>(const BigradedMonomial&, const BigradedMonomial&) = default;
};

std::string to_string(const BigradedMonomial& u);

using MonomialSet = std::set<BigradedMonomial>;

/// Monomials X^(i)_a * Y^(j)_b over the zero entries (a, b) of m, which must
/// be alpha_i x beta_j.
MonomialSet lambda(const FerrersMatrix& mat, std::size_t i, std::size_t j, std::size_t n,
                   std::size_t m);

/// Inverse of lambda. Throws InvalidArgument naming a violating pair when L
/// is not bilex, or when a member has the wrong bidegree.
FerrersMatrix mu(const MonomialSet& set, std::size_t i, std::size_t j, std::size_t n,
                 std::size_t m);

/// Closure of a bidegree-(i,j) set under replacing the x-part (or the y-part)
/// by any lex-larger monomial of the same degree, checked directly against
/// the monomial order x_n > ... > x_1 > y_m > ... > y_1.
bool is_bilex_set(const MonomialSet& set, std::size_t i, std::size_t j, std::size_t n,
                  std::size_t m);

/// Monomial ideal restricted to a window of bidegrees.
class BigradedMonomialIdeal {
 public:
  BigradedMonomialIdeal(std::size_t n, std::size_t m, std::size_t rows, std::size_t cols);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t rows() const { return pieces_.size(); }
  std::size_t cols() const { return pieces_.front().size(); }
  const MonomialSet& piece(std::size_t i, std::size_t j) const { return pieces_[i][j]; }
  MonomialSet& piece(std::size_t i, std::size_t j) { return pieces_[i][j]; }
  bool contains(const BigradedMonomial& u) const;

  /// Members not divisible by a member of a lower bidegree.
  std::vector<BigradedMonomial> minimal_generators() const;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<MonomialSet>> pieces_;
};

/// I_(i,j) = lambda(M_ij). Closure under every x and y variable inside the
/// window is checked by explicit multiplication; a failure throws
/// ConsistencyError.
BigradedMonomialIdeal certificate_to_ideal(const Certificate& cert);

/// H(i,j) = bidegree-(i,j) monomials divisible by no generator.
BigradedTable bigraded_hilbert(std::span<const BigradedMonomial> gens, std::size_t n,
                               std::size_t m, std::size_t rows, std::size_t cols);
BigradedTable bigraded_hilbert(const BigradedMonomialIdeal& ideal);

}  // namespace hilfrac
