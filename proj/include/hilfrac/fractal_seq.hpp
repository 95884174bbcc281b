#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilfrac/bigint.hpp"
#include "hilfrac/limits.hpp"

namespace hilfrac {

/// Finite list of positive integers. The root (0) of a zero-variable growth
/// is the one place a 0 entry appears.
using Sequence = std::vector<std::size_t>;

BigInt sequence_sum(std::span<const std::size_t> seq);
std::string to_string(std::span<const std::size_t> seq);

/// [a] = (1, 2, ..., a); [0] is empty.
Sequence range_seq(std::size_t a);

/// [sigma] = [s_1] ++ [s_2] ++ ...; its length equals sum(sigma).
Sequence bracket(std::span<const std::size_t> seq);

/// First `length` entries of [sigma] (all of it when shorter).
Sequence bracket_prefix(std::span<const std::size_t> seq, std::size_t length);

/// [a]^d with [a]^0 = (a). Throws ResourceLimit when C(d+a-1, d) exceeds
/// limits.max_entries.
Sequence bracket_power(std::size_t a, std::size_t d, const Limits& limits = {});

/// |[a]^d| = C(d+a-1, d).
BigInt bracket_power_length(std::size_t a, std::size_t d);
/// sum [a]^d = C(d+a, d+1).
BigInt bracket_power_sum(std::size_t a, std::size_t d);

/// The a-th entry (1-based) of [N]^{d-1}, equal to [n]^d_a whenever
/// a <= |[n]^d|. Evaluated through the d-fractal decomposition; nothing is
/// materialized.
BigInt fractal_entry(std::size_t d, const BigInt& a);

/// True iff tau is a prefix of sigma.
bool is_truncation(std::span<const std::size_t> tau, std::span<const std::size_t> sigma);

/// Lazy view of Phi(n) = ((n), [n], [n]^2, ...).
class FractalExpansion {
 public:
  explicit FractalExpansion(std::size_t n, Limits limits = {}) : n_(n), limits_(limits) {}

  std::size_t n() const { return n_; }
  BigInt level_length(std::size_t d) const;
  /// First `length` entries of [n]^d. Throws InvalidArgument when
  /// length > |[n]^d| and ResourceLimit above limits.max_entries.
  Sequence prefix(std::size_t d, std::size_t length) const;
  Sequence level(std::size_t d) const;
  /// [n]^d_a, 1-based.
  BigInt entry(std::size_t d, const BigInt& a) const;

 private:
  std::size_t n_;
  Limits limits_;
};

/// T = (tau_0, tau_1, ...) with tau_0 = (n).
struct CoherentGrowth {
  std::size_t n = 0;
  std::vector<Sequence> levels;

  std::vector<BigInt> lengths() const;
};

struct GrowthVerdict {
  enum class Reason {
    kNone,
    kBadRoot,            // tau_0 is not a single entry (n)
    kNotPhiTruncation,   // tau_d is not a prefix of [n]^d
    kExceedsBracket,     // prefix of [n]^d but longer than [tau_{d-1}]
  };

  bool accepted = true;
  std::size_t level = 0;
  Reason reason = Reason::kNone;
  std::string message;

  explicit operator bool() const { return accepted; }
};

/// Accepts iff every tau_d is a truncation of [tau_{d-1}].
GrowthVerdict validate_growth(const CoherentGrowth& growth);

struct GrowthResult {
  bool ok = false;
  CoherentGrowth growth;
  /// Failure data, mirroring OSequenceVerdict.
  std::size_t index = 0;
  std::optional<BigInt> bound;
};

/// Builds tau_d = first h_d entries of [n]^d, n = h_1 unless given. The
/// growth bound is checked as |tau_d| <= sum(tau_{d-1}) on the materialized
/// levels; Macaulay's formula is never consulted.
GrowthResult growth_from_lengths(std::span<const BigInt> lengths,
                                 std::optional<std::size_t> n = std::nullopt,
                                 const Limits& limits = {});

}  // namespace hilfrac
