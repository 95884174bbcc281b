#include "hilfrac/fractal_seq.hpp"

#include <algorithm>
#include <sstream>

#include "hilfrac/binomial.hpp"
#include "hilfrac/fractal_decomp.hpp"

namespace hilfrac {

BigInt sequence_sum(std::span<const std::size_t> seq) {
  BigInt sum = 0;
  for (auto v : seq) sum += v;
  return sum;
}

std::string to_string(std::span<const std::size_t> seq) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ',';
    os << seq[i];
  }
  os << ')';
  return os.str();
}

Sequence range_seq(std::size_t a) {
  Sequence out(a);
  for (std::size_t i = 0; i < a; ++i) out[i] = i + 1;
  return out;
}

Sequence bracket(std::span<const std::size_t> seq) {
  Sequence out;
  for (auto s : seq) {
    for (std::size_t v = 1; v <= s; ++v) out.push_back(v);
  }
  return out;
}

Sequence bracket_prefix(std::span<const std::size_t> seq, std::size_t length) {
  Sequence out;
  out.reserve(length);
  for (auto s : seq) {
    for (std::size_t v = 1; v <= s; ++v) {
      if (out.size() == length) return out;
      out.push_back(v);
    }
  }
  return out;
}

BigInt bracket_power_length(std::size_t a, std::size_t d) {
  if (a == 0) return d == 0 ? 1 : 0;
  return binomial(d + a - 1, d);
}

BigInt bracket_power_sum(std::size_t a, std::size_t d) {
  return binomial(d + a, d + 1);
}

Sequence bracket_power(std::size_t a, std::size_t d, const Limits& limits) {
  return FractalExpansion(a, limits).level(d);
}

BigInt fractal_entry(std::size_t d, const BigInt& a) {
  if (d < 1) throw InvalidArgument("fractal_entry: d must be positive");
  if (a < 1) throw InvalidArgument("fractal_entry: a must be positive");
  return fractal_decompose(a, d).last();
}

bool is_truncation(std::span<const std::size_t> tau, std::span<const std::size_t> sigma) {
  return tau.size() <= sigma.size() && std::equal(tau.begin(), tau.end(), sigma.begin());
}

BigInt FractalExpansion::level_length(std::size_t d) const {
  return bracket_power_length(n_, d);
}

Sequence FractalExpansion::prefix(std::size_t d, std::size_t length) const {
  const BigInt full = level_length(d);
  if (length > full) {
    throw InvalidArgument("prefix of length " + std::to_string(length) + " exceeds |[" +
                          std::to_string(n_) + "]^" + std::to_string(d) + "| = " + full.str());
  }
  if (length > limits_.max_entries) {
    throw ResourceLimit("prefix of [" + std::to_string(n_) + "]^" + std::to_string(d) +
                        " with " + std::to_string(length) + " entries exceeds the size limit " +
                        std::to_string(limits_.max_entries) + "; use fractal_entry instead");
  }
  if (length == 0) return {};
  // A prefix of length L at level e needs at most L entries at level e-1,
  // since every entry contributes at least one.
  Sequence current{n_};
  for (std::size_t e = 1; e <= d; ++e) current = bracket_prefix(current, length);
  current.resize(length);
  return current;
}

Sequence FractalExpansion::level(std::size_t d) const {
  const BigInt full = level_length(d);
  if (full > limits_.max_entries) {
    throw ResourceLimit("[" + std::to_string(n_) + "]^" + std::to_string(d) + " has " +
                        full.str() + " entries, above the size limit " +
                        std::to_string(limits_.max_entries) + "; use fractal_entry instead");
  }
  return prefix(d, static_cast<std::size_t>(full));
}

BigInt FractalExpansion::entry(std::size_t d, const BigInt& a) const {
  if (a < 1 || a > level_length(d)) {
    throw InvalidArgument("entry " + a.str() + " is outside [" + std::to_string(n_) + "]^" +
                          std::to_string(d));
  }
  if (d == 0) return n_;
  return fractal_entry(d, a);
}

std::vector<BigInt> CoherentGrowth::lengths() const {
  std::vector<BigInt> out;
  out.reserve(levels.size());
  for (const auto& level : levels) out.emplace_back(level.size());
  return out;
}

GrowthVerdict validate_growth(const CoherentGrowth& growth) {
  using Reason = GrowthVerdict::Reason;
  if (growth.levels.empty() || growth.levels[0] != Sequence{growth.n}) {
    return {false, 0, Reason::kBadRoot,
            "tau_0 must be (" + std::to_string(growth.n) + ")"};
  }
  for (std::size_t d = 1; d < growth.levels.size(); ++d) {
    const auto& prev = growth.levels[d - 1];
    const auto& cur = growth.levels[d];
    const Sequence expanded = bracket_prefix(prev, cur.size());
    if (cur.size() <= expanded.size() && is_truncation(cur, expanded)) continue;

    const FractalExpansion phi(growth.n);
    const bool on_phi = cur.size() <= phi.level_length(d) &&
                        is_truncation(cur, phi.prefix(d, cur.size()));
    if (on_phi) {
      return {false, d, Reason::kExceedsBracket,
              "length " + std::to_string(cur.size()) + " exceeds sum(tau_" +
                  std::to_string(d - 1) + ") = " + sequence_sum(prev).str()};
    }
    return {false, d, Reason::kNotPhiTruncation,
            "not a truncation of Phi(" + std::to_string(growth.n) + ")"};
  }
  return {};
}

GrowthResult growth_from_lengths(std::span<const BigInt> lengths, std::optional<std::size_t> n,
                                 const Limits& limits) {
  for (const auto& h : lengths) {
    if (h < 0) throw InvalidArgument("growth_from_lengths: negative entry " + h.str());
  }
  GrowthResult result;
  if (lengths.empty() || lengths[0] != 1) {
    result.index = 0;
    return result;
  }
  std::size_t vars = 1;
  if (n) {
    vars = *n;
  } else if (lengths.size() > 1) {
    vars = to_size(lengths[1], "h_1");
  }
  result.growth.n = vars;
  result.growth.levels.push_back(Sequence{vars});
  for (std::size_t d = 1; d < lengths.size(); ++d) {
    const auto& prev = result.growth.levels.back();
    BigInt room = sequence_sum(prev);
    if (lengths[d] > room) {
      result.index = d;
      result.bound = std::move(room);
      return result;
    }
    if (lengths[d] > limits.max_entries) {
      throw ResourceLimit("level " + std::to_string(d) + " of length " + lengths[d].str() +
                          " exceeds the size limit " + std::to_string(limits.max_entries));
    }
    result.growth.levels.push_back(bracket_prefix(prev, static_cast<std::size_t>(lengths[d])));
  }
  result.ok = true;
  return result;
}

}  // namespace hilfrac
