#include "hilfrac/lex_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilfrac/binomial.hpp"
#include "hilfrac/fractal_decomp.hpp"

namespace hilfrac {

std::size_t Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::size_t{0});
}

std::size_t Monomial::min_var() const {
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v]) return v + 1;
  }
  return 0;
}

std::size_t Monomial::max_var() const {
  for (std::size_t v = exps.size(); v > 0; --v) {
    if (exps[v - 1]) return v;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps.size() != other.exps.size()) return false;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] > other.exps[v]) return false;
  }
  return true;
}

Monomial Monomial::times_var(std::size_t v) const {
  if (v == 0 || v > exps.size()) throw InvalidArgument("variable index out of range");
  Monomial out = *this;
  ++out.exps[v - 1];
  return out;
}

std::string to_string(const Monomial& u) {
  std::ostringstream os;
  for (std::size_t v = 0; v < u.exps.size(); ++v) {
    if (!u.exps[v]) continue;
    os << 'x' << v + 1;
    if (u.exps[v] > 1) os << '^' << u.exps[v];
  }
  const auto s = os.str();
  return s.empty() ? "1" : s;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  const std::size_t n = std::max(u.exps.size(), v.exps.size());
  for (std::size_t k = n; k > 0; --k) {
    const unsigned eu = k <= u.exps.size() ? u.exps[k - 1] : 0;
    const unsigned ev = k <= v.exps.size() ? v.exps[k - 1] : 0;
    if (auto c = eu <=> ev; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void compositions(std::size_t var, std::size_t left, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.exps.size()) {
    cur.exps[var] = static_cast<unsigned>(left);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = 0; e <= left; ++e) {
    cur.exps[var] = static_cast<unsigned>(e);
    compositions(var + 1, left - e, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur{std::vector<unsigned>(n, 0)};
  compositions(0, d, cur, out);
  return out;
}

BigInt monomial_count(std::size_t n, std::size_t d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d);
}

Monomial monomial_unrank(const BigInt& a, std::size_t d, std::size_t n) {
  const BigInt count = monomial_count(n, d);
  if (a < 1 || a > count) {
    throw InvalidArgument("rank exceeds monomial count: rank " + a.str() + " of " +
                          count.str() + " degree-" + std::to_string(d) + " monomials in " +
                          std::to_string(n) + " variables");
  }
  Monomial u{std::vector<unsigned>(n, 0)};
  if (d == 0) return u;
  for (const auto& c : fractal_decompose(a, d).coeffs) ++u.exps[static_cast<std::size_t>(c) - 1];
  return u;
}

BigInt monomial_rank(const Monomial& u) {
  // Variable indices in decreasing order are the coefficients (c_d, ..., c_1).
  std::vector<std::size_t> coeffs;
  for (std::size_t v = u.exps.size(); v > 0; --v) {
    coeffs.insert(coeffs.end(), u.exps[v - 1], v);
  }
  const std::size_t d = coeffs.size();
  if (d == 0) return 1;
  BigInt rank = 0;
  for (std::size_t pos = 0; pos < d; ++pos) {
    const std::size_t t = d - pos;
    const std::size_t k = t >= 2 ? coeffs[pos] + t - 2 : coeffs[pos];
    rank += binomial(k, t);
  }
  return rank;
}

GradedMonomialIdeal::GradedMonomialIdeal(std::size_t n, std::vector<BigInt> cutoffs)
    : n_(n), cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) throw InvalidArgument("ideal needs at least the degree-0 cutoff");
  for (std::size_t d = 0; d < cutoffs_.size(); ++d) {
    if (cutoffs_[d] < 0 || cutoffs_[d] > monomial_count(n_, d)) {
      throw InvalidArgument("cutoff " + cutoffs_[d].str() + " out of range in degree " +
                            std::to_string(d));
    }
  }
}

bool GradedMonomialIdeal::contains(const Monomial& u) const {
  if (u.vars() != n_) throw InvalidArgument("monomial has the wrong number of variables");
  const std::size_t d = u.degree();
  const std::size_t top = top_degree();
  if (d <= top) return monomial_rank(u) > cutoffs_[d];
  // Beyond the top degree, u is in I iff its lex-largest degree-top divisor
  // is: keep the `top` highest variables.
  Monomial divisor{std::vector<unsigned>(n_, 0)};
  std::size_t left = top;
  for (std::size_t v = n_; v > 0 && left > 0; --v) {
    const unsigned take = std::min<std::size_t>(u.exps[v - 1], left);
    divisor.exps[v - 1] = take;
    left -= take;
  }
  return monomial_rank(divisor) > cutoffs_[top];
}

BigInt GradedMonomialIdeal::hilbert(std::size_t d) const {
  const std::size_t top = top_degree();
  if (d <= top) return cutoffs_[d];
  if (top == 0) return cutoffs_[0] == 0 ? BigInt(0) : monomial_count(n_, d);
  BigInt h = cutoffs_[top];
  for (std::size_t e = top; e < d; ++e) h = macaulay_upper(h, e);
  return h;
}

GradedMonomialIdeal build_lex_ideal(const CoherentGrowth& growth) {
  if (const auto verdict = validate_growth(growth); !verdict) {
    throw InvalidArgument("invalid coherent growth at level " + std::to_string(verdict.level) +
                          ": " + verdict.message);
  }
  GradedMonomialIdeal ideal(growth.n, growth.lengths());
  const auto& t = ideal.cutoffs();
  // x_1 times the lex-smallest member of I_d is the lex-smallest product of a
  // member with a variable, so one check per degree covers closure.
  for (std::size_t d = 0; d < ideal.top_degree() && growth.n > 0; ++d) {
    if (t[d] == monomial_count(growth.n, d)) continue;
    const Monomial smallest = monomial_unrank(t[d] + 1, d, growth.n);
    if (monomial_rank(smallest.times_var(1)) <= t[d + 1]) {
      throw ConsistencyError("lex ideal not closed between degrees " + std::to_string(d) +
                             " and " + std::to_string(d + 1));
    }
  }
  return ideal;
}

namespace {

// Number of degree-j monomials outside (x_1, ..., x_n) * I_{j-1}.
BigInt shadow_complement(const GradedMonomialIdeal& ideal, std::size_t j) {
  const auto& t = ideal.cutoffs();
  if (j == 0) return 1;
  if (j == 1) return t[0] == 0 ? BigInt(0) : BigInt(ideal.vars());
  return prefix_sum(t[j - 1], j - 1);
}

}  // namespace

std::vector<std::vector<BigInt>> minimal_generators(const GradedMonomialIdeal& ideal) {
  const auto& t = ideal.cutoffs();
  std::vector<std::vector<BigInt>> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    const BigInt upper = shadow_complement(ideal, j);
    for (BigInt a = t[j] + 1; a <= upper; ++a) out[j].push_back(a);
  }
  return out;
}

std::vector<Monomial> minimal_generator_monomials(const GradedMonomialIdeal& ideal) {
  std::vector<Monomial> out;
  const auto ranks = minimal_generators(ideal);
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    for (const auto& a : ranks[j]) out.push_back(monomial_unrank(a, j, ideal.vars()));
  }
  return out;
}

BigInt BettiTable::at(std::size_t i, std::size_t degree) const {
  const auto it = entries_.find({i, degree});
  return it == entries_.end() ? BigInt(0) : it->second;
}

void BettiTable::add(std::size_t i, std::size_t degree, const BigInt& rank) {
  if (rank == 0) return;
  auto& slot = entries_[{i, degree}];
  slot += rank;
  if (slot == 0) entries_.erase({i, degree});
}

std::size_t BettiTable::max_index() const {
  std::size_t out = 0;
  for (const auto& [key, rank] : entries_) out = std::max(out, key.first);
  return out;
}

std::size_t BettiTable::max_degree() const {
  std::size_t out = 0;
  for (const auto& [key, rank] : entries_) out = std::max(out, key.second);
  return out;
}

std::string to_string(const BettiTable& table) {
  if (table.empty()) return "(all zero)";
  std::ostringstream os;
  // Macaulay2-style: rows are j = D - i, columns are i.
  const std::size_t imax = table.max_index();
  std::size_t jmax = 0;
  for (const auto& [key, rank] : table.entries()) jmax = std::max(jmax, key.second - key.first);
  os << "j\\i";
  for (std::size_t i = 1; i <= imax; ++i) os << '\t' << i;
  for (std::size_t j = 0; j <= jmax; ++j) {
    os << '\n' << j;
    for (std::size_t i = 1; i <= imax; ++i) {
      const BigInt v = table.at(i, i + j);
      os << '\t' << (v == 0 ? std::string(".") : v.str());
    }
  }
  return os.str();
}

std::vector<std::vector<BigInt>> ek_histogram(const GradedMonomialIdeal& ideal) {
  const std::size_t n = ideal.vars();
  const auto ranks = minimal_generators(ideal);
  std::vector<std::vector<BigInt>> w(ranks.size(), std::vector<BigInt>(n, 0));
  for (std::size_t degree = 1; degree < ranks.size(); ++degree) {
    for (const auto& a : ranks[degree]) {
      const auto k = static_cast<std::size_t>(fractal_entry(degree, a));
      w[degree][k - 1] += 1;
    }
  }
  return w;
}

BettiTable ek_betti(const GradedMonomialIdeal& ideal) {
  const std::size_t n = ideal.vars();
  BettiTable table;
  const auto w = ek_histogram(ideal);
  for (std::size_t degree = 1; degree < w.size(); ++degree) {
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt& count = w[degree][k - 1];
      if (count == 0) continue;
      for (std::size_t i = 1; i <= n - k + 1; ++i) {
        table.add(i, degree + i - 1, count * binomial(n - k, i - 1));
      }
    }
  }
  return table;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const BigInt& p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        BigInt num = p * a[r][c] - f * a[rank][c];
        BigInt q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw ConsistencyError("Bareiss step left a remainder");
        a[r][c] = std::move(q);
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

struct KoszulDegree {
  // Standard monomials of degree e, indexed.
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t> index;
};

bool in_ideal(std::span<const Monomial> gens, const Monomial& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::size_t popcount(unsigned mask) { return static_cast<std::size_t>(__builtin_popcount(mask)); }

}  // namespace

BettiTable koszul_betti_oracle(std::span<const Monomial> gens, std::size_t n,
                               std::size_t up_to_hom, std::size_t up_to_deg,
                               const OracleLimits& limits) {
  if (n > limits.max_vars) {
    throw ResourceLimit("koszul oracle: " + std::to_string(n) + " variables, limit " +
                        std::to_string(limits.max_vars));
  }
  for (const auto& g : gens) {
    if (g.vars() != n) throw InvalidArgument("koszul oracle: generator has the wrong variable count");
  }
  for (std::size_t d = 0; d <= up_to_deg; ++d) {
    if (monomial_count(n, d) > limits.max_monomials_per_degree) {
      throw ResourceLimit("koszul oracle: degree " + std::to_string(d) + " has " +
                          monomial_count(n, d).str() + " monomials, limit " +
                          std::to_string(limits.max_monomials_per_degree));
    }
  }

  std::vector<KoszulDegree> standard(up_to_deg + 1);
  for (std::size_t e = 0; e <= up_to_deg; ++e) {
    for (auto& u : monomials_of_degree(n, e)) {
      if (in_ideal(gens, u)) continue;
      standard[e].index.emplace(u, standard[e].basis.size());
      standard[e].basis.push_back(std::move(u));
    }
  }

  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) subsets[popcount(mask)].push_back(mask);

  // Rank of d_i : K_i -> K_{i-1} in internal degree D.
  auto differential_rank = [&](std::size_t i, std::size_t degree) -> std::size_t {
    if (i == 0 || i > n || i > degree) return 0;
    const auto& src = standard[degree - i];
    const auto& dst = standard[degree - i + 1];
    const auto& dst_subsets = subsets[i - 1];
    std::map<unsigned, std::size_t> dst_subset_index;
    for (std::size_t s = 0; s < dst_subsets.size(); ++s) dst_subset_index[dst_subsets[s]] = s;
    const std::size_t cols = dst_subsets.size() * dst.basis.size();
    std::vector<std::vector<BigInt>> rows;
    for (unsigned mask : subsets[i]) {
      for (const auto& m : src.basis) {
        std::vector<BigInt> row(cols, 0);
        std::size_t below = 0;  // elements of the subset smaller than k
        for (std::size_t k = 0; k < n; ++k) {
          if (!(mask & (1u << k))) continue;
          const Monomial product = m.times_var(k + 1);
          if (const auto it = dst.index.find(product); it != dst.index.end()) {
            const std::size_t col =
                dst_subset_index.at(mask & ~(1u << k)) * dst.basis.size() + it->second;
            row[col] += (below % 2 == 0) ? 1 : -1;
          }
          ++below;
        }
        rows.push_back(std::move(row));
      }
    }
    return exact_rank(std::move(rows));
  };

  BettiTable table;
  for (std::size_t degree = 0; degree <= up_to_deg; ++degree) {
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) ranks[i] = differential_rank(i, degree);
    for (std::size_t i = 1; i <= std::min(up_to_hom, n); ++i) {
      if (i > degree) break;
      const std::size_t dim = subsets[i].size() * standard[degree - i].basis.size();
      const std::size_t beta = dim - ranks[i] - ranks[i + 1];
      table.add(i, degree, beta);
    }
  }
  return table;
}

std::vector<BigInt> hilbert_by_enumeration(std::span<const Monomial> gens, std::size_t n,
                                           std::size_t up_to_deg) {
  std::vector<BigInt> out;
  for (std::size_t d = 0; d <= up_to_deg; ++d) {
    BigInt count = 0;
    for (const auto& u : monomials_of_degree(n, d)) {
      if (!in_ideal(gens, u)) count += 1;
    }
    out.push_back(count);
  }
  return out;
}

}  // namespace hilfrac
