#include "hilfrac/bigraded.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "hilfrac/binomial.hpp"
#include "hilfrac/fractal_seq.hpp"

namespace hilfrac {

std::size_t graded_dim(std::size_t vars, std::size_t degree) {
  return to_size(monomial_count(vars, degree), "graded dimension");
}

BigradedTable::BigradedTable(std::size_t n, std::size_t m,
                             std::vector<std::vector<std::size_t>> values)
    : n_(n), m_(m), values_(std::move(values)) {
  if (n_ == 0 || m_ == 0) throw InvalidArgument("bigraded table needs n >= 1 and m >= 1");
  if (values_.empty() || values_.front().empty()) {
    throw InvalidArgument("bigraded table needs at least one row and one column");
  }
  for (const auto& row : values_) {
    if (row.size() != values_.front().size()) {
      throw InvalidArgument("bigraded table rows must all have the same length");
    }
  }
}

BigradedTable BigradedTable::full(std::size_t n, std::size_t m, std::size_t rows,
                                  std::size_t cols) {
  std::vector<std::vector<std::size_t>> values(rows, std::vector<std::size_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) values[i][j] = graded_dim(n, i) * graded_dim(m, j);
  }
  return BigradedTable(n, m, std::move(values));
}

const char* to_string(CertifyMode mode) {
  switch (mode) {
    case CertifyMode::kFirst: return "first";
    case CertifyMode::kCount: return "count";
    case CertifyMode::kEnumerate: return "enumerate";
  }
  return "?";
}

const char* to_string(WindowLabel label) {
  return label == WindowLabel::kExact ? "window-exact" : "window-necessary";
}

namespace {

// Fixed data shared by every search worker.
struct SearchPlan {
  const BigradedTable& table;
  std::vector<Position> order;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  std::vector<Sequence> row_mult;  // [n]^{i-1}, index i >= 1
  std::vector<Sequence> col_mult;  // [m]^{j-1}, index j >= 1

  SearchPlan(const BigradedTable& t, const Limits& limits) : table(t) {
    for (std::size_t s = 0; s + 2 <= t.rows() + t.cols(); ++s) {
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (s >= i && s - i < t.cols()) order.push_back({i, s - i});
      }
    }
    for (std::size_t i = 0; i < t.rows(); ++i) alpha.push_back(t.alpha(i));
    for (std::size_t j = 0; j < t.cols(); ++j) beta.push_back(t.beta(j));
    row_mult.resize(t.rows());
    col_mult.resize(t.cols());
    for (std::size_t i = 1; i < t.rows(); ++i) row_mult[i] = bracket_power(t.n(), i - 1, limits);
    for (std::size_t j = 1; j < t.cols(); ++j) col_mult[j] = bracket_power(t.m(), j - 1, limits);
  }
};

using Grid = std::vector<std::vector<FerrersMatrix>>;

FerrersMatrix position_bound(const SearchPlan& plan, const Grid& grid, Position p) {
  const std::size_t rows = plan.alpha[p.i];
  const std::size_t cols = plan.beta[p.j];
  FerrersMatrix bound = FerrersMatrix::full(rows, cols);
  if (p.i > 0) {
    FerrersMatrix expanded = row_expand(grid[p.i - 1][p.j], plan.row_mult[p.i]);
    if (expanded.rows() != rows) throw ConsistencyError("row expansion has the wrong height");
    bound = ferrers_meet(bound, expanded);
  }
  if (p.j > 0) {
    FerrersMatrix expanded = col_expand(grid[p.i][p.j - 1], plan.col_mult[p.j]);
    if (expanded.cols() != cols) throw ConsistencyError("column expansion has the wrong width");
    bound = ferrers_meet(bound, expanded);
  }
  return bound;
}

class CandidateCache {
 public:
  std::shared_ptr<const std::vector<FerrersMatrix>> get(const FerrersMatrix& bound,
                                                        std::size_t area) {
    Key key{bound.cols(), bound.row_lengths(), area};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto list = std::make_shared<const std::vector<FerrersMatrix>>(enumerate_sub_ferrers(bound, area));
    cache_.emplace(std::move(key), list);
    return list;
  }

 private:
  using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::size_t>;
  std::map<Key, std::shared_ptr<const std::vector<FerrersMatrix>>> cache_;
};

struct SubtreeResult {
  std::uint64_t count = 0;
  std::vector<Certificate> certificates;
  std::optional<std::size_t> deepest_failure;  // index into plan.order
};

class Searcher {
 public:
  Searcher(const SearchPlan& plan, CertifyMode mode, std::atomic<std::uint64_t>& nodes,
           std::uint64_t node_limit)
      : plan_(plan), mode_(mode), nodes_(nodes), node_limit_(node_limit) {}

  SubtreeResult run(Grid grid, std::size_t start) {
    result_ = {};
    grid_ = std::move(grid);
    dfs(start);
    return std::move(result_);
  }

  std::vector<FerrersMatrix> candidates(const Grid& grid, std::size_t k) {
    const Position p = plan_.order[k];
    return *cache_.get(position_bound(plan_, grid, p), plan_.table.value(p.i, p.j));
  }

 private:
  // Returns true to stop the whole search.
  bool dfs(std::size_t k) {
    if (k == plan_.order.size()) {
      ++result_.count;
      if (mode_ == CertifyMode::kEnumerate || result_.certificates.empty()) {
        result_.certificates.push_back({plan_.table.n(), plan_.table.m(), grid_});
      }
      return mode_ == CertifyMode::kFirst;
    }
    const Position p = plan_.order[k];
    const auto list = cache_.get(position_bound(plan_, grid_, p), plan_.table.value(p.i, p.j));
    if (list->empty()) {
      if (!result_.deepest_failure || *result_.deepest_failure < k) result_.deepest_failure = k;
      return false;
    }
    for (const auto& candidate : *list) {
      if (nodes_.fetch_add(1, std::memory_order_relaxed) >= node_limit_) {
        throw SearchLimitExceeded("certifier visited more than " + std::to_string(node_limit_) +
                                      " search nodes",
                                  result_.count);
      }
      grid_[p.i][p.j] = candidate;
      if (dfs(k + 1)) return true;
    }
    return false;
  }

  const SearchPlan& plan_;
  CertifyMode mode_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t node_limit_;
  CandidateCache cache_;
  Grid grid_;
  SubtreeResult result_;
};

struct FrontierNode {
  Grid grid;
};

}  // namespace

CertifyResult certify_fractal(const BigradedTable& table, const CertifyOptions& options) {
  CertifyResult result;
  const std::size_t last_i = table.rows() - 1;
  const std::size_t last_j = table.cols() - 1;
  bool border_zero = true;
  for (std::size_t j = 0; j < table.cols(); ++j) border_zero &= table.value(last_i, j) == 0;
  for (std::size_t i = 0; i < table.rows(); ++i) border_zero &= table.value(i, last_j) == 0;
  result.window = border_zero ? WindowLabel::kExact : WindowLabel::kNecessary;

  if (table.value(0, 0) != 1) {
    result.witness = Position{0, 0};
    return result;
  }
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const BigInt cells = BigInt(table.alpha(i)) * table.beta(j);
      if (cells > options.limits.max_cells) {
        throw ResourceLimit("position (" + std::to_string(i) + "," + std::to_string(j) +
                            ") needs " + cells.str() + " cells, above the limit " +
                            std::to_string(options.limits.max_cells));
      }
    }
  }

  const SearchPlan plan(table, options.limits);
  // Values above alpha_i * beta_j can never be met; report the first one in
  // search order.
  for (std::size_t k = 0; k < plan.order.size(); ++k) {
    const Position p = plan.order[k];
    if (table.value(p.i, p.j) > plan.alpha[p.i] * plan.beta[p.j]) {
      result.witness = p;
      return result;
    }
  }

  std::atomic<std::uint64_t> nodes{0};
  const std::uint64_t node_limit = options.limits.max_search_nodes;
  Grid empty_grid(table.rows(), std::vector<FerrersMatrix>(table.cols()));

  // Expand breadth-first, in candidate order, until there is enough work to
  // share; a single worker searches from the root directly.
  std::vector<FrontierNode> frontier{{empty_grid}};
  std::size_t depth = 0;
  std::optional<std::size_t> frontier_failure;
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs > 1) {
    Searcher expander(plan, options.mode, nodes, node_limit);
    while (depth < plan.order.size() && !frontier.empty() && frontier.size() < 4 * jobs) {
      std::vector<FrontierNode> next;
      const Position p = plan.order[depth];
      for (auto& node : frontier) {
        auto list = expander.candidates(node.grid, depth);
        if (list.empty()) frontier_failure = depth;
        for (auto& candidate : list) {
          if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_limit) {
            throw SearchLimitExceeded("certifier visited more than " +
                                          std::to_string(node_limit) + " search nodes",
                                      0);
          }
          FrontierNode child{node.grid};
          child.grid[p.i][p.j] = std::move(candidate);
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
      ++depth;
    }
  }

  std::vector<SubtreeResult> parts(frontier.size());
  std::atomic<std::size_t> next_item{0};
  std::atomic<std::size_t> best_first{frontier.size()};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    Searcher searcher(plan, options.mode, nodes, node_limit);
    for (;;) {
      const std::size_t item = next_item.fetch_add(1);
      if (item >= frontier.size()) return;
      if (options.mode == CertifyMode::kFirst && item > best_first.load()) continue;
      try {
        parts[item] = searcher.run(std::move(frontier[item].grid), depth);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next_item = frontier.size();
        return;
      }
      if (options.mode == CertifyMode::kFirst && parts[item].count > 0) {
        std::size_t cur = best_first.load();
        while (item < cur && !best_first.compare_exchange_weak(cur, item)) {
        }
      }
    }
  };
  const std::size_t threads = std::min(jobs, frontier.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::optional<std::size_t> deepest = frontier_failure;
  for (std::size_t item = 0; item < parts.size(); ++item) {
    auto& part = parts[item];
    if (part.deepest_failure && (!deepest || *deepest < *part.deepest_failure)) {
      deepest = part.deepest_failure;
    }
    if (part.count == 0) continue;
    if (options.mode == CertifyMode::kFirst) {
      result.count = 1;
      result.certificates.push_back(std::move(part.certificates.front()));
      break;
    }
    result.count += part.count;
    if (options.mode == CertifyMode::kEnumerate) {
      for (auto& c : part.certificates) result.certificates.push_back(std::move(c));
    } else if (result.certificates.empty()) {
      result.certificates.push_back(std::move(part.certificates.front()));
    }
  }
  result.accepted = result.count > 0;
  result.nodes = nodes.load();
  if (!result.accepted) {
    result.witness = deepest ? plan.order[*deepest] : Position{0, 0};
  }
  return result;
}

CertificateCheck validate_certificate(const BigradedTable& table, const Certificate& cert) {
  auto fail = [](std::size_t i, std::size_t j, std::string why) {
    return CertificateCheck{false, {i, j}, std::move(why)};
  };
  if (cert.n != table.n() || cert.m != table.m()) {
    return fail(0, 0, "certificate variable counts differ from the table");
  }
  if (cert.rows() != table.rows() || cert.cols() != table.cols()) {
    return fail(0, 0, "certificate window differs from the table");
  }
  for (const auto& row : cert.grid) {
    if (row.size() != table.cols()) return fail(0, 0, "certificate grid is ragged");
  }
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const FerrersMatrix& mat = cert.at(i, j);
      if (mat.rows() != table.alpha(i) || mat.cols() != table.beta(j)) {
        return fail(i, j, "matrix is " + std::to_string(mat.rows()) + "x" +
                              std::to_string(mat.cols()) + ", expected " +
                              std::to_string(table.alpha(i)) + "x" +
                              std::to_string(table.beta(j)));
      }
      if (mat.area() != table.value(i, j)) {
        return fail(i, j, "area " + std::to_string(mat.area()) + " differs from H = " +
                              std::to_string(table.value(i, j)));
      }
    }
  }
  if (cert.at(0, 0) != FerrersMatrix::full(1, 1)) return fail(0, 0, "M_00 must be (1)");
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      if (i > 0) {
        const auto v = bracket_power(table.n(), i - 1);
        if (!ferrers_leq(cert.at(i, j), row_expand(cert.at(i - 1, j), v))) {
          return fail(i, j, "exceeds the row expansion of the matrix above");
        }
      }
      if (j > 0) {
        const auto w = bracket_power(table.m(), j - 1);
        if (!ferrers_leq(cert.at(i, j), col_expand(cert.at(i, j - 1), w))) {
          return fail(i, j, "exceeds the column expansion of the matrix to the left");
        }
      }
    }
  }
  return {};
}

std::string to_string(const BigradedMonomial& u) {
  std::string xs = u.x.degree() ? to_string(u.x) : "";
  std::string ys;
  for (std::size_t v = 0; v < u.y.exps.size(); ++v) {
    if (!u.y.exps[v]) continue;
    ys += "y" + std::to_string(v + 1);
    if (u.y.exps[v] > 1) ys += "^" + std::to_string(u.y.exps[v]);
  }
  if (xs.empty() && ys.empty()) return "1";
  return xs + ys;
}

namespace {

void require_size(const FerrersMatrix& mat, std::size_t i, std::size_t j, std::size_t n,
                  std::size_t m) {
  if (mat.rows() != graded_dim(n, i) || mat.cols() != graded_dim(m, j)) {
    throw InvalidArgument("matrix is " + std::to_string(mat.rows()) + "x" +
                          std::to_string(mat.cols()) + " but bidegree (" + std::to_string(i) +
                          "," + std::to_string(j) + ") needs " +
                          std::to_string(graded_dim(n, i)) + "x" +
                          std::to_string(graded_dim(m, j)));
  }
}

void require_members(const MonomialSet& set, std::size_t i, std::size_t j, std::size_t n,
                     std::size_t m) {
  for (const auto& u : set) {
    if (u.x.vars() != n || u.y.vars() != m || u.bidegree() != Position{i, j}) {
      throw InvalidArgument("monomial " + to_string(u) + " is not of bidegree (" +
                            std::to_string(i) + "," + std::to_string(j) + ") in " +
                            std::to_string(n) + "+" + std::to_string(m) + " variables");
    }
  }
}

}  // namespace

MonomialSet lambda(const FerrersMatrix& mat, std::size_t i, std::size_t j, std::size_t n,
                   std::size_t m) {
  require_size(mat, i, j, n, m);
  std::vector<Monomial> ys;
  for (std::size_t b = 1; b <= mat.cols(); ++b) ys.push_back(monomial_unrank(b, j, m));
  MonomialSet out;
  for (std::size_t a = 1; a <= mat.rows(); ++a) {
    const std::size_t len = mat.row_lengths()[a - 1];
    if (len == mat.cols()) continue;
    const Monomial x = monomial_unrank(a, i, n);
    for (std::size_t b = len + 1; b <= mat.cols(); ++b) out.insert({x, ys[b - 1]});
  }
  return out;
}

FerrersMatrix mu(const MonomialSet& set, std::size_t i, std::size_t j, std::size_t n,
                 std::size_t m) {
  require_members(set, i, j, n, m);
  const std::size_t rows = graded_dim(n, i);
  const std::size_t cols = graded_dim(m, j);
  std::set<std::pair<std::size_t, std::size_t>> zeros;
  for (const auto& u : set) {
    zeros.emplace(static_cast<std::size_t>(monomial_rank(u.x)),
                  static_cast<std::size_t>(monomial_rank(u.y)));
  }
  for (const auto& [a, b] : zeros) {
    const Monomial x = monomial_unrank(a, i, n);
    const Monomial y = monomial_unrank(b, j, m);
    if (a < rows && !zeros.count({a + 1, b})) {
      throw InvalidArgument("not bilex: " + to_string(BigradedMonomial{x, y}) + " is in L but " +
                            to_string(BigradedMonomial{monomial_unrank(a + 1, i, n), y}) +
                            " is not");
    }
    if (b < cols && !zeros.count({a, b + 1})) {
      throw InvalidArgument("not bilex: " + to_string(BigradedMonomial{x, y}) + " is in L but " +
                            to_string(BigradedMonomial{x, monomial_unrank(b + 1, j, m)}) +
                            " is not");
    }
  }
  std::vector<std::size_t> lengths(rows, cols);
  for (const auto& [a, b] : zeros) lengths[a - 1] = std::min(lengths[a - 1], b - 1);
  return FerrersMatrix(rows, cols, std::move(lengths));
}

bool is_bilex_set(const MonomialSet& set, std::size_t i, std::size_t j, std::size_t n,
                  std::size_t m) {
  require_members(set, i, j, n, m);
  const auto xs = monomials_of_degree(n, i);
  const auto ys = monomials_of_degree(m, j);
  for (const auto& u : set) {
    for (const auto& x : xs) {
      if (lex_compare(x, u.x) > 0 && !set.count({x, u.y})) return false;
    }
    for (const auto& y : ys) {
      if (lex_compare(y, u.y) > 0 && !set.count({u.x, y})) return false;
    }
  }
  return true;
}

BigradedMonomialIdeal::BigradedMonomialIdeal(std::size_t n, std::size_t m, std::size_t rows,
                                             std::size_t cols)
    : n_(n), m_(m), pieces_(rows, std::vector<MonomialSet>(cols)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("ideal window must be nonempty");
}

bool BigradedMonomialIdeal::contains(const BigradedMonomial& u) const {
  const Position p = u.bidegree();
  if (p.i >= rows() || p.j >= cols()) throw InvalidArgument("monomial outside the ideal window");
  return pieces_[p.i][p.j].count(u) > 0;
}

std::vector<BigradedMonomial> BigradedMonomialIdeal::minimal_generators() const {
  std::vector<BigradedMonomial> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      for (const auto& u : pieces_[i][j]) {
        bool minimal = true;
        for (std::size_t v = 0; v < n_ && minimal; ++v) {
          if (!u.x.exps[v]) continue;
          BigradedMonomial lower = u;
          --lower.x.exps[v];
          minimal = !pieces_[i - 1][j].count(lower);
        }
        for (std::size_t v = 0; v < m_ && minimal; ++v) {
          if (!u.y.exps[v]) continue;
          BigradedMonomial lower = u;
          --lower.y.exps[v];
          minimal = !pieces_[i][j - 1].count(lower);
        }
        if (minimal) out.push_back(u);
      }
    }
  }
  return out;
}

BigradedMonomialIdeal certificate_to_ideal(const Certificate& cert) {
  BigradedMonomialIdeal ideal(cert.n, cert.m, cert.rows(), cert.cols());
  for (std::size_t i = 0; i < cert.rows(); ++i) {
    for (std::size_t j = 0; j < cert.cols(); ++j) {
      ideal.piece(i, j) = lambda(cert.at(i, j), i, j, cert.n, cert.m);
    }
  }
  for (std::size_t i = 0; i < cert.rows(); ++i) {
    for (std::size_t j = 0; j < cert.cols(); ++j) {
      for (const auto& u : ideal.piece(i, j)) {
        if (i + 1 < cert.rows()) {
          for (std::size_t v = 1; v <= cert.n; ++v) {
            const BigradedMonomial up{u.x.times_var(v), u.y};
            if (!ideal.piece(i + 1, j).count(up)) {
              throw ConsistencyError("certificate ideal not closed: x" + std::to_string(v) +
                                     "*" + to_string(u) + " missing");
            }
          }
        }
        if (j + 1 < cert.cols()) {
          for (std::size_t v = 1; v <= cert.m; ++v) {
            const BigradedMonomial up{u.x, u.y.times_var(v)};
            if (!ideal.piece(i, j + 1).count(up)) {
              throw ConsistencyError("certificate ideal not closed: y" + std::to_string(v) +
                                     "*" + to_string(u) + " missing");
            }
          }
        }
      }
    }
  }
  return ideal;
}

BigradedTable bigraded_hilbert(std::span<const BigradedMonomial> gens, std::size_t n,
                               std::size_t m, std::size_t rows, std::size_t cols) {
  for (const auto& g : gens) {
    if (g.x.vars() != n || g.y.vars() != m) {
      throw InvalidArgument("generator " + to_string(g) + " has the wrong variable count");
    }
  }
  std::vector<std::vector<std::size_t>> values(rows, std::vector<std::size_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto xs = monomials_of_degree(n, i);
    for (std::size_t j = 0; j < cols; ++j) {
      const auto ys = monomials_of_degree(m, j);
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          const BigradedMonomial u{x, y};
          const bool covered = std::any_of(gens.begin(), gens.end(),
                                           [&](const BigradedMonomial& g) { return g.divides(u); });
          if (!covered) ++values[i][j];
        }
      }
    }
  }
  return BigradedTable(n, m, std::move(values));
}

BigradedTable bigraded_hilbert(const BigradedMonomialIdeal& ideal) {
  const auto gens = ideal.minimal_generators();
  return bigraded_hilbert(gens, ideal.n(), ideal.m(), ideal.rows(), ideal.cols());
}

}  // namespace hilfrac
