#include "hilfrac/ferrers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hilfrac/error.hpp"

namespace hilfrac {

FerrersMatrix::FerrersMatrix(std::size_t rows, std::size_t cols,
                             std::vector<std::size_t> row_lengths)
    : rows_(rows), cols_(cols), lengths_(std::move(row_lengths)) {
  if (lengths_.size() > rows_) {
    throw InvalidArgument("Ferrers matrix: " + std::to_string(lengths_.size()) +
                          " row lengths for " + std::to_string(rows_) + " rows");
  }
  lengths_.resize(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (lengths_[r] > cols_) {
      throw InvalidArgument("Ferrers matrix: row length " + std::to_string(lengths_[r]) +
                            " exceeds " + std::to_string(cols_) + " columns");
    }
    if (r > 0 && lengths_[r] > lengths_[r - 1]) {
      throw InvalidArgument("Ferrers matrix: row lengths must be weakly decreasing");
    }
  }
}

FerrersMatrix FerrersMatrix::full(std::size_t rows, std::size_t cols) {
  return FerrersMatrix(rows, cols, std::vector<std::size_t>(rows, cols));
}

FerrersMatrix FerrersMatrix::zero(std::size_t rows, std::size_t cols) {
  return FerrersMatrix(rows, cols);
}

std::vector<std::size_t> FerrersMatrix::partition() const {
  auto out = lengths_;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t FerrersMatrix::area() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::size_t{0});
}

std::string to_string(const FerrersMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << '\n';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << (m.at(r, c) ? 1 : 0);
  }
  return os.str();
}

FerrersMatrix row_expand(const FerrersMatrix& m, std::span<const std::size_t> v) {
  if (v.size() != m.rows()) {
    throw InvalidArgument("row_expand: " + std::to_string(v.size()) + " multiplicities for " +
                          std::to_string(m.rows()) + " rows");
  }
  std::vector<std::size_t> lengths;
  for (std::size_t r = 0; r < m.rows(); ++r) lengths.insert(lengths.end(), v[r], m.row_lengths()[r]);
  const std::size_t rows = lengths.size();
  return FerrersMatrix(rows, m.cols(), std::move(lengths));
}

FerrersMatrix col_expand(const FerrersMatrix& m, std::span<const std::size_t> w) {
  if (w.size() != m.cols()) {
    throw InvalidArgument("col_expand: " + std::to_string(w.size()) + " multiplicities for " +
                          std::to_string(m.cols()) + " columns");
  }
  std::vector<std::size_t> prefix(w.size() + 1, 0);
  std::partial_sum(w.begin(), w.end(), prefix.begin() + 1);
  std::vector<std::size_t> lengths(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) lengths[r] = prefix[m.row_lengths()[r]];
  return FerrersMatrix(m.rows(), prefix.back(), std::move(lengths));
}

namespace {

void require_same_size(const FerrersMatrix& lhs, const FerrersMatrix& rhs, const char* op) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw InvalidArgument(std::string(op) + ": size mismatch " + std::to_string(lhs.rows()) +
                          "x" + std::to_string(lhs.cols()) + " vs " +
                          std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
}

}  // namespace

bool ferrers_leq(const FerrersMatrix& lhs, const FerrersMatrix& rhs) {
  require_same_size(lhs, rhs, "ferrers_leq");
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    if (lhs.row_lengths()[r] > rhs.row_lengths()[r]) return false;
  }
  return true;
}

FerrersMatrix ferrers_meet(const FerrersMatrix& lhs, const FerrersMatrix& rhs) {
  require_same_size(lhs, rhs, "ferrers_meet");
  std::vector<std::size_t> lengths(lhs.rows());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    lengths[r] = std::min(lhs.row_lengths()[r], rhs.row_lengths()[r]);
  }
  return FerrersMatrix(lhs.rows(), lhs.cols(), std::move(lengths));
}

namespace {

struct SubFerrersEnumerator {
  const std::vector<std::size_t>& bound;
  std::size_t rows;
  std::size_t cols;
  std::vector<std::size_t> current;
  std::vector<FerrersMatrix> out;

  // Largest area rows r.. can still hold when no row may exceed `cap`.
  std::size_t capacity(std::size_t r, std::size_t cap) const {
    std::size_t total = 0;
    for (std::size_t k = r; k < rows; ++k) {
      const std::size_t room = std::min(bound[k], cap);
      if (room == 0) break;  // bound is weakly decreasing
      total += room;
    }
    return total;
  }

  void run(std::size_t r, std::size_t cap, std::size_t left) {
    if (left == 0) {
      out.emplace_back(rows, cols, current);
      return;
    }
    if (r == rows) return;
    const std::size_t top = std::min({bound[r], cap, left});
    for (std::size_t len = top; len >= 1; --len) {
      if (len + capacity(r + 1, len) < left) break;  // smaller len only holds less
      current.push_back(len);
      run(r + 1, len, left - len);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<FerrersMatrix> enumerate_sub_ferrers(const FerrersMatrix& bound, std::size_t area) {
  SubFerrersEnumerator e{bound.row_lengths(), bound.rows(), bound.cols(), {}, {}};
  if (area <= bound.area()) e.run(0, bound.cols(), area);
  return std::move(e.out);
}

}  // namespace hilfrac
