#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hilfrac {

/// 0/1 matrix whose ones form a staircase anchored at the top-left corner,
/// stored as its weakly decreasing row lengths (an integer partition of the
/// area). Row r has ones in columns 1..row_lengths[r].
class FerrersMatrix {
 public:
  FerrersMatrix() = default;
  /// Pads row_lengths with zeros to `rows`. Throws InvalidArgument if the
  /// lengths increase, exceed `cols`, or there are more than `rows` of them.
  FerrersMatrix(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_lengths = {});

  static FerrersMatrix full(std::size_t rows, std::size_t cols);
  static FerrersMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& row_lengths() const { return lengths_; }
  /// Row lengths with trailing zeros dropped.
  std::vector<std::size_t> partition() const;
  std::size_t area() const;
  /// Entry at 0-based (row, col).
  bool at(std::size_t row, std::size_t col) const { return col < lengths_[row]; }

  friend bool operator==(const FerrersMatrix&, const FerrersMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> lengths_;
};

std::string to_string(const FerrersMatrix& m);

/// Repeat row r of m v[r] times.
FerrersMatrix row_expand(const FerrersMatrix& m, std::span<const std::size_t> v);
/// Repeat column c of m w[c] times.
FerrersMatrix col_expand(const FerrersMatrix& m, std::span<const std::size_t> w);

/// Entrywise order; both throw InvalidArgument on a size mismatch.
bool ferrers_leq(const FerrersMatrix& lhs, const FerrersMatrix& rhs);
FerrersMatrix ferrers_meet(const FerrersMatrix& lhs, const FerrersMatrix& rhs);

/// Every Ferrers matrix N <= bound with area(N) = area, in decreasing lex
/// order of row lengths. Empty when area > area(bound).
std::vector<FerrersMatrix> enumerate_sub_ferrers(const FerrersMatrix& bound, std::size_t area);

}  // namespace hilfrac
