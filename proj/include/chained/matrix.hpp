#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chained {

/// Dense small integer matrix. Indices are 0-based; everything printed or
/// serialized is 1-based.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  explicit IntMatrix(int size) : IntMatrix(size, size) {}

  /// Builds from nested rows; all rows must have equal length.
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  int row_sum(int r) const;
  int col_sum(int c) const;
  int total() const;
  bool is_zero() const;
  bool has_negative() const;

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

// Rotation convention: a quarter turn clockwise sends 1-based entry (i, j) of an
// r x c matrix to (j, r + 1 - i) of the c x r result.
IntMatrix rotate_cw(const IntMatrix& m);
IntMatrix rotate_ccw(const IntMatrix& m);
IntMatrix rotate_half(const IntMatrix& m);

/// Writes `block` into `target` with its top-left corner at (row, col).
void paste(IntMatrix& target, const IntMatrix& block, int row, int col);
IntMatrix slice(const IntMatrix& m, int row, int col, int rows, int cols);

/// Right-aligned text grid, one matrix row per line.
std::string to_text(const IntMatrix& m);

}  // namespace chained
