#include "chained/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "chained/errors.hpp"

namespace chained {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DomainError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

int IntMatrix::row_sum(int r) const {
  int s = 0;
  for (int c = 0; c < cols_; ++c) s += (*this)(r, c);
  return s;
}

int IntMatrix::col_sum(int c) const {
  int s = 0;
  for (int r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

int IntMatrix::total() const {
  int s = 0;
  for (int v : data_) s += v;
  return s;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v == 0; });
}

bool IntMatrix::has_negative() const {
  return std::any_of(data_.begin(), data_.end(), [](int v) { return v < 0; });
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

IntMatrix rotate_cw(const IntMatrix& m) {
  // 0-based: (r, c) -> (c, rows - 1 - r)
  IntMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(c, m.rows() - 1 - r) = m(r, c);
  return out;
}

IntMatrix rotate_ccw(const IntMatrix& m) {
  IntMatrix out(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(m.cols() - 1 - c, r) = m(r, c);
  return out;
}

IntMatrix rotate_half(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(m.rows() - 1 - r, m.cols() - 1 - c) = m(r, c);
  return out;
}

void paste(IntMatrix& target, const IntMatrix& block, int row, int col) {
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c) target(row + r, col + c) = block(r, c);
}

IntMatrix slice(const IntMatrix& m, int row, int col, int rows, int cols) {
  IntMatrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = m(row + r, col + c);
  return out;
}

std::string to_text(const IntMatrix& m) {
  const int width = m.has_negative() ? 2 : 1;
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      std::string cell = std::to_string(m(r, c));
      const int pad = width - static_cast<int>(cell.size());
      os << std::string(pad > 0 ? pad : 0, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace chained
