#include "chained/board.hpp"

#include <algorithm>
#include <functional>

#include "chained/errors.hpp"

namespace chained {

std::string_view to_string(Shape shape) {
  return shape == Shape::Linear ? "linear" : "circular";
}

Shape parse_shape(std::string_view text) {
  if (text == "linear") return Shape::Linear;
  if (text == "circular") return Shape::Circular;
  throw DomainError("unknown shape '" + std::string(text) + "' (expected linear or circular)");
}

BoardSpec::BoardSpec(Shape shape, int n, int k) : shape_(shape), n_(n), k_(k) {
  if (n < 1) throw DomainError("board side n must be >= 1, got " + std::to_string(n));
  if (k < 1) throw DomainError("board count k must be >= 1, got " + std::to_string(k));
}

std::optional<int> BoardSpec::previous(int board) const {
  if (board > 1) return board - 1;
  if (circular()) return k_;
  return std::nullopt;
}

std::optional<int> BoardSpec::next(int board) const {
  if (board < k_) return board + 1;
  if (circular()) return 1;
  return std::nullopt;
}

std::string describe(const BoardSpec& board) {
  return std::string(to_string(board.shape())) + " n=" + std::to_string(board.n()) +
         " k=" + std::to_string(board.k());
}

bool in_range(const BoardSpec& board, const Square& s) {
  return s.board >= 1 && s.board <= board.k() && s.row >= 1 && s.row <= board.n() && s.col >= 1 &&
         s.col <= board.n();
}

void require_in_range(const BoardSpec& board, const Square& s) {
  if (!in_range(board, s))
    throw DomainError("square (" + std::to_string(s.board) + "," + std::to_string(s.row) + "," +
                      std::to_string(s.col) + ") is outside " + describe(board));
}

int Composition::sum() const {
  int s = 0;
  for (int a : parts) s += a;
  return s;
}

std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.parts[i]);
  }
  return out + ")";
}

bool is_admissible(const BoardSpec& board, const Composition& c) {
  const int n = board.n();
  const int k = board.k();
  if (static_cast<int>(c.parts.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (c.parts[i] < 0 || c.parts[i] > n) return false;
    const int prev = i > 0 ? c.parts[i - 1] : (board.circular() ? c.parts[k - 1] : 0);
    if (prev + c.parts[i] > n) return false;
  }
  return true;
}

bool attacks(const BoardSpec& board, const Square& s, const Square& t) {
  require_in_range(board, s);
  require_in_range(board, t);
  if (s.board == t.board && (s.row == t.row || s.col == t.col)) return true;
  // row j of board b attacks column j of next(b)
  auto chained_pair = [&](const Square& a, const Square& b) {
    auto nb = board.next(a.board);
    return nb && *nb == b.board && a.row == b.col;
  };
  return chained_pair(s, t) || chained_pair(t, s);
}

std::vector<Composition> admissible_compositions(const BoardSpec& board, int m) {
  const int n = board.n();
  const int k = board.k();
  if (m < 0 || m > n * k)
    throw DomainError("rook count m=" + std::to_string(m) + " outside 0.." + std::to_string(n * k));
  std::vector<Composition> out;
  std::vector<int> parts(k, 0);
  std::function<void(int, int)> extend = [&](int i, int remaining) {
    if (i == k) {
      if (remaining == 0 && (!board.circular() || parts[k - 1] + parts[0] <= n))
        out.push_back(Composition{parts});
      return;
    }
    const int prev = i > 0 ? parts[i - 1] : 0;
    const int hi = std::min(n - prev, remaining);
    for (int a = 0; a <= hi; ++a) {
      if (remaining - a > (k - 1 - i) * n) continue;
      parts[i] = a;
      extend(i + 1, remaining - a);
    }
  };
  extend(0, m);
  return out;
}

int max_rooks(const BoardSpec& board) {
  const int n = board.n();
  const int k = board.k();
  return board.circular() ? (n * k) / 2 : n * ((k + 1) / 2);
}

std::vector<Composition> maximum_compositions(const BoardSpec& board) {
  const int n = board.n();
  const int k = board.k();
  std::vector<Composition> out;
  if (!board.circular()) {
    if (k % 2 == 1) {
      std::vector<int> parts(k);
      for (int i = 0; i < k; ++i) parts[i] = i % 2 == 0 ? n : 0;
      out.push_back({parts});
    } else {
      // (n - j_1, j_1, ..., n - j_{k/2}, j_{k/2}) with j weakly increasing
      const int half = k / 2;
      std::vector<int> parts(k);
      std::function<void(int, int)> chain = [&](int l, int lo) {
        if (l == half) {
          out.push_back({parts});
          return;
        }
        for (int j = lo; j <= n; ++j) {
          parts[2 * l] = n - j;
          parts[2 * l + 1] = j;
          chain(l + 1, j);
        }
      };
      chain(0, 0);
    }
  } else if (k % 2 == 0) {
    for (int j = 0; j <= n; ++j) {
      std::vector<int> parts(k);
      for (int i = 0; i < k; ++i) parts[i] = i % 2 == 0 ? n - j : j;
      out.push_back({parts});
    }
  } else if (n % 2 == 0) {
    out.push_back({std::vector<int>(k, n / 2)});
  } else {
    // cyclic shifts of ((n-1)/2, (n+1)/2, ..., (n+1)/2, (n-1)/2)
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i % 2 == 0 ? (n - 1) / 2 : (n + 1) / 2;
    for (int s = 0; s < k; ++s) {
      std::vector<int> parts(k);
      for (int i = 0; i < k; ++i) parts[i] = base[(i + s) % k];
      out.push_back({parts});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Composition RookPlacement::composition() const {
  Composition c{std::vector<int>(board.k(), 0)};
  for (const auto& s : squares) ++c.parts[s.board - 1];
  return c;
}

RookPlacement make_placement(const BoardSpec& board, std::vector<Square> squares) {
  for (const auto& s : squares) require_in_range(board, s);
  std::sort(squares.begin(), squares.end());
  return RookPlacement{board, std::move(squares)};
}

RookPlacement canonical_placement(const BoardSpec& board, const Composition& c) {
  if (!is_admissible(board, c))
    throw DomainError("composition " + to_string(c) + " is not admissible on " + describe(board));
  const int k = board.k();
  std::vector<Square> squares;
  for (int b = 1; b <= k; ++b) {
    const int a = c.parts[b - 1];
    // board 1 starts at column 1; later boards skip the columns blocked by the
    // previous board's occupied rows 1..a_{b-1}
    const int col_offset = b == 1 ? 0 : c.parts[b - 2];
    // circular: the last board skips rows 1..a_1, which attack board 1's columns
    const int row_offset = board.circular() && b == k ? c.parts[0] : 0;
    for (int l = 1; l <= a; ++l) squares.push_back({b, row_offset + l, col_offset + l});
  }
  return make_placement(board, std::move(squares));
}

}  // namespace chained
