#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chained {

enum class Shape { Linear, Circular };

std::string_view to_string(Shape shape);
/// Accepts "linear" / "circular"; throws DomainError otherwise.
Shape parse_shape(std::string_view text);

/// k chained n x n chessboards. Row j of board i-1 attacks column j of board i;
/// on circular boards board 0 is board k.
class BoardSpec {
 public:
  BoardSpec(Shape shape, int n, int k);

  static BoardSpec linear(int n, int k) { return {Shape::Linear, n, k}; }
  static BoardSpec circular(int n, int k) { return {Shape::Circular, n, k}; }

  Shape shape() const { return shape_; }
  int n() const { return n_; }
  int k() const { return k_; }
  bool circular() const { return shape_ == Shape::Circular; }

  /// Board whose rows attack the columns of `board` (1-based), if any.
  std::optional<int> previous(int board) const;
  /// Board whose columns are attacked by the rows of `board`, if any.
  std::optional<int> next(int board) const;

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;

 private:
  Shape shape_;
  int n_;
  int k_;
};

std::string describe(const BoardSpec& board);

/// A cell (board, row, col), all 1-based.
struct Square {
  int board = 1;
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Square&, const Square&) = default;
};

bool in_range(const BoardSpec& board, const Square& s);
/// Throws DomainError if `s` is off the board.
void require_in_range(const BoardSpec& board, const Square& s);

/// Per-board rook counts (a_1, ..., a_k).
struct Composition {
  std::vector<int> parts;

  int sum() const;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

std::string to_string(const Composition& c);

/// True when every a_{i-1} + a_i <= n, with a_0 = 0 (linear) or a_k (circular).
bool is_admissible(const BoardSpec& board, const Composition& c);

/// Attack relation on the chained board. A square always attacks itself; on a
/// circular board with k = 1 a diagonal square is additionally chained to itself.
bool attacks(const BoardSpec& board, const Square& s, const Square& t);

/// All admissible compositions with sum m, lexicographic.
std::vector<Composition> admissible_compositions(const BoardSpec& board, int m);

/// n * ceil(k/2) for linear boards, floor(n*k/2) for circular ones.
int max_rooks(const BoardSpec& board);

/// Compositions of maximum placements from their closed characterizations,
/// lexicographic.
std::vector<Composition> maximum_compositions(const BoardSpec& board);

struct RookPlacement {
  BoardSpec board;
  std::vector<Square> squares;  // kept sorted

  int size() const { return static_cast<int>(squares.size()); }
  Composition composition() const;

  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

/// Builds a placement with its squares in sorted order.
RookPlacement make_placement(const BoardSpec& board, std::vector<Square> squares);

/// Diagonal-shift witness placement for an admissible composition.
RookPlacement canonical_placement(const BoardSpec& board, const Composition& c);

}  // namespace chained
