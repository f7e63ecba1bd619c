#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chained/asm.hpp"
#include "chained/errors.hpp"

// Avatars of chained ASMs on circular boards with an even number of boards.
// Every entry point throws UnsupportedDomain for any other board.

namespace chained {

void require_circular_even(const BoardSpec& board);

// ---------------------------------------------------------------------------
// Monotone triangles

/// rows[m-1] holds m strictly increasing values in 1..2n.
struct MonotoneTriangle {
  std::vector<std::vector<int>> rows;

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

/// One triangle per pair of consecutive boards (2l-1, 2l).
struct MonotoneTriangleChain {
  int n = 0;
  int k = 0;
  std::vector<MonotoneTriangle> triangles;

  friend bool operator==(const MonotoneTriangleChain&, const MonotoneTriangleChain&) = default;
};

/// [A^(2l-1) | A^(2l) turned clockwise], the n x 2n matrix behind triangle l.
IntMatrix paired_matrix(const ChainedASM& a, int l);

MonotoneTriangleChain to_monotone_triangles(const ChainedASM& a);
/// Throws ValidationError if the chain fails check_mt_chain.
ChainedASM from_monotone_triangles(const MonotoneTriangleChain& t);

/// Strict interlacing in every triangle, and no i <= n in the bottom row of
/// triangle l while 2n+1-i is in the bottom row of triangle l-1 (cyclically).
Validation check_mt_chain(const MonotoneTriangleChain& t);
inline bool validate_mt_chain(const MonotoneTriangleChain& t) { return check_mt_chain(t).ok(); }

// ---------------------------------------------------------------------------
// Chained grid graph

/// v^(board)_{row,col}; row 0 or col 0 marks a boundary vertex.
struct GridVertex {
  int board = 1;
  int row = 1;
  int col = 1;

  bool interior() const { return row > 0 && col > 0; }
  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

enum class GridEdgeKind { Horizontal, Vertical, Chaining, BoundaryLeft, BoundaryTop };

/// Horizontal (l,i,j): v_{i,j} - v_{i,j+1}. Vertical (l,i,j): v_{i,j} - v_{i+1,j}.
/// Chaining (l,i): v^(l)_{i,n} - v^(l+1)_{n,i}. BoundaryLeft (l,i): v_{i,0} - v_{i,1}.
/// BoundaryTop (l,j): v_{0,j} - v_{1,j}. Unused coordinates are 0.
struct GridEdge {
  GridEdgeKind kind = GridEdgeKind::Horizontal;
  int board = 1;
  int a = 1;
  int b = 0;
  GridVertex u;
  GridVertex v;

  /// "h:l:i:j", "v:l:i:j", "c:l:i", "bl:l:i" or "bt:l:j".
  std::string id() const;
  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

/// Incident edge indices of an interior vertex.
struct Neighborhood {
  int north;
  int east;
  int south;
  int west;
};

class GridGraph {
 public:
  GridGraph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<GridVertex>& vertices() const { return vertices_; }
  const std::vector<GridEdge>& edges() const { return edges_; }

  int horizontal(int board, int i, int j) const;
  int vertical(int board, int i, int j) const;
  int chaining(int board, int i) const;
  int boundary_left(int board, int i) const;
  int boundary_top(int board, int j) const;

  Neighborhood around(const GridVertex& v) const;
  /// Index of the edge with this id; throws ParseError if there is none.
  int find(std::string_view id) const;
  bool contains(const GridVertex& v) const;

 private:
  int per_board() const { return 2 * n_ * (n_ - 1) + 3 * n_; }

  int n_;
  int k_;
  std::vector<GridVertex> vertices_;
  std::vector<GridEdge> edges_;
};

GridGraph build_grid_graph(int n, int k);

/// Parity of i + j + l.
inline int parity(const GridVertex& v) { return (v.row + v.col + v.board) % 2; }

// ---------------------------------------------------------------------------
// Square ice

/// heads[e] is the endpoint edge e points to, indexed like GridGraph::edges().
struct IceConfiguration {
  int n = 0;
  int k = 0;
  std::vector<GridVertex> heads;

  friend bool operator==(const IceConfiguration&, const IceConfiguration&) = default;
};

/// Orientation the boundary conditions prescribe for a boundary edge.
GridVertex boundary_head(const GridEdge& e);

IceConfiguration to_ice(const ChainedASM& a);
/// Throws ValidationError naming the offending edge or vertex.
ChainedASM from_ice(const IceConfiguration& c);

/// Boundary conditions plus two edges in and two out at every interior vertex.
Validation check_ice(const IceConfiguration& c);
inline bool validate_ice(const IceConfiguration& c) { return check_ice(c).ok(); }

// ---------------------------------------------------------------------------
// Fully packed loops

/// chosen[e] != 0 keeps edge e, indexed like GridGraph::edges().
struct FPLConfiguration {
  int n = 0;
  int k = 0;
  std::vector<char> chosen;

  friend bool operator==(const FPLConfiguration&, const FPLConfiguration&) = default;
};

/// Throws ValidationError if the ice configuration is invalid.
FPLConfiguration to_fpl(const IceConfiguration& c);
/// Throws ValidationError if the configuration fails check_fpl.
IceConfiguration from_fpl(const FPLConfiguration& f);

/// Left boundary edges exactly at odd rows, top ones exactly at even columns,
/// degree two at every interior vertex.
Validation check_fpl(const FPLConfiguration& f);
inline bool validate_fpl(const FPLConfiguration& f) { return check_fpl(f).ok(); }

}  // namespace chained
