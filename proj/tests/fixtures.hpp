#pragma once

#include <vector>

#include "chained/asm.hpp"
#include "chained/placements.hpp"
#include "chained/views.hpp"

namespace fixture {

using chained::BoardSpec;
using chained::IntMatrix;

/// Twelve rooks on six chained 4x4 boards arranged in a circle.
inline chained::RookPlacement circular_4_6_rooks() {
  return chained::make_placement(BoardSpec::circular(4, 6), {{1, 2, 2},
                                                             {2, 1, 3}, {2, 2, 1}, {2, 4, 4},
                                                             {3, 1, 3},
                                                             {4, 1, 3}, {4, 2, 4}, {4, 3, 2},
                                                             {5, 4, 4},
                                                             {6, 1, 1}, {6, 3, 3}, {6, 4, 2}});
}

/// Ten rooks on four chained 5x5 boards in a line.
inline chained::RookPlacement linear_5_4_rooks() {
  return chained::make_placement(BoardSpec::linear(5, 4), {{1, 1, 3}, {1, 3, 5}, {1, 5, 2},
                                                           {2, 2, 4}, {2, 3, 2},
                                                           {3, 4, 4}, {3, 5, 5},
                                                           {4, 1, 3}, {4, 2, 1}, {4, 3, 2}});
}

/// Element of ASM°_{4,6} with -1 entries in every pair of boards.
inline chained::ChainedASM circular_4_6_asm() {
  return {BoardSpec::circular(4, 6),
          {IntMatrix::from_rows({{0, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}),
           IntMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 0}, {0, 0, 0, 1}}),
           IntMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, -1, 0}, {0, 0, 1, -1}}),
           IntMatrix::from_rows({{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}}),
           IntMatrix::from_rows({{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 1}, {0, 0, 1, -1}}),
           IntMatrix::from_rows({{0, 0, 0, 0}, {0, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 0, 1}})}};
}

/// First n x 2n matrix of the ASM above.
inline IntMatrix circular_4_6_first_pair() {
  return IntMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0, 0},
                               {1, -1, 0, 0, 0, 1, 0, 0},
                               {0, 0, 1, 0, 0, -1, 1, 0},
                               {0, 0, 0, 0, 1, 0, 0, 0}});
}

inline chained::MonotoneTriangleChain circular_4_6_triangles() {
  return {4, 6,
          {{{{2}, {1, 6}, {1, 3, 7}, {1, 3, 5, 7}}},
           {{{3}, {3, 4}, {1, 4, 6}, {1, 3, 5, 8}}},
           {{{6}, {3, 7}, {2, 4, 7}, {2, 3, 5, 7}}}}};
}

/// Element of ASM°_{6,1}.
inline IntMatrix qt_quarter() {
  return IntMatrix::from_rows({{0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 1, -1, 0, 0},
                               {0, 1, -1, 0, 0, 1},
                               {0, 0, 0, 1, 0, -1},
                               {1, -1, 1, -1, 1, 0}});
}

/// Its quarter-turn symmetric 12 x 12 assembly.
inline IntMatrix qt_full() {
  return IntMatrix::from_rows({{0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, -1, 0, 1, 0, 0, 0},
                               {0, 0, 1, -1, 0, 0, 1, 0, -1, 1, 0, 0},
                               {0, 1, -1, 0, 0, 1, -1, 1, 0, -1, 1, 0},
                               {0, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 0},
                               {1, -1, 1, -1, 1, 0, 0, -1, 1, 0, 0, 0},
                               {0, 0, 0, 1, -1, 0, 0, 1, -1, 1, -1, 1},
                               {0, 0, 0, 0, 0, 1, -1, 0, 1, 0, 0, 0},
                               {0, 1, -1, 0, 1, -1, 1, 0, 0, -1, 1, 0},
                               {0, 0, 1, -1, 0, 1, 0, 0, -1, 1, 0, 0},
                               {0, 0, 0, 1, 0, -1, 0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}});
}

/// First element of ASM⁻_{3,2} (enumeration order) with a -1 in the top row of
/// its first matrix. No element has one in the top row of the second matrix.
inline chained::ChainedASM linear_3_2_with_top_minus_one() {
  chained::ChainedASM found{BoardSpec::linear(3, 2), {}};
  chained::enumerate_chained_asm(found.board, [&](const chained::ChainedASM& a) {
    for (int j = 0; j < 3; ++j)
      if (a.matrices[0](0, j) == -1) {
        found = a;
        return false;
      }
    return true;
  });
  return found;
}

}  // namespace fixture
