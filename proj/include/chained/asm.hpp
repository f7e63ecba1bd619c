#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chained/board.hpp"
#include "chained/counting.hpp"
#include "chained/errors.hpp"
#include "chained/matrix.hpp"
#include "chained/placements.hpp"

namespace chained {

/// k-tuple of {-1,0,1} matrices with 0/1 row prefix sums, 0/1 chained
/// row-plus-bottom-up-column partial sums, and maximum total sum.
struct ChainedASM {
  BoardSpec board;
  std::vector<IntMatrix> matrices;

  friend bool operator==(const ChainedASM&, const ChainedASM&) = default;
};

/// Ordinary square alternating sign matrix.
struct PlainASM {
  IntMatrix matrix;

  int size() const { return matrix.rows(); }
  friend bool operator==(const PlainASM&, const PlainASM&) = default;
};

Validation check_chained_asm(const BoardSpec& board, const std::vector<IntMatrix>& matrices);
inline bool validate_chained_asm(const ChainedASM& a) { return check_chained_asm(a.board, a.matrices).ok(); }

/// Row-prefix and chained-column conditions only, without the maximum-sum
/// requirement.
bool satisfies_partial_sum_conditions(const BoardSpec& board, const std::vector<IntMatrix>& matrices);

Validation check_plain_asm(const IntMatrix& m);
bool is_quarter_turn_symmetric(const IntMatrix& m);

/// Return false to stop early.
using AsmVisitor = std::function<bool(const ChainedASM&)>;

/// Every chained ASM on the board exactly once, in a fixed order.
void enumerate_chained_asm(const BoardSpec& board, const AsmVisitor& visit);
std::vector<ChainedASM> all_chained_asms(const BoardSpec& board);
/// Same search without materializing matrices.
std::uint64_t count_chained_asm(const BoardSpec& board);
/// Search nodes visited by the last count on this thread (cost calibration).
std::uint64_t last_search_nodes();

Composition asm_sum_composition(const ChainedASM& a);

/// Chained permutations are exactly the chained ASMs without -1 entries.
ChainedASM asm_from_permutation(const ChainedPermutation& cp);
/// Throws ValidationError when the ASM has a -1 entry.
ChainedPermutation asm_to_permutation(const ChainedASM& a);

/// Linear board, k odd: the odd-indexed matrices; even-indexed ones are zero.
std::vector<PlainASM> split_linear_odd(const ChainedASM& a);
ChainedASM merge_linear_odd(int n, const std::vector<PlainASM>& parts);

/// Circular board, k = 4: the 2n x 2n ASM with A1 top-left, A2 turned clockwise
/// top-right, A3 turned half bottom-right and A4 turned counterclockwise bottom-left.
PlainASM concat_circular_k4(const ChainedASM& a);
ChainedASM split_circular_k4(const PlainASM& m);

/// Circular board, k = 1, n even: four rotated copies of A1 as above; the result
/// is quarter-turn symmetric.
PlainASM fold_qt(const ChainedASM& a);
ChainedASM unfold_qt(const PlainASM& m);

}  // namespace chained
