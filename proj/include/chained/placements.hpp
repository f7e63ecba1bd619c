#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chained/board.hpp"
#include "chained/counting.hpp"
#include "chained/errors.hpp"
#include "chained/matrix.hpp"

namespace chained {

// ---------------------------------------------------------------------------
// Rook placements

Validation check_placement(const RookPlacement& p);
inline bool validate_placement(const RookPlacement& p) { return check_placement(p).ok(); }

/// Return false from the visitor to stop early.
using PlacementVisitor = std::function<bool(const RookPlacement&)>;

/// Every valid m-rook placement exactly once, in lexicographic order of the
/// sorted square lists.
void enumerate_placements(const BoardSpec& board, int m, const PlacementVisitor& visit);
std::vector<RookPlacement> all_placements(const BoardSpec& board, int m);

/// Size of the enumerate_placements stream, counted without building placements.
BigCount count_placements_brute(const BoardSpec& board, int m);

// ---------------------------------------------------------------------------
// Chained permutations: k-tuples of 0/1 matrices of a maximum placement

struct ChainedPermutation {
  BoardSpec board;
  std::vector<IntMatrix> matrices;

  friend bool operator==(const ChainedPermutation&, const ChainedPermutation&) = default;
};

Validation check_chained_permutation(const BoardSpec& board, const std::vector<IntMatrix>& matrices);

/// Throws ValidationError if `p` is not a valid maximum placement.
ChainedPermutation placement_to_matrices(const RookPlacement& p);
RookPlacement matrices_to_placement(const ChainedPermutation& cp);

// ---------------------------------------------------------------------------
// One-line notation

struct OneLine {
  BoardSpec board;
  std::vector<std::vector<int>> blocks;  // k blocks of n entries, 0 = empty row

  friend bool operator==(const OneLine&, const OneLine&) = default;
};

Validation check_one_line(const OneLine& o);
inline bool validate_one_line(const OneLine& o) { return check_one_line(o).ok(); }

OneLine to_one_line(const ChainedPermutation& cp);
/// Throws ValidationError naming each violated condition.
ChainedPermutation from_one_line(const OneLine& o);

/// Blocks joined by '-', with a trailing '-' on circular boards. For n >= 10 the
/// entries inside a block are comma separated.
std::string format_one_line(const OneLine& o);
/// Infers n, k and the shape from the string. Throws ParseError; does not validate.
OneLine parse_one_line(std::string_view text);

// ---------------------------------------------------------------------------
// Chain graph and matchings

/// Vertex `index` (1..n) of grid row `row` (0..k; on circular boards row k is row 0).
struct ChainVertex {
  int row = 0;
  int index = 1;

  friend auto operator<=>(const ChainVertex&, const ChainVertex&) = default;
};

/// Edge joining vertex i of row `layer` with vertex j of row layer - 1; one per
/// entry (layer, i, j) of the chained matrices.
struct ChainEdge {
  int layer = 1;
  int i = 1;
  int j = 1;

  friend auto operator<=>(const ChainEdge&, const ChainEdge&) = default;
};

struct ChainGraph {
  BoardSpec board;
  std::vector<ChainVertex> vertices;
  std::vector<ChainEdge> edges;

  std::pair<ChainVertex, ChainVertex> endpoints(const ChainEdge& e) const;
  bool is_loop(const ChainEdge& e) const;
};

ChainGraph build_chain_graph(const BoardSpec& board);

struct ChainMatching {
  BoardSpec board;
  std::vector<ChainEdge> edges;  // sorted

  friend bool operator==(const ChainMatching&, const ChainMatching&) = default;
};

enum class MatchingKind { Perfect, NearPerfect, LeavesNUnmatched };
std::string_view to_string(MatchingKind kind);
/// Which kind of matching encodes maximum placements on this board.
MatchingKind expected_matching_kind(const BoardSpec& board);

Validation check_matching(const ChainMatching& m);

ChainMatching to_matching(const ChainedPermutation& cp);
ChainedPermutation from_matching(const ChainMatching& m);

}  // namespace chained
