#include "chained/placements.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace chained {

namespace {

std::string square_text(const Square& s) {
  return "(" + std::to_string(s.board) + "," + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

// Depth-first search over (board, row) slots in increasing order; each slot holds
// at most one rook. Visiting squares in increasing order makes the stream
// lexicographic in the sorted square list.
class PlacementSearch {
 public:
  PlacementSearch(const BoardSpec& board, int m) : board_(board), m_(m) {
    if (board.n() > 30) throw DomainError("brute-force enumeration supports n <= 30");
    if (m < 0 || m > board.n() * board.k())
      throw DomainError("rook count m=" + std::to_string(m) + " outside 0.." +
                        std::to_string(board.n() * board.k()));
    rows_.assign(board.k() + 1, 0);
    cols_.assign(board.k() + 1, 0);
  }

  template <class OnComplete>
  void run(OnComplete&& on_complete) {
    stopped_ = false;
    search(0, 0, on_complete);
  }

  const std::vector<Square>& current() const { return chosen_; }

 private:
  template <class OnComplete>
  void search(int slot, int placed, OnComplete& on_complete) {
    if (stopped_) return;
    if (placed == m_) {
      if (!on_complete(chosen_)) stopped_ = true;
      return;
    }
    const int n = board_.n();
    const int total_slots = n * board_.k();
    for (int s = slot; s < total_slots; ++s) {
      if (m_ - placed > total_slots - s) return;
      const int b = s / n + 1;
      const int r = s % n + 1;
      const auto nb = board_.next(b);
      const auto pb = board_.previous(b);
      // row r of b is chained to column r of the next board
      if (nb && (cols_[*nb] >> r & 1u)) continue;
      for (int c = 1; c <= n; ++c) {
        if (cols_[b] >> c & 1u) continue;
        if (pb && (rows_[*pb] >> c & 1u)) continue;
        // self-chained board: a diagonal square attacks itself
        if (nb && *nb == b && r == c) continue;
        rows_[b] |= 1u << r;
        cols_[b] |= 1u << c;
        chosen_.push_back({b, r, c});
        search(s + 1, placed + 1, on_complete);
        chosen_.pop_back();
        rows_[b] &= ~(1u << r);
        cols_[b] &= ~(1u << c);
        if (stopped_) return;
      }
    }
  }

  BoardSpec board_;
  int m_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> cols_;
  std::vector<Square> chosen_;
  bool stopped_ = false;
};

}  // namespace

Validation check_placement(const RookPlacement& p) {
  Validation v;
  const auto& board = p.board;
  for (const auto& s : p.squares)
    if (!in_range(board, s)) v.fail("square " + square_text(s) + " is off the board");
  if (!v.ok()) return v;
  for (std::size_t a = 0; a < p.squares.size(); ++a) {
    const auto& s = p.squares[a];
    auto nb = board.next(s.board);
    if (nb && *nb == s.board && s.row == s.col)
      v.fail("square " + square_text(s) + " attacks itself through the chaining");
    for (std::size_t b = a + 1; b < p.squares.size(); ++b) {
      const auto& t = p.squares[b];
      if (s == t)
        v.fail("square " + square_text(s) + " is occupied twice");
      else if (attacks(board, s, t))
        v.fail("rooks at " + square_text(s) + " and " + square_text(t) + " attack each other");
    }
  }
  return v;
}

void enumerate_placements(const BoardSpec& board, int m, const PlacementVisitor& visit) {
  PlacementSearch search(board, m);
  search.run([&](const std::vector<Square>& squares) { return visit(RookPlacement{board, squares}); });
}

std::vector<RookPlacement> all_placements(const BoardSpec& board, int m) {
  std::vector<RookPlacement> out;
  enumerate_placements(board, m, [&](const RookPlacement& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

BigCount count_placements_brute(const BoardSpec& board, int m) {
  PlacementSearch search(board, m);
  std::uint64_t count = 0;
  search.run([&](const std::vector<Square>&) {
    ++count;
    return true;
  });
  return BigCount(count);
}

// ---------------------------------------------------------------------------

Validation check_chained_permutation(const BoardSpec& board, const std::vector<IntMatrix>& matrices) {
  Validation v;
  const int n = board.n();
  const int k = board.k();
  if (static_cast<int>(matrices.size()) != k) {
    v.fail("expected " + std::to_string(k) + " matrices, got " + std::to_string(matrices.size()));
    return v;
  }
  for (int l = 0; l < k; ++l) {
    const auto& x = matrices[l];
    if (x.rows() != n || x.cols() != n) {
      v.fail("matrix " + std::to_string(l + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
      return v;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x(i, j) != 0 && x(i, j) != 1)
          v.fail("matrix " + std::to_string(l + 1) + " entry (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ") is not 0 or 1");
  }
  if (!v.ok()) return v;
  for (int l = 0; l < k; ++l) {
    for (int i = 0; i < n; ++i) {
      if (matrices[l].row_sum(i) > 1)
        v.fail("matrix " + std::to_string(l + 1) + " row " + std::to_string(i + 1) + " has more than one 1");
      if (matrices[l].col_sum(i) > 1)
        v.fail("matrix " + std::to_string(l + 1) + " column " + std::to_string(i + 1) + " has more than one 1");
    }
    const auto prev = board.previous(l + 1);
    if (!prev) continue;
    for (int i = 0; i < n; ++i)
      if (matrices[*prev - 1].row_sum(i) + matrices[l].col_sum(i) > 1)
        v.fail("row " + std::to_string(i + 1) + " of matrix " + std::to_string(*prev) + " and column " +
               std::to_string(i + 1) + " of matrix " + std::to_string(l + 1) + " both hold a 1");
  }
  int total = 0;
  for (const auto& x : matrices) total += x.total();
  if (total != max_rooks(board))
    v.fail("entry sum " + std::to_string(total) + " is not the maximum " + std::to_string(max_rooks(board)));
  return v;
}

ChainedPermutation placement_to_matrices(const RookPlacement& p) {
  check_placement(p).require();
  const int need = max_rooks(p.board);
  if (p.size() != need)
    throw ValidationError({"placement has " + std::to_string(p.size()) + " rooks but a maximum placement has " +
                           std::to_string(need) + " (deficit " + std::to_string(need - p.size()) + ")"});
  ChainedPermutation cp{p.board, std::vector<IntMatrix>(p.board.k(), IntMatrix(p.board.n()))};
  for (const auto& s : p.squares) cp.matrices[s.board - 1](s.row - 1, s.col - 1) = 1;
  return cp;
}

RookPlacement matrices_to_placement(const ChainedPermutation& cp) {
  check_chained_permutation(cp.board, cp.matrices).require();
  std::vector<Square> squares;
  for (int l = 0; l < cp.board.k(); ++l)
    for (int i = 0; i < cp.board.n(); ++i)
      for (int j = 0; j < cp.board.n(); ++j)
        if (cp.matrices[l](i, j) == 1) squares.push_back({l + 1, i + 1, j + 1});
  return RookPlacement{cp.board, std::move(squares)};
}

// ---------------------------------------------------------------------------

Validation check_one_line(const OneLine& o) {
  Validation v;
  const int n = o.board.n();
  const int k = o.board.k();
  if (static_cast<int>(o.blocks.size()) != k) {
    v.fail("expected " + std::to_string(k) + " blocks, got " + std::to_string(o.blocks.size()));
    return v;
  }
  for (int l = 0; l < k; ++l)
    if (static_cast<int>(o.blocks[l].size()) != n) {
      v.fail("block " + std::to_string(l + 1) + " has " + std::to_string(o.blocks[l].size()) + " entries, expected " +
             std::to_string(n));
      return v;
    }
  int nonzero = 0;
  for (int l = 0; l < k; ++l) {
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
      const int p = o.blocks[l][i];
      if (p < 0 || p > n) {
        v.fail("range: block " + std::to_string(l + 1) + " entry " + std::to_string(i + 1) + " = " +
               std::to_string(p) + " is outside 0.." + std::to_string(n));
        continue;
      }
      if (p == 0) continue;
      ++nonzero;
      if (seen[p]) v.fail("distinct: block " + std::to_string(l + 1) + " repeats nonzero value " + std::to_string(p));
      seen[p] = true;
    }
  }
  if (!v.ok()) return v;
  if (nonzero != max_rooks(o.board))
    v.fail("count: " + std::to_string(nonzero) + " nonzero entries, expected " + std::to_string(max_rooks(o.board)));
  for (int l = 1; l <= k; ++l) {
    const auto prev = o.board.previous(l);
    if (!prev) continue;
    for (int i = 1; i <= n; ++i) {
      if (o.blocks[*prev - 1][i - 1] == 0) continue;
      for (int j = 1; j <= n; ++j)
        if (o.blocks[l - 1][j - 1] == i)
          v.fail("chaining: block " + std::to_string(*prev) + " row " + std::to_string(i) + " is occupied but block " +
                 std::to_string(l) + " row " + std::to_string(j) + " uses column " + std::to_string(i));
    }
  }
  return v;
}

OneLine to_one_line(const ChainedPermutation& cp) {
  check_chained_permutation(cp.board, cp.matrices).require();
  const int n = cp.board.n();
  OneLine o{cp.board, std::vector<std::vector<int>>(cp.board.k(), std::vector<int>(n, 0))};
  for (int l = 0; l < cp.board.k(); ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (cp.matrices[l](i, j) == 1) o.blocks[l][i] = j + 1;
  return o;
}

ChainedPermutation from_one_line(const OneLine& o) {
  check_one_line(o).require();
  const int n = o.board.n();
  ChainedPermutation cp{o.board, std::vector<IntMatrix>(o.board.k(), IntMatrix(n))};
  for (int l = 0; l < o.board.k(); ++l)
    for (int i = 0; i < n; ++i)
      if (o.blocks[l][i] != 0) cp.matrices[l](i, o.blocks[l][i] - 1) = 1;
  return cp;
}

std::string format_one_line(const OneLine& o) {
  const bool wide = o.board.n() >= 10;
  std::string out;
  for (std::size_t l = 0; l < o.blocks.size(); ++l) {
    if (l) out += '-';
    for (std::size_t i = 0; i < o.blocks[l].size(); ++i) {
      if (wide && i) out += ',';
      out += std::to_string(o.blocks[l][i]);
    }
  }
  if (o.board.circular()) out += '-';
  return out;
}

OneLine parse_one_line(std::string_view text) {
  if (text.empty()) throw ParseError("empty one-line string");
  const bool circular = text.back() == '-';
  if (circular) text.remove_suffix(1);
  const bool wide = text.find(',') != std::string_view::npos;
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dash = text.find('-', pos);
    const std::string_view block = text.substr(pos, dash == std::string_view::npos ? text.npos : dash - pos);
    std::vector<int> entries;
    if (wide) {
      std::size_t p = 0;
      while (true) {
        const std::size_t comma = block.find(',', p);
        const auto item = block.substr(p, comma == std::string_view::npos ? block.npos : comma - p);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
          throw ParseError("bad entry '" + std::string(item) + "' at offset " + std::to_string(pos + p));
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        p = comma + 1;
      }
    } else {
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] < '0' || block[i] > '9')
          throw ParseError(std::string("unexpected character '") + block[i] + "' at offset " + std::to_string(pos + i));
        entries.push_back(block[i] - '0');
      }
    }
    if (entries.empty()) throw ParseError("empty block at offset " + std::to_string(pos));
    if (!blocks.empty() && entries.size() != blocks.front().size())
      throw ParseError("block at offset " + std::to_string(pos) + " has a different length");
    blocks.push_back(std::move(entries));
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  const int n = static_cast<int>(blocks.front().size());
  const int k = static_cast<int>(blocks.size());
  if (n >= 10 && !wide) throw ParseError("blocks of 10 or more entries must be comma separated");
  return OneLine{BoardSpec(circular ? Shape::Circular : Shape::Linear, n, k), std::move(blocks)};
}

// ---------------------------------------------------------------------------

std::pair<ChainVertex, ChainVertex> ChainGraph::endpoints(const ChainEdge& e) const {
  const int upper = board.circular() && e.layer == board.k() ? 0 : e.layer;
  return {ChainVertex{upper, e.i}, ChainVertex{e.layer - 1, e.j}};
}

bool ChainGraph::is_loop(const ChainEdge& e) const {
  auto [a, b] = endpoints(e);
  return a == b;
}

ChainGraph build_chain_graph(const BoardSpec& board) {
  ChainGraph g{board, {}, {}};
  const int rows = board.circular() ? board.k() : board.k() + 1;
  for (int r = 0; r < rows; ++r)
    for (int i = 1; i <= board.n(); ++i) g.vertices.push_back({r, i});
  for (int l = 1; l <= board.k(); ++l)
    for (int i = 1; i <= board.n(); ++i)
      for (int j = 1; j <= board.n(); ++j) g.edges.push_back({l, i, j});
  return g;
}

std::string_view to_string(MatchingKind kind) {
  switch (kind) {
    case MatchingKind::Perfect:
      return "perfect";
    case MatchingKind::NearPerfect:
      return "near-perfect";
    case MatchingKind::LeavesNUnmatched:
      return "leaves n unmatched";
  }
  return "?";
}

MatchingKind expected_matching_kind(const BoardSpec& board) {
  if (!board.circular()) return board.k() % 2 == 1 ? MatchingKind::Perfect : MatchingKind::LeavesNUnmatched;
  return board.n() % 2 == 1 && board.k() % 2 == 1 ? MatchingKind::NearPerfect : MatchingKind::Perfect;
}

Validation check_matching(const ChainMatching& m) {
  Validation v;
  const auto graph = build_chain_graph(m.board);
  const int n = m.board.n();
  auto text = [](const ChainEdge& e) {
    return "(" + std::to_string(e.layer) + "," + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
  };
  std::set<ChainEdge> distinct;
  std::set<ChainVertex> covered;
  for (const auto& e : m.edges) {
    if (e.layer < 1 || e.layer > m.board.k() || e.i < 1 || e.i > n || e.j < 1 || e.j > n) {
      v.fail("edge " + text(e) + " is not in the graph");
      continue;
    }
    if (!distinct.insert(e).second) {
      v.fail("edge " + text(e) + " chosen twice");
      continue;
    }
    if (graph.is_loop(e)) {
      v.fail("edge " + text(e) + " is a loop");
      continue;
    }
    auto [a, b] = graph.endpoints(e);
    for (const auto& x : {a, b})
      if (!covered.insert(x).second)
        v.fail("vertex " + std::to_string(x.index) + " of row " + std::to_string(x.row) + " is covered twice");
  }
  if (!v.ok()) return v;
  const int need = max_rooks(m.board);
  if (static_cast<int>(m.edges.size()) != need)
    v.fail("matching has " + std::to_string(m.edges.size()) + " edges, expected " + std::to_string(need) + " (" +
           std::string(to_string(expected_matching_kind(m.board))) + ")");
  return v;
}

ChainMatching to_matching(const ChainedPermutation& cp) {
  check_chained_permutation(cp.board, cp.matrices).require();
  ChainMatching m{cp.board, {}};
  for (int l = 0; l < cp.board.k(); ++l)
    for (int i = 0; i < cp.board.n(); ++i)
      for (int j = 0; j < cp.board.n(); ++j)
        if (cp.matrices[l](i, j) == 1) m.edges.push_back({l + 1, i + 1, j + 1});
  return m;
}

ChainedPermutation from_matching(const ChainMatching& m) {
  check_matching(m).require();
  ChainedPermutation cp{m.board, std::vector<IntMatrix>(m.board.k(), IntMatrix(m.board.n()))};
  for (const auto& e : m.edges) cp.matrices[e.layer - 1](e.i - 1, e.j - 1) = 1;
  check_chained_permutation(cp.board, cp.matrices).require();
  return cp;
}

}  // namespace chained
