#include "chained/asm.hpp"

#include <algorithm>

namespace chained {

namespace {

std::string cell_text(int board, int i, int j) {
  return "matrix " + std::to_string(board) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Validation check_shapes(const BoardSpec& board, const std::vector<IntMatrix>& matrices) {
  Validation v;
  const int n = board.n();
  if (static_cast<int>(matrices.size()) != board.k()) {
    v.fail("expected " + std::to_string(board.k()) + " matrices, got " + std::to_string(matrices.size()));
    return v;
  }
  for (int l = 0; l < board.k(); ++l) {
    const auto& a = matrices[l];
    if (a.rows() != n || a.cols() != n) {
      v.fail("matrix " + std::to_string(l + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
      return v;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a(i, j) < -1 || a(i, j) > 1) v.fail(cell_text(l + 1, i + 1, j + 1) + " is not in {-1,0,1}");
  }
  return v;
}

// Row-prefix and chained bottom-up column conditions; stops at the first failure.
void check_partial_sums(const BoardSpec& board, const std::vector<IntMatrix>& matrices, Validation& v) {
  const int n = board.n();
  for (int l = 1; l <= board.k(); ++l) {
    const auto& a = matrices[l - 1];
    for (int i = 0; i < n; ++i) {
      int prefix = 0;
      for (int m = 0; m < n; ++m) {
        prefix += a(i, m);
        if (prefix != 0 && prefix != 1) {
          v.fail("row prefix: matrix " + std::to_string(l) + " row " + std::to_string(i + 1) + " sums to " +
                 std::to_string(prefix) + " over its first " + std::to_string(m + 1) + " entries");
          return;
        }
      }
    }
    const auto prev = board.previous(l);
    for (int i = 0; i < n; ++i) {
      const int base = prev ? matrices[*prev - 1].row_sum(i) : 0;
      int partial = base;
      for (int m = 1; m <= n; ++m) {
        partial += a(n - m, i);
        if (partial != 0 && partial != 1) {
          v.fail("chained column: row " + std::to_string(i + 1) + " of matrix " +
                 (prev ? std::to_string(*prev) : std::string("0")) + " plus the bottom " + std::to_string(m) +
                 " entries of column " + std::to_string(i + 1) + " of matrix " + std::to_string(l) + " sum to " +
                 std::to_string(partial));
          return;
        }
      }
    }
  }
}

// Backtracking over cells. Each matrix is filled from its bottom row upward so
// that column partial sums accumulate in the order the chaining condition reads
// them; within a row, left to right.
template <bool Emit>
class AsmSearch {
 public:
  AsmSearch(const BoardSpec& board, const AsmVisitor* visit)
      : board_(board), n_(board.n()), k_(board.k()), target_(max_rooks(board)), visit_(visit) {
    if (n_ > 12) throw DomainError("chained ASM enumeration supports n <= 12");
    cells_.assign(static_cast<std::size_t>(k_) * n_ * n_, 0);
    row_sums_.assign(static_cast<std::size_t>(k_) * n_, 0);
    board_sums_.assign(k_, 0);
    col_partial_.assign(n_, 0);
    wrap_mask_.assign(n_, 0b11);
    build_bounds();
  }

  void run() {
    stopped_ = false;
    nodes_ = 0;
    start_board(1, 0);
  }

  std::uint64_t count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int& cell(int b, int i, int j) { return cells_[(static_cast<std::size_t>(b - 1) * n_ + i) * n_ + j]; }
  int& row_sum(int b, int i) { return row_sums_[static_cast<std::size_t>(b - 1) * n_ + i]; }

  // best_[cap][t][prev]: largest sum a_t + ... + a_k with a_{t-1} = prev,
  // adjacent sums <= n and a_k <= cap.
  void build_bounds() {
    best_.assign(n_ + 1, std::vector<std::vector<int>>(k_ + 2, std::vector<int>(n_ + 1, 0)));
    for (int cap = 0; cap <= n_; ++cap)
      for (int t = k_; t >= 1; --t)
        for (int prev = 0; prev <= n_; ++prev) {
          int hi = n_ - prev;
          if (t == k_) hi = std::min(hi, cap);
          int top = -1;
          for (int a = 0; a <= hi; ++a) top = std::max(top, a + best_[cap][t + 1][a]);
          best_[cap][t][prev] = top;
        }
  }

  // Can boards b..k still bring the total to target_, given that board b already
  // has `done` from completed rows and `left` rows to go?
  bool reachable(int b, int done, int left) const {
    const int before = done_boards_;
    int lo = done;
    int hi = done + left;
    int best = -1;
    if (b == 1 && board_.circular()) {
      if (k_ == 1) {
        hi = std::min(hi, n_ / 2);
        best = lo <= hi ? hi : -1;
      } else {
        for (int a = lo; a <= std::min(hi, n_); ++a) best = std::max(best, a + best_[n_ - a][2][a]);
      }
    } else {
      const int cap = board_.circular() ? n_ - board_sums_[0] : n_;
      if (b > 1) hi = std::min(hi, n_ - board_sums_[b - 2]);
      if (b == k_) hi = std::min(hi, cap);
      for (int a = lo; a <= hi; ++a) best = std::max(best, a + best_[cap][b + 1][a]);
    }
    return best >= 0 && before + best >= target_;
  }

  void start_board(int b, int) {
    if (stopped_) return;
    if (b > k_) {
      finish();
      return;
    }
    if (!reachable(b, 0, n_)) return;
    std::fill(col_partial_.begin(), col_partial_.end(), 0);
    if (b == 1 && board_.circular()) std::fill(wrap_mask_.begin(), wrap_mask_.end(), 0b11);
    board_done_rows_sum_ = 0;
    fill(b, n_ - 1, 0, 0);
  }

  // Value of row i of the previous board, or -1 if it is still open (circular,
  // first board).
  int chained_row_sum(int b, int i) {
    const auto prev = board_.previous(b);
    if (!prev) return 0;
    if (b == 1) return -1;
    return row_sum(*prev, i);
  }

  void fill(int b, int i, int j, int prefix) {
    if (stopped_) return;
    ++nodes_;
    if (j == n_) {
      end_row(b, i, prefix);
      return;
    }
    const int base = chained_row_sum(b, j);
    for (int v = -1; v <= 1; ++v) {
      const int p = prefix + v;
      if (p != 0 && p != 1) continue;
      const int partial = col_partial_[j] + v;
      unsigned saved_mask = 0;
      if (base < 0) {
        // open chaining row: keep the values r in {0,1} with r + partial in {0,1}
        unsigned allowed = 0;
        if (partial == 0 || partial == 1) allowed |= 0b01;
        if (partial == -1 || partial == 0) allowed |= 0b10;
        saved_mask = wrap_mask_[j];
        if ((saved_mask & allowed) == 0) continue;
        wrap_mask_[j] = saved_mask & allowed;
      } else if (base + partial != 0 && base + partial != 1) {
        continue;
      }
      col_partial_[j] = partial;
      cell(b, i, j) = v;
      fill(b, i, j + 1, p);
      cell(b, i, j) = 0;
      col_partial_[j] -= v;
      if (base < 0) wrap_mask_[j] = saved_mask;
      if (stopped_) return;
    }
  }

  void end_row(int b, int i, int sum) {
    // circular: the last board's rows are the open chaining rows of board 1
    if (board_.circular() && b == k_ && !(wrap_mask_[i] >> sum & 1u)) return;
    row_sum(b, i) = sum;
    board_done_rows_sum_ += sum;
    const int done = board_done_rows_sum_;
    if (reachable(b, done, i)) {
      if (i > 0) {
        fill(b, i - 1, 0, 0);
      } else {
        board_sums_[b - 1] = done;
        done_boards_ += done;
        const int saved_done_rows = board_done_rows_sum_;
        std::vector<int> saved_partial;
        if (b < k_) saved_partial = col_partial_;
        start_board(b + 1, 0);
        if (b < k_) col_partial_ = saved_partial;
        board_done_rows_sum_ = saved_done_rows;
        done_boards_ -= done;
      }
    }
    board_done_rows_sum_ -= sum;
  }

  void finish() {
    if (k_ == 1 && board_.circular()) {
      for (int i = 0; i < n_; ++i)
        if (!(wrap_mask_[i] >> row_sum(1, i) & 1u)) return;
    }
    if (done_boards_ != target_) return;
    ++count_;
    if constexpr (Emit) {
      ChainedASM a{board_, std::vector<IntMatrix>(k_, IntMatrix(n_))};
      for (int b = 1; b <= k_; ++b)
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) a.matrices[b - 1](i, j) = cell(b, i, j);
      if (!(*visit_)(a)) stopped_ = true;
    }
  }

  BoardSpec board_;
  int n_;
  int k_;
  int target_;
  const AsmVisitor* visit_;
  std::vector<int> cells_;
  std::vector<int> row_sums_;
  std::vector<int> board_sums_;
  std::vector<int> col_partial_;
  std::vector<unsigned> wrap_mask_;
  std::vector<std::vector<std::vector<int>>> best_;
  int done_boards_ = 0;
  int board_done_rows_sum_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

thread_local std::uint64_t g_last_nodes = 0;

void require_circular(const ChainedASM& a, int k, const char* what) {
  if (!a.board.circular() || a.board.k() != k)
    throw UnsupportedDomain(std::string(what) + " needs a circular board with k = " + std::to_string(k) + ", got " +
                            describe(a.board));
}

}  // namespace

Validation check_chained_asm(const BoardSpec& board, const std::vector<IntMatrix>& matrices) {
  Validation v = check_shapes(board, matrices);
  if (!v.ok()) return v;
  check_partial_sums(board, matrices, v);
  if (!v.ok()) return v;
  int total = 0;
  for (const auto& a : matrices) total += a.total();
  if (total != max_rooks(board))
    v.fail("maximum sum: entries sum to " + std::to_string(total) + ", maximum is " +
           std::to_string(max_rooks(board)));
  return v;
}

bool satisfies_partial_sum_conditions(const BoardSpec& board, const std::vector<IntMatrix>& matrices) {
  Validation v = check_shapes(board, matrices);
  if (v.ok()) check_partial_sums(board, matrices, v);
  return v.ok();
}

Validation check_plain_asm(const IntMatrix& m) {
  Validation v;
  if (m.rows() != m.cols()) {
    v.fail("matrix is not square");
    return v;
  }
  const int size = m.rows();
  auto check_line = [&](auto entry, const std::string& what) {
    int sum = 0;
    int last = 0;
    for (int t = 0; t < size; ++t) {
      const int x = entry(t);
      if (x < -1 || x > 1) {
        v.fail(what + " has an entry outside {-1,0,1}");
        return;
      }
      if (x == 0) continue;
      if (x == last) {
        v.fail(what + " does not alternate in sign");
        return;
      }
      last = x;
      sum += x;
    }
    if (sum != 1) v.fail(what + " sums to " + std::to_string(sum));
  };
  for (int i = 0; i < size; ++i) {
    check_line([&](int t) { return m(i, t); }, "row " + std::to_string(i + 1));
    check_line([&](int t) { return m(t, i); }, "column " + std::to_string(i + 1));
  }
  return v;
}

bool is_quarter_turn_symmetric(const IntMatrix& m) { return m.rows() == m.cols() && rotate_cw(m) == m; }

void enumerate_chained_asm(const BoardSpec& board, const AsmVisitor& visit) {
  AsmSearch<true> search(board, &visit);
  search.run();
  g_last_nodes = search.nodes();
}

std::vector<ChainedASM> all_chained_asms(const BoardSpec& board) {
  std::vector<ChainedASM> out;
  enumerate_chained_asm(board, [&](const ChainedASM& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::uint64_t count_chained_asm(const BoardSpec& board) {
  AsmSearch<false> search(board, nullptr);
  search.run();
  g_last_nodes = search.nodes();
  return search.count();
}

std::uint64_t last_search_nodes() { return g_last_nodes; }

Composition asm_sum_composition(const ChainedASM& a) {
  check_chained_asm(a.board, a.matrices).require();
  Composition c;
  for (const auto& m : a.matrices) c.parts.push_back(m.total());
  return c;
}

ChainedASM asm_from_permutation(const ChainedPermutation& cp) {
  check_chained_permutation(cp.board, cp.matrices).require();
  ChainedASM a{cp.board, cp.matrices};
  if (!validate_chained_asm(a)) throw InvariantViolation("chained permutation failed the chained ASM conditions");
  return a;
}

ChainedPermutation asm_to_permutation(const ChainedASM& a) {
  check_chained_asm(a.board, a.matrices).require();
  for (int l = 0; l < a.board.k(); ++l)
    if (a.matrices[l].has_negative())
      throw ValidationError({"matrix " + std::to_string(l + 1) + " has a -1 entry, so this is not a chained permutation"});
  ChainedPermutation cp{a.board, a.matrices};
  if (!check_chained_permutation(cp.board, cp.matrices))
    throw InvariantViolation("chained ASM without -1 entries is not a chained permutation");
  return cp;
}

std::vector<PlainASM> split_linear_odd(const ChainedASM& a) {
  if (a.board.circular() || a.board.k() % 2 == 0)
    throw UnsupportedDomain("split_linear_odd needs a linear board with odd k, got " + describe(a.board));
  check_chained_asm(a.board, a.matrices).require();
  std::vector<PlainASM> out;
  for (int l = 1; l <= a.board.k(); ++l) {
    const auto& m = a.matrices[l - 1];
    if (l % 2 == 0) {
      if (!m.is_zero()) throw InvariantViolation("even-indexed matrix " + std::to_string(l) + " is not zero");
      continue;
    }
    if (!check_plain_asm(m)) throw InvariantViolation("odd-indexed matrix " + std::to_string(l) + " is not an ASM");
    out.push_back(PlainASM{m});
  }
  return out;
}

ChainedASM merge_linear_odd(int n, const std::vector<PlainASM>& parts) {
  if (parts.empty()) throw DomainError("merge_linear_odd needs at least one ASM");
  std::vector<IntMatrix> mats;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (parts[t].size() != n) throw DomainError("ASM " + std::to_string(t + 1) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    check_plain_asm(parts[t].matrix).require();
    if (t) mats.emplace_back(n);
    mats.push_back(parts[t].matrix);
  }
  ChainedASM a{BoardSpec::linear(n, static_cast<int>(mats.size())), std::move(mats)};
  if (!validate_chained_asm(a)) throw InvariantViolation("interleaved ASMs do not form a chained ASM");
  return a;
}

namespace {

IntMatrix assemble_quadrants(const IntMatrix& a1, const IntMatrix& a2, const IntMatrix& a3, const IntMatrix& a4) {
  const int n = a1.rows();
  IntMatrix m(2 * n);
  paste(m, a1, 0, 0);
  paste(m, rotate_cw(a2), 0, n);
  paste(m, rotate_half(a3), n, n);
  paste(m, rotate_ccw(a4), n, 0);
  return m;
}

}  // namespace

PlainASM concat_circular_k4(const ChainedASM& a) {
  require_circular(a, 4, "concat_circular_k4");
  check_chained_asm(a.board, a.matrices).require();
  IntMatrix m = assemble_quadrants(a.matrices[0], a.matrices[1], a.matrices[2], a.matrices[3]);
  if (!check_plain_asm(m)) throw InvariantViolation("assembled matrix is not an ASM");
  return PlainASM{std::move(m)};
}

ChainedASM split_circular_k4(const PlainASM& m) {
  check_plain_asm(m.matrix).require();
  if (m.size() % 2 != 0) throw DomainError("split_circular_k4 needs an ASM of even size");
  const int n = m.size() / 2;
  ChainedASM a{BoardSpec::circular(n, 4),
               {slice(m.matrix, 0, 0, n, n), rotate_ccw(slice(m.matrix, 0, n, n, n)),
                rotate_half(slice(m.matrix, n, n, n, n)), rotate_cw(slice(m.matrix, n, 0, n, n))}};
  if (!validate_chained_asm(a)) throw InvariantViolation("quadrants of an ASM do not form a chained ASM");
  return a;
}

PlainASM fold_qt(const ChainedASM& a) {
  require_circular(a, 1, "fold_qt");
  if (a.board.n() % 2 != 0) throw UnsupportedDomain("fold_qt needs even n, got " + describe(a.board));
  check_chained_asm(a.board, a.matrices).require();
  const auto& a1 = a.matrices[0];
  IntMatrix m = assemble_quadrants(a1, a1, a1, a1);
  if (!check_plain_asm(m) || !is_quarter_turn_symmetric(m))
    throw InvariantViolation("folded matrix is not a quarter-turn symmetric ASM");
  return PlainASM{std::move(m)};
}

ChainedASM unfold_qt(const PlainASM& m) {
  check_plain_asm(m.matrix).require();
  if (m.size() % 4 != 0) throw DomainError("unfold_qt needs an ASM whose size is a multiple of 4");
  if (!is_quarter_turn_symmetric(m.matrix)) throw ValidationError({"matrix is not quarter-turn symmetric"});
  const int n = m.size() / 2;
  ChainedASM a{BoardSpec::circular(n, 1), {slice(m.matrix, 0, 0, n, n)}};
  if (!validate_chained_asm(a)) throw InvariantViolation("quarter of a QTASM does not form a chained ASM");
  return a;
}

}  // namespace chained
