#include "chained/verify.hpp"

#include <chrono>
#include <cstdio>

#include "chained/asm.hpp"
#include "chained/placements.hpp"

namespace chained {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Upper bound on search nodes per solution and per cell over the table.
constexpr double kNodesPerSolutionCell = 25.0;

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "";
}

const std::vector<TableCell>& asm_table() {
  static const std::vector<TableCell> cells = [] {
    std::vector<TableCell> out;
    auto row = [&](Shape s, int k, std::vector<long long> counts) {
      for (std::size_t t = 0; t < counts.size(); ++t) out.push_back({s, static_cast<int>(t) + 1, k, counts[t]});
    };
    const Shape L = Shape::Linear;
    const Shape C = Shape::Circular;
    row(L, 1, {1, 2, 7, 42, 429, 7436});
    row(L, 2, {2, 17, 504, 53932});
    row(L, 3, {1, 4, 49});
    row(L, 4, {3, 159, 98028});
    row(L, 5, {1, 8});
    row(L, 6, {4, 1129});
    row(L, 7, {1, 16});
    row(L, 8, {5, 7151});
    row(C, 1, {1, 2, 20, 40, 3430, 6860});
    row(C, 2, {2, 10, 140, 5544});
    row(C, 3, {3, 14, 3861});
    row(C, 4, {2, 42, 7436});
    row(C, 5, {5, 82});
    row(C, 6, {2, 214});
    row(C, 7, {7, 478});
    row(C, 8, {2, 1186});
    row(C, 9, {9, 2786});
    return out;
  }();
  return cells;
}

double calibrate_seconds_per_node() {
  const BoardSpec probe = BoardSpec::linear(5, 1);
  const auto start = Clock::now();
  std::uint64_t nodes = 0;
  int runs = 0;
  while (runs < 3 || since(start) < 0.02) {
    count_chained_asm(probe);
    nodes += last_search_nodes();
    ++runs;
  }
  return since(start) / static_cast<double>(nodes);
}

std::vector<VerificationRecord> verify_tables(const VerifyOptions& options) {
  const double per_node = calibrate_seconds_per_node();
  const auto start = Clock::now();
  std::vector<VerificationRecord> out;

  auto run = [&](VerificationRecord r, double estimate, auto compute) {
    r.estimated_seconds = estimate;
    if (estimate > options.budget_seconds - since(start)) {
      r.status = Status::Skipped;
    } else {
      const auto t0 = Clock::now();
      r.actual = compute();
      r.seconds = since(t0);
      r.status = *r.actual == r.expected ? Status::Pass : Status::Fail;
    }
    out.push_back(std::move(r));
  };

  for (const auto& cell : asm_table()) {
    if (cell.n > options.max_n || cell.k > options.max_k) continue;
    const BoardSpec board(cell.shape, cell.n, cell.k);
    VerificationRecord r{"asm", board, max_rooks(board), BigCount(cell.count), "published-table", std::nullopt};
    const double estimate = static_cast<double>(cell.count) * cell.n * cell.n * cell.k * kNodesPerSolutionCell * per_node;
    run(std::move(r), estimate, [&] { return BigCount(count_chained_asm(board)); });
  }

  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= std::min(options.max_n, 4); ++n)
      for (int k = 1; k <= std::min(options.max_k, 4); ++k) {
        const BoardSpec board(shape, n, k);
        const BigCount expected = count_max_closed(board);
        VerificationRecord r{"placements", board, max_rooks(board), expected, "closed-form", std::nullopt};
        const double estimate = expected.convert_to<double>() * n * k * kNodesPerSolutionCell * per_node;
        run(std::move(r), estimate, [&] { return count_placements_brute(board, max_rooks(board)); });
      }
  return out;
}

std::string to_tsv(const std::vector<VerificationRecord>& records) {
  std::string out = "family\tshape\tn\tk\tm\texpected\tactual\tsource\tstatus\tseconds\n";
  for (const auto& r : records) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.4f", r.seconds);
    out += r.family + "\t" + std::string(to_string(r.board.shape())) + "\t" + std::to_string(r.board.n()) + "\t" +
           std::to_string(r.board.k()) + "\t" + std::to_string(r.m) + "\t" + r.expected.str() + "\t" +
           (r.actual ? r.actual->str() : std::string("-")) + "\t" + r.source + "\t" + std::string(to_string(r.status)) +
           "\t" + seconds + "\n";
  }
  return out;
}

}  // namespace chained
