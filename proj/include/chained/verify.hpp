#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chained/board.hpp"
#include "chained/counting.hpp"

namespace chained {

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status status);

struct VerificationRecord {
  std::string family;  // "asm" or "placements"
  BoardSpec board;
  int m = 0;
  BigCount expected;
  std::string source;  // "published-table", "closed-form" or "brute-force"
  std::optional<BigCount> actual;
  Status status = Status::Skipped;
  double seconds = 0.0;
  double estimated_seconds = 0.0;
};

/// A published chained ASM count.
struct TableCell {
  Shape shape;
  int n;
  int k;
  long long count;
};

/// Every entry of the published table of chained ASM counts.
const std::vector<TableCell>& asm_table();

struct VerifyOptions {
  int max_n = 6;
  int max_k = 9;
  double budget_seconds = 60.0;
};

/// Table cells by enumeration, then maximum placements by brute force against
/// the closed forms (n <= 4, k <= 4). A check whose estimated cost exceeds what
/// is left of the budget is recorded as skipped.
std::vector<VerificationRecord> verify_tables(const VerifyOptions& options);

/// Columns: family, shape, n, k, m, expected, actual, source, status, seconds.
std::string to_tsv(const std::vector<VerificationRecord>& records);

/// Seconds per enumeration node measured on a small probe.
double calibrate_seconds_per_node();

}  // namespace chained
