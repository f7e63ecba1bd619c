#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "chained/board.hpp"

namespace chained {

using BigCount = boost::multiprecision::cpp_int;

/// (n)_m = n (n-1) ... (n-m+1); 1 for m = 0 and 0 for m > n.
BigCount falling_factorial(int n, int m);
BigCount factorial(int n);
/// C(n, r); 0 when r < 0 or r > n.
BigCount binomial(int n, int r);
/// n! / (parts_1! parts_2! ...); parts must be nonnegative and sum to n.
BigCount multinomial(int n, const std::vector<int>& parts);

/// Number of ways to place m non-attacking rooks: sum over admissible
/// compositions of prod_i C(n - a_{i-1}, a_i) (n)_{a_i}.
BigCount count_placements_formula(const BoardSpec& board, int m);

/// Closed form for maximum placements on the linear board.
BigCount count_max_linear(int n, int k);
/// Same count written with multinomial coefficients (k even only).
BigCount count_max_linear_multinomial(int n, int k);
/// Closed form for maximum placements on the circular board.
BigCount count_max_circular(int n, int k);
/// Dispatches to count_max_linear / count_max_circular.
BigCount count_max_closed(const BoardSpec& board);

/// sum_{j=0}^{n} C(n, j)^power.
BigCount binomial_power_sum(int n, int power);

/// Number of n x n alternating sign matrices: prod_{i=0}^{n-1} (3i+1)! / (n+i)!.
BigCount classical_asm_count(int n);

/// Number of quarter-turn symmetric ASMs of size 4m (equivalently chained
/// circular ASMs with one board of side 2m). Requires m >= 1.
BigCount qtasm_count(int m);

}  // namespace chained
