#include "chained/counting.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "chained/errors.hpp"

namespace chained {

using boost::multiprecision::cpp_rational;

BigCount falling_factorial(int n, int m) {
  if (m < 0) throw DomainError("falling factorial needs m >= 0");
  BigCount out = 1;
  for (int i = 0; i < m; ++i) {
    if (n - i <= 0) return 0;
    out *= n - i;
  }
  return out;
}

BigCount factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  return falling_factorial(n, n);
}

BigCount binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

BigCount multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  BigCount out = factorial(n);
  for (int p : parts) {
    if (p < 0) return 0;
    total += p;
    out /= factorial(p);
  }
  if (total != n) throw DomainError("multinomial parts do not sum to n");
  return out;
}

BigCount count_placements_formula(const BoardSpec& board, int m) {
  const int n = board.n();
  const int k = board.k();
  BigCount total = 0;
  for (const auto& c : admissible_compositions(board, m)) {
    BigCount term = 1;
    for (int i = 0; i < k; ++i) {
      const int prev = i > 0 ? c.parts[i - 1] : (board.circular() ? c.parts[k - 1] : 0);
      term *= binomial(n - prev, c.parts[i]) * falling_factorial(n, c.parts[i]);
    }
    total += term;
  }
  return total;
}

namespace {

void require_positive(int n, int k) {
  if (n < 1 || k < 1) throw DomainError("n and k must be >= 1");
}

BigCount pow(const BigCount& base, int e) {
  BigCount out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Visits every weakly increasing chain 0 <= j_1 <= ... <= j_len <= n.
void for_each_chain(int n, int len, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> j(len);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == len) {
      visit(j);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      j[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
}

}  // namespace

BigCount count_max_linear(int n, int k) {
  require_positive(n, k);
  const BigCount nf = factorial(n);
  if (k % 2 == 1) return pow(nf, (k + 1) / 2);
  const int half = k / 2;
  BigCount sum = 0;
  for_each_chain(n, half, [&](const std::vector<int>& j) {
    BigCount term = 1;
    int prev = 0;
    for (int l = 0; l < half; ++l) {
      term *= binomial(n - prev, n - j[l]) * binomial(n, j[l]);
      prev = j[l];
    }
    sum += term;
  });
  return pow(nf, half) * sum;
}

BigCount count_max_linear_multinomial(int n, int k) {
  require_positive(n, k);
  if (k % 2 != 0) throw DomainError("multinomial form is stated for even k");
  const int half = k / 2;
  BigCount sum = 0;
  for_each_chain(n, half, [&](const std::vector<int>& j) {
    // parts (n - j_h, j_h - j_{h-1}, ..., j_2 - j_1, j_1)
    std::vector<int> parts{n - j[half - 1]};
    for (int l = half - 1; l >= 1; --l) parts.push_back(j[l] - j[l - 1]);
    parts.push_back(j[0]);
    BigCount term = multinomial(n, parts);
    for (int l = 0; l < half; ++l) term *= binomial(n, j[l]);
    sum += term;
  });
  return pow(factorial(n), half) * sum;
}

BigCount binomial_power_sum(int n, int power) {
  BigCount sum = 0;
  for (int j = 0; j <= n; ++j) sum += pow(binomial(n, j), power);
  return sum;
}

BigCount count_max_circular(int n, int k) {
  require_positive(n, k);
  if (k % 2 == 0) return pow(factorial(n), k / 2) * binomial_power_sum(n, k / 2);
  if (n % 2 == 0) return pow(falling_factorial(n, n / 2), k);
  const int hi = (n + 1) / 2;
  const int lo = n / 2;
  return BigCount(k) * hi * pow(falling_factorial(n, hi), k / 2) * pow(falling_factorial(n, lo), (k + 1) / 2);
}

BigCount count_max_closed(const BoardSpec& board) {
  return board.circular() ? count_max_circular(board.n(), board.k()) : count_max_linear(board.n(), board.k());
}

BigCount classical_asm_count(int n) {
  if (n < 0) throw DomainError("ASM size must be >= 0");
  cpp_rational value = 1;
  for (int i = 0; i < n; ++i) value *= cpp_rational(factorial(3 * i + 1), factorial(n + i));
  if (denominator(value) != 1) throw InvariantViolation("ASM product formula did not reduce to an integer");
  return numerator(value);
}

BigCount qtasm_count(int m) {
  if (m < 1) throw DomainError("qtasm_count needs m >= 1");
  const BigCount a = classical_asm_count(m);
  cpp_rational value = cpp_rational(a * a * a);
  for (int i = 1; i <= m; ++i) {
    value *= cpp_rational(3 * i - 1, 3 * i - 2);
    for (int j = i; j <= m; ++j) value *= cpp_rational(m + i + j - 1, 2 * i + j - 1);
  }
  if (denominator(value) != 1) throw InvariantViolation("quarter-turn product did not reduce to an integer");
  return numerator(value);
}

}  // namespace chained
