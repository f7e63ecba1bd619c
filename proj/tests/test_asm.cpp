#include <algorithm>
#include <numeric>
#include <set>

#include "chained/asm.hpp"
#include "chained/counting.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chained;

namespace {

oracle::Tuple flatten(const ChainedASM& a) {
  oracle::Tuple out;
  for (const auto& m : a.matrices) {
    std::vector<int> flat;
    for (const auto& row : m.to_rows()) flat.insert(flat.end(), row.begin(), row.end());
    out.push_back(flat);
  }
  return out;
}

IntMatrix square(int n, const std::vector<int>& flat) {
  IntMatrix m(n);
  for (int x = 0; x < n * n; ++x) m(x / n, x % n) = flat[x];
  return m;
}

bool has_minus_one(const ChainedASM& a) {
  for (const auto& m : a.matrices)
    if (m.has_negative()) return true;
  return false;
}

}  // namespace

TEST_CASE("chained ASM validation") {
  const auto with_minus = fixture::linear_3_2_with_top_minus_one();
  REQUIRE(with_minus.matrices.size() == 2);
  CHECK(validate_chained_asm(with_minus));
  CHECK(with_minus.matrices[0].has_negative());

  CHECK(validate_chained_asm(fixture::circular_4_6_asm()));

  SUBCASE("a -1 in the first column is never allowed") {
    ChainedASM bad{BoardSpec::linear(3, 1), {IntMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {-1, 1, 0}})}};
    CHECK_FALSE(validate_chained_asm(bad));
  }
  SUBCASE("diagnostics locate the violation") {
    ChainedASM bad{BoardSpec::linear(2, 1), {IntMatrix::from_rows({{0, 1}, {-1, 1}})}};
    const auto v = check_chained_asm(bad.board, bad.matrices);
    REQUIRE_FALSE(v.ok());
    CHECK(v.problems.front().find("row") != std::string::npos);
  }
  SUBCASE("a sum below the maximum fails") {
    ChainedASM low{BoardSpec::linear(2, 2), {IntMatrix::from_rows({{1, 0}, {0, 0}}), IntMatrix(2)}};
    CHECK(satisfies_partial_sum_conditions(low.board, low.matrices));
    CHECK_FALSE(validate_chained_asm(low));
  }
  SUBCASE("entries outside -1..1 and wrong shapes fail") {
    CHECK_FALSE(check_chained_asm(BoardSpec::linear(1, 1), {IntMatrix::from_rows({{2}})}).ok());
    CHECK_FALSE(check_chained_asm(BoardSpec::linear(2, 2), {IntMatrix(2)}).ok());
  }
}

TEST_CASE("chained permutations are valid chained ASMs") {
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        const BoardSpec b(shape, n, k);
        for (const auto& p : all_placements(b, max_rooks(b))) {
          const auto cp = placement_to_matrices(p);
          const auto a = asm_from_permutation(cp);
          CHECK(validate_chained_asm(a));
          CHECK(asm_to_permutation(a) == cp);
          CHECK(asm_sum_composition(a) == p.composition());
        }
      }
  CHECK_THROWS_AS(asm_to_permutation(fixture::linear_3_2_with_top_minus_one()), ValidationError);
}

TEST_CASE("enumeration counts") {
  CHECK(count_chained_asm(BoardSpec::linear(3, 1)) == 7);
  CHECK(count_chained_asm(BoardSpec::circular(2, 3)) == 14);
  CHECK(count_chained_asm(BoardSpec::linear(2, 6)) == 1129);
  CHECK(all_chained_asms(BoardSpec::circular(2, 2)).size() == 10);
  CHECK_THROWS_AS(count_chained_asm(BoardSpec::linear(13, 1)), DomainError);
}

TEST_CASE("enumeration stops when the visitor asks") {
  int seen = 0;
  enumerate_chained_asm(BoardSpec::linear(4, 1), [&](const ChainedASM&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("enumeration equals exhaustive search over all sign tuples") {
  const std::vector<std::pair<int, int>> sizes = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 1}, {2, 2}, {2, 3}, {3, 1}};
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (auto [n, k] : sizes) {
      const BoardSpec b(shape, n, k);
      CAPTURE(describe(b));
      const auto expected = oracle::maximal_asm_tuples(b.circular(), n, k);
      std::set<oracle::Tuple> want(expected.begin(), expected.end());
      std::set<oracle::Tuple> got;
      for (const auto& a : all_chained_asms(b)) {
        CHECK(validate_chained_asm(a));
        got.insert(flatten(a));
      }
      CHECK(got.size() == all_chained_asms(b).size());
      CHECK(got == want);
      // The largest attainable total is the maximum rook count.
      int total = 0;
      for (const auto& m : expected.front()) total += std::accumulate(m.begin(), m.end(), 0);
      CHECK(total == max_rooks(b));
    }
}

TEST_CASE("small published counts") {
  struct Cell {
    Shape shape;
    int n, k;
    std::uint64_t count;
  };
  const Cell cells[] = {{Shape::Linear, 1, 1, 1},    {Shape::Linear, 4, 1, 42},    {Shape::Linear, 5, 1, 429},
                        {Shape::Linear, 2, 2, 17},   {Shape::Linear, 3, 2, 504},   {Shape::Linear, 3, 3, 49},
                        {Shape::Linear, 2, 4, 159},  {Shape::Linear, 2, 5, 8},     {Shape::Linear, 2, 7, 16},
                        {Shape::Linear, 2, 8, 7151}, {Shape::Circular, 3, 1, 20},  {Shape::Circular, 4, 1, 40},
                        {Shape::Circular, 5, 1, 3430}, {Shape::Circular, 3, 2, 140}, {Shape::Circular, 3, 3, 3861},
                        {Shape::Circular, 2, 4, 42}, {Shape::Circular, 2, 5, 82},  {Shape::Circular, 2, 9, 2786}};
  for (const auto& c : cells) {
    CAPTURE(describe(BoardSpec(c.shape, c.n, c.k)));
    CHECK(count_chained_asm(BoardSpec(c.shape, c.n, c.k)) == c.count);
  }
}

TEST_CASE("ASMs without -1 entries are exactly the chained permutations") {
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= 3; ++k) {
        const BoardSpec b(shape, n, k);
        std::set<std::vector<IntMatrix>> plain, perms;
        for (const auto& a : all_chained_asms(b))
          if (!has_minus_one(a)) plain.insert(a.matrices);
        for (const auto& p : all_placements(b, max_rooks(b))) perms.insert(placement_to_matrices(p).matrices);
        CHECK(plain == perms);
      }
}

TEST_CASE("single linear boards carry exactly the ordinary ASMs") {
  for (int n = 1; n <= 4; ++n) {
    std::set<IntMatrix> want;
    for (const auto& flat : oracle::plain_asms(n)) {
      want.insert(square(n, flat));
      CHECK(check_plain_asm(square(n, flat)).ok());
    }
    std::set<IntMatrix> got;
    for (const auto& a : all_chained_asms(BoardSpec::linear(n, 1))) got.insert(a.matrices[0]);
    CHECK(got == want);
    CHECK(BigCount(got.size()) == classical_asm_count(n));
  }
}

TEST_CASE("plain ASM validation") {
  CHECK(check_plain_asm(IntMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})).ok());
  CHECK_FALSE(check_plain_asm(IntMatrix::from_rows({{1, 0}, {1, 0}})).ok());
  CHECK_FALSE(check_plain_asm(IntMatrix::from_rows({{1, -1, 1}, {0, 1, 0}, {0, 1, 0}})).ok());
  CHECK_FALSE(check_plain_asm(IntMatrix(2, 3)).ok());
}

TEST_CASE("side length one: ASMs coincide with chained permutations") {
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int k = 1; k <= 8; ++k) {
      const BoardSpec b(shape, 1, k);
      std::set<std::vector<IntMatrix>> asms, perms;
      for (const auto& a : all_chained_asms(b)) asms.insert(a.matrices);
      for (const auto& p : all_placements(b, max_rooks(b))) perms.insert(placement_to_matrices(p).matrices);
      CHECK(asms == perms);
    }
}

TEST_CASE("row sums of chained ASMs give the maximum compositions") {
  const auto comp = asm_sum_composition(fixture::circular_4_6_asm());
  const auto maxes = maximum_compositions(BoardSpec::circular(4, 6));
  CHECK(std::find(maxes.begin(), maxes.end(), comp) != maxes.end());
  CHECK(comp.sum() == 12);

  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) {
        const BoardSpec b(shape, n, k);
        std::set<Composition> from_asms, from_placements;
        for (const auto& a : all_chained_asms(b)) from_asms.insert(asm_sum_composition(a));
        for (const auto& p : all_placements(b, max_rooks(b))) from_placements.insert(p.composition());
        CAPTURE(describe(b));
        CHECK(from_asms == from_placements);
      }

  const auto cyclic = maximum_compositions(BoardSpec::circular(3, 3));
  enumerate_chained_asm(BoardSpec::circular(3, 3), [&](const ChainedASM& a) {
    const auto c = asm_sum_composition(a);
    if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end()) {
      FAIL_CHECK("composition " << to_string(c) << " is not a maximum composition");
      return false;
    }
    return true;
  });
}

TEST_CASE("odd linear chains split into ordinary ASMs") {
  CHECK(count_chained_asm(BoardSpec::linear(3, 3)) == 7 * 7);
  CHECK(count_chained_asm(BoardSpec::linear(2, 5)) == 2 * 2 * 2);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {2, 3}, {2, 5}, {3, 1}, {3, 3}})
    for (const auto& a : all_chained_asms(BoardSpec::linear(n, k))) {
      const auto parts = split_linear_odd(a);
      CHECK(parts.size() == static_cast<std::size_t>((k + 1) / 2));
      CHECK(merge_linear_odd(n, parts) == a);
    }
  const auto one = all_chained_asms(BoardSpec::linear(3, 1));
  for (const auto& a : one) CHECK(split_linear_odd(a).front().matrix == a.matrices[0]);
  CHECK_THROWS_AS(split_linear_odd(all_chained_asms(BoardSpec::linear(2, 2)).front()), UnsupportedDomain);
}

TEST_CASE("four circular boards assemble into one ASM of double size") {
  CHECK(BigCount(count_chained_asm(BoardSpec::circular(2, 4))) == classical_asm_count(4));
  CHECK(BigCount(count_chained_asm(BoardSpec::circular(3, 4))) == classical_asm_count(6));
  for (int n = 1; n <= 3; ++n) {
    std::set<IntMatrix> images;
    enumerate_chained_asm(BoardSpec::circular(n, 4), [&](const ChainedASM& a) {
      const auto m = concat_circular_k4(a);
      CHECK(split_circular_k4(m) == a);
      images.insert(m.matrix);
      return true;
    });
    CHECK(BigCount(images.size()) == classical_asm_count(2 * n));
  }
  SUBCASE("a permutation tuple gives a permutation matrix") {
    const auto p = canonical_placement(BoardSpec::circular(2, 4), Composition{{1, 1, 1, 1}});
    const auto m = concat_circular_k4(asm_from_permutation(placement_to_matrices(p))).matrix;
    CHECK_FALSE(m.has_negative());
    for (int i = 0; i < 4; ++i) CHECK(m.row_sum(i) == 1);
  }
}

TEST_CASE("single circular boards fold into quarter-turn symmetric ASMs") {
  CHECK(fold_qt(ChainedASM{BoardSpec::circular(6, 1), {fixture::qt_quarter()}}).matrix == fixture::qt_full());
  CHECK(unfold_qt(PlainASM{fixture::qt_full()}).matrices[0] == fixture::qt_quarter());
  CHECK(BigCount(count_chained_asm(BoardSpec::circular(2, 1))) == qtasm_count(1));
  CHECK(BigCount(count_chained_asm(BoardSpec::circular(4, 1))) == qtasm_count(2));
  for (int n : {2, 4})
    for (const auto& a : all_chained_asms(BoardSpec::circular(n, 1))) {
      const auto m = fold_qt(a);
      CHECK(is_quarter_turn_symmetric(m.matrix));
      CHECK(unfold_qt(m) == a);
    }
  CHECK_THROWS_AS(fold_qt(all_chained_asms(BoardSpec::circular(3, 1)).front()), UnsupportedDomain);
  CHECK_THROWS_AS(unfold_qt(PlainASM{IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})}),
                  ValidationError);
}
