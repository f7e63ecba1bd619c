// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
// --stretch also counts the two largest linear table cells (reported, never gating).

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chained/asm.hpp"
#include "chained/counting.hpp"
#include "chained/io.hpp"
#include "chained/placements.hpp"
#include "chained/views.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace chained;

namespace {

struct Tally {
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", expected " << want;
    expect(got == want, msg.str());
  }
};

std::string str(const BoardSpec& b) { return describe(b); }

bool stretch = false;

// 1 ------------------------------------------------------------------------

void formula_vs_oracle(Tally& t) {
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 4; ++k) {
        const BoardSpec b(shape, n, k);
        const auto oracle_counts = oracle::placement_counts(b.circular(), n, k);
        for (int m = 0; m <= max_rooks(b); ++m) {
          const BigCount formula = count_placements_formula(b, m);
          const std::string where = str(b) + " m=" + std::to_string(m);
          t.equal(formula, count_placements_brute(b, m), where + " formula vs brute");
          t.equal(formula, BigCount(oracle_counts[m]), where + " formula vs oracle");
        }
      }
}

// 2 ------------------------------------------------------------------------

void closed_forms(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 8; ++k)
      for (Shape shape : {Shape::Linear, Shape::Circular}) {
        const BoardSpec b(shape, n, k);
        t.equal(count_max_closed(b), count_placements_formula(b, max_rooks(b)), str(b) + " closed vs formula");
      }
  t.equal(count_placements_brute(BoardSpec::linear(5, 3), 10), 14400, "linear 5 3 brute");
  t.equal(count_max_linear(5, 3), 14400, "linear 5 3 closed");
  t.equal(count_placements_brute(BoardSpec::circular(2, 2), 2), 8, "circular 2 2 brute");
  t.equal(count_max_circular(2, 2), 8, "circular 2 2 closed");
  t.equal(count_placements_brute(BoardSpec::circular(3, 3), 4), 324, "circular 3 3 brute");
  t.equal(count_max_circular(3, 3), 324, "circular 3 3 closed");
}

// 3 ------------------------------------------------------------------------

struct Cell {
  Shape shape;
  int n, k;
  std::uint64_t count;
};

std::vector<Cell> table_cells() {
  std::vector<Cell> cells;
  auto row = [&](Shape s, int k, std::vector<std::uint64_t> counts) {
    for (std::size_t i = 0; i < counts.size(); ++i) cells.push_back({s, static_cast<int>(i) + 1, k, counts[i]});
  };
  const Shape L = Shape::Linear, C = Shape::Circular;
  row(L, 1, {1, 2, 7, 42, 429, 7436});
  row(L, 2, {2, 17, 504});
  row(L, 3, {1, 4, 49});
  row(L, 4, {3, 159});
  row(L, 5, {1, 8});
  row(L, 6, {4, 1129});
  row(L, 7, {1, 16});
  row(L, 8, {5, 7151});
  row(C, 1, {1, 2, 20, 40, 3430, 6860});
  row(C, 2, {2, 10, 140});
  row(C, 3, {3, 14, 3861});
  row(C, 4, {2, 42, 7436});
  row(C, 5, {5, 82});
  row(C, 6, {2, 214});
  row(C, 7, {7, 478});
  row(C, 8, {2, 1186});
  row(C, 9, {9, 2786});
  return cells;
}

void table(Tally& t) {
  for (const auto& c : table_cells()) {
    const BoardSpec b(c.shape, c.n, c.k);
    t.equal(count_chained_asm(b), c.count, str(b));
  }
  for (int n = 1; n <= 6; ++n)
    t.equal(BigCount(count_chained_asm(BoardSpec::linear(n, 1))), classical_asm_count(n),
            "single linear board n=" + std::to_string(n) + " vs product formula");

  if (!stretch) {
    t.notes.push_back("stretch cells not run (--stretch)");
    return;
  }
  std::string note = "stretch:";
  for (const Cell& c : {Cell{Shape::Linear, 4, 2, 53932}, Cell{Shape::Linear, 3, 4, 98028}}) {
    const auto got = count_chained_asm(BoardSpec(c.shape, c.n, c.k));
    note += " " + str(BoardSpec(c.shape, c.n, c.k)) + " = " + std::to_string(got) + (got == c.count ? " ok;" : " MISMATCH;");
  }
  t.notes.push_back(note);
}

// 4 ------------------------------------------------------------------------

IntMatrix from_flat(int n, const std::vector<int>& flat) {
  IntMatrix m(n);
  for (int x = 0; x < n * n; ++x) m(x / n, x % n) = flat[x];
  return m;
}

void split_odd(Tally& t, int n, int k) {
  const BoardSpec b = BoardSpec::linear(n, k);
  std::set<std::vector<IntMatrix>> images;
  std::uint64_t total = 0;
  enumerate_chained_asm(b, [&](const ChainedASM& a) {
    ++total;
    const auto parts = split_linear_odd(a);
    std::vector<IntMatrix> key;
    for (const auto& p : parts) {
      t.expect(check_plain_asm(p.matrix).ok(), str(b) + " split part is not an ASM");
      key.push_back(p.matrix);
    }
    t.expect(merge_linear_odd(n, parts) == a, str(b) + " merge(split) differs");
    images.insert(key);
    return true;
  });
  t.equal(images.size(), total, str(b) + " split is injective");
  BigCount power = 1;
  for (int i = 0; i < (k + 1) / 2; ++i) power *= classical_asm_count(n);
  t.equal(BigCount(total), power, str(b) + " count vs ASM(n)^((k+1)/2)");
}

void concat_k4(Tally& t, int n) {
  const BoardSpec b = BoardSpec::circular(n, 4);
  std::set<IntMatrix> images;
  std::uint64_t total = 0;
  enumerate_chained_asm(b, [&](const ChainedASM& a) {
    ++total;
    const PlainASM m = concat_circular_k4(a);
    t.expect(check_plain_asm(m.matrix).ok(), str(b) + " concatenation is not an ASM");
    t.expect(split_circular_k4(m) == a, str(b) + " split(concat) differs");
    images.insert(m.matrix);
    return true;
  });
  t.equal(images.size(), total, str(b) + " concat is injective");
  // Onto: every ASM of size 2n splits into a chained ASM.
  const auto all = oracle::plain_asms(2 * n);
  std::size_t hit = 0;
  for (const auto& flat : all) hit += images.count(from_flat(2 * n, flat));
  t.equal(hit, all.size(), str(b) + " concat is onto");
  t.equal(BigCount(total), classical_asm_count(2 * n), str(b) + " count vs ASM(2n)");
}

void fold_single(Tally& t, int n) {
  const BoardSpec b = BoardSpec::circular(n, 1);
  std::set<IntMatrix> images;
  std::uint64_t total = 0;
  enumerate_chained_asm(b, [&](const ChainedASM& a) {
    ++total;
    const PlainASM m = fold_qt(a);
    t.expect(check_plain_asm(m.matrix).ok() && is_quarter_turn_symmetric(m.matrix),
             str(b) + " fold is not a quarter-turn symmetric ASM");
    t.expect(unfold_qt(m) == a, str(b) + " unfold(fold) differs");
    images.insert(m.matrix);
    return true;
  });
  t.equal(images.size(), total, str(b) + " fold is injective");
  if (n == 2) {
    std::size_t symmetric = 0;
    for (const auto& flat : oracle::plain_asms(4)) {
      const IntMatrix m = from_flat(4, flat);
      if (is_quarter_turn_symmetric(m)) {
        ++symmetric;
        t.expect(images.count(m) == 1, "size 4 quarter-turn symmetric ASM missed by fold");
      }
    }
    t.equal(symmetric, images.size(), "fold onto size 4");
  }
  t.equal(BigCount(total), qtasm_count(n / 2), str(b) + " count vs QTASM(2n)");
}

void special_bijections(Tally& t) {
  split_odd(t, 3, 3);
  split_odd(t, 2, 5);
  concat_k4(t, 2);
  concat_k4(t, 3);
  fold_single(t, 2);
  fold_single(t, 4);

  const ChainedASM quarter{BoardSpec::circular(6, 1), {fixture::qt_quarter()}};
  const std::string got = serialize(fold_qt(quarter));
  const std::string want = serialize(PlainASM{fixture::qt_full()});
  t.expect(got == want, "six-by-six quarter folds to a different 12 x 12 matrix:\n" + got);
  t.expect(unfold_qt(PlainASM{fixture::qt_full()}) == quarter, "12 x 12 matrix does not unfold to its quarter");
}

// 5 ------------------------------------------------------------------------

std::vector<BoardSpec> round_trip_boards() {
  std::vector<BoardSpec> out;
  for (Shape shape : {Shape::Linear, Shape::Circular})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) out.emplace_back(shape, n, k);
  out.push_back(BoardSpec::circular(2, 4));
  out.push_back(BoardSpec::circular(2, 6));
  return out;
}

void round_trips(Tally& t) {
  long placements = 0, asms = 0;
  for (const BoardSpec& b : round_trip_boards()) {
    enumerate_placements(b, max_rooks(b), [&](const RookPlacement& p) {
      ++placements;
      const auto cp = placement_to_matrices(p);
      const auto o = to_one_line(cp);
      const auto m = to_matching(cp);
      const std::string at = str(b) + " " + format_one_line(o);
      t.expect(check_chained_permutation(b, cp.matrices).ok(), at + " matrices invalid");
      t.expect(matrices_to_placement(cp) == p, at + " placement round trip");
      t.expect(check_one_line(o).ok(), at + " one-line invalid");
      t.expect(from_one_line(o) == cp, at + " one-line round trip");
      t.expect(parse_one_line(format_one_line(o)) == o, at + " one-line text round trip");
      t.expect(check_matching(m).ok(), at + " matching invalid");
      t.expect(from_matching(m) == cp, at + " matching round trip");
      return true;
    });

    const bool avatars = b.circular() && b.k() % 2 == 0;
    enumerate_chained_asm(b, [&](const ChainedASM& a) {
      ++asms;
      t.expect(validate_chained_asm(a), str(b) + " enumerated ASM invalid");
      if (!avatars) return true;
      const auto mt = to_monotone_triangles(a);
      const auto ice = to_ice(a);
      const auto fpl = to_fpl(ice);
      t.expect(check_mt_chain(mt).ok(), str(b) + " triangles invalid");
      t.expect(from_monotone_triangles(mt) == a, str(b) + " triangle round trip");
      t.expect(check_ice(ice).ok(), str(b) + " ice invalid");
      t.expect(from_ice(ice) == a, str(b) + " ice round trip");
      t.expect(check_fpl(fpl).ok(), str(b) + " loops invalid");
      t.expect(from_fpl(fpl) == ice, str(b) + " loop round trip");
      return true;
    });
  }
  t.notes.push_back(std::to_string(placements) + " placements, " + std::to_string(asms) + " chained ASMs");
}

// 6 ------------------------------------------------------------------------

void worked_examples(Tally& t) {
  const std::string six = format_one_line(to_one_line(placement_to_matrices(fixture::circular_4_6_rooks())));
  t.equal(six, "0200-3104-3000-3420-0004-1032-", "six circular boards one-line");
  const std::string four = format_one_line(to_one_line(placement_to_matrices(fixture::linear_5_4_rooks())));
  t.equal(four, "30502-04200-00045-31200", "four linear boards one-line");

  const auto a = fixture::circular_4_6_asm();
  t.expect(validate_chained_asm(a), "six-board ASM invalid");
  t.expect(paired_matrix(a, 1) == fixture::circular_4_6_first_pair(), "first paired matrix differs");
  const auto mt = to_monotone_triangles(a);
  const std::vector<std::vector<int>> bottoms = {{1, 3, 5, 7}, {1, 3, 5, 8}, {2, 3, 5, 7}};
  for (std::size_t l = 0; l < bottoms.size(); ++l)
    t.expect(mt.triangles.size() == 3 && mt.triangles[l].rows.back() == bottoms[l],
             "bottom row of triangle " + std::to_string(l + 1));
  t.equal(serialize(mt), serialize(fixture::circular_4_6_triangles()), "triangles");
}

// 7 ------------------------------------------------------------------------

void identities(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    t.equal(count_placements_brute(BoardSpec::linear(n, 1), n), factorial(n), "single board n=" + std::to_string(n));
  for (int n = 1; n <= 3; ++n)
    t.equal(count_placements_brute(BoardSpec::circular(n, 4), 2 * n), factorial(2 * n),
            "four circular boards n=" + std::to_string(n));
  for (int n = 0; n <= 20; ++n) {
    BigCount s1 = 0, s2 = 0;
    for (int j = 0; j <= n; ++j) {
      s1 += binomial(n, j);
      s2 += binomial(n, j) * binomial(n, j);
    }
    t.equal(s1, BigCount(1) << n, "sum C(n,j) n=" + std::to_string(n));
    t.equal(s2, binomial(2 * n, n), "sum C(n,j)^2 n=" + std::to_string(n));
    t.equal(binomial_power_sum(n, 1), s1, "power sum 1 n=" + std::to_string(n));
    t.equal(binomial_power_sum(n, 2), s2, "power sum 2 n=" + std::to_string(n));
    if (n >= 1) {
      t.equal(count_max_circular(n, 2), factorial(n) * (BigCount(1) << n), "circular k=2 n=" + std::to_string(n));
      t.equal(count_max_circular(n, 4), factorial(n) * factorial(n) * binomial(2 * n, n),
              "circular k=4 n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (int k = 2; k <= 6; k += 2)
      t.equal(count_max_linear_multinomial(n, k), count_max_linear(n, k),
              "multinomial form n=" + std::to_string(n) + " k=" + std::to_string(k));
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--stretch") == 0) {
      stretch = true;
    } else {
      std::cerr << "usage: acceptance [--stretch]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "placement formula = brute force = oracle (n<=3, k<=4, all m)", formula_vs_oracle},
      {2, "closed forms = formula (n<=6, k<=8) and brute-force spot values", closed_forms},
      {3, "chained ASM table by enumeration", table},
      {4, "split / concat / fold bijections and the 12 x 12 quarter-turn example", special_bijections},
      {5, "bijection round trips and validators on every enumerated object", round_trips},
      {6, "worked examples: one-line strings and monotone triangles", worked_examples},
      {7, "identities: n!, (2n)!, binomial sums, multinomial form", identities},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << t.checks
              << " checks, " << secs << " s";
    for (const auto& note : t.notes) std::cout << "; " << note;
    std::cout << "]\n";
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::cout << "    " << t.failures[i] << "\n";
    if (t.failures.size() > 5) std::cout << "    ... " << t.failures.size() - 5 << " more\n";
  }
  return failed == 0 ? 0 : 1;
}
