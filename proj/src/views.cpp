#include "chained/views.hpp"

#include <algorithm>
#include <charconv>

namespace chained {

void require_circular_even(const BoardSpec& board) {
  if (!board.circular() || board.k() % 2 != 0)
    throw UnsupportedDomain("defined only for circular boards with even k, got " + describe(board));
}

namespace {

void require_even_k(int n, int k) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (k < 2 || k % 2 != 0) throw UnsupportedDomain("defined only for even k, got k = " + std::to_string(k));
}

std::string vertex_text(const GridVertex& v) {
  return "v(" + std::to_string(v.board) + "," + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

int cyclic_next(int board, int k) { return board == k ? 1 : board + 1; }
int cyclic_prev(int board, int k) { return board == 1 ? k : board - 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Monotone triangles

IntMatrix paired_matrix(const ChainedASM& a, int l) {
  require_circular_even(a.board);
  const int n = a.board.n();
  IntMatrix b(n, 2 * n);
  paste(b, a.matrices[2 * l - 2], 0, 0);
  paste(b, rotate_cw(a.matrices[2 * l - 1]), 0, n);
  return b;
}

MonotoneTriangleChain to_monotone_triangles(const ChainedASM& a) {
  require_circular_even(a.board);
  check_chained_asm(a.board, a.matrices).require();
  const int n = a.board.n();
  MonotoneTriangleChain out{n, a.board.k(), {}};
  for (int l = 1; l <= a.board.k() / 2; ++l) {
    const IntMatrix b = paired_matrix(a, l);
    std::vector<int> partial(2 * n, 0);
    MonotoneTriangle t;
    for (int m = 0; m < n; ++m) {
      std::vector<int> row;
      for (int j = 0; j < 2 * n; ++j) {
        partial[j] += b(m, j);
        if (partial[j] == 1) row.push_back(j + 1);
      }
      if (static_cast<int>(row.size()) != m + 1)
        throw InvariantViolation("triangle " + std::to_string(l) + " row " + std::to_string(m + 1) + " has " +
                                 std::to_string(row.size()) + " entries");
      t.rows.push_back(std::move(row));
    }
    out.triangles.push_back(std::move(t));
  }
  return out;
}

Validation check_mt_chain(const MonotoneTriangleChain& t) {
  Validation v;
  if (t.n < 1) v.fail("n must be >= 1");
  if (t.k < 2 || t.k % 2 != 0) v.fail("k must be even");
  if (!v.ok()) return v;
  const int n = t.n;
  if (static_cast<int>(t.triangles.size()) != t.k / 2) {
    v.fail("expected " + std::to_string(t.k / 2) + " triangles, got " + std::to_string(t.triangles.size()));
    return v;
  }
  for (int l = 0; l < t.k / 2; ++l) {
    const auto& rows = t.triangles[l].rows;
    const std::string name = "triangle " + std::to_string(l + 1);
    if (static_cast<int>(rows.size()) != n) {
      v.fail(name + " has " + std::to_string(rows.size()) + " rows");
      continue;
    }
    bool shaped = true;
    for (int m = 0; m < n; ++m) {
      const auto& row = rows[m];
      const std::string where = name + " row " + std::to_string(m + 1);
      if (static_cast<int>(row.size()) != m + 1) {
        v.fail(where + " has " + std::to_string(row.size()) + " entries");
        shaped = false;
        continue;
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] < 1 || row[j] > 2 * n) v.fail(where + " entry " + std::to_string(row[j]) + " is outside 1.." + std::to_string(2 * n));
        if (j > 0 && row[j - 1] >= row[j]) v.fail(where + " is not strictly increasing");
      }
    }
    if (!shaped) continue;
    for (int m = 0; m + 1 < n; ++m)
      for (int j = 0; j <= m; ++j)
        if (rows[m + 1][j] > rows[m][j] || rows[m][j] > rows[m + 1][j + 1])
          v.fail(name + " rows " + std::to_string(m + 1) + " and " + std::to_string(m + 2) + " do not interlace at position " +
                 std::to_string(j + 1));
  }
  if (!v.ok()) return v;
  const int half = t.k / 2;
  for (int l = 0; l < half; ++l) {
    const auto& bottom = t.triangles[l].rows.back();
    const auto& before = t.triangles[(l + half - 1) % half].rows.back();
    for (int i : bottom) {
      if (i > n) continue;
      if (std::find(before.begin(), before.end(), 2 * n - i + 1) != before.end())
        v.fail("chaining: " + std::to_string(i) + " in the bottom row of triangle " + std::to_string(l + 1) + " and " +
               std::to_string(2 * n - i + 1) + " in the bottom row of triangle " + std::to_string((l + half - 1) % half + 1));
    }
  }
  return v;
}

ChainedASM from_monotone_triangles(const MonotoneTriangleChain& t) {
  require_even_k(t.n, t.k);
  check_mt_chain(t).require();
  const int n = t.n;
  ChainedASM a{BoardSpec::circular(n, t.k), {}};
  for (const auto& tri : t.triangles) {
    IntMatrix b(n, 2 * n);
    for (int m = 0; m < n; ++m) {
      for (int j : tri.rows[m]) b(m, j - 1) += 1;
      if (m > 0)
        for (int j : tri.rows[m - 1]) b(m, j - 1) -= 1;
    }
    a.matrices.push_back(slice(b, 0, 0, n, n));
    a.matrices.push_back(rotate_ccw(slice(b, 0, n, n, n)));
  }
  if (auto v = check_chained_asm(a.board, a.matrices); !v)
    throw InvariantViolation("monotone triangle chain did not give a chained ASM: " + v.problems.front());
  return a;
}

// ---------------------------------------------------------------------------
// Grid graph

std::string GridEdge::id() const {
  switch (kind) {
    case GridEdgeKind::Horizontal:
      return "h:" + std::to_string(board) + ":" + std::to_string(a) + ":" + std::to_string(b);
    case GridEdgeKind::Vertical:
      return "v:" + std::to_string(board) + ":" + std::to_string(a) + ":" + std::to_string(b);
    case GridEdgeKind::Chaining:
      return "c:" + std::to_string(board) + ":" + std::to_string(a);
    case GridEdgeKind::BoundaryLeft:
      return "bl:" + std::to_string(board) + ":" + std::to_string(a);
    case GridEdgeKind::BoundaryTop:
      return "bt:" + std::to_string(board) + ":" + std::to_string(a);
  }
  return {};
}

GridGraph::GridGraph(int n, int k) : n_(n), k_(k) {
  require_even_k(n, k);
  for (int l = 1; l <= k; ++l) {
    for (int j = 1; j <= n; ++j) vertices_.push_back({l, 0, j});
    for (int i = 1; i <= n; ++i) {
      vertices_.push_back({l, i, 0});
      for (int j = 1; j <= n; ++j) vertices_.push_back({l, i, j});
    }
  }
  edges_.reserve(static_cast<std::size_t>(k) * per_board());
  for (int l = 1; l <= k; ++l) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < n; ++j) edges_.push_back({GridEdgeKind::Horizontal, l, i, j, {l, i, j}, {l, i, j + 1}});
    for (int i = 1; i < n; ++i)
      for (int j = 1; j <= n; ++j) edges_.push_back({GridEdgeKind::Vertical, l, i, j, {l, i, j}, {l, i + 1, j}});
    for (int i = 1; i <= n; ++i)
      edges_.push_back({GridEdgeKind::Chaining, l, i, 0, {l, i, n}, {cyclic_next(l, k), n, i}});
    for (int i = 1; i <= n; ++i) edges_.push_back({GridEdgeKind::BoundaryLeft, l, i, 0, {l, i, 0}, {l, i, 1}});
    for (int j = 1; j <= n; ++j) edges_.push_back({GridEdgeKind::BoundaryTop, l, j, 0, {l, 0, j}, {l, 1, j}});
  }
}

int GridGraph::horizontal(int board, int i, int j) const {
  return (board - 1) * per_board() + (i - 1) * (n_ - 1) + (j - 1);
}
int GridGraph::vertical(int board, int i, int j) const {
  return (board - 1) * per_board() + n_ * (n_ - 1) + (i - 1) * n_ + (j - 1);
}
int GridGraph::chaining(int board, int i) const { return (board - 1) * per_board() + 2 * n_ * (n_ - 1) + (i - 1); }
int GridGraph::boundary_left(int board, int i) const {
  return (board - 1) * per_board() + 2 * n_ * (n_ - 1) + n_ + (i - 1);
}
int GridGraph::boundary_top(int board, int j) const {
  return (board - 1) * per_board() + 2 * n_ * (n_ - 1) + 2 * n_ + (j - 1);
}

Neighborhood GridGraph::around(const GridVertex& v) const {
  const int l = v.board;
  const int i = v.row;
  const int j = v.col;
  return {i > 1 ? vertical(l, i - 1, j) : boundary_top(l, j), j < n_ ? horizontal(l, i, j) : chaining(l, i),
          i < n_ ? vertical(l, i, j) : chaining(cyclic_prev(l, k_), j), j > 1 ? horizontal(l, i, j - 1) : boundary_left(l, i)};
}

bool GridGraph::contains(const GridVertex& v) const {
  if (v.board < 1 || v.board > k_) return false;
  if (v.row == 0) return v.col >= 1 && v.col <= n_;
  return v.row >= 1 && v.row <= n_ && v.col >= 0 && v.col <= n_;
}

int GridGraph::find(std::string_view id) const {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = id.find(':', start);
    parts.push_back(id.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto bad = [&]() { return ParseError("unknown grid edge '" + std::string(id) + "'"); };
  std::vector<int> nums;
  for (std::size_t t = 1; t < parts.size(); ++t) {
    int x = 0;
    const auto* first = parts[t].data();
    const auto* last = first + parts[t].size();
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last || parts[t].empty()) throw bad();
    nums.push_back(x);
  }
  const auto& kind = parts[0];
  const bool pair = kind == "h" || kind == "v";
  if (nums.size() != (pair ? 3u : 2u)) throw bad();
  const int l = nums[0];
  const int a = nums[1];
  const int b = pair ? nums[2] : 1;
  if (l < 1 || l > k_ || a < 1 || a > n_ || b < 1 || b > n_) throw bad();
  int idx = -1;
  if (kind == "h" && b < n_) idx = horizontal(l, a, b);
  else if (kind == "v" && a < n_) idx = vertical(l, a, b);
  else if (kind == "c") idx = chaining(l, a);
  else if (kind == "bl") idx = boundary_left(l, a);
  else if (kind == "bt") idx = boundary_top(l, a);
  if (idx < 0) throw bad();
  return idx;
}

GridGraph build_grid_graph(int n, int k) { return GridGraph(n, k); }

// ---------------------------------------------------------------------------
// Square ice

GridVertex boundary_head(const GridEdge& e) {
  const bool odd = e.board % 2 == 1;
  if (e.kind == GridEdgeKind::BoundaryLeft) return odd ? e.v : e.u;
  if (e.kind == GridEdgeKind::BoundaryTop) return odd ? e.u : e.v;
  throw DomainError("edge " + e.id() + " is not a boundary edge");
}

IceConfiguration to_ice(const ChainedASM& a) {
  require_circular_even(a.board);
  check_chained_asm(a.board, a.matrices).require();
  const int n = a.board.n();
  const int k = a.board.k();
  const GridGraph g(n, k);
  IceConfiguration c{n, k, std::vector<GridVertex>(g.edges().size())};
  for (int l = 1; l <= k; ++l) {
    const IntMatrix& m = a.matrices[l - 1];
    const IntMatrix& before = a.matrices[cyclic_prev(l, k) - 1];
    const bool odd = l % 2 == 1;
    for (int i = 1; i <= n; ++i) {
      int prefix = 0;
      for (int j = 1; j < n; ++j) {
        prefix += m(i - 1, j - 1);
        const GridEdge& e = g.edges()[g.horizontal(l, i, j)];
        c.heads[g.horizontal(l, i, j)] = (prefix == 1) == odd ? e.u : e.v;
      }
    }
    for (int j = 1; j <= n; ++j) {
      int below = before.row_sum(j - 1);
      for (int i = n - 1; i >= 1; --i) {
        below += m(i, j - 1);
        const GridEdge& e = g.edges()[g.vertical(l, i, j)];
        c.heads[g.vertical(l, i, j)] = (below == 1) == odd ? e.u : e.v;
      }
    }
    for (int i = 1; i <= n; ++i) {
      const GridEdge& e = g.edges()[g.chaining(l, i)];
      c.heads[g.chaining(l, i)] = (m.row_sum(i - 1) == 1) == odd ? e.u : e.v;
      c.heads[g.boundary_left(l, i)] = boundary_head(g.edges()[g.boundary_left(l, i)]);
      c.heads[g.boundary_top(l, i)] = boundary_head(g.edges()[g.boundary_top(l, i)]);
    }
  }
  return c;
}

Validation check_ice(const IceConfiguration& c) {
  Validation v;
  if (c.n < 1 || c.k < 2 || c.k % 2 != 0) {
    v.fail("ice configurations need n >= 1 and even k");
    return v;
  }
  const GridGraph g(c.n, c.k);
  if (c.heads.size() != g.edges().size()) {
    v.fail("expected " + std::to_string(g.edges().size()) + " oriented edges, got " + std::to_string(c.heads.size()));
    return v;
  }
  for (std::size_t e = 0; e < c.heads.size(); ++e) {
    const GridEdge& edge = g.edges()[e];
    const GridVertex& h = c.heads[e];
    if (h != edge.u && h != edge.v) {
      v.fail("edge " + edge.id() + " points to " + vertex_text(h) + ", which is not one of its endpoints");
      continue;
    }
    if ((edge.kind == GridEdgeKind::BoundaryLeft || edge.kind == GridEdgeKind::BoundaryTop) && h != boundary_head(edge))
      v.fail("boundary: edge " + edge.id() + " points the wrong way");
  }
  if (!v.ok()) return v;
  for (const auto& vertex : g.vertices()) {
    if (!vertex.interior()) continue;
    const auto nb = g.around(vertex);
    int in = 0;
    for (int e : {nb.north, nb.east, nb.south, nb.west}) in += c.heads[e] == vertex;
    if (in != 2) v.fail("vertex " + vertex_text(vertex) + " has " + std::to_string(in) + " incoming edges");
  }
  return v;
}

ChainedASM from_ice(const IceConfiguration& c) {
  require_even_k(c.n, c.k);
  check_ice(c).require();
  const GridGraph g(c.n, c.k);
  ChainedASM a{BoardSpec::circular(c.n, c.k), std::vector<IntMatrix>(c.k, IntMatrix(c.n))};
  for (const auto& vertex : g.vertices()) {
    if (!vertex.interior()) continue;
    const auto nb = g.around(vertex);
    const bool west_in = c.heads[nb.west] == vertex;
    const bool east_in = c.heads[nb.east] == vertex;
    int entry = 0;
    if (west_in && east_in) entry = 1;         // horizontal in, vertical out
    else if (!west_in && !east_in) entry = -1;  // horizontal out, vertical in
    if (vertex.board % 2 == 0) entry = -entry;
    a.matrices[vertex.board - 1](vertex.row - 1, vertex.col - 1) = entry;
  }
  if (auto v = check_chained_asm(a.board, a.matrices); !v)
    throw InvariantViolation("ice configuration did not give a chained ASM: " + v.problems.front());
  return a;
}

// ---------------------------------------------------------------------------
// Fully packed loops

FPLConfiguration to_fpl(const IceConfiguration& c) {
  check_ice(c).require();
  FPLConfiguration f{c.n, c.k, std::vector<char>(c.heads.size(), 0)};
  for (std::size_t e = 0; e < c.heads.size(); ++e) f.chosen[e] = parity(c.heads[e]) == 1;
  return f;
}

Validation check_fpl(const FPLConfiguration& f) {
  Validation v;
  if (f.n < 1 || f.k < 2 || f.k % 2 != 0) {
    v.fail("fully packed loops need n >= 1 and even k");
    return v;
  }
  const GridGraph g(f.n, f.k);
  if (f.chosen.size() != g.edges().size()) {
    v.fail("expected " + std::to_string(g.edges().size()) + " edge flags, got " + std::to_string(f.chosen.size()));
    return v;
  }
  for (std::size_t e = 0; e < f.chosen.size(); ++e) {
    const GridEdge& edge = g.edges()[e];
    bool want = false;
    if (edge.kind == GridEdgeKind::BoundaryLeft) want = edge.a % 2 == 1;
    else if (edge.kind == GridEdgeKind::BoundaryTop) want = edge.a % 2 == 0;
    else continue;
    if (static_cast<bool>(f.chosen[e]) != want)
      v.fail("boundary: edge " + edge.id() + (want ? " is missing" : " must not be present"));
  }
  for (const auto& vertex : g.vertices()) {
    if (!vertex.interior()) continue;
    const auto nb = g.around(vertex);
    int degree = 0;
    for (int e : {nb.north, nb.east, nb.south, nb.west}) degree += f.chosen[e] != 0;
    if (degree != 2) v.fail("vertex " + vertex_text(vertex) + " has degree " + std::to_string(degree));
  }
  return v;
}

IceConfiguration from_fpl(const FPLConfiguration& f) {
  require_even_k(f.n, f.k);
  check_fpl(f).require();
  const GridGraph g(f.n, f.k);
  IceConfiguration c{f.n, f.k, std::vector<GridVertex>(f.chosen.size())};
  for (std::size_t e = 0; e < f.chosen.size(); ++e) {
    const GridEdge& edge = g.edges()[e];
    const bool u_odd = parity(edge.u) == 1;
    c.heads[e] = (f.chosen[e] != 0) == u_odd ? edge.u : edge.v;
  }
  if (auto v = check_ice(c); !v)
    throw InvariantViolation("fully packed loop did not give an ice configuration: " + v.problems.front());
  return c;
}

}  // namespace chained
