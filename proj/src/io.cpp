#include "chained/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace chained {

using Json = nlohmann::ordered_json;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr std::string_view kFamilyNames[] = {"placement", "permutation", "oneline", "matching", "asm",
                                              "plain_asm", "monotone_triangles", "ice", "fpl"};

// ---------------------------------------------------------------------------
// Canonical printing

bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

void print(const Json& j, int indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      print(it.value(), indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out += "[";
      for (std::size_t t = 0; t < j.size(); ++t) out += (t ? ", " : "") + j[t].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t t = 0; t < j.size(); ++t) {
      if (t) out += ",\n";
      out += pad;
      print(j[t], indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

Json header(std::string_view family, const BoardSpec& board) {
  Json j = Json::object();
  j["family"] = std::string(family);
  j["shape"] = std::string(to_string(board.shape()));
  j["n"] = board.n();
  j["k"] = board.k();
  return j;
}

Json matrices_json(const std::vector<IntMatrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(m.to_rows());
  return out;
}

Json vertex_json(const GridVertex& v) { return Json::array({v.board, v.row, v.col}); }

Json to_json(const Document& doc) {
  return std::visit(
      Overloaded{
          [](const RookPlacement& p) {
            Json j = header("placement", p.board);
            Json rooks = Json::array();
            for (const auto& s : p.squares) rooks.push_back({s.board, s.row, s.col});
            j["rooks"] = rooks;
            return j;
          },
          [](const ChainedPermutation& cp) {
            Json j = header("permutation", cp.board);
            j["matrices"] = matrices_json(cp.matrices);
            return j;
          },
          [](const OneLine& o) {
            Json j = header("oneline", o.board);
            j["oneline"] = format_one_line(o);
            return j;
          },
          [](const ChainMatching& m) {
            Json j = header("matching", m.board);
            Json edges = Json::array();
            for (const auto& e : m.edges) edges.push_back({e.layer, e.i, e.j});
            j["edges"] = edges;
            return j;
          },
          [](const ChainedASM& a) {
            Json j = header("asm", a.board);
            j["matrices"] = matrices_json(a.matrices);
            return j;
          },
          [](const PlainASM& m) {
            Json j = header("plain_asm", BoardSpec::linear(std::max(m.size(), 1), 1));
            j["n"] = m.size();
            j["matrix"] = m.matrix.to_rows();
            return j;
          },
          [](const MonotoneTriangleChain& t) {
            Json j = header("monotone_triangles", BoardSpec::circular(std::max(t.n, 1), std::max(t.k, 1)));
            j["n"] = t.n;
            j["k"] = t.k;
            Json tris = Json::array();
            for (const auto& tri : t.triangles) tris.push_back(tri.rows);
            j["triangles"] = tris;
            return j;
          },
          [](const IceConfiguration& c) {
            Json j = header("ice", BoardSpec::circular(c.n, c.k));
            const GridGraph g(c.n, c.k);
            Json orientation = Json::object();
            for (std::size_t e = 0; e < g.edges().size(); ++e) orientation[g.edges()[e].id()] = vertex_json(c.heads.at(e));
            j["orientation"] = orientation;
            return j;
          },
          [](const FPLConfiguration& f) {
            Json j = header("fpl", BoardSpec::circular(f.n, f.k));
            const GridGraph g(f.n, f.k);
            Json edges = Json::array();
            for (std::size_t e = 0; e < g.edges().size(); ++e)
              if (f.chosen.at(e)) edges.push_back(g.edges()[e].id());
            j["edges"] = edges;
            return j;
          },
      },
      doc);
}

// ---------------------------------------------------------------------------
// Structured reading

std::string describe_path(const std::string& path) { return path.empty() ? "document" : path; }

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(describe_path(path) + ": expected an integer");
  const auto x = j.get<long long>();
  if (x < -1000000 || x > 1000000) throw ParseError(describe_path(path) + ": integer out of range");
  return static_cast<int>(x);
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(describe_path(path) + ": expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  std::vector<int> out;
  for (std::size_t t = 0; t < as_array(j, path).size(); ++t) out.push_back(as_int(j[t], path + "[" + std::to_string(t) + "]"));
  return out;
}

std::vector<std::vector<int>> int_rows(const Json& j, const std::string& path) {
  std::vector<std::vector<int>> out;
  for (std::size_t t = 0; t < as_array(j, path).size(); ++t) out.push_back(int_list(j[t], path + "[" + std::to_string(t) + "]"));
  return out;
}

IntMatrix square_matrix(const Json& j, int n, const std::string& path) {
  auto rows = int_rows(j, path);
  if (static_cast<int>(rows.size()) != n) throw ParseError(path + ": expected " + std::to_string(n) + " rows");
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (static_cast<int>(rows[r].size()) != n)
      throw ParseError(path + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
  return IntMatrix::from_rows(rows);
}

std::vector<IntMatrix> matrix_tuple(const Json& j, const BoardSpec& board, const std::string& path) {
  if (static_cast<int>(as_array(j, path).size()) != board.k())
    throw ParseError(path + ": expected " + std::to_string(board.k()) + " matrices");
  std::vector<IntMatrix> out;
  for (int l = 0; l < board.k(); ++l) out.push_back(square_matrix(j[l], board.n(), path + "[" + std::to_string(l) + "]"));
  return out;
}

std::array<int, 3> triple(const Json& j, const std::string& path) {
  auto xs = int_list(j, path);
  if (xs.size() != 3) throw ParseError(path + ": expected 3 integers");
  return {xs[0], xs[1], xs[2]};
}

class Fields {
 public:
  explicit Fields(const Json& obj) : obj_(obj) {
    if (!obj.is_object()) throw ParseError("document: expected a JSON object");
  }

  const Json& operator[](const std::string& key) {
    auto it = obj_.find(key);
    if (it == obj_.end()) throw ParseError("document: missing key \"" + key + "\"");
    used_.insert(key);
    return *it;
  }

  std::string text(const std::string& key) {
    const Json& j = (*this)[key];
    if (!j.is_string()) throw ParseError(key + ": expected a string");
    return j.get<std::string>();
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!used_.count(it.key())) throw ParseError("document: unexpected key \"" + it.key() + "\"");
  }

 private:
  const Json& obj_;
  std::set<std::string> used_;
};

BoardSpec read_board(Fields& f, Shape shape) {
  const int n = as_int(f["n"], "n");
  const int k = as_int(f["k"], "k");
  try {
    return BoardSpec(shape, n, k);
  } catch (const DomainError& e) {
    throw ValidationError({e.what()});
  }
}

Shape read_shape(Fields& f) {
  try {
    return parse_shape(f.text("shape"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("shape: ") + e.what());
  }
}

Document from_json(const Json& root) {
  Fields f(root);
  const std::string family_name = f.text("family");
  Family family;
  try {
    family = parse_family(family_name);
  } catch (const DomainError&) {
    throw ParseError("family: unknown family \"" + family_name + "\"");
  }
  const Shape shape = read_shape(f);
  const BoardSpec board = read_board(f, shape);
  Document doc = [&]() -> Document {
    switch (family) {
      case Family::Placement: {
        std::vector<Square> squares;
        const Json& rooks = as_array(f["rooks"], "rooks");
        for (std::size_t t = 0; t < rooks.size(); ++t) {
          auto [b, r, c] = triple(rooks[t], "rooks[" + std::to_string(t) + "]");
          squares.push_back({b, r, c});
        }
        return RookPlacement{board, [&] {
                               std::sort(squares.begin(), squares.end());
                               return squares;
                             }()};
      }
      case Family::Permutation:
        return ChainedPermutation{board, matrix_tuple(f["matrices"], board, "matrices")};
      case Family::OneLine: {
        OneLine o = parse_one_line(f.text("oneline"));
        if (o.board != board)
          throw ValidationError({"oneline: string encodes " + describe(o.board) + " but the document declares " + describe(board)});
        return o;
      }
      case Family::Matching: {
        ChainMatching m{board, {}};
        const Json& edges = as_array(f["edges"], "edges");
        for (std::size_t t = 0; t < edges.size(); ++t) {
          auto [l, i, j] = triple(edges[t], "edges[" + std::to_string(t) + "]");
          m.edges.push_back({l, i, j});
        }
        std::sort(m.edges.begin(), m.edges.end());
        return m;
      }
      case Family::Asm:
        return ChainedASM{board, matrix_tuple(f["matrices"], board, "matrices")};
      case Family::PlainAsm:
        if (board.circular() || board.k() != 1) throw ValidationError({"plain_asm documents use shape linear and k = 1"});
        return PlainASM{square_matrix(f["matrix"], board.n(), "matrix")};
      case Family::MonotoneTriangles: {
        require_circular_even(board);
        MonotoneTriangleChain t{board.n(), board.k(), {}};
        const Json& tris = as_array(f["triangles"], "triangles");
        for (std::size_t l = 0; l < tris.size(); ++l)
          t.triangles.push_back({int_rows(tris[l], "triangles[" + std::to_string(l) + "]")});
        return t;
      }
      case Family::Ice: {
        require_circular_even(board);
        const GridGraph g(board.n(), board.k());
        const Json& orientation = f["orientation"];
        if (!orientation.is_object()) throw ParseError("orientation: expected an object");
        IceConfiguration c{board.n(), board.k(), std::vector<GridVertex>(g.edges().size())};
        std::vector<char> seen(g.edges().size(), 0);
        for (auto it = orientation.begin(); it != orientation.end(); ++it) {
          const int e = g.find(it.key());
          auto [l, i, j] = triple(it.value(), "orientation." + it.key());
          c.heads[e] = {l, i, j};
          seen[e] = 1;
        }
        for (std::size_t e = 0; e < seen.size(); ++e)
          if (!seen[e]) throw ParseError("orientation: missing edge " + g.edges()[e].id());
        return c;
      }
      case Family::Fpl: {
        require_circular_even(board);
        const GridGraph g(board.n(), board.k());
        FPLConfiguration fpl{board.n(), board.k(), std::vector<char>(g.edges().size(), 0)};
        const Json& edges = as_array(f["edges"], "edges");
        for (std::size_t t = 0; t < edges.size(); ++t) {
          if (!edges[t].is_string()) throw ParseError("edges[" + std::to_string(t) + "]: expected an edge id");
          const int e = g.find(edges[t].get<std::string>());
          if (fpl.chosen[e]) throw ParseError("edges: " + edges[t].get<std::string>() + " listed twice");
          fpl.chosen[e] = 1;
        }
        return fpl;
      }
    }
    throw ParseError("family: unknown family");
  }();
  f.finish();
  check_document(doc).require();
  return doc;
}

// ---------------------------------------------------------------------------
// Rendering helpers

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Places text blocks side by side under their labels.
std::string side_by_side(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& blocks,
                         const std::string& gap) {
  std::vector<std::size_t> width(blocks.size(), 0);
  std::size_t height = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    width[b] = labels[b].size();
    for (const auto& l : blocks[b]) width[b] = std::max(width[b], l.size());
    height = std::max(height, blocks[b].size());
  }
  auto row = [&](auto cell) {
    std::string line;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::string c = cell(b);
      c.resize(width[b], ' ');
      line += (b ? gap : "") + c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };
  std::string out = row([&](std::size_t b) { return labels[b]; });
  for (std::size_t r = 0; r < height; ++r)
    out += row([&](std::size_t b) { return r < blocks[b].size() ? blocks[b][r] : std::string(); });
  return out;
}

std::string ascii_boards(const BoardSpec& board, const std::vector<Square>& rooks) {
  const int n = board.n();
  std::vector<std::vector<std::string>> grids(board.k(), std::vector<std::string>(n, std::string(n, '.')));
  for (const auto& s : rooks) grids[s.board - 1][s.row - 1][s.col - 1] = 'R';
  std::vector<std::string> labels;
  for (int l = 1; l <= board.k(); ++l) labels.push_back("B" + std::to_string(l));
  return describe(board) + "\n" + side_by_side(labels, grids, "  ");
}

std::string ascii_matrices(const BoardSpec& board, const std::vector<IntMatrix>& ms) {
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> labels;
  for (std::size_t l = 0; l < ms.size(); ++l) {
    labels.push_back("A" + std::to_string(l + 1));
    blocks.push_back(lines_of(to_text(ms[l])));
  }
  return describe(board) + "\n" + side_by_side(labels, blocks, "   ");
}

std::string ascii_triangle(const MonotoneTriangle& t, int n) {
  const int w = static_cast<int>(std::to_string(2 * n).size());
  std::string out;
  for (std::size_t m = 0; m < t.rows.size(); ++m) {
    std::string line(static_cast<std::size_t>(n - 1 - static_cast<int>(m)) * (w + 1), ' ');
    for (std::size_t j = 0; j < t.rows[m].size(); ++j) {
      std::string x = std::to_string(t.rows[m][j]);
      if (j) line += std::string(w + 2, ' ');
      line += std::string(w - static_cast<int>(x.size()), ' ') + x;
    }
    out += line + "\n";
  }
  return out;
}

std::string chain_node(const BoardSpec& board, int row, int index) {
  if (board.circular() && row == board.k()) row = 0;
  return "r" + std::to_string(row) + "_" + std::to_string(index);
}

std::string chain_dot(const BoardSpec& board, const std::vector<ChainEdge>* chosen) {
  const ChainGraph g = build_chain_graph(board);
  std::string out = "graph chain {\n";
  for (const auto& v : g.vertices)
    out += "  " + chain_node(board, v.row, v.index) + " [label=\"" + std::to_string(v.index) + "\"];\n";
  for (const auto& e : g.edges) {
    out += "  " + chain_node(board, e.layer, e.i) + " -- " + chain_node(board, e.layer - 1, e.j) + " [id=\"" +
           std::to_string(e.layer) + ":" + std::to_string(e.i) + ":" + std::to_string(e.j) + "\"";
    if (chosen && std::binary_search(chosen->begin(), chosen->end(), e)) out += ", color=red, penwidth=3";
    out += "];\n";
  }
  return out + "}\n";
}

std::string grid_node(const GridVertex& v) {
  return "v" + std::to_string(v.board) + "_" + std::to_string(v.row) + "_" + std::to_string(v.col);
}

std::string grid_vertices(const GridGraph& g) {
  std::string out;
  for (const auto& v : g.vertices())
    out += "  " + grid_node(v) + (v.interior() ? "" : " [shape=point]") + ";\n";
  return out;
}

std::string grid_dot(const GridGraph& g) {
  std::string out = "graph grid {\n" + grid_vertices(g);
  for (const auto& e : g.edges()) out += "  " + grid_node(e.u) + " -- " + grid_node(e.v) + " [id=\"" + e.id() + "\"];\n";
  return out + "}\n";
}

std::string ice_dot(const IceConfiguration& c) {
  check_ice(c).require();
  const GridGraph g(c.n, c.k);
  std::string out = "digraph ice {\n" + grid_vertices(g);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const GridEdge& edge = g.edges()[e];
    const GridVertex& head = c.heads[e];
    const GridVertex& tail = head == edge.u ? edge.v : edge.u;
    out += "  " + grid_node(tail) + " -> " + grid_node(head) + " [id=\"" + edge.id() + "\"];\n";
  }
  return out + "}\n";
}

std::string fpl_dot(const FPLConfiguration& f) {
  check_fpl(f).require();
  const GridGraph g(f.n, f.k);
  std::string out = "graph fpl {\n" + grid_vertices(g);
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    if (f.chosen[e])
      out += "  " + grid_node(g.edges()[e].u) + " -- " + grid_node(g.edges()[e].v) + " [id=\"" + g.edges()[e].id() + "\"];\n";
  return out + "}\n";
}

[[noreturn]] void unsupported(std::string_view what, Format format) {
  throw UnsupportedFormat(std::string(what) + " cannot be rendered as " + (format == Format::Ascii ? "ascii" : "dot"));
}

ChainedASM to_hub(const Document& doc) {
  return std::visit(
      Overloaded{
          [](const RookPlacement& p) { return asm_from_permutation(placement_to_matrices(p)); },
          [](const ChainedPermutation& cp) { return asm_from_permutation(cp); },
          [](const OneLine& o) { return asm_from_permutation(from_one_line(o)); },
          [](const ChainMatching& m) { return asm_from_permutation(from_matching(m)); },
          [](const ChainedASM& a) {
            check_chained_asm(a.board, a.matrices).require();
            return a;
          },
          [](const PlainASM& m) {
            check_plain_asm(m.matrix).require();
            return ChainedASM{BoardSpec::linear(m.size(), 1), {m.matrix}};
          },
          [](const MonotoneTriangleChain& t) { return from_monotone_triangles(t); },
          [](const IceConfiguration& c) { return from_ice(c); },
          [](const FPLConfiguration& f) { return from_ice(from_fpl(f)); },
      },
      doc);
}

}  // namespace

std::string_view to_string(Family family) { return kFamilyNames[static_cast<int>(family)]; }

Family parse_family(std::string_view name) {
  if (name == "matrix") return Family::Permutation;
  if (name == "mt") return Family::MonotoneTriangles;
  for (int f = 0; f < static_cast<int>(std::size(kFamilyNames)); ++f)
    if (kFamilyNames[f] == name) return static_cast<Family>(f);
  throw DomainError("unknown family '" + std::string(name) + "'");
}

Family family_of(const Document& doc) { return static_cast<Family>(doc.index()); }

BoardSpec board_of(const Document& doc) {
  return std::visit(Overloaded{
                        [](const PlainASM& m) { return BoardSpec::linear(m.size(), 1); },
                        [](const MonotoneTriangleChain& t) { return BoardSpec::circular(t.n, t.k); },
                        [](const IceConfiguration& c) { return BoardSpec::circular(c.n, c.k); },
                        [](const FPLConfiguration& f) { return BoardSpec::circular(f.n, f.k); },
                        [](const auto& x) { return x.board; },
                    },
                    doc);
}

std::string serialize(const Document& doc, Layout layout) {
  const Json j = to_json(doc);
  if (layout == Layout::Compact) return j.dump() + "\n";
  std::string out;
  print(j, 0, out);
  return out + "\n";
}

Document deserialize(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return from_json(root);
}

Validation check_document(const Document& doc) {
  return std::visit(Overloaded{
                        [](const RookPlacement& p) { return check_placement(p); },
                        [](const ChainedPermutation& cp) { return check_chained_permutation(cp.board, cp.matrices); },
                        [](const OneLine& o) { return check_one_line(o); },
                        [](const ChainMatching& m) { return check_matching(m); },
                        [](const ChainedASM& a) { return check_chained_asm(a.board, a.matrices); },
                        [](const PlainASM& m) { return check_plain_asm(m.matrix); },
                        [](const MonotoneTriangleChain& t) { return check_mt_chain(t); },
                        [](const IceConfiguration& c) { return check_ice(c); },
                        [](const FPLConfiguration& f) { return check_fpl(f); },
                    },
                    doc);
}

Document convert(const Document& doc, Family target) {
  if (family_of(doc) == target) {
    check_document(doc).require();
    return doc;
  }
  const ChainedASM a = to_hub(doc);
  switch (target) {
    case Family::Placement:
      return matrices_to_placement(asm_to_permutation(a));
    case Family::Permutation:
      return asm_to_permutation(a);
    case Family::OneLine:
      return to_one_line(asm_to_permutation(a));
    case Family::Matching:
      return to_matching(asm_to_permutation(a));
    case Family::Asm:
      return a;
    case Family::PlainAsm:
      if (a.board.circular() || a.board.k() != 1)
        throw UnsupportedDomain("plain ASMs are chained ASMs on a single linear board, got " + describe(a.board));
      return PlainASM{a.matrices[0]};
    case Family::MonotoneTriangles:
      return to_monotone_triangles(a);
    case Family::Ice:
      return to_ice(a);
    case Family::Fpl:
      return to_fpl(to_ice(a));
  }
  throw DomainError("unknown target family");
}

Format parse_format(std::string_view name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "dot") return Format::Dot;
  throw UnsupportedFormat("unknown format '" + std::string(name) + "'");
}

Renderable as_renderable(const Document& doc) {
  return std::visit([](const auto& x) -> Renderable { return x; }, doc);
}

std::string render(const Renderable& object, Format format) {
  const bool ascii = format == Format::Ascii;
  return std::visit(
      Overloaded{
          [&](const BoardSpec& b) {
            if (!ascii) unsupported("a board", format);
            return ascii_boards(b, {});
          },
          [&](const ChainGraph& g) {
            if (ascii) unsupported("a chain graph", format);
            return chain_dot(g.board, nullptr);
          },
          [&](const GridGraph& g) {
            if (ascii) unsupported("a grid graph", format);
            return grid_dot(g);
          },
          [&](const RookPlacement& p) {
            if (!ascii) unsupported("a placement", format);
            return ascii_boards(p.board, p.squares);
          },
          [&](const ChainedPermutation& cp) {
            if (!ascii) unsupported("a chained permutation", format);
            return ascii_matrices(cp.board, cp.matrices);
          },
          [&](const OneLine& o) {
            if (!ascii) unsupported("a one-line form", format);
            std::vector<Square> rooks;
            for (std::size_t l = 0; l < o.blocks.size(); ++l)
              for (std::size_t i = 0; i < o.blocks[l].size(); ++i)
                if (o.blocks[l][i] > 0 && o.blocks[l][i] <= o.board.n())
                  rooks.push_back({static_cast<int>(l) + 1, static_cast<int>(i) + 1, o.blocks[l][i]});
            return format_one_line(o) + "\n" + ascii_boards(o.board, rooks);
          },
          [&](const ChainMatching& m) {
            if (ascii) unsupported("a matching", format);
            return chain_dot(m.board, &m.edges);
          },
          [&](const ChainedASM& a) {
            if (!ascii) unsupported("a chained ASM", format);
            return ascii_matrices(a.board, a.matrices);
          },
          [&](const PlainASM& m) {
            if (!ascii) unsupported("an ASM", format);
            return to_text(m.matrix);
          },
          [&](const MonotoneTriangleChain& t) {
            if (!ascii) unsupported("a monotone triangle chain", format);
            std::string out;
            for (std::size_t l = 0; l < t.triangles.size(); ++l)
              out += (l ? "\n" : "") + std::string("M") + std::to_string(l + 1) + "\n" + ascii_triangle(t.triangles[l], t.n);
            return out;
          },
          [&](const IceConfiguration& c) {
            if (ascii) unsupported("an ice configuration", format);
            return ice_dot(c);
          },
          [&](const FPLConfiguration& f) {
            if (ascii) unsupported("a fully packed loop", format);
            return fpl_dot(f);
          },
      },
      object);
}

}  // namespace chained
