#include "chained/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chained/io.hpp"
#include "chained/verify.hpp"

namespace chained {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct BoardArgs {
  std::string shape;
  int n = 0;
  int k = 0;

  void attach(CLI::App* app, bool required) {
    auto* s = app->add_option("--shape", shape, "linear or circular")->check(CLI::IsMember({"linear", "circular"}));
    auto* on = app->add_option("-n", n, "board side length");
    auto* ok = app->add_option("-k", k, "number of chained boards");
    if (required) {
      s->required();
      on->required();
      ok->required();
    }
  }

  bool given() const { return !shape.empty() || n != 0 || k != 0; }
  BoardSpec board() const {
    if (shape.empty() || n == 0 || k == 0) throw UsageError("--shape, -n and -k are required together");
    return BoardSpec(parse_shape(shape), n, k);
  }
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

// A JSON document, or a bare one-line string.
Document read_document(const std::string& text) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError("empty input");
  if (body.front() == '{') return deserialize(body);
  OneLine o = parse_one_line(body);
  check_one_line(o).require();
  return o;
}

void report(std::ostream& err, const Validation& v) {
  for (const auto& p : v.problems) err << "  " << p << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rook placements and alternating sign matrices on chained chessboards", "chained"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "count maximum (or m-rook) placements, or chained ASMs");
  BoardArgs count_board;
  count_board.attach(count, true);
  std::optional<int> count_m;
  std::string count_method;
  std::string count_family = "placements";
  count->add_option("-m", count_m, "number of rooks (default: the maximum)");
  count->add_option("--method", count_method, "formula, closed or brute")
      ->check(CLI::IsMember({"formula", "closed", "brute"}));
  count->add_option("--family", count_family, "placements or asm")->check(CLI::IsMember({"placements", "asm"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream objects as JSON lines");
  BoardArgs enum_board;
  enum_board.attach(enumerate, true);
  std::string enum_family;
  std::optional<int> enum_m;
  std::uint64_t enum_limit = 0;
  std::string enum_out = "-";
  enumerate->add_option("--family", enum_family, "placements, perms or asm")
      ->required()
      ->check(CLI::IsMember({"placements", "perms", "asm"}));
  enumerate->add_option("-m", enum_m, "number of rooks for placements (default: the maximum)");
  enumerate->add_option("--limit", enum_limit, "stop after this many objects (0: all)");
  enumerate->add_option("--out", enum_out, "output file");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "translate an object to another family");
  std::string conv_from;
  std::string conv_to;
  std::string conv_in = "-";
  std::string conv_out = "-";
  bool conv_compact = false;
  const std::vector<std::string> convertible{"placement", "matrix", "permutation", "oneline", "matching", "asm",
                                             "plain_asm", "mt", "monotone_triangles", "ice", "fpl"};
  convert_cmd->add_option("--from", conv_from, "family of the input (checked when given)")->check(CLI::IsMember(convertible));
  convert_cmd->add_option("--to", conv_to, "target family")->required()->check(CLI::IsMember(convertible));
  convert_cmd->add_option("--in", conv_in, "input document or one-line string file");
  convert_cmd->add_option("--out", conv_out, "output file");
  convert_cmd->add_flag("--compact", conv_compact, "single-line output");

  // validate
  auto* validate = app.add_subcommand("validate", "check a document and print diagnostics");
  std::string val_family;
  std::string val_in = "-";
  validate->add_option("--family", val_family, "expected family")->check(CLI::IsMember(convertible));
  validate->add_option("--in", val_in, "input document");

  // render
  auto* render_cmd = app.add_subcommand("render", "draw an object as ascii or dot");
  std::string rend_format;
  std::string rend_in;
  std::string rend_graph;
  std::string rend_out = "-";
  BoardArgs rend_board;
  rend_board.attach(render_cmd, false);
  render_cmd->add_option("--format", rend_format, "ascii or dot")->required()->check(CLI::IsMember({"ascii", "dot"}));
  render_cmd->add_option("--in", rend_in, "input document ('-' for stdin)");
  render_cmd->add_option("--graph", rend_graph, "chain or grid (needs --shape, -n, -k)")
      ->check(CLI::IsMember({"chain", "grid"}));
  render_cmd->add_option("--out", rend_out, "output file");

  // verify-tables
  auto* verify = app.add_subcommand("verify-tables", "recount the published table and closed forms");
  VerifyOptions vopts;
  std::string ver_out = "-";
  verify->add_option("--max-n", vopts.max_n, "largest n to check");
  verify->add_option("--max-k", vopts.max_k, "largest k to check");
  verify->add_option("--budget-seconds", vopts.budget_seconds, "skip checks estimated to exceed the remaining budget");
  verify->add_option("--out", ver_out, "report file (TSV)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) {
      const BoardSpec board = count_board.board();
      const int m = count_m.value_or(max_rooks(board));
      if (m < 0 || m > board.n() * board.k())
        throw UsageError("-m must lie in 0.." + std::to_string(board.n() * board.k()));
      if (count_family == "asm") {
        if (!count_method.empty() && count_method != "brute") throw UsageError("chained ASMs are counted by enumeration (--method brute)");
        if (m != max_rooks(board)) throw UsageError("chained ASMs always carry the maximum sum");
        out << count_chained_asm(board) << "\n";
        return kOk;
      }
      const std::string method = count_method.empty() ? "formula" : count_method;
      if (method == "formula") {
        out << count_placements_formula(board, m) << "\n";
      } else if (method == "closed") {
        if (m != max_rooks(board)) throw UsageError("--method closed applies only to maximum placements");
        out << count_max_closed(board) << "\n";
      } else {
        out << count_placements_brute(board, m) << "\n";
      }
      return kOk;
    }

    if (enumerate->parsed()) {
      const BoardSpec board = enum_board.board();
      if (enum_m && enum_family != "placements") throw UsageError("-m applies only to --family placements");
      Sink sink(enum_out, out);
      std::uint64_t written = 0;
      auto emit = [&](const Document& d) {
        *sink << serialize(d, Layout::Compact);
        ++written;
        return enum_limit == 0 || written < enum_limit;
      };
      if (enum_family == "asm") {
        enumerate_chained_asm(board, [&](const ChainedASM& a) { return emit(a); });
      } else {
        const int m = enum_family == "perms" ? max_rooks(board) : enum_m.value_or(max_rooks(board));
        if (m < 0 || m > board.n() * board.k()) throw UsageError("-m must lie in 0.." + std::to_string(board.n() * board.k()));
        enumerate_placements(board, m, [&](const RookPlacement& p) {
          return enum_family == "perms" ? emit(placement_to_matrices(p)) : emit(p);
        });
      }
      err << "wrote " << written << " objects\n";
      return kOk;
    }

    if (convert_cmd->parsed()) {
      const Document doc = read_document(read_all(conv_in, in));
      if (!conv_from.empty() && parse_family(conv_from) != family_of(doc))
        throw UsageError("input is a " + std::string(to_string(family_of(doc))) + " document, not " + conv_from);
      const Document result = convert(doc, parse_family(conv_to));
      Sink sink(conv_out, out);
      *sink << serialize(result, conv_compact ? Layout::Compact : Layout::Pretty);
      return kOk;
    }

    if (validate->parsed()) {
      const std::string text = read_all(val_in, in);
      try {
        const Document doc = read_document(text);
        if (!val_family.empty() && parse_family(val_family) != family_of(doc)) {
          err << "invalid: expected a " << to_string(parse_family(val_family)) << " document, got "
              << to_string(family_of(doc)) << "\n";
          return kFailed;
        }
        out << "valid " << to_string(family_of(doc)) << " on " << describe(board_of(doc)) << "\n";
        return kOk;
      } catch (const ValidationError& e) {
        err << "invalid:\n";
        report(err, Validation{e.problems()});
        return kFailed;
      } catch (const ParseError& e) {
        err << "invalid: " << e.what() << "\n";
        return kFailed;
      }
    }

    if (render_cmd->parsed()) {
      const Format format = parse_format(rend_format);
      std::string text;
      if (!rend_graph.empty()) {
        const BoardSpec board = rend_board.board();
        if (rend_graph == "chain")
          text = render(build_chain_graph(board), format);
        else {
          require_circular_even(board);
          text = render(build_grid_graph(board.n(), board.k()), format);
        }
      } else if (!rend_in.empty()) {
        text = render(as_renderable(read_document(read_all(rend_in, in))), format);
      } else if (rend_board.given()) {
        text = render(rend_board.board(), format);
      } else {
        throw UsageError("render needs --in, --graph, or a board (--shape, -n, -k)");
      }
      Sink sink(rend_out, out);
      *sink << text;
      return kOk;
    }

    if (verify->parsed()) {
      if (vopts.max_n < 1 || vopts.max_k < 1) throw UsageError("--max-n and --max-k must be >= 1");
      const auto records = verify_tables(vopts);
      {
        Sink sink(ver_out, out);
        *sink << to_tsv(records);
      }
      std::map<Status, int> tally;
      for (const auto& r : records) {
        ++tally[r.status];
        if (r.status == Status::Skipped)
          err << "SKIPPED " << r.family << " " << describe(r.board) << ": estimated " << r.estimated_seconds
              << " s exceeds the remaining budget\n";
        if (r.status == Status::Fail)
          err << "FAILED " << r.family << " " << describe(r.board) << ": expected " << r.expected << ", got "
              << *r.actual << "\n";
      }
      err << tally[Status::Pass] << " passed, " << tally[Status::Fail] << " failed, " << tally[Status::Skipped]
          << " skipped\n";
      return tally[Status::Fail] ? kFailed : kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFormat& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid:\n";
    report(err, Validation{e.problems()});
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace chained
