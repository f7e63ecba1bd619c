#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "chained/asm.hpp"
#include "chained/placements.hpp"
#include "chained/views.hpp"

namespace chained {

/// Asked for a format the object does not support.
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

enum class Family { Placement, Permutation, OneLine, Matching, Asm, PlainAsm, MonotoneTriangles, Ice, Fpl };

/// Alternatives are ordered like Family.
using Document = std::variant<RookPlacement, ChainedPermutation, OneLine, ChainMatching, ChainedASM, PlainASM,
                              MonotoneTriangleChain, IceConfiguration, FPLConfiguration>;

/// "placement", "permutation", "oneline", "matching", "asm", "plain_asm",
/// "monotone_triangles", "ice", "fpl".
std::string_view to_string(Family family);
/// Also accepts the short names "matrix" (permutation) and "mt".
Family parse_family(std::string_view name);
Family family_of(const Document& doc);

/// Board the document lives on; plain ASMs report a linear board with k = 1.
BoardSpec board_of(const Document& doc);

enum class Layout { Pretty, Compact };

/// Canonical text: fixed key order, scalar arrays inline, newline-terminated.
std::string serialize(const Document& doc, Layout layout = Layout::Pretty);
/// Throws ParseError for malformed text or structure, ValidationError when the
/// object violates its invariants.
Document deserialize(std::string_view text);

/// Runs the family's own validator.
Validation check_document(const Document& doc);

/// Translates between families through the chained ASM. Throws UnsupportedDomain
/// when the target needs a circular even-k board, ValidationError when the
/// object has no image (an ASM with -1 entries has no one-line form).
Document convert(const Document& doc, Family target);

enum class Format { Ascii, Dot };
Format parse_format(std::string_view name);

using Renderable = std::variant<BoardSpec, ChainGraph, GridGraph, RookPlacement, ChainedPermutation, OneLine,
                                ChainMatching, ChainedASM, PlainASM, MonotoneTriangleChain, IceConfiguration,
                                FPLConfiguration>;

Renderable as_renderable(const Document& doc);

/// ascii: boards, placements, one-line forms, matrices, triangles.
/// dot: chain graphs, matchings, grid graphs, ice, fully packed loops.
/// Throws UnsupportedFormat otherwise.
std::string render(const Renderable& object, Format format);

}  // namespace chained
