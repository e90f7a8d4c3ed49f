#pragma once

// Cutting sequences of rational lines on the square torus.
//
// The fundamental domain is the unit square. Its left side is labelled A,
// right A-bar, bottom B and top B-bar. A line crossing a side takes the label
// of the copy it enters: moving right gives A, moving up gives B.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "primwords/farey.hpp"
#include "primwords/word.hpp"

namespace primwords {

enum class StartKind {
  LowestASide,      // lowest point on the A side; word starts with A
  RightmostBottom,  // rightmost point on the bottom side; word starts with B
  MiddleStrand,     // centred on the middle non-corner strand (pq even only)
  Offset,           // LowestASide rotated left by `offset`
};

struct CuttingSpec {
  ExtRational slope;  // p/q: p B-crossings per q A-crossings
  StartKind start = StartKind::LowestASide;
  std::size_t offset = 0;  // for StartKind::Offset, 0 <= offset < p + q
};

/// Cyclic word of side labels crossed by a fundamental segment from (0, d)
/// to (q, p + d), d > 0 infinitesimal, read from the chosen start. Negative
/// slopes map through B -> b; 0/1 and 1/0 give A and B.
Word cutting_word(const CuttingSpec& spec);

/// Palindromic cutting word centred on the middle vertical (p > q) or
/// horizontal (p < q) strand. Throws DomainError when pq is odd.
Word centered_palindrome(const ExtRational& x);

enum class Side { A, ABar, B, BBar };  // left, right, bottom, top
enum class StrandKind { Vertical, Horizontal, Corner };
enum class CornerType { None, LeftBottom, LeftTop, BottomRight, TopRight };

const char* side_name(Side s);
const char* strand_kind_name(StrandKind k);
const char* corner_type_name(CornerType c);

struct Strand {
  std::size_t index = 0;
  StrandKind kind = StrandKind::Horizontal;
  CornerType corner_type = CornerType::None;
  Side entry_side = Side::A;
  Side exit_side = Side::ABar;
};

struct StrandCounts {
  std::size_t vertical = 0;
  std::size_t horizontal = 0;
  std::size_t corner = 0;
  friend bool operator==(const StrandCounts&, const StrandCounts&) = default;
};

struct StrandDiagram {
  Word word;
  std::vector<Strand> strands;  // strand i is entered through letter i
  StrandCounts counts;
  bool simple = false;
};

/// Folds the curve of a cyclically reduced word into one square and decides
/// whether its strands can be drawn disjoint. Throws EmptyWordError for the
/// identity and DomainError if the word is not cyclically reduced.
StrandDiagram strand_diagram(const Word& w);

/// Deterministic SVG 1.1 rendering, 512x512 with a 32 unit margin.
std::string emit_svg(const StrandDiagram& d);

/// `{word, simple, counts{vertical,horizontal,corner}, strands[...]}`.
std::string diagram_json(const StrandDiagram& d);

}  // namespace primwords
