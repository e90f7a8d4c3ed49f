#pragma once

#include <cstdint>
#include <vector>

#include "primwords/word.hpp"

namespace primwords::detail {

struct Crossing {
  Generator gen;
  std::int64_t index;  // i for the i-th A-crossing, l for the l-th B-crossing
};

/// Crossings of the segment (0, d) -> (q, p + d) in order of travel, p, q > 0.
std::vector<Crossing> line_crossings(std::int64_t p, std::int64_t q);

/// Positive word read cyclically from crossing `start`.
Word crossings_word(const std::vector<Crossing>& cs, std::size_t start);

/// Where a crossing lands on its side of the unit square, in (0, 1).
double crossing_position(const Crossing& c, std::int64_t p, std::int64_t q);

}  // namespace primwords::detail
