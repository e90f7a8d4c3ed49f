#pragma once

// Independent ground truth for primitivity and generating pairs, built from
// classical free-group results rather than from the Farey machinery.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "primwords/farey.hpp"
#include "primwords/word.hpp"

namespace primwords {

/// One of the eight length-changing Whitehead automorphisms of F(A, B):
/// the moved generator is sent to itself multiplied by a letter of the
/// other generator on the right or on the left.
struct WhiteheadMove {
  Generator moved = Generator::A;
  Letter multiplier = kB;
  bool on_right = true;  // x -> x m when true, x -> m x otherwise

  std::string description() const;
  Word apply(const Word& w) const;
};

/// The fixed, lexicographically ordered move set used by the greedy search.
const std::vector<WhiteheadMove>& whitehead_moves();

/// Greedy Whitehead reduction of the cyclic length; primitive iff it ends
/// at a single letter.
bool whitehead_is_primitive(const Word& w);

/// Nielsen: (u, v) generates F(A, B) iff [u, v] is conjugate to [A, B]^(+-1).
bool is_generating_pair(const Word& u, const Word& v);

/// Every freely reduced word of length 1..max_len, shortest first and
/// lexicographic over A < a < B < b within a length.
void for_each_reduced_word(std::size_t max_len, const std::function<void(const Word&)>& visit);

struct WordDisagreement {
  Word word;
  bool decision = false;
  bool strands_simple = false;
  bool whitehead = false;
};

struct PairDisagreement {
  ExtRational x;
  ExtRational y;
  bool neighbors = false;
  bool generating = false;
};

struct CrossCheckReport {
  std::uint64_t checked = 0;
  std::uint64_t primitives = 0;
  std::uint64_t disagreement_count = 0;
  std::vector<WordDisagreement> disagreements;  // first few, in word order
  std::uint64_t pairs_checked = 0;
  std::uint64_t neighbor_pairs = 0;
  std::uint64_t pair_disagreement_count = 0;
  std::vector<PairDisagreement> pair_disagreements;

  bool ok() const { return disagreement_count == 0 && pair_disagreement_count == 0; }
};

inline constexpr std::size_t kMaxCrossCheckLength = 14;

/// Compares is_primitive, strand_diagram(...).simple and the Whitehead
/// oracle on all reduced words up to max_len, then Farey adjacency against
/// the Nielsen test on all pairs of non-negative slopes with p + q <= pair_bound.
/// Uses `threads` workers (0 picks the hardware concurrency).
CrossCheckReport cross_check(std::size_t max_len, std::int64_t pair_bound = 20, unsigned threads = 0);

std::string report_json(const CrossCheckReport& r);

/// All canonical p/q with p, q >= 0 and p + q <= bound, including 0/1 and 1/0.
std::vector<ExtRational> slopes_up_to(std::int64_t bound);

}  // namespace primwords
