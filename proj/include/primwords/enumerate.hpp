#pragma once

// Primitive words indexed by rationals: the Farey-recursive W and E
// schemes, the continued-fraction form, the V recursion, exponent
// extraction and the primitivity decision procedure.
//
// Convention: W(p/q) and E(p/q) contain p letters B and q letters A, so
// W(0/1) = A and W(1/0) = B.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "primwords/farey.hpp"
#include "primwords/word.hpp"

namespace primwords {

/// W(m/n (+) r/s) = W(r/s) * W(m/n) for distinguished neighbours m/n < r/s.
/// Negative x maps through B -> b.
Word w_word(const ExtRational& x);

/// Same word as w_word, built along the continued-fraction approximants.
Word cf_word(const ExtRational& x);

/// (V(-1), V(0), ..., V(k)) for x = [a0, ..., ak] > 1, with V(-1) = B,
/// V(0) = A B^a0 and V(j) = V(j-2) V(j-1)^aj.
std::vector<Word> v_sequence(const ExtRational& x);

/// E(0/1) = A, E(1/0) = B; E(x) = E(hi) E(lo) when pq is odd and
/// E(lo) E(hi) when pq is even. Negative x maps through B -> b.
Word e_word(const ExtRational& x);

enum class SlopeClass { BHeavy, AHeavy };

/// Blocks of the majority generator between single letters of the minority
/// generator: w = X^n0 Y X^n1 Y ... Y X^nt with X the majority generator.
struct ExponentSequence {
  SlopeClass slope_class = SlopeClass::BHeavy;
  std::vector<std::int64_t> exponents;  // n0, n1, ..., nt
  int separator_sign = 1;

  /// n1 .. n(t-1); the outer blocks join up cyclically.
  std::vector<std::int64_t> interior() const;
};

/// Throws MixedSignsError if a generator occurs with both signs and
/// DomainError if the word is not cyclically reduced or lacks a generator.
ExponentSequence primitive_exponents(const Word& w);

/// Majority-generator block lengths read cyclically, starting after a
/// minority letter; one entry per minority letter. Same preconditions as
/// primitive_exponents.
std::vector<std::int64_t> cyclic_blocks(const Word& w);

/// Generator symmetry that maps a word into the positive quadrant.
enum class Symmetry { Identity, InvertA, InvertB, InvertBoth };
const char* symmetry_name(Symmetry s);
Word apply_symmetry(const Word& w, Symmetry s);

enum class RejectReason {
  Identity,
  MixedSigns,
  NotCoprime,
  ExponentPattern,
  NotRotation,
};
const char* reject_reason_name(RejectReason r);

struct PrimitivityVerdict {
  bool primitive = false;
  // Valid when primitive: apply_symmetry(core, symmetry) rotated left by
  // `rotation` equals w_word(slope).
  ExtRational slope;
  std::size_t rotation = 0;
  Symmetry symmetry = Symmetry::Identity;
  // Valid when not primitive.
  RejectReason reason = RejectReason::Identity;
};

PrimitivityVerdict is_primitive(const Word& w);

enum class PartsKind { SinglePalindrome, PalindromePair };

struct PalindromicParts {
  PartsKind kind = PartsKind::SinglePalindrome;
  Word first;
  Word second;  // empty for SinglePalindrome
};

/// pq even: E(x) itself. pq odd: (E(hi), E(lo)) with E(x) = E(hi) E(lo).
PalindromicParts palindromic_parts(const ExtRational& x);

struct EnumeratedPrimitive {
  ExtRational slope;
  std::int64_t level = 0;
  Word w;
  Word e;
};

/// Every x in [0, 1/0] with level <= max_level, breadth first by level and
/// increasing within a level.
void for_each_primitive(int max_level, const std::function<void(const EnumeratedPrimitive&)>& visit);
std::vector<EnumeratedPrimitive> enumerate_primitives(int max_level);

/// W(x) and W(y) form a generating pair iff x and y are Farey neighbours.
bool associates(const ExtRational& x, const ExtRational& y);

}  // namespace primwords
