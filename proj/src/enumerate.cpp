#include "primwords/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "primwords/error.hpp"

namespace primwords {

namespace {

const ExtRational kZero(0, 1);

ExtRational abs_rational(const ExtRational& x) { return x.is_negative() ? ExtRational(-x.p(), x.q()) : x; }

// Descends the Farey tree towards x >= 0 carrying one word per edge
// endpoint; `combine(lo_word, hi_word, vertex)` builds the mediant's word.
template <typename Combine>
Word farey_recursion(const ExtRational& x, Combine combine) {
  Word lo_word{kA};
  Word hi_word{kB};
  if (x == kZero) return lo_word;
  if (x.is_infinite()) return hi_word;
  ExtRational lo = kZero;
  ExtRational hi = ExtRational::infinity();
  for (;;) {
    const ExtRational m = mediant(lo, hi);
    Word m_word = combine(lo_word, hi_word, m);
    if (m == x) return m_word;
    if (x < m) {
      hi = m;
      hi_word = std::move(m_word);
    } else {
      lo = m;
      lo_word = std::move(m_word);
    }
  }
}

bool pq_odd(const ExtRational& x) { return (x.p() % 2 != 0) && (x.q() % 2 != 0); }

struct SignPattern {
  int a_sign = 0;  // 0 when absent, 2 when mixed
  int b_sign = 0;
};

SignPattern sign_pattern(const Word& w) {
  SignPattern s;
  for (const auto& l : w.letters()) {
    int& slot = l.gen == Generator::A ? s.a_sign : s.b_sign;
    if (slot == 0) {
      slot = l.sign;
    } else if (slot != l.sign) {
      slot = 2;
    }
  }
  return s;
}

// Necessary shape of a primitive word's cyclic blocks: two consecutive
// values, and the rarer value never twice in a row (cyclically).
bool balanced_blocks(const std::vector<std::int64_t>& blocks, std::int64_t majority, std::int64_t minority) {
  const std::int64_t a0 = majority / minority;
  std::size_t high = 0;
  for (auto n : blocks) {
    if (n != a0 && n != a0 + 1) return false;
    if (n == a0 + 1) ++high;
  }
  const std::size_t t = blocks.size();
  if (t < 2) return true;
  const std::int64_t rare = 2 * high <= t ? a0 + 1 : a0;
  for (std::size_t i = 0; i < t; ++i) {
    if (blocks[i] == rare && blocks[(i + 1) % t] == rare) return false;
  }
  return true;
}

}  // namespace

Word w_word(const ExtRational& x) {
  if (x.is_negative()) return substitute(w_word(abs_rational(x)), false, true);
  return farey_recursion(x, [](const Word& lo, const Word& hi, const ExtRational&) { return hi * lo; });
}

Word e_word(const ExtRational& x) {
  if (x.is_negative()) return substitute(e_word(abs_rational(x)), false, true);
  return farey_recursion(x, [](const Word& lo, const Word& hi, const ExtRational& m) {
    return pq_odd(m) ? hi * lo : lo * hi;
  });
}

Word cf_word(const ExtRational& x) {
  if (x.is_infinite()) return Word{kB};
  const ContinuedFraction cf = continued_fraction(x);
  // Seeds p(-2)/q(-2) = 0/1 -> A and p(-1)/q(-1) = 1/0 -> B.
  ExtRational prev2 = kZero;
  ExtRational prev1 = ExtRational::infinity();
  Word w2{kA};
  Word w1{kB};
  for (const auto a : cf.digits()) {
    const auto n = static_cast<std::size_t>(a);
    Word w = prev2 > x ? w2 * w1.pow(n) : w1.pow(n) * w2;
    const ExtRational next(detail::checked_add(detail::checked_mul(a, prev1.p()), prev2.p()),
                           detail::checked_add(detail::checked_mul(a, prev1.q()), prev2.q()));
    prev2 = prev1;
    prev1 = next;
    w2 = std::move(w1);
    w1 = std::move(w);
  }
  return w1;
}

std::vector<Word> v_sequence(const ExtRational& x) {
  if (x.is_infinite() || x <= ExtRational(1, 1)) {
    throw DomainError("V recursion requires a finite rational > 1, got " + x.str());
  }
  const ContinuedFraction cf = continued_fraction(x);
  std::vector<Word> v;
  v.reserve(cf.size() + 1);
  v.push_back(Word{kB});
  v.push_back(Word{kA} * Word::power(kB, static_cast<std::size_t>(cf[0])));
  for (std::size_t j = 1; j < cf.size(); ++j) {
    const Word& older = v[v.size() - 2];
    const Word& newer = v.back();
    v.push_back(older * newer.pow(static_cast<std::size_t>(cf[j])));
  }
  return v;
}

std::vector<std::int64_t> ExponentSequence::interior() const {
  if (exponents.size() <= 2) return {};
  return {exponents.begin() + 1, exponents.end() - 1};
}

ExponentSequence primitive_exponents(const Word& w) {
  if (!is_cyclically_reduced(w)) throw DomainError("word " + w.str() + " is not cyclically reduced");
  const SignPattern signs = sign_pattern(w);
  if (signs.a_sign == 2 || signs.b_sign == 2) {
    throw MixedSignsError("word " + w.str() + " uses a generator with both signs");
  }
  if (signs.a_sign == 0 || signs.b_sign == 0) {
    throw DomainError("word " + w.str() + " does not contain both generators");
  }
  ExponentSequence seq;
  const std::size_t n_a = count(w, Generator::A);
  const std::size_t n_b = w.size() - n_a;
  seq.slope_class = n_b > n_a ? SlopeClass::BHeavy : SlopeClass::AHeavy;
  const Generator separator = seq.slope_class == SlopeClass::BHeavy ? Generator::A : Generator::B;
  seq.separator_sign = separator == Generator::A ? signs.a_sign : signs.b_sign;
  seq.exponents.push_back(0);
  for (const auto& l : w.letters()) {
    if (l.gen == separator) {
      seq.exponents.push_back(0);
    } else {
      ++seq.exponents.back();
    }
  }
  return seq;
}

std::vector<std::int64_t> cyclic_blocks(const Word& w) {
  ExponentSequence seq = primitive_exponents(w);
  std::vector<std::int64_t> blocks(seq.exponents.begin() + 1, seq.exponents.end());
  blocks.back() += seq.exponents.front();
  return blocks;
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Identity: return "identity";
    case Symmetry::InvertA: return "A->a";
    case Symmetry::InvertB: return "B->b";
    case Symmetry::InvertBoth: return "A->a,B->b";
  }
  return "?";
}

Word apply_symmetry(const Word& w, Symmetry s) {
  return substitute(w, s == Symmetry::InvertA || s == Symmetry::InvertBoth,
                    s == Symmetry::InvertB || s == Symmetry::InvertBoth);
}

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::Identity: return "identity";
    case RejectReason::MixedSigns: return "mixed-signs";
    case RejectReason::NotCoprime: return "not-coprime";
    case RejectReason::ExponentPattern: return "exponent-pattern";
    case RejectReason::NotRotation: return "not-a-rotation";
  }
  return "?";
}

PrimitivityVerdict is_primitive(const Word& w) {
  PrimitivityVerdict verdict;
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) {
    verdict.reason = RejectReason::Identity;
    return verdict;
  }
  const SignPattern signs = sign_pattern(core);
  if (signs.a_sign == 2 || signs.b_sign == 2) {
    verdict.reason = RejectReason::MixedSigns;
    return verdict;
  }
  const auto n_a = static_cast<std::int64_t>(count(core, Generator::A));
  const auto n_b = static_cast<std::int64_t>(core.size()) - n_a;
  if (std::gcd(n_a, n_b) != 1) {
    verdict.reason = RejectReason::NotCoprime;
    return verdict;
  }
  const bool flip_a = signs.a_sign < 0;
  const bool flip_b = signs.b_sign < 0;
  const Symmetry sym = flip_a ? (flip_b ? Symmetry::InvertBoth : Symmetry::InvertA)
                              : (flip_b ? Symmetry::InvertB : Symmetry::Identity);
  const Word positive = apply_symmetry(core, sym);
  if (n_a > 0 && n_b > 0 &&
      !balanced_blocks(cyclic_blocks(positive), std::max(n_a, n_b), std::min(n_a, n_b))) {
    verdict.reason = RejectReason::ExponentPattern;
    return verdict;
  }
  const ExtRational slope(n_b, n_a);
  const auto rotation = find_rotation(positive, w_word(slope));
  if (!rotation) {
    verdict.reason = RejectReason::NotRotation;
    return verdict;
  }
  verdict.primitive = true;
  verdict.slope = slope;
  verdict.rotation = *rotation;
  verdict.symmetry = sym;
  return verdict;
}

PalindromicParts palindromic_parts(const ExtRational& x) {
  PalindromicParts parts;
  if (x == kZero || x.is_infinite() || !pq_odd(x)) {
    parts.first = e_word(x);
    return parts;
  }
  const ExtRational ax = abs_rational(x);
  const auto [lo, hi] = distinguished_neighbors(ax);
  parts.kind = PartsKind::PalindromePair;
  parts.first = e_word(hi);
  parts.second = e_word(lo);
  if (x.is_negative()) {
    parts.first = substitute(parts.first, false, true);
    parts.second = substitute(parts.second, false, true);
  }
  return parts;
}

void for_each_primitive(int max_level, const std::function<void(const EnumeratedPrimitive&)>& visit) {
  if (max_level < 0) throw DomainError("max_level must be non-negative");
  const ExtRational inf = ExtRational::infinity();
  visit({kZero, 0, Word{kA}, Word{kA}});
  visit({inf, 0, Word{kB}, Word{kB}});
  std::vector<std::pair<ExtRational, ExtRational>> edges{{kZero, inf}};
  for (int lev = 1; lev <= max_level; ++lev) {
    std::vector<std::pair<ExtRational, ExtRational>> next;
    next.reserve(edges.size() * 2);
    for (const auto& [lo, hi] : edges) {
      const ExtRational m = mediant(lo, hi);
      visit({m, lev, w_word(m), e_word(m)});
      next.emplace_back(lo, m);
      next.emplace_back(m, hi);
    }
    edges = std::move(next);
  }
}

std::vector<EnumeratedPrimitive> enumerate_primitives(int max_level) {
  std::vector<EnumeratedPrimitive> out;
  for_each_primitive(max_level, [&](const EnumeratedPrimitive& e) { out.push_back(e); });
  return out;
}

bool associates(const ExtRational& x, const ExtRational& y) { return is_neighbor(x, y); }

}  // namespace primwords
