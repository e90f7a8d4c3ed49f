#include "primwords/cutting.hpp"

#include <algorithm>
#include <numeric>

#include "cutting_detail.hpp"
#include "primwords/error.hpp"

namespace primwords {

namespace detail {

std::vector<Crossing> line_crossings(std::int64_t p, std::int64_t q) {
  // A-crossings at parameter i/q, B-crossings at l/p. The offset d only
  // matters at the shared endpoint, where the B-crossing comes first.
  std::vector<Crossing> out;
  out.reserve(static_cast<std::size_t>(p + q));
  std::int64_t i = 1;
  std::int64_t l = 1;
  while (i <= q || l <= p) {
    if (l <= p && (i > q || checked_mul(l, q) <= checked_mul(i, p))) {
      out.push_back({Generator::B, l++});
    } else {
      out.push_back({Generator::A, i++});
    }
  }
  return out;
}

Word crossings_word(const std::vector<Crossing>& cs, std::size_t start) {
  std::vector<Letter> raw;
  raw.reserve(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    raw.push_back(Letter{cs[(start + k) % cs.size()].gen, 1});
  }
  return Word(raw);
}

double crossing_position(const Crossing& c, std::int64_t p, std::int64_t q) {
  // Height on the vertical sides for A, abscissa on the horizontal sides for B.
  if (c.gen == Generator::A) {
    return (static_cast<double>((p * c.index) % q) + 0.5) / static_cast<double>(q);
  }
  return (static_cast<double>(((q * c.index) % p + p - 1) % p) + 0.5) / static_cast<double>(p);
}

}  // namespace detail

namespace {

using detail::Crossing;

ExtRational positive_part(const ExtRational& x) { return x.is_negative() ? ExtRational(-x.p(), x.q()) : x; }

Word single_letter_or_throw(const ExtRational& x) {
  if (x == ExtRational(0, 1)) return Word{kA};
  if (x.is_infinite()) return Word{kB};
  throw DomainError("unexpected slope " + x.str());
}

Side entry_side(const Letter& l) {
  if (l.gen == Generator::A) return l.sign > 0 ? Side::A : Side::ABar;
  return l.sign > 0 ? Side::B : Side::BBar;
}

// Leaving a square through the side opposite the next square's entry side.
Side exit_side(const Letter& next) {
  if (next.gen == Generator::A) return next.sign > 0 ? Side::ABar : Side::A;
  return next.sign > 0 ? Side::BBar : Side::B;
}

bool is_horizontal_side(Side s) { return s == Side::B || s == Side::BBar; }

CornerType corner_of(Side x, Side y) {
  const auto has = [&](Side s) { return x == s || y == s; };
  if (has(Side::A) && has(Side::B)) return CornerType::LeftBottom;
  if (has(Side::A) && has(Side::BBar)) return CornerType::LeftTop;
  if (has(Side::B) && has(Side::ABar)) return CornerType::BottomRight;
  return CornerType::TopRight;
}

}  // namespace

Word cutting_word(const CuttingSpec& spec) {
  const ExtRational x = spec.slope;
  if (x == ExtRational(0, 1) || x.is_infinite()) {
    if (spec.start == StartKind::Offset && spec.offset != 0) throw DomainError("offset out of range");
    return single_letter_or_throw(x);
  }
  if (x.is_negative()) {
    CuttingSpec positive = spec;
    positive.slope = positive_part(x);
    return substitute(cutting_word(positive), false, true);
  }
  const auto cs = detail::line_crossings(x.p(), x.q());
  const std::size_t n = cs.size();
  switch (spec.start) {
    case StartKind::LowestASide:
      // The final crossing is the A side the segment started on.
      return detail::crossings_word(cs, n - 1);
    case StartKind::RightmostBottom:
      return detail::crossings_word(cs, n - 2);
    case StartKind::MiddleStrand:
      return centered_palindrome(x);
    case StartKind::Offset:
      if (spec.offset >= n) {
        throw DomainError("offset " + std::to_string(spec.offset) + " out of range for " + x.str());
      }
      return detail::crossings_word(cs, (n - 1 + spec.offset) % n);
  }
  return {};
}

Word centered_palindrome(const ExtRational& x) {
  if (x == ExtRational(0, 1) || x.is_infinite()) return single_letter_or_throw(x);
  if (x.is_negative()) return substitute(centered_palindrome(positive_part(x)), false, true);
  const std::int64_t p = x.p();
  const std::int64_t q = x.q();
  if (p % 2 != 0 && q % 2 != 0) {
    throw DomainError("no palindromic cutting word for " + x.str() + ": pq is odd");
  }
  const auto cs = detail::line_crossings(p, q);
  const std::size_t n = cs.size();
  // Non-corner strands are entered and left through the same generator's
  // sides: vertical when p > q, horizontal when p < q.
  const Generator through = p > q ? Generator::B : Generator::A;
  std::vector<std::pair<double, std::size_t>> straight;  // (position, entry crossing)
  for (std::size_t k = 0; k < n; ++k) {
    if (cs[k].gen == through && cs[(k + 1) % n].gen == through) {
      straight.emplace_back(detail::crossing_position(cs[k], p, q), k);
    }
  }
  std::sort(straight.begin(), straight.end());
  const std::size_t middle_entry = straight[straight.size() / 2].second;
  return detail::crossings_word(cs, (middle_entry + 1) % n);
}

const char* side_name(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::ABar: return "Abar";
    case Side::B: return "B";
    case Side::BBar: return "Bbar";
  }
  return "?";
}

const char* strand_kind_name(StrandKind k) {
  switch (k) {
    case StrandKind::Vertical: return "vertical";
    case StrandKind::Horizontal: return "horizontal";
    case StrandKind::Corner: return "corner";
  }
  return "?";
}

const char* corner_type_name(CornerType c) {
  switch (c) {
    case CornerType::None: return "none";
    case CornerType::LeftBottom: return "left_bottom";
    case CornerType::LeftTop: return "left_top";
    case CornerType::BottomRight: return "bottom_right";
    case CornerType::TopRight: return "top_right";
  }
  return "?";
}

StrandDiagram strand_diagram(const Word& w) {
  if (w.empty()) throw EmptyWordError("strand diagram of the identity word");
  if (!is_cyclically_reduced(w)) throw DomainError("word " + w.str() + " is not cyclically reduced");
  StrandDiagram d;
  d.word = w;
  const std::size_t n = w.size();
  std::array<bool, 5> corners_seen{};
  for (std::size_t k = 0; k < n; ++k) {
    Strand s;
    s.index = k;
    s.entry_side = entry_side(w[k]);
    s.exit_side = exit_side(w[(k + 1) % n]);
    const bool entry_h = is_horizontal_side(s.entry_side);
    const bool exit_h = is_horizontal_side(s.exit_side);
    if (entry_h && exit_h) {
      s.kind = StrandKind::Vertical;
      ++d.counts.vertical;
    } else if (!entry_h && !exit_h) {
      s.kind = StrandKind::Horizontal;
      ++d.counts.horizontal;
    } else {
      s.kind = StrandKind::Corner;
      s.corner_type = corner_of(s.entry_side, s.exit_side);
      corners_seen[static_cast<std::size_t>(s.corner_type)] = true;
      ++d.counts.corner;
    }
    d.strands.push_back(s);
  }

  const auto simple = [&]() {
    int a_sign = 0;
    int b_sign = 0;
    for (const auto& l : w.letters()) {
      int& slot = l.gen == Generator::A ? a_sign : b_sign;
      if (slot != 0 && slot != l.sign) return false;
      slot = l.sign;
    }
    if (d.counts.vertical > 0 && d.counts.horizontal > 0) return false;
    const bool main_pair = corners_seen[static_cast<std::size_t>(CornerType::LeftTop)] ||
                           corners_seen[static_cast<std::size_t>(CornerType::BottomRight)];
    const bool anti_pair = corners_seen[static_cast<std::size_t>(CornerType::LeftBottom)] ||
                           corners_seen[static_cast<std::size_t>(CornerType::TopRight)];
    if (main_pair && anti_pair) return false;
    const auto img = abelianize(w);
    const std::int64_t p = img.b_sum < 0 ? -img.b_sum : img.b_sum;
    const std::int64_t q = img.a_sum < 0 ? -img.a_sum : img.a_sum;
    if (std::gcd(p, q) != 1) return false;
    // The folded curve is a line exactly when the word is one of its
    // cutting words, up to the generator symmetry fixed by the signs.
    const Word positive = substitute(w, a_sign < 0, b_sign < 0);
    return find_rotation(positive, cutting_word({ExtRational(p, q), StartKind::LowestASide, 0})).has_value();
  };
  d.simple = simple();
  return d;
}

}  // namespace primwords
