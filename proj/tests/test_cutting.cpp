#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "primwords/cutting.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/error.hpp"
#include "primwords/oracle.hpp"

using namespace primwords;

namespace {

ExtRational R(std::int64_t p, std::int64_t q) { return {p, q}; }
Word P(const char* s) { return Word::parse(s); }

std::vector<ExtRational> positive_up_to(std::int64_t bound) {
  std::vector<ExtRational> out;
  for (std::int64_t s = 2; s <= bound; ++s) {
    for (std::int64_t p = 1; p < s; ++p) {
      if (std::gcd(p, s - p) == 1) out.emplace_back(p, s - p);
    }
  }
  return out;
}

// Crossings of the segment from (0, d) to (q, p + d) with d = 1/(4q), timed on
// the common scale 4pq: x = i at 4pi, y = l at 4ql - 1.
std::vector<Letter> timed_crossings(std::int64_t p, std::int64_t q) {
  std::vector<std::pair<std::int64_t, Letter>> ev;
  for (std::int64_t i = 1; i <= q; ++i) ev.emplace_back(4 * p * i, kA);
  for (std::int64_t l = 1; l <= p; ++l) ev.emplace_back(4 * q * l - 1, kB);
  std::sort(ev.begin(), ev.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Letter> out;
  for (const auto& e : ev) out.push_back(e.second);
  return out;
}

Word read_from(const std::vector<Letter>& seq, std::size_t start) {
  std::vector<Letter> out;
  for (std::size_t k = 0; k < seq.size(); ++k) out.push_back(seq[(start + k) % seq.size()]);
  return Word(out);
}

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cutting word examples") {
  CHECK(cutting_word({R(1, 1), StartKind::LowestASide}).str() == "AB");
  CHECK(cutting_word({R(1, 1), StartKind::RightmostBottom}).str() == "BA");
  CHECK(cutting_word({R(3, 2), StartKind::LowestASide}).str() == "ABABB");
  CHECK(cutting_word({R(3, 2), StartKind::Offset, 2}).str() == "ABBAB");
  CHECK(cutting_word({R(3, 2), StartKind::RightmostBottom}).str() == "BABAB");
  CHECK(cutting_word({R(3, 2), StartKind::MiddleStrand}).str() == "BABAB");
  CHECK(cyclic_equal(cutting_word({R(8, 3)}), P("ABBBABBBABB")));
  CHECK(cutting_word({R(0, 1)}).str() == "A");
  CHECK(cutting_word({ExtRational::infinity()}).str() == "B");
  CHECK(cutting_word({R(-3, 2), StartKind::RightmostBottom}).str() == "bAbAb");
  CHECK_THROWS_AS(cutting_word({R(3, 2), StartKind::Offset, 5}), DomainError);
}

TEST_CASE("centered palindrome examples") {
  CHECK(centered_palindrome(R(3, 2)).str() == "BABAB");
  CHECK(centered_palindrome(R(1, 2)).str() == "ABA");
  CHECK_THROWS_AS(centered_palindrome(R(1, 1)), DomainError);
}

TEST_CASE("strand diagram examples") {
  auto d = strand_diagram(P("BABAB"));
  CHECK(d.counts == StrandCounts{1, 0, 4});
  CHECK(d.simple);
  CHECK(d.strands.size() == 5);
  d = strand_diagram(P("AABBB"));
  CHECK_FALSE(d.simple);
  d = strand_diagram(P("BBBAA"));
  CHECK_FALSE(d.simple);
  CHECK(d.counts.vertical > 0);
  CHECK(d.counts.horizontal > 0);
  d = strand_diagram(P("BA"));
  CHECK(d.counts == StrandCounts{0, 0, 2});
  CHECK(d.strands[0].corner_type != d.strands[1].corner_type);
  CHECK(strand_diagram(P("ab")).simple);
  CHECK_FALSE(strand_diagram(P("ABab")).simple);
  CHECK_THROWS_AS(strand_diagram(Word{}), EmptyWordError);
  CHECK_THROWS_AS(strand_diagram(P("ABa")), DomainError);
}

TEST_CASE("strand kinds match their sides") {
  for (const char* text : {"BABAB", "ABBAB", "BBBAA", "ABab", "abaab"}) {
    const auto d = strand_diagram(P(text));
    for (const auto& s : d.strands) {
      const bool ev = s.entry_side == Side::B || s.entry_side == Side::BBar;
      const bool xv = s.exit_side == Side::B || s.exit_side == Side::BBar;
      if (s.kind == StrandKind::Vertical) CHECK((ev && xv));
      if (s.kind == StrandKind::Horizontal) CHECK((!ev && !xv));
      if (s.kind == StrandKind::Corner) {
        CHECK(ev != xv);
        CHECK(s.corner_type != CornerType::None);
      } else {
        CHECK(s.corner_type == CornerType::None);
      }
    }
  }
}

TEST_CASE("cutting words match timed crossings, p+q <= 50") {
  for (const auto& x : positive_up_to(50)) {
    INFO(x.str());
    const auto seq = timed_crossings(x.p(), x.q());
    const std::size_t n = seq.size();
    CHECK(cutting_word({x, StartKind::LowestASide}) == read_from(seq, n - 1));
    CHECK(cutting_word({x, StartKind::RightmostBottom}) == read_from(seq, n - 2));
    const Word w = w_word(x);
    for (std::size_t i = 0; i < n; ++i) {
      const Word c = cutting_word({x, StartKind::Offset, i});
      CHECK(c == read_from(seq, (n - 1 + i) % n));
      CHECK(cyclic_equal(c, w));
    }
    if ((x.p() * x.q()) % 2 == 0) {
      const Word c = centered_palindrome(x);
      CHECK(c == cutting_word({x, StartKind::MiddleStrand}));
      CHECK(c == e_word(x));
      CHECK(is_palindrome(c));
      CHECK(inverse(c) == bar(c));
    }
  }
}

TEST_CASE("strand census, p+q <= 50") {
  for (const auto& x : positive_up_to(50)) {
    INFO(x.str());
    const auto d = strand_diagram(cutting_word({x}));
    const auto p = static_cast<std::size_t>(x.p());
    const auto q = static_cast<std::size_t>(x.q());
    CHECK(d.simple);
    CHECK(d.counts.vertical + d.counts.horizontal + d.counts.corner == p + q);
    if (p > q) {
      CHECK(d.counts == StrandCounts{p - q, 0, 2 * q});
    } else if (p < q) {
      CHECK(d.counts == StrandCounts{0, q - p, 2 * p});
    } else {
      CHECK(d.counts == StrandCounts{0, 0, 2});
    }
  }
}

TEST_CASE("simple strands characterise primitive words up to length 8") {
  for_each_reduced_word(8, [](const Word& w) {
    const Word core = cyclic_reduce(w).core;
    if (core.empty()) return;
    const auto d = strand_diagram(core);
    if (d.simple != is_primitive(w).primitive) FAIL_CHECK(w.str());
    if (d.simple) CHECK_FALSE((d.counts.vertical > 0 && d.counts.horizontal > 0));
  });
}

TEST_CASE("svg output") {
  const std::string ba = emit_svg(strand_diagram(P("BA")));
  CHECK(ba.find("<svg") != std::string::npos);
  CHECK(ba.find("width=\"512\"") != std::string::npos);
  CHECK(occurrences(ba, "class=\"corner\"") == 2);

  const auto babab = strand_diagram(P("BABAB"));
  const std::string s1 = emit_svg(babab);
  CHECK(occurrences(s1, "class=\"vertical\"") == 1);
  CHECK(occurrences(s1, "class=\"corner\"") == 4);
  CHECK(s1.find("#d62728") == std::string::npos);
  CHECK(s1 == emit_svg(strand_diagram(P("BABAB"))));

  const std::string bad = emit_svg(strand_diagram(P("BBBAA")));
  CHECK(bad.find("<circle") != std::string::npos);
  CHECK(bad.find("#d62728") != std::string::npos);
  CHECK(bad == emit_svg(strand_diagram(P("BBBAA"))));
}

TEST_CASE("diagram json") {
  const auto j = nlohmann::json::parse(diagram_json(strand_diagram(P("BABAB"))));
  CHECK(j["word"] == "BABAB");
  CHECK(j["simple"] == true);
  CHECK(j["counts"]["vertical"] == 1);
  CHECK(j["counts"]["corner"] == 4);
  REQUIRE(j["strands"].size() == 5);
  CHECK(j["strands"][0].contains("index"));
  CHECK(j["strands"][0].contains("kind"));
  CHECK(j["strands"][0].contains("corner_type"));
}
