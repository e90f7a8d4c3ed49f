// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "primwords/cutting.hpp"
#include "primwords/enumerate.hpp"
#include "primwords/farey.hpp"
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

// Collects named sub-checks; the first few failures are kept for the report.
struct Checks {
  struct Sub {
    std::string name;
    std::uint64_t failures = 0;
    std::string first_failure;
  };
  std::vector<Sub> subs;

  Sub& sub(const std::string& name) {
    for (auto& s : subs) {
      if (s.name == name) return s;
    }
    subs.push_back({name});
    return subs.back();
  }
  void expect(const std::string& name, bool ok, const std::string& what = "") {
    auto& s = sub(name);
    if (!ok && s.failures++ == 0) s.first_failure = what;
  }
  bool ok() const {
    return std::all_of(subs.begin(), subs.end(), [](const Sub& s) { return s.failures == 0; });
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Checks&)> body;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void worked_examples(Checks& c) {
  c.expect("1/1 from the A side is AB", cutting_word({R(1, 1), StartKind::LowestASide}).str() == "AB");
  c.expect("1/1 from the bottom is BA", cutting_word({R(1, 1), StartKind::RightmostBottom}).str() == "BA");
  const std::string left = cutting_word({R(3, 2), StartKind::LowestASide}).str();
  c.expect("3/2 from the A side is ABABB or ABBAB", left == "ABABB" || left == "ABBAB", left);
  std::set<std::string> a_side_starts;
  for (std::size_t i = 0; i < 5; ++i) {
    const Word w = cutting_word({R(3, 2), StartKind::Offset, i});
    if (w[0] == kA) a_side_starts.insert(w.str());
  }
  c.expect("3/2 A-side starts are exactly ABABB and ABBAB",
           a_side_starts == std::set<std::string>{"ABABB", "ABBAB"});
  c.expect("3/2 from the bottom is BABAB", cutting_word({R(3, 2), StartKind::RightmostBottom}).str() == "BABAB");
  c.expect("BABAB is primitive with slope 3/2", is_primitive(P("BABAB")).primitive &&
                                                   is_primitive(P("BABAB")).slope == R(3, 2));
  for (const char* bad : {"AABBB", "BBBAA"}) {
    c.expect(std::string(bad) + " is not simple", !strand_diagram(P(bad)).simple);
    c.expect(std::string(bad) + " is not primitive", !is_primitive(P(bad)).primitive);
  }
  const auto d = strand_diagram(P("BBBAA"));
  c.expect("BBBAA has both horizontal and vertical strands", d.counts.horizontal > 0 && d.counts.vertical > 0);
}

void scheme_agreement(Checks& c) {
  for (const auto& x : positive_up_to(50)) {
    const Word w = w_word(x);
    c.expect("cf_word = w_word", cf_word(x) == w, x.str());
    c.expect("e_word cyclically equals w_word", cyclic_equal(e_word(x), w), x.str());
    if (x == R(1, 1)) continue;  // the V recursion starts from a0 >= 1 with x != 1
    // Below 1 the recursion runs on q/p with the generators exchanged.
    const Word tail = x.p() > x.q() ? v_sequence(x).back() : swap_generators(v_sequence(R(x.q(), x.p())).back());
    c.expect("v_sequence tail cyclically equals w_word", cyclic_equal(tail, w), x.str());
  }
}

void palindrome_dichotomy(Checks& c) {
  for (const auto& x : positive_up_to(50)) {
    const Word e = e_word(x);
    const auto parts = palindromic_parts(x);
    if ((x.p() * x.q()) % 2 == 0) {
      c.expect("pq even: e_word is a palindrome", is_palindrome(e), x.str());
      c.expect("pq even: single palindrome", parts.kind == PartsKind::SinglePalindrome && parts.first == e, x.str());
      if (x.p() + x.q() <= 30) {
        std::size_t hits = 0;
        for (std::size_t s = 0; s < e.size(); ++s) hits += is_palindrome(rotate(e, s)) ? 1 : 0;
        c.expect("pq even: palindromic rotation is unique", hits == 1, x.str());
      }
    } else {
      c.expect("pq odd: two palindromes", parts.kind == PartsKind::PalindromePair && is_palindrome(parts.first) &&
                                              is_palindrome(parts.second) && !parts.second.empty(),
               x.str());
      c.expect("pq odd: product is e_word", parts.first * parts.second == e, x.str());
    }
  }
}

void exponent_laws(Checks& c) {
  for (const auto& x : positive_up_to(50)) {
    if (x == R(1, 1)) continue;
    const Word w = w_word(x);
    const std::int64_t a0 = std::max(x.p(), x.q()) / std::min(x.p(), x.q());
    const auto interior = primitive_exponents(w).interior();
    bool in_range = true;
    bool adjacent = false;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      in_range = in_range && (interior[i] == a0 || interior[i] == a0 + 1);
      if (i + 1 < interior.size() && interior[i] == a0 + 1 && interior[i + 1] == a0 + 1) adjacent = true;
    }
    const std::string where = x.str() + " " + w.str() + " interior (" + join(interior) + ")";
    c.expect("interior exponents in {a0, a0+1}", in_range, where);
    c.expect("no two adjacent interior exponents equal a0+1", !adjacent, where);

    const auto blocks = cyclic_blocks(w);
    const std::size_t n = blocks.size();
    for (std::size_t m = 1; m < n; ++m) {
      std::set<std::int64_t> sums;
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < m; ++k) s += blocks[(i + k) % n];
        sums.insert(s);
      }
      c.expect("cyclic window sums take at most two values one apart",
               sums.size() == 1 || (sums.size() == 2 && *sums.rbegin() - *sums.begin() == 1),
               x.str() + " m=" + std::to_string(m));
    }
  }
}

void oracle_equivalence(Checks& c) {
  const auto report = cross_check(12, 0);
  c.expect("all reduced words up to length 12 visited", report.checked == 4 * (177147 * 3 - 1) / 2,
           std::to_string(report.checked));
  std::string first;
  if (!report.disagreements.empty()) first = report.disagreements.front().word.str();
  c.expect("is_primitive, strand simplicity and Whitehead agree", report.disagreement_count == 0, first);
}

void associate_criterion(Checks& c) {
  const auto slopes = slopes_up_to(20);
  std::vector<Word> words;
  for (const auto& x : slopes) words.push_back(w_word(x));
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      const bool unit = std::abs(determinant(slopes[i], slopes[j])) == 1;
      c.expect("|ps-qr| = 1 iff the W words generate", unit == is_generating_pair(words[i], words[j]),
               slopes[i].str() + " " + slopes[j].str());
    }
  }
}

void farey_metrics(Checks& c) {
  for (std::int64_t n = 1; n <= 20; ++n) c.expect("level of n/1 is n", level(R(n, 1)) == n && farey_path(R(n, 1)).level == n);
  for (const auto& x : positive_up_to(60)) {
    const auto cf = continued_fraction(x);
    const auto& d = cf.digits();
    c.expect("level is the digit sum", farey_path(x).level == cf.digit_sum(), x.str());
    std::vector<std::int64_t> shorter(d.begin(), d.end() - 1);
    std::vector<std::int64_t> lowered(d);
    --lowered.back();
    std::vector<ExtRational> truncations{evaluate_digits(shorter), evaluate_digits(lowered)};
    std::sort(truncations.begin(), truncations.end());
    const auto [lo, hi] = distinguished_neighbors(x);
    const auto path = farey_path(x);
    c.expect("distinguished neighbours are the truncations", lo == truncations[0] && hi == truncations[1], x.str());
    c.expect("distinguished neighbours bound the last triangle",
             lo == *path.left_neighbor && hi == *path.right_neighbor, x.str());
  }
}

void geometric_palindrome(Checks& c) {
  c.expect("3/2 gives BABAB", centered_palindrome(R(3, 2)).str() == "BABAB");
  for (const auto& x : positive_up_to(50)) {
    if ((x.p() * x.q()) % 2 != 0) continue;
    c.expect("centered_palindrome = e_word", centered_palindrome(x) == e_word(x), x.str());
  }
}

void strand_census(Checks& c) {
  for (const auto& x : positive_up_to(50)) {
    const auto d = strand_diagram(cutting_word({x}));
    const auto p = static_cast<std::size_t>(x.p());
    const auto q = static_cast<std::size_t>(x.q());
    c.expect("counts sum to p+q", d.counts.vertical + d.counts.horizontal + d.counts.corner == p + q, x.str());
    StrandCounts want{0, 0, 2};
    if (p > q) want = {p - q, 0, 2 * q};
    if (p < q) want = {0, q - p, 2 * p};
    c.expect("census matches the slope", d.counts == want, x.str());
    c.expect("SVG is byte-stable", emit_svg(d) == emit_svg(strand_diagram(cutting_word({x}))), x.str());
  }
  const auto bad = strand_diagram(P("BBBAA"));
  c.expect("SVG is byte-stable for non-simple words", emit_svg(bad) == emit_svg(strand_diagram(P("BBBAA"))));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked examples", 1, worked_examples},
      {2, "scheme agreement, p+q <= 50", 5, scheme_agreement},
      {3, "palindrome dichotomy, p+q <= 50", 5, palindrome_dichotomy},
      {4, "exponent laws, p+q <= 50", 5, exponent_laws},
      {5, "oracle equivalence, words up to length 12", 60, oracle_equivalence},
      {6, "associate criterion, p+q, r+s <= 20", 30, associate_criterion},
      {7, "Farey metrics, p+q <= 60", 2, farey_metrics},
      {8, "geometric palindrome construction, p+q <= 50", 5, geometric_palindrome},
      {9, "strand census and SVG stability, p+q <= 50", 5, strand_census},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < cr.budget_seconds;
    const bool pass = checks.ok() && error.empty() && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s  %s (%.3f s, limit %.0f s)\n", cr.id, pass ? "PASS" : "FAIL", cr.title, secs,
                cr.budget_seconds);
    for (const auto& s : checks.subs) {
      std::printf("    %s %s", s.failures == 0 ? "ok  " : "FAIL", s.name.c_str());
      if (s.failures != 0) std::printf(" [%llu failures, first: %s]", static_cast<unsigned long long>(s.failures),
                                       s.first_failure.c_str());
      std::printf("\n");
    }
    if (!error.empty()) std::printf("    FAIL exception: %s\n", error.c_str());
    if (!in_time) std::printf("    FAIL over the time limit\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
