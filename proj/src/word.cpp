#include "primwords/word.hpp"

#include <algorithm>

#include "primwords/error.hpp"

namespace primwords {

char Letter::symbol() const {
  if (gen == Generator::A) return sign > 0 ? 'A' : 'a';
  return sign > 0 ? 'B' : 'b';
}

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Failure function for the pattern, then a scan of text; first match index.
std::optional<std::size_t> kmp_find(std::span<const Letter> text, std::span<const Letter> pattern) {
  const std::size_t m = pattern.size();
  if (m == 0) return 0;
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) return i + 1 - m;
  }
  return std::nullopt;
}

}  // namespace

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (const auto& l : raw) push_reduced(letters_, l);
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'A': raw.push_back(kA); break;
      case 'a': raw.push_back(kAInv); break;
      case 'B': raw.push_back(kB); break;
      case 'b': raw.push_back(kBInv); break;
      default:
        throw ParseError("invalid letter '" + std::string(1, text[i]) + "' at position " +
                         std::to_string(i) + " in word \"" + std::string(text) + "\"");
    }
  }
  return Word(raw);
}

Word Word::power(const Letter& letter, std::size_t n) {
  Word w;
  w.letters_.assign(n, letter);
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (const auto& l : letters_) s.push_back(l.symbol());
  return s;
}

std::vector<Word::Run> Word::runs() const {
  std::vector<Run> out;
  for (const auto& l : letters_) {
    if (!out.empty() && out.back().letter == l) {
      ++out.back().length;
    } else {
      out.push_back({l, 1});
    }
  }
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  letters_.reserve(letters_.size() + rhs.size());
  for (const auto& l : rhs.letters_) push_reduced(letters_, l);
  return *this;
}

Word Word::pow(std::size_t n) const {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out *= *this;
  return out;
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(out);
}

CyclicReduction cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return {Word(letters.subspan(lo, hi - lo)), Word(letters.first(lo))};
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || !w.front().cancels(w.back());
}

bool is_palindrome(const Word& w) {
  const auto l = w.letters();
  return std::equal(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(l.size() / 2), l.rbegin());
}

AbelianImage abelianize(const Word& w) {
  AbelianImage img;
  for (const auto& l : w.letters()) {
    if (l.gen == Generator::A) {
      img.a_sum += l.sign;
    } else {
      img.b_sum += l.sign;
    }
  }
  return img;
}

Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  const auto l = w.letters();
  shift %= l.size();
  std::vector<Letter> raw(l.begin() + static_cast<std::ptrdiff_t>(shift), l.end());
  raw.insert(raw.end(), l.begin(), l.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word(raw);
}

std::optional<std::size_t> find_rotation(const Word& w, const Word& target) {
  if (w.size() != target.size()) return std::nullopt;
  if (w.empty()) return 0;
  std::vector<Letter> doubled(w.letters().begin(), w.letters().end());
  doubled.insert(doubled.end(), w.letters().begin(), w.letters().end() - 1);
  return kmp_find(doubled, target.letters());
}

bool cyclic_equal(const Word& w1, const Word& w2) {
  const Word c1 = cyclic_reduce(w1).core;
  const Word c2 = cyclic_reduce(w2).core;
  return find_rotation(c1, c2).has_value();
}

Word substitute(const Word& w, bool invert_a, bool invert_b) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (auto& l : out) {
    if ((l.gen == Generator::A && invert_a) || (l.gen == Generator::B && invert_b)) l = l.inverse();
  }
  return Word(out);
}

Word bar(const Word& w) { return substitute(w, true, true); }

Word swap_generators(const Word& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (auto& l : out) l.gen = l.gen == Generator::A ? Generator::B : Generator::A;
  return Word(out);
}

std::size_t count(const Word& w, Generator g) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(), [g](const Letter& l) { return l.gen == g; }));
}

}  // namespace primwords
