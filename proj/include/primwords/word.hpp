#pragma once

// Freely reduced words in the free group on two generators A and B.
//
// Text syntax: uppercase `A`, `B` are the generators, lowercase `a`, `b`
// their inverses. The empty string is the identity.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primwords {

enum class Generator : std::uint8_t { A = 0, B = 1 };

struct Letter {
  Generator gen = Generator::A;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(const Letter& other) const {
    return gen == other.gen && sign == -other.sign;
  }
  char symbol() const;

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

inline constexpr Letter kA{Generator::A, 1};
inline constexpr Letter kAInv{Generator::A, -1};
inline constexpr Letter kB{Generator::B, 1};
inline constexpr Letter kBInv{Generator::B, -1};

/// An element of F(A, B) stored as its freely reduced letter sequence.
/// Every constructor reduces, so two Words compare equal iff they are the
/// same group element.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  /// Throws ParseError naming the first character outside {A,B,a,b}.
  static Word parse(std::string_view text);
  static Word power(const Letter& letter, std::size_t n);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  std::string str() const;

  /// Maximal runs of a repeated letter, e.g. BBAB -> (B,2),(A,1),(B,1).
  struct Run {
    Letter letter;
    std::size_t length;
    friend bool operator==(const Run&, const Run&) = default;
  };
  std::vector<Run> runs() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  Word pow(std::size_t n) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& x, const Word& y) { return x.letters_ <=> y.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence (stack cancellation).
Word reduce(std::span<const Letter> raw);

Word inverse(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * inverse(conjugator)
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// Letter-for-letter symmetry, signs included. The identity is a palindrome.
bool is_palindrome(const Word& w);

struct AbelianImage {
  std::int64_t b_sum = 0;
  std::int64_t a_sum = 0;

  AbelianImage operator-() const { return {-b_sum, -a_sum}; }
  friend AbelianImage operator+(AbelianImage x, AbelianImage y) {
    return {x.b_sum + y.b_sum, x.a_sum + y.a_sum};
  }
  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};
AbelianImage abelianize(const Word& w);

/// Left rotation by `shift` letters (mod length), then reduced.
Word rotate(const Word& w, std::size_t shift);

/// Smallest left rotation r with rotate(w, r) == target, if any. Both words
/// are compared as given, without cyclic reduction.
std::optional<std::size_t> find_rotation(const Word& w, const Word& target);

/// Conjugacy test: cyclic reductions are rotations of each other.
bool cyclic_equal(const Word& w1, const Word& w2);

/// Image under the generator symmetry A -> A^(+-1), B -> B^(+-1).
Word substitute(const Word& w, bool invert_a, bool invert_b);

/// Every generator inverted in place, order kept (A -> a, B -> b).
Word bar(const Word& w);

/// Image under A <-> B.
Word swap_generators(const Word& w);

std::size_t count(const Word& w, Generator g);

}  // namespace primwords
