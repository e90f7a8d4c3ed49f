#pragma once

// Farey-tree arithmetic: mediants, neighbours, continued fractions,
// approximants, levels and the descent path from the base edge (0/1, 1/0).
//
// All arithmetic is on exact 64-bit integers; anything that would overflow
// throws OverflowError.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace primwords {

/// p/q in lowest terms with q >= 0. The only value with q == 0 is 1/0, the
/// point at infinity, which compares greater than every finite rational.
/// p counts B letters and q counts A letters in the associated words.
class ExtRational {
 public:
  constexpr ExtRational() = default;
  /// Normalises sign and common factors; -1/0 becomes 1/0. Throws
  /// DomainError for 0/0.
  ExtRational(std::int64_t p, std::int64_t q);

  /// Parses `p/q`. Rejects fractions not in lowest terms and anything that
  /// is not two integers around a slash.
  static ExtRational parse(std::string_view text);
  static ExtRational infinity() { return {1, 0}; }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_negative() const { return p_ < 0; }
  std::string str() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  friend std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y);

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Canonical digits [a0, ..., ak]: a0 >= 0, aj >= 1, and ak >= 2 when k >= 1.
class ContinuedFraction {
 public:
  /// Throws DomainError if the digits are not canonical.
  explicit ContinuedFraction(std::vector<std::int64_t> digits);

  const std::vector<std::int64_t>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  std::int64_t operator[](std::size_t i) const { return digits_[i]; }
  std::int64_t digit_sum() const;
  ExtRational value() const;
  std::string str() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> digits_;
};

/// Descent through the Farey tessellation from the base edge (0/1, 1/0).
struct FareyPath {
  ExtRational target;
  std::vector<ExtRational> vertices;  // new triangle vertices, last == target
  std::int64_t level = 0;             // == vertices.size()
  // Endpoints of the final edge; absent for 0/1 and 1/0.
  std::optional<ExtRational> left_neighbor;
  std::optional<ExtRational> right_neighbor;
};

ExtRational mediant(const ExtRational& x, const ExtRational& y);

/// |p*s - q*r| == 1.
bool is_neighbor(const ExtRational& x, const ExtRational& y);

/// p*s - q*r, the signed determinant of the pair.
std::int64_t determinant(const ExtRational& x, const ExtRational& y);

/// Requires a finite, non-negative x.
ContinuedFraction continued_fraction(const ExtRational& x);

/// Value of an arbitrary digit list (no canonical-form requirement beyond
/// positive tail digits). An empty list evaluates to 1/0.
ExtRational evaluate_digits(const std::vector<std::int64_t>& digits);

/// Convergents p0/q0, ..., pk/qk; the last one is the value of cf.
std::vector<ExtRational> approximants(const ContinuedFraction& cf);

/// Walk of repeated mediants towards x >= 0. Empty (level 0) for 0/1 and 1/0.
FareyPath farey_path(const ExtRational& x);

/// Sum of continued-fraction digits; 0 for 0/1 and 1/0.
std::int64_t level(const ExtRational& x);

/// The two neighbours of lower level, lo < x < hi, read off the continued
/// fraction truncations [a0..a(k-1)] and [a0..a(k-1), ak-1]. Rejects 0/1,
/// 1/0 and negative input.
std::pair<ExtRational, ExtRational> distinguished_neighbors(const ExtRational& x);

namespace detail {
std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
}  // namespace detail

}  // namespace primwords
