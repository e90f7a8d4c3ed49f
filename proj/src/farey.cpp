#include "primwords/farey.hpp"

#include <charconv>
#include <numeric>

#include "primwords/error.hpp"

namespace primwords {

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

namespace detail {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

ExtRational::ExtRational(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw DomainError("0/0 is not a rational");
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  if (q < 0) {
    if (p == INT64_MIN || q == INT64_MIN) throw OverflowError("rational out of range");
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

ExtRational ExtRational::parse(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return ParseError("invalid rational \"" + std::string(text) + "\": " + why);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw bad("expected p/q");
  const auto parse_int = [&](std::string_view part, const char* which) {
    std::int64_t v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && part.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (part.empty() || ec != std::errc() || ptr != last) {
      throw bad(std::string("bad ") + which + " '" + std::string(part) + "'");
    }
    return v;
  };
  const std::int64_t p = parse_int(text.substr(0, slash), "numerator");
  const std::int64_t q = parse_int(text.substr(slash + 1), "denominator");
  if (q < 0) throw bad("denominator must be non-negative");
  if (q == 0 && p != 1 && p != -1) throw bad("only 1/0 may have a zero denominator");
  if (q != 0 && std::gcd(p, q) != 1) throw bad("not in lowest terms");
  return {p, q};
}

std::string ExtRational::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::strong_ordering operator<=>(const ExtRational& x, const ExtRational& y) {
  // Cross-multiplication also orders 1/0 correctly since its p is 1.
  const wide_int lhs = static_cast<wide_int>(x.p_) * y.q_;
  const wide_int rhs = static_cast<wide_int>(y.p_) * x.q_;
  if (x.q_ == 0 && y.q_ == 0) return std::strong_ordering::equal;
  return lhs <=> rhs;
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw DomainError("continued fraction needs at least one digit");
  if (digits_[0] < 0) throw DomainError("continued fraction a0 must be non-negative");
  for (std::size_t j = 1; j < digits_.size(); ++j) {
    if (digits_[j] < 1) throw DomainError("continued fraction digits after a0 must be positive");
  }
  if (digits_.size() > 1 && digits_.back() < 2) {
    throw DomainError("canonical continued fraction must end in a digit >= 2");
  }
}

std::int64_t ContinuedFraction::digit_sum() const {
  std::int64_t s = 0;
  for (auto d : digits_) s = checked_add(s, d);
  return s;
}

ExtRational ContinuedFraction::value() const { return evaluate_digits(digits_); }

std::string ContinuedFraction::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(digits_[i]);
  }
  return s + "]";
}

ExtRational mediant(const ExtRational& x, const ExtRational& y) {
  return {checked_add(x.p(), y.p()), checked_add(x.q(), y.q())};
}

std::int64_t determinant(const ExtRational& x, const ExtRational& y) {
  const wide_int d = static_cast<wide_int>(x.p()) * y.q() - static_cast<wide_int>(x.q()) * y.p();
  if (d > INT64_MAX || d < INT64_MIN) throw OverflowError("determinant out of range");
  return static_cast<std::int64_t>(d);
}

bool is_neighbor(const ExtRational& x, const ExtRational& y) {
  const auto d = determinant(x, y);
  return d == 1 || d == -1;
}

ContinuedFraction continued_fraction(const ExtRational& x) {
  if (x.is_infinite()) throw DomainError("1/0 has no continued fraction");
  if (x.is_negative()) throw DomainError("continued fraction requires a non-negative rational, got " + x.str());
  std::vector<std::int64_t> digits;
  std::int64_t num = x.p();
  std::int64_t den = x.q();
  while (den != 0) {
    digits.push_back(num / den);
    num %= den;
    std::swap(num, den);
  }
  return ContinuedFraction(std::move(digits));
}

ExtRational evaluate_digits(const std::vector<std::int64_t>& digits) {
  // Standard convergent recursion seeded with p(-2)/q(-2) = 0/1, p(-1)/q(-1) = 1/0.
  std::int64_t p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (auto a : digits) {
    const std::int64_t p = checked_add(checked_mul(a, p1), p2);
    const std::int64_t q = checked_add(checked_mul(a, q1), q2);
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return {p1, q1};
}

std::vector<ExtRational> approximants(const ContinuedFraction& cf) {
  std::vector<ExtRational> out;
  out.reserve(cf.size());
  const auto& a = cf.digits();
  // p0 = a0, q0 = 1; p1 = a0 a1 + 1, q1 = a1; then pj = aj p(j-1) + p(j-2).
  std::int64_t p_prev = a[0], q_prev = 1;
  out.emplace_back(p_prev, q_prev);
  if (a.size() == 1) return out;
  std::int64_t p_cur = checked_add(checked_mul(a[0], a[1]), 1), q_cur = a[1];
  out.emplace_back(p_cur, q_cur);
  for (std::size_t j = 2; j < a.size(); ++j) {
    const std::int64_t p = checked_add(checked_mul(a[j], p_cur), p_prev);
    const std::int64_t q = checked_add(checked_mul(a[j], q_cur), q_prev);
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p;
    q_cur = q;
    out.emplace_back(p_cur, q_cur);
  }
  return out;
}

FareyPath farey_path(const ExtRational& x) {
  if (x.is_negative()) throw DomainError("Farey path requires a non-negative rational, got " + x.str());
  FareyPath path;
  path.target = x;
  if (x == ExtRational(0, 1) || x.is_infinite()) return path;
  ExtRational lo(0, 1);
  ExtRational hi = ExtRational::infinity();
  for (;;) {
    const ExtRational m = mediant(lo, hi);
    path.vertices.push_back(m);
    if (m == x) break;
    if (x < m) {
      hi = m;
    } else {
      lo = m;
    }
  }
  path.level = static_cast<std::int64_t>(path.vertices.size());
  path.left_neighbor = lo;
  path.right_neighbor = hi;
  return path;
}

std::int64_t level(const ExtRational& x) {
  if (x.is_infinite()) return 0;
  return continued_fraction(x).digit_sum();
}

std::pair<ExtRational, ExtRational> distinguished_neighbors(const ExtRational& x) {
  if (x.is_infinite() || x == ExtRational(0, 1)) {
    throw DomainError(x.str() + " has no distinguished neighbors");
  }
  const ContinuedFraction cf = continued_fraction(x);
  const auto& a = cf.digits();
  std::vector<std::int64_t> shorter(a.begin(), a.end() - 1);
  std::vector<std::int64_t> decremented(a);
  --decremented.back();
  ExtRational u = evaluate_digits(shorter);
  ExtRational v = evaluate_digits(decremented);
  if (v < u) std::swap(u, v);
  return {u, v};
}

}  // namespace primwords
