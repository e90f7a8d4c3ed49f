#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "primwords/error.hpp"
#include "primwords/farey.hpp"

using namespace primwords;

namespace {

ExtRational R(std::int64_t p, std::int64_t q) { return {p, q}; }

std::vector<ExtRational> coprime_up_to(std::int64_t bound, bool include_bases) {
  std::vector<ExtRational> out;
  for (std::int64_t s = 2; s <= bound; ++s) {
    for (std::int64_t p = 1; p < s; ++p) {
      if (std::gcd(p, s - p) == 1) out.emplace_back(p, s - p);
    }
  }
  if (include_bases) {
    out.emplace_back(0, 1);
    out.emplace_back(1, 0);
  }
  return out;
}

// Fold the digits from the right: [a0; a1, ..., ak] = a0 + 1 / [a1; ...].
std::pair<std::int64_t, std::int64_t> fold(const std::vector<std::int64_t>& d) {
  std::int64_t num = d.back(), den = 1;
  for (std::size_t i = d.size() - 1; i-- > 0;) {
    const std::int64_t n = d[i] * num + den;
    den = num;
    num = n;
  }
  return {num, den};
}

// Neighbours of p/q on each side with the smallest p+q, by exhaustive search.
std::pair<ExtRational, ExtRational> brute_neighbors(const ExtRational& x) {
  std::optional<ExtRational> lo, hi;
  for (std::int64_t s = 0; s <= x.q(); ++s) {
    for (std::int64_t r = 0; r <= x.p(); ++r) {
      if (r == 0 && s == 0) continue;
      if (std::gcd(r, s) != 1 || r + s >= x.p() + x.q()) continue;
      const ExtRational y(r, s);
      if (!is_neighbor(x, y)) continue;
      if (y < x) {
        if (!lo || y.p() + y.q() > lo->p() + lo->q()) lo = y;
      } else {
        if (!hi || y.p() + y.q() > hi->p() + hi->q()) hi = y;
      }
    }
  }
  REQUIRE(lo);
  REQUIRE(hi);
  return {*lo, *hi};
}

}  // namespace

TEST_CASE("rational parsing and ordering") {
  CHECK(ExtRational::parse("3/5") == R(3, 5));
  CHECK(ExtRational::parse("1/0").is_infinite());
  CHECK(ExtRational::parse("-2/3") == R(-2, 3));
  CHECK_THROWS_AS(ExtRational::parse("4/6"), ParseError);
  CHECK_THROWS_AS(ExtRational::parse("2/0"), ParseError);
  CHECK_THROWS_AS(ExtRational::parse("3"), ParseError);
  CHECK_THROWS_AS(ExtRational::parse("x/2"), ParseError);
  CHECK_THROWS_AS(ExtRational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(R(0, 0), DomainError);
  CHECK(R(2, -4) == R(-1, 2));
  CHECK(R(1000, 1) < ExtRational::infinity());
  CHECK(R(-1, 0) == ExtRational::infinity());
  CHECK(R(1, 3) < R(1, 2));
}

TEST_CASE("mediant examples") {
  CHECK(mediant(R(0, 1), R(1, 0)) == R(1, 1));
  CHECK(mediant(R(1, 2), R(2, 3)) == R(3, 5));
  CHECK(mediant(R(1, 1), R(2, 1)) == R(3, 2));
}

TEST_CASE("neighbor examples") {
  for (std::int64_t n = 0; n <= 3; ++n) CHECK(is_neighbor(R(1, 0), R(n, 1)));
  CHECK(is_neighbor(R(1, 2), R(2, 3)));
  CHECK_FALSE(is_neighbor(R(1, 2), R(3, 4)));
  CHECK(determinant(R(1, 2), R(3, 4)) == -2);
}

TEST_CASE("continued fraction examples") {
  CHECK(continued_fraction(R(3, 5)).digits() == std::vector<std::int64_t>{0, 1, 1, 2});
  CHECK(continued_fraction(R(8, 3)).digits() == std::vector<std::int64_t>{2, 1, 2});
  CHECK(continued_fraction(R(2, 1)).digits() == std::vector<std::int64_t>{2});
  CHECK(continued_fraction(R(0, 1)).digits() == std::vector<std::int64_t>{0});
  CHECK(continued_fraction(R(1, 1)).digits() == std::vector<std::int64_t>{1});
  CHECK(continued_fraction(R(3, 5)).str() == "[0,1,1,2]");
  CHECK_THROWS_AS(continued_fraction(ExtRational::infinity()), DomainError);
  CHECK_THROWS_AS(continued_fraction(R(-1, 2)), DomainError);
  CHECK_THROWS_AS(ContinuedFraction({0, 1, 1}), DomainError);
  CHECK_THROWS_AS(ContinuedFraction({1, 0, 2}), DomainError);
}

TEST_CASE("approximant examples") {
  CHECK(approximants(ContinuedFraction({2, 1, 2})) == std::vector<ExtRational>{R(2, 1), R(3, 1), R(8, 3)});
  CHECK(approximants(ContinuedFraction({0, 1, 1, 2})) ==
        std::vector<ExtRational>{R(0, 1), R(1, 1), R(1, 2), R(3, 5)});
  CHECK(approximants(ContinuedFraction({5})) == std::vector<ExtRational>{R(5, 1)});
}

TEST_CASE("farey path examples") {
  auto path = farey_path(R(3, 5));
  CHECK(path.vertices == std::vector<ExtRational>{R(1, 1), R(1, 2), R(2, 3), R(3, 5)});
  CHECK(path.level == 4);
  CHECK(path.left_neighbor == R(1, 2));
  CHECK(path.right_neighbor == R(2, 3));
  path = farey_path(R(1, 1));
  CHECK(path.vertices == std::vector<ExtRational>{R(1, 1)});
  CHECK(path.level == 1);
  for (std::int64_t n = 1; n <= 20; ++n) {
    CHECK(farey_path(R(n, 1)).level == n);
    CHECK(level(R(n, 1)) == n);
  }
  CHECK(farey_path(R(0, 1)).vertices.empty());
  CHECK(farey_path(ExtRational::infinity()).level == 0);
  CHECK_FALSE(farey_path(R(0, 1)).left_neighbor.has_value());
}

TEST_CASE("distinguished neighbor examples") {
  CHECK(distinguished_neighbors(R(3, 5)) == std::pair{R(1, 2), R(2, 3)});
  CHECK(distinguished_neighbors(R(1, 1)) == std::pair{R(0, 1), R(1, 0)});
  CHECK(distinguished_neighbors(R(3, 2)) == std::pair{R(1, 1), R(2, 1)});
  CHECK_THROWS_AS(distinguished_neighbors(R(0, 1)), DomainError);
}

TEST_CASE("overflow is detected") {
  CHECK_THROWS_AS(mediant(R(INT64_MAX, 1), R(1, 1)), OverflowError);
}

TEST_CASE("continued fractions agree with right-to-left folding, p+q <= 60") {
  for (const auto& x : coprime_up_to(60, true)) {
    if (x.is_infinite()) continue;
    const auto cf = continued_fraction(x);
    const auto [num, den] = fold(cf.digits());
    CHECK(ExtRational(num, den) == x);
    CHECK(cf.value() == x);
  }
}

TEST_CASE("farey invariants, p+q <= 60") {
  for (const auto& x : coprime_up_to(60, false)) {
    INFO(x.str());
    const auto path = farey_path(x);
    CHECK(path.level == static_cast<std::int64_t>(path.vertices.size()));
    CHECK(path.level == level(x));
    CHECK(path.vertices.back() == x);
    REQUIRE(path.left_neighbor);
    CHECK(*path.left_neighbor < x);
    CHECK(x < *path.right_neighbor);
    CHECK(is_neighbor(*path.left_neighbor, x));
    CHECK(is_neighbor(x, *path.right_neighbor));

    const auto [lo, hi] = distinguished_neighbors(x);
    CHECK(std::pair{lo, hi} == brute_neighbors(x));
    CHECK(lo == *path.left_neighbor);
    CHECK(hi == *path.right_neighbor);
    CHECK(mediant(lo, hi) == x);
    CHECK(std::abs(determinant(lo, hi)) == 1);

    const auto approx = approximants(continued_fraction(x));
    CHECK(approx.back() == x);
    for (std::size_t i = 0; i + 1 < approx.size(); ++i) CHECK(is_neighbor(approx[i], approx[i + 1]));

    // Sign rule: a neighbour r/s lies above p/q iff r q - p s > 0.
    for (const auto& y : {lo, hi}) CHECK((x < y) == (determinant(y, x) > 0));
  }
}

TEST_CASE("approximants are a subsequence of the farey path, p+q <= 40") {
  for (const auto& x : coprime_up_to(40, false)) {
    INFO(x.str());
    const auto approx = approximants(continued_fraction(x));
    const auto& verts = farey_path(x).vertices;
    std::size_t j = 0;
    for (const auto& a : approx) {
      // a0 = 0 yields 0/1, which sits on the starting edge rather than the path.
      if (a == R(0, 1)) continue;
      while (j < verts.size() && !(verts[j] == a)) ++j;
      CHECK(j < verts.size());
    }
  }
}
