#include "doctest.h"
#include "lz2/error.hpp"
#include "support.hpp"

using namespace lz2;
using lz2::testing::Rng;

namespace {

Mat rows(std::initializer_list<std::initializer_list<int>> rs) {
  std::vector<Vec> out;
  std::size_t cols = 0;
  for (auto r : rs) {
    Vec v;
    for (int x : r) v.push_back(x);
    cols = v.size();
    out.push_back(v);
  }
  return Mat::from_rows(out, cols);
}

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("scalars are canonical") {
  CHECK(parse_scalar("1/3") == Scalar(1, 3));
  CHECK(parse_scalar("2/6") == Scalar(1, 3));
  CHECK(to_string(parse_scalar("-4/2")) == "-2");
  CHECK(to_string(parse_scalar("0/5")) == "0");
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("1.5"), Error);
  CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("rref examples") {
  auto id = rref(Mat::identity(2));
  CHECK(id.reduced == Mat::identity(2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});

  auto z = rref(Mat(2, 2));
  CHECK(z.reduced == Mat(2, 2));
  CHECK(z.pivots.empty());

  auto r = rref(rows({{2, 4}, {1, 2}}));
  CHECK(r.reduced == rows({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Mat::identity(3)).empty());
  CHECK(kernel_basis(Mat(1, 2)) == std::vector<Vec>{vec({1, 0}), vec({0, 1})});
  CHECK(kernel_basis(rows({{1, 2}})) == std::vector<Vec>{vec({-2, 1})});
}

TEST_CASE("solve examples") {
  CHECK(solve(Mat::identity(2), vec({5, 7})) == vec({5, 7}));
  CHECK(solve(rows({{1, 2}}), vec({3})) == vec({3, 0}));
  CHECK_FALSE(solve(rows({{0}}), vec({1})).has_value());
}

TEST_CASE("span membership examples") {
  CHECK(in_span({vec({1, 0})}, vec({2, 0})) == vec({2}));
  CHECK(in_span({}, Vec{}) == Vec{});
  CHECK_FALSE(in_span({vec({1, 1})}, vec({1, 0})).has_value());
}

TEST_CASE("properties on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = static_cast<std::size_t>(rng.small(0, 4)), c = static_cast<std::size_t>(rng.small(0, 5));
    Mat m = rng.mat(r, c, -3, 3);
    auto R = rref(m);
    // Idempotence.
    CHECK(rref(R.reduced).reduced == R.reduced);
    // Rank-nullity.
    auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& k : ker) CHECK(is_zero(m * k));
    // Solve is exact on solvable right-hand sides.
    Vec x = rng.vec(c, -3, 3);
    Vec b = m * x;
    auto y = solve(m, b);
    REQUIRE(y.has_value());
    CHECK(m * *y == b);
    // Determinism.
    CHECK(rref(m).reduced == R.reduced);
  }
}

TEST_CASE("inverse") {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    Mat m = rng.invertible(3);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Mat::identity(3));
    CHECK(*inv * m == Mat::identity(3));
  }
  CHECK_FALSE(inverse(rows({{1, 2}, {2, 4}})).has_value());
}
