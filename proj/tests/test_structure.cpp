#include "doctest.h"
#include "lz2/error.hpp"
#include "lz2/fixtures.hpp"
#include "support.hpp"

using namespace lz2;
using lz2::testing::Rng;

TEST_CASE("validate_complex") {
  CHECK_NOTHROW(validate_complex(Complex(1, 1)));
  Complex c(1, 1);
  c.d(0, 0) = 1;
  CHECK_NOTHROW(validate_complex(c));
  Complex bad(2, 1, Mat(1, 1));
  try {
    validate_complex(bad);
    FAIL("expected shape_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "shape_mismatch");
  }
  CHECK_NOTHROW(validate_complex(Complex(0, 0)));
}

TEST_CASE("mm_eval") {
  Rng rng(1);
  MultiMap f = rng.mm(2, {3, 2});
  CHECK(is_zero(mm_eval(f, {zeros(3), rng.vec(2)})));
  CHECK(is_zero(mm_eval(f, {rng.vec(3), zeros(2)})));

  // FIX_B: [e1,e1] = e2.
  const Algebra b = fixtures::fix_b();
  CHECK(mm_eval(b.b00, {unit(2, 0), unit(2, 0)}) == unit(2, 1));
  CHECK(is_zero(mm_eval(b.b00, {unit(2, 0), unit(2, 1)})));

  for (int t = 0; t < 50; ++t) {
    MultiMap g = rng.mm(2, {2, 3});
    Vec u = rng.vec(2), u2 = rng.vec(2), v = rng.vec(3);
    CHECK(mm_eval(g, {Scalar(2) * u, v}) == Scalar(2) * mm_eval(g, {u, v}));
    CHECK(mm_eval(g, {u + u2, v}) == mm_eval(g, {u, v}) + mm_eval(g, {u2, v}));
    Vec v2 = rng.vec(3);
    CHECK(mm_eval(g, {u, v + v2}) == mm_eval(g, {u, v}) + mm_eval(g, {u, v2}));
  }
}

TEST_CASE("flattening round trip") {
  MultiMap z(2, {2, 2});
  CHECK(unflatten(2, {2, 2}, flatten(z)) == z);
  MultiMap one(1, {1, 1});
  one.at(0, {0, 0}) = 3;
  CHECK(flatten(one) == Vec{Scalar(3)});
  CHECK(unflatten(1, {1, 1}, flatten(one)) == one);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    MultiMap f = rng.mm(2, {2, 2});
    CHECK(unflatten(2, {2, 2}, flatten(f)) == f);
  }
}

TEST_CASE("flattening is output-major, inputs row-major") {
  MultiMap f(2, {2, 3});
  f.at(1, {0, 2}) = 7;
  CHECK(flatten(f)[1 * 6 + 0 * 3 + 2] == 7);
}

TEST_CASE("zero-dimensional slots") {
  MultiMap f(2, {0, 3});
  CHECK(f.size() == 0);
  CHECK(mm_eval(f, {Vec{}, zeros(3)}) == zeros(2));
}

TEST_CASE("partial evaluation") {
  Rng rng(4);
  MultiMap f = rng.mm(2, {3, 2});
  Vec x = rng.vec(3), y = rng.vec(2);
  CHECK(mm_partial(f, {x}) * y == mm_eval(f, {x, y}));
}
