#include "lz2/leib2.hpp"

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::for_tuples;
using detail::note;

Algebra zero_algebra(std::size_t dim1, std::size_t dim0) {
  Algebra g;
  g.g = Complex(dim1, dim0);
  g.b00 = MultiMap(dim0, {dim0, dim0});
  g.b01 = MultiMap(dim1, {dim0, dim1});
  g.b10 = MultiMap(dim1, {dim1, dim0});
  g.l3 = MultiMap(dim1, {dim0, dim0, dim0});
  return g;
}

void check_shapes(const Algebra& g) {
  validate_complex(g.g);
  const auto n0 = g.n0(), n1 = g.n1();
  auto want = [](const MultiMap& f, std::size_t out, std::vector<std::size_t> in, const char* name) {
    require(f.out == out && f.in == in && f.c.size() == f.out * f.in_size(), "shape_mismatch",
            std::string(name) + " has the wrong shape");
  };
  want(g.b00, n0, {n0, n0}, "b00");
  want(g.b01, n1, {n0, n1}, "b01");
  want(g.b10, n1, {n1, n0}, "b10");
  want(g.l3, n1, {n0, n0, n0}, "l3");
}

Violations verify_algebra(const Algebra& g) {
  check_shapes(g);
  Violations out;
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t i) { return e(n0, i); };
  auto A = [&](std::size_t i) { return e(n1, i); };

  for_tuples({n0, n1}, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]);
    note(out, "a", t, g.d(g.br_xa(x, a)) - g.br(x, g.d(a)));
  });
  for_tuples({n1, n0}, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]);
    note(out, "b", t, g.d(g.br_ax(a, x)) - g.br(g.d(a), x));
  });
  for_tuples({n1, n1}, [&](const auto& t) {
    Vec a = A(t[0]), b = A(t[1]);
    note(out, "c", t, g.br_xa(g.d(a), b) - g.br_ax(a, g.d(b)));
  });
  for_tuples({n0, n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
    note(out, "d", t,
         g.br(x, g.br(y, z)) - g.br(g.br(x, y), z) - g.br(y, g.br(x, z)) - g.d(g.L3(x, y, z)));
  });
  for_tuples({n0, n0, n1}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), a = A(t[2]);
    note(out, "e", t,
         g.br_xa(x, g.br_xa(y, a)) - g.br_xa(g.br(x, y), a) - g.br_xa(y, g.br_xa(x, a)) - g.L3(x, y, g.d(a)));
  });
  for_tuples({n0, n1, n0}, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]), y = X(t[2]);
    note(out, "f", t,
         g.br_xa(x, g.br_ax(a, y)) - g.br_ax(g.br_xa(x, a), y) - g.br_ax(a, g.br(x, y)) - g.L3(x, g.d(a), y));
  });
  for_tuples({n1, n0, n0}, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]), y = X(t[2]);
    note(out, "g", t,
         g.br_ax(a, g.br(x, y)) - g.br_ax(g.br_ax(a, x), y) - g.br_xa(x, g.br_ax(a, y)) - g.L3(g.d(a), x, y));
  });
  if (n1 > 0) {
    for_tuples({n0, n0, n0, n0}, [&](const auto& t) {
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]), w = X(t[3]);
      Vec r = g.br_xa(x, g.L3(y, z, w)) - g.br_xa(y, g.L3(x, z, w)) + g.br_xa(z, g.L3(x, y, w)) +
              g.br_ax(g.L3(x, y, z), w) - g.L3(g.br(x, y), z, w) - g.L3(y, g.br(x, z), w) -
              g.L3(y, z, g.br(x, w)) + g.L3(x, g.br(y, z), w) + g.L3(x, z, g.br(y, w)) -
              g.L3(x, y, g.br(z, w));
      note(out, "h", t, r);
    });
  }
  return out;
}

bool is_strict(const Algebra& g) { return g.l3.is_zero(); }

Hom identity_hom(const Algebra& g) {
  return {Mat::identity(g.n0()), Mat::identity(g.n1()), MultiMap(g.n1(), {g.n0(), g.n0()})};
}

namespace {

void check_hom_shapes(const Hom& F, const Algebra& src, const Algebra& dst) {
  require(F.F0.rows() == dst.n0() && F.F0.cols() == src.n0(), "shape_mismatch", "F0 has the wrong shape");
  require(F.F1.rows() == dst.n1() && F.F1.cols() == src.n1(), "shape_mismatch", "F1 has the wrong shape");
  require(F.F2.out == dst.n1() && F.F2.in == std::vector<std::size_t>{src.n0(), src.n0()}, "shape_mismatch",
          "F2 has the wrong shape");
}

}  // namespace

Violations verify_hom(const Hom& F, const Algebra& src, const Algebra& dst) {
  check_shapes(src);
  check_shapes(dst);
  check_hom_shapes(F, src, dst);
  Violations out;
  const auto n0 = src.n0(), n1 = src.n1();
  auto X = [&](std::size_t i) { return e(n0, i); };
  auto A = [&](std::size_t i) { return e(n1, i); };
  auto F2 = [&](const Vec& x, const Vec& y) { return mm_eval(F.F2, {x, y}); };

  for_tuples({n1}, [&](const auto& t) {
    Vec a = A(t[0]);
    note(out, "i", t, F.F0 * src.d(a) - dst.d(F.F1 * a));
  });
  for_tuples({n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]);
    note(out, "j", t, F.F0 * src.br(x, y) - dst.br(F.F0 * x, F.F0 * y) - dst.d(F2(x, y)));
  });
  for_tuples({n0, n1}, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]);
    note(out, "k", t, F.F1 * src.br_xa(x, a) - dst.br_xa(F.F0 * x, F.F1 * a) - F2(x, src.d(a)));
  });
  for_tuples({n1, n0}, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]);
    note(out, "l", t, F.F1 * src.br_ax(a, x) - dst.br_ax(F.F1 * a, F.F0 * x) - F2(src.d(a), x));
  });
  if (dst.n1() > 0) {
    for_tuples({n0, n0, n0}, [&](const auto& t) {
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
      Vec fx = F.F0 * x, fy = F.F0 * y, fz = F.F0 * z;
      Vec rhs = F2(x, src.br(y, z)) - F2(src.br(x, y), z) - F2(y, src.br(x, z)) + dst.br_xa(fx, F2(y, z)) -
                dst.br_ax(F2(x, y), fz) - dst.br_xa(fy, F2(x, z));
      note(out, "m", t, F.F1 * src.L3(x, y, z) - dst.L3(fx, fy, fz) - rhs);
    });
  }
  return out;
}

Hom compose_hom(const Hom& G, const Hom& F) {
  require(G.F0.cols() == F.F0.rows() && G.F1.cols() == F.F1.rows() && G.F2.in[0] == F.F0.rows(),
          "dim_mismatch", "homomorphisms are not composable");
  MultiMap g2 = mm_compose_slot(mm_compose_slot(G.F2, 0, F.F0), 1, F.F0);
  return {G.F0 * F.F0, G.F1 * F.F1, g2 + mm_compose_out(G.F1, F.F2)};
}

std::optional<Hom> inverse_hom(const Hom& F) {
  if (F.F0.rows() != F.F0.cols() || F.F1.rows() != F.F1.cols()) return std::nullopt;
  auto i0 = inverse(F.F0);
  auto i1 = inverse(F.F1);
  if (!i0 || !i1) return std::nullopt;
  MultiMap f2 = mm_compose_out(*i1, mm_compose_slot(mm_compose_slot(F.F2, 0, *i0), 1, *i0));
  return Hom{*i0, *i1, Scalar(-1) * f2};
}

Derivation zero_derivation(const Algebra& g) {
  return {Mat(g.n0(), g.n0()), Mat(g.n1(), g.n1()), MultiMap(g.n1(), {g.n0(), g.n0()})};
}

Violations verify_derivation(const Derivation& D, const Algebra& g) {
  check_shapes(g);
  const auto n0 = g.n0(), n1 = g.n1();
  require(D.D0.rows() == n0 && D.D0.cols() == n0 && D.D1.rows() == n1 && D.D1.cols() == n1 &&
              D.D2.out == n1 && D.D2.in == std::vector<std::size_t>{n0, n0},
          "shape_mismatch", "derivation components have the wrong shape");
  Violations out;
  auto X = [&](std::size_t i) { return e(n0, i); };
  auto A = [&](std::size_t i) { return e(n1, i); };
  auto D2 = [&](const Vec& x, const Vec& y) { return mm_eval(D.D2, {x, y}); };

  for_tuples({n1}, [&](const auto& t) {
    Vec a = A(t[0]);
    note(out, "chain", t, D.D0 * g.d(a) - g.d(D.D1 * a));
  });
  for_tuples({n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]);
    note(out, "n", t, D.D0 * g.br(x, y) - g.br(D.D0 * x, y) - g.br(x, D.D0 * y) - g.d(D2(x, y)));
  });
  // (o), (p): the bracket lands in g1, so D1 acts on it.
  for_tuples({n0, n1}, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]);
    note(out, "o", t, D.D1 * g.br_xa(x, a) - g.br_xa(D.D0 * x, a) - g.br_xa(x, D.D1 * a) - D2(x, g.d(a)));
  });
  for_tuples({n1, n0}, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]);
    note(out, "p", t, D.D1 * g.br_ax(a, x) - g.br_ax(D.D1 * a, x) - g.br_ax(a, D.D0 * x) - D2(g.d(a), x));
  });
  // (q) is the first-order part of (m) for F = 1 + tD: the right-hand side is
  //   D2(x,[y,z]) - D2([x,y],z) - D2(y,[x,z]) + [x,D2(y,z)] - [D2(x,y),z] - [y,D2(x,z)].
  if (n1 > 0) {
    for_tuples({n0, n0, n0}, [&](const auto& t) {
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
      Vec lhs = D.D1 * g.L3(x, y, z) - g.L3(D.D0 * x, y, z) - g.L3(x, D.D0 * y, z) - g.L3(x, y, D.D0 * z);
      Vec rhs = D2(x, g.br(y, z)) - D2(g.br(x, y), z) - D2(y, g.br(x, z)) + g.br_xa(x, D2(y, z)) -
                g.br_ax(D2(x, y), z) - g.br_xa(y, D2(x, z));
      note(out, "q", t, lhs - rhs);
    });
  }
  return out;
}

}  // namespace lz2
