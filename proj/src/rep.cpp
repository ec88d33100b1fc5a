#include "lz2/rep.hpp"

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::for_tuples;
using detail::note;

End0 endv_delta(const Mat& A, const Complex& V) {
  require(A.rows() == V.dim1 && A.cols() == V.dim0, "shape_mismatch", "degree-1 map must be V0 -> V1");
  return {V.d * A, A * V.d};
}

End0 endv_bracket(const End0& X, const End0& Y) {
  return {X.X0 * Y.X0 - Y.X0 * X.X0, X.X1 * Y.X1 - Y.X1 * X.X1};
}

Mat endv_bracket(const End0& X, const Mat& A) { return X.X1 * A - A * X.X0; }
Mat endv_bracket(const Mat& A, const End0& X) { return A * X.X0 - X.X1 * A; }
Mat endv_bracket(const Mat& A, const Mat& B) {
  require(A.same_shape(B), "grade_error", "degree-1 maps of different shapes");
  return Mat(A.rows(), A.cols());
}

End0 operator+(const End0& x, const End0& y) { return {x.X0 + y.X0, x.X1 + y.X1}; }
End0 operator-(const End0& x, const End0& y) { return {x.X0 - y.X0, x.X1 - y.X1}; }
End0 operator*(const End0& x, const End0& y) { return {x.X0 * y.X0, x.X1 * y.X1}; }

Rep trivial_rep(const Algebra& g, const Complex& V) {
  const auto n0 = g.n0(), n1 = g.n1(), v0 = V.dim0, v1 = V.dim1;
  Rep r;
  r.V = V;
  r.l0_0 = MultiMap(v0, {n0, v0});
  r.l0_1 = MultiMap(v1, {n0, v1});
  r.r0_0 = MultiMap(v0, {n0, v0});
  r.r0_1 = MultiMap(v1, {n0, v1});
  r.l1 = MultiMap(v1, {n1, v0});
  r.r1 = MultiMap(v1, {n1, v0});
  r.l2 = MultiMap(v1, {n0, n0, v0});
  r.m2 = MultiMap(v1, {n0, n0, v0});
  r.r2 = MultiMap(v1, {n0, n0, v0});
  return r;
}

void check_shapes(const Rep& rho, const Algebra& g) {
  check_shapes(g);
  validate_complex(rho.V);
  Rep t = trivial_rep(g, rho.V);
  auto want = [](const MultiMap& f, const MultiMap& like, const char* name) {
    require(f.same_shape(like) && f.c.size() == like.c.size(), "shape_mismatch",
            std::string(name) + " has the wrong shape");
  };
  want(rho.l0_0, t.l0_0, "l0_0");
  want(rho.l0_1, t.l0_1, "l0_1");
  want(rho.r0_0, t.r0_0, "r0_0");
  want(rho.r0_1, t.r0_1, "r0_1");
  want(rho.l1, t.l1, "l1");
  want(rho.r1, t.r1, "r1");
  want(rho.l2, t.l2, "l2");
  want(rho.m2, t.m2, "m2");
  want(rho.r2, t.r2, "r2");
}

namespace {

Vec flat(const Mat& m) { return m.entries(); }

Vec flat(const End0& x) {
  Vec v = x.X0.entries();
  v.insert(v.end(), x.X1.entries().begin(), x.X1.entries().end());
  return v;
}

}  // namespace

Violations verify_representation(const Rep& rho, const Algebra& g) {
  check_shapes(rho, g);
  Violations out;
  const auto n0 = g.n0(), n1 = g.n1();
  const Mat& dV = rho.V.d;
  auto X = [&](std::size_t i) { return e(n0, i); };
  auto A = [&](std::size_t i) { return e(n1, i); };
  auto delta = [&](const Mat& m) { return endv_delta(m, rho.V); };

  for_tuples({n0}, [&](const auto& t) {
    End0 l = rho.l0(X(t[0])), r = rho.r0(X(t[0]));
    note(out, "end0_l0", t, flat(l.X0 * dV - dV * l.X1));
    note(out, "end0_r0", t, flat(r.X0 * dV - dV * r.X1));
  });
  for_tuples({n1}, [&](const auto& t) {
    Vec a = A(t[0]);
    note(out, "delta_l1", t, flat(rho.l0(g.d(a)) - delta(rho.L1(a))));
    note(out, "delta_r1", t, flat(rho.r0(g.d(a)) - delta(rho.R1(a))));
  });

  for_tuples({n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), xy = g.br(x, y);
    End0 lx = rho.l0(x), ly = rho.l0(y), rx = rho.r0(x), ry = rho.r0(y);
    note(out, "2", t, flat(rho.l0(xy) - endv_bracket(lx, ly) - delta(rho.L2(x, y))));
    note(out, "3", t, flat(rho.r0(xy) - endv_bracket(lx, ry) - delta(rho.M2(x, y))));
    // -delta r2, not +delta r2: the adjoint representation and the semidirect
    // product both need this sign.
    note(out, "4", t, flat(rho.r0(xy) - lx * ry - ry * rx + delta(rho.R2(x, y))));
  });

  for_tuples({n0, n1}, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]), xa = g.br_xa(x, a), da = g.d(a);
    End0 lx = rho.l0(x), rx = rho.r0(x);
    Mat la = rho.L1(a), ra = rho.R1(a);
    note(out, "5", t, flat(rho.L1(xa) - endv_bracket(lx, la) - rho.L2(x, da)));
    // The bracket is with l0(x): l1 takes g1.
    note(out, "6", t, flat(rho.R1(xa) - endv_bracket(lx, ra) - rho.M2(x, da)));
    // l0(x) acting on V1, and r2 with the same sign as in (4).
    note(out, "7", t, flat(rho.R1(xa) - lx.X1 * ra - ra * rx.X0 + rho.R2(x, da)));
  });

  for_tuples({n1, n0}, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]), ax = g.br_ax(a, x), da = g.d(a);
    End0 lx = rho.l0(x), rx = rho.r0(x);
    Mat la = rho.L1(a), ra = rho.R1(a);
    // [a,x] lies in g1, so l1 on both sides.
    note(out, "8", t, flat(rho.L1(ax) - endv_bracket(la, lx) - rho.L2(da, x)));
    // Likewise r1([a,x]) and l1(a).
    note(out, "9", t, flat(rho.R1(ax) - endv_bracket(la, rx) - rho.M2(da, x)));
    // r2 with the sign of (4).
    note(out, "10", t, flat(rho.R1(ax) - rx.X1 * ra - la * rx.X0 + rho.R2(da, x)));
  });

  if (rho.V.dim1 > 0) {
    for_tuples({n0, n0, n0}, [&](const auto& t) {
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]), l3 = g.L3(x, y, z);
      Vec xy = g.br(x, y), xz = g.br(x, z), yz = g.br(y, z);
      End0 lx = rho.l0(x), ly = rho.l0(y), rz = rho.r0(z);
      note(out, "11", t,
           flat(endv_bracket(lx, rho.L2(y, z)) - endv_bracket(rho.L2(x, y), rho.l0(z)) -
                endv_bracket(ly, rho.L2(x, z)) + rho.L2(x, yz) - rho.L2(xy, z) - rho.L2(y, xz) - rho.L1(l3)));
      note(out, "12", t,
           flat(rho.M2(x, yz) - rho.M2(xy, z) - rho.M2(y, xz) + endv_bracket(lx, rho.M2(y, z)) -
                endv_bracket(rho.L2(x, y), rz) - endv_bracket(ly, rho.M2(x, z)) - rho.R1(l3)));
    });
    // The Jacobiator with the V argument in the second slot, on (x, v, z, w).
    for_tuples({n0, n0, n0}, [&](const auto& t) {
      Vec x = X(t[0]), z = X(t[1]), w = X(t[2]);
      End0 lx = rho.l0(x), lz = rho.l0(z), rz = rho.r0(z), rw = rho.r0(w);
      Mat r = Scalar(-1) * endv_bracket(lx, rho.R2(z, w)) - rho.R1(g.L3(x, z, w)) - lz.X1 * rho.M2(x, w) -
              rw.X1 * rho.M2(x, z) + rho.R2(g.br(x, z), w) + rho.R2(z, g.br(x, w)) - rho.M2(x, w) * rz.X0 -
              rho.L2(x, z) * rw.X0 + rho.M2(x, g.br(z, w));
      note(out, "13", t, flat(r));
    });
    // The Jacobiator with the V argument in the first slot, on (v, y, z, w).
    for_tuples({n0, n0, n0}, [&](const auto& t) {
      Vec y = X(t[0]), z = X(t[1]), w = X(t[2]);
      End0 ly = rho.l0(y), lz = rho.l0(z), ry = rho.r0(y), rz = rho.r0(z), rw = rho.r0(w);
      Mat r = rho.R1(g.L3(y, z, w)) + ly.X1 * rho.R2(z, w) - lz.X1 * rho.R2(y, w) - rw.X1 * rho.R2(y, z) +
              rho.R2(z, w) * ry.X0 + rho.M2(y, w) * rz.X0 + rho.L2(y, z) * rw.X0 - rho.R2(g.br(y, z), w) -
              rho.R2(z, g.br(y, w)) + rho.R2(y, g.br(z, w));
      note(out, "14", t, flat(r));
    });
  }
  return out;
}

namespace {

// Result slot s reads source slot perm[s].
MultiMap permute_slots(const MultiMap& f, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> dims(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s) dims[s] = f.in[perm[s]];
  MultiMap r(f.out, dims);
  for (std::size_t o = 0; o < f.out; ++o)
    for_tuples(dims, [&](const std::vector<std::size_t>& idx) {
      std::vector<std::size_t> src(perm.size());
      for (std::size_t s = 0; s < perm.size(); ++s) src[perm[s]] = idx[s];
      r.c[r.offset(o, idx)] = f.c[f.offset(o, src)];
    });
  return r;
}

}  // namespace

Rep adjoint_rep(const Algebra& g) {
  Rep r;
  r.V = g.g;
  r.l0_0 = g.b00;
  r.l0_1 = g.b01;
  r.r0_0 = permute_slots(g.b00, {1, 0});
  r.r0_1 = permute_slots(g.b10, {1, 0});
  r.l1 = g.b10;
  r.r1 = permute_slots(g.b01, {1, 0});
  r.l2 = Scalar(-1) * g.l3;
  r.m2 = Scalar(-1) * permute_slots(g.l3, {0, 2, 1});
  r.r2 = Scalar(-1) * permute_slots(g.l3, {1, 2, 0});
  return r;
}

}  // namespace lz2
