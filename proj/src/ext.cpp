#include "lz2/ext.hpp"

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::fill;
using detail::for_tuples;

namespace {

void bad(const std::string& what) { fail("invalid_extension", what); }

Hom strict(const GradedMap& m, std::size_t dst_n1, std::size_t src_n0) {
  return {m.m0, m.m1, MultiMap(dst_n1, {src_n0, src_n0})};
}

Algebra abelian(const Complex& V) {
  Algebra a = zero_algebra(V.dim1, V.dim0);
  a.g = V;
  return a;
}

// Canonical left inverse of an injective m: row k solves m^T y = e_k.
Mat left_inverse(const Mat& m) {
  Mat t = transpose(m);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    auto y = solve(t, unit(m.cols(), k));
    require(y.has_value(), "invalid_extension", "inclusion is not injective");
    rows.push_back(*y);
  }
  return Mat::from_rows(rows, m.rows());
}

// Canonical right inverse of a surjective m: column k solves m y = e_k.
Mat right_inverse(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    auto y = solve(m, unit(m.rows(), k));
    require(y.has_value(), "invalid_extension", "projection is not surjective");
    cols.push_back(*y);
  }
  return Mat::from_cols(cols, m.cols());
}

// Fiber coordinates of w, which must lie in im i.
Vec into_fiber(const Mat& i, const Mat& L, const Vec& w) {
  Vec u = L * w;
  require(i * u == w, "fiber_escape", "a value that should lie in the fiber does not");
  return u;
}

}  // namespace

void validate_extension(const Extension& E) {
  check_shapes(E.hat);
  check_shapes(E.base);
  validate_complex(E.fiber);
  const auto h0 = E.hat.n0(), h1 = E.hat.n1(), v0 = E.fiber.dim0, v1 = E.fiber.dim1;
  if (!(E.i.m0.rows() == h0 && E.i.m0.cols() == v0 && E.i.m1.rows() == h1 && E.i.m1.cols() == v1))
    fail("shape_mismatch", "inclusion has the wrong shape");
  if (!(E.p.m0.rows() == E.base.n0() && E.p.m0.cols() == h0 && E.p.m1.rows() == E.base.n1() &&
        E.p.m1.cols() == h1))
    fail("shape_mismatch", "projection has the wrong shape");
  if (auto v = verify_algebra(E.hat); !v.empty()) bad("total algebra fails axiom (" + v[0].id + ")");
  if (auto v = verify_algebra(E.base); !v.empty()) bad("base algebra fails axiom (" + v[0].id + ")");
  if (!(E.p.m0 * E.i.m0).is_zero() || !(E.p.m1 * E.i.m1).is_zero()) bad("p o i is not zero");
  if (rank(E.i.m0) != v0 || rank(E.i.m1) != v1) bad("inclusion is not injective");
  if (rank(E.p.m0) != E.base.n0() || rank(E.p.m1) != E.base.n1()) bad("projection is not surjective");
  if (v0 + E.base.n0() != h0 || v1 + E.base.n1() != h1) bad("ker p differs from im i");
  if (auto v = verify_hom(strict(E.i, h1, v0), abelian(E.fiber), E.hat); !v.empty())
    bad("inclusion is not a strict homomorphism (" + v[0].id + ")");
  if (auto v = verify_hom(strict(E.p, E.base.n1(), h0), E.hat, E.base); !v.empty())
    bad("projection is not a strict homomorphism (" + v[0].id + ")");

  // Abelian fiber: brackets vanish on two fiber arguments, and so does l3 as
  // soon as two of its arguments lie in the fiber.
  const Algebra& H = E.hat;
  auto I0 = [&](std::size_t k) { return E.i.m0.col(k); };
  auto I1 = [&](std::size_t k) { return E.i.m1.col(k); };
  auto X = [&](std::size_t k) { return e(h0, k); };
  bool ok = true;
  for_tuples({v0, v0}, [&](const auto& t) { ok = ok && is_zero(H.br(I0(t[0]), I0(t[1]))); });
  for_tuples({v0, v1}, [&](const auto& t) { ok = ok && is_zero(H.br_xa(I0(t[0]), I1(t[1]))); });
  for_tuples({v1, v0}, [&](const auto& t) { ok = ok && is_zero(H.br_ax(I1(t[0]), I0(t[1]))); });
  if (!ok) bad("bracket of two fiber elements is not zero");
  for_tuples({v0, v0, h0}, [&](const auto& t) {
    Vec u = I0(t[0]), v = I0(t[1]), z = X(t[2]);
    ok = ok && is_zero(H.L3(u, v, z)) && is_zero(H.L3(u, z, v)) && is_zero(H.L3(z, u, v));
  });
  if (!ok) bad("l3 with two fiber arguments is not zero");
}

GradedMap fiber_coords(const Extension& E) { return {left_inverse(E.i.m0), left_inverse(E.i.m1)}; }

Splitting find_splitting(const Extension& E) { return {right_inverse(E.p.m0), right_inverse(E.p.m1)}; }

Rep induced_rep(const Extension& E, const Splitting& s) {
  const Algebra& H = E.hat;
  const GradedMap L = fiber_coords(E);
  auto F0 = [&](const Vec& w) { return into_fiber(E.i.m0, L.m0, w); };
  auto F1 = [&](const Vec& w) { return into_fiber(E.i.m1, L.m1, w); };
  auto X = [&](std::size_t k) { return s.s0.col(k); };
  auto A = [&](std::size_t k) { return s.s1.col(k); };
  auto U = [&](std::size_t k) { return E.i.m0.col(k); };
  auto M = [&](std::size_t k) { return E.i.m1.col(k); };

  Rep r = trivial_rep(E.base, E.fiber);
  fill(r.l0_0, [&](const auto& t) { return F0(H.br(X(t[0]), U(t[1]))); });
  fill(r.l0_1, [&](const auto& t) { return F1(H.br_xa(X(t[0]), M(t[1]))); });
  fill(r.r0_0, [&](const auto& t) { return F0(H.br(U(t[1]), X(t[0]))); });
  fill(r.r0_1, [&](const auto& t) { return F1(H.br_ax(M(t[1]), X(t[0]))); });
  fill(r.l1, [&](const auto& t) { return F1(H.br_ax(A(t[0]), U(t[1]))); });
  fill(r.r1, [&](const auto& t) { return F1(H.br_xa(U(t[1]), A(t[0]))); });
  fill(r.l2, [&](const auto& t) { return Scalar(-1) * F1(H.L3(X(t[0]), X(t[1]), U(t[2]))); });
  fill(r.m2, [&](const auto& t) { return Scalar(-1) * F1(H.L3(X(t[0]), U(t[2]), X(t[1]))); });
  fill(r.r2, [&](const auto& t) { return Scalar(-1) * F1(H.L3(U(t[2]), X(t[0]), X(t[1]))); });
  return r;
}

Cochain2 extract_cocycle(const Extension& E, const Splitting& s) {
  const Algebra& H = E.hat;
  const Algebra& g = E.base;
  const GradedMap L = fiber_coords(E);
  auto F0 = [&](const Vec& w) { return into_fiber(E.i.m0, L.m0, w); };
  auto F1 = [&](const Vec& w) { return into_fiber(E.i.m1, L.m1, w); };
  auto X = [&](std::size_t k) { return e(g.n0(), k); };
  auto A = [&](std::size_t k) { return e(g.n1(), k); };
  const Mat &s0 = s.s0, &s1 = s.s1;

  Cochain2 c = zero_cochain2(g, E.fiber);
  fill(c.psi, [&](const auto& t) {
    Vec a = A(t[0]);
    return F0(H.d(s1 * a) - s0 * g.d(a));
  });
  fill(c.omega, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]);
    return F0(H.br(s0 * x, s0 * y) - s0 * g.br(x, y));
  });
  fill(c.mu, [&](const auto& t) {
    Vec x = X(t[0]), a = A(t[1]);
    return F1(H.br_xa(s0 * x, s1 * a) - s1 * g.br_xa(x, a));
  });
  fill(c.nu, [&](const auto& t) {
    Vec a = A(t[0]), x = X(t[1]);
    return F1(H.br_ax(s1 * a, s0 * x) - s1 * g.br_ax(a, x));
  });
  fill(c.theta, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
    return F1(H.L3(s0 * x, s0 * y, s0 * z) - s1 * g.L3(x, y, z));
  });
  return c;
}

Algebra total_algebra(const Algebra& g, const Rep& rho, const Cochain2& c) {
  check_shapes(rho, g);
  const auto n0 = g.n0(), n1 = g.n1(), v0 = rho.V.dim0, v1 = rho.V.dim1;
  const auto h0 = n0 + v0, h1 = n1 + v1;
  // Split a total vector into (base, fiber) parts and back.
  auto lo = [](const Vec& w, std::size_t n) { return Vec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)); };
  auto hi = [](const Vec& w, std::size_t n) { return Vec(w.begin() + static_cast<std::ptrdiff_t>(n), w.end()); };
  auto join = [](Vec a, const Vec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, std::move(args)); };

  Algebra H = zero_algebra(h1, h0);
  for (std::size_t j = 0; j < h1; ++j) {
    Vec w = e(h1, j), a = lo(w, n1), m = hi(w, n1);
    Vec img = join(g.d(a), ev(c.psi, {a}) + rho.V.d * m);
    for (std::size_t r = 0; r < h0; ++r) H.g.d(r, j) = img[r];
  }
  fill(H.b00, [&](const auto& t) {
    Vec p = e(h0, t[0]), q = e(h0, t[1]);
    Vec x = lo(p, n0), u = hi(p, n0), y = lo(q, n0), v = hi(q, n0);
    return join(g.br(x, y), ev(c.omega, {x, y}) + ev(rho.l0_0, {x, v}) + ev(rho.r0_0, {y, u}));
  });
  fill(H.b01, [&](const auto& t) {
    Vec p = e(h0, t[0]), q = e(h1, t[1]);
    Vec x = lo(p, n0), u = hi(p, n0), a = lo(q, n1), m = hi(q, n1);
    return join(g.br_xa(x, a), ev(c.mu, {x, a}) + ev(rho.l0_1, {x, m}) + ev(rho.r1, {a, u}));
  });
  fill(H.b10, [&](const auto& t) {
    Vec q = e(h1, t[0]), p = e(h0, t[1]);
    Vec a = lo(q, n1), m = hi(q, n1), x = lo(p, n0), u = hi(p, n0);
    return join(g.br_ax(a, x), ev(c.nu, {a, x}) + ev(rho.l1, {a, u}) + ev(rho.r0_1, {x, m}));
  });
  fill(H.l3, [&](const auto& t) {
    Vec p = e(h0, t[0]), q = e(h0, t[1]), r = e(h0, t[2]);
    Vec x = lo(p, n0), u = hi(p, n0), y = lo(q, n0), v = hi(q, n0), z = lo(r, n0), w = hi(r, n0);
    return join(g.L3(x, y, z), ev(c.theta, {x, y, z}) - ev(rho.l2, {x, y, w}) - ev(rho.m2, {x, z, v}) -
                                   ev(rho.r2, {y, z, u}));
  });

  return H;
}

BuiltExtension build_extension(const Algebra& g, const Rep& rho, const Cochain2& c) {
  if (auto v = verify_representation(rho, g); !v.empty())
    fail("invalid_representation", "representation fails identity " + v[0].id);
  if (auto chk = is_cocycle2(c, g, rho); !chk.ok)
    fail("not_cocycle", "cochain fails " + chk.violations[0].id + "; refusing to build an invalid extension");

  const auto n0 = g.n0(), n1 = g.n1(), v0 = rho.V.dim0, v1 = rho.V.dim1;
  const auto h0 = n0 + v0, h1 = n1 + v1;
  Algebra H = total_algebra(g, rho, c);
  BuiltExtension out;
  out.ext.hat = std::move(H);
  out.ext.base = g;
  out.ext.fiber = rho.V;
  out.ext.i = {Mat(h0, v0), Mat(h1, v1)};
  out.ext.p = {Mat(n0, h0), Mat(n1, h1)};
  out.split = {Mat(h0, n0), Mat(h1, n1)};
  for (std::size_t k = 0; k < v0; ++k) out.ext.i.m0(n0 + k, k) = 1;
  for (std::size_t k = 0; k < v1; ++k) out.ext.i.m1(n1 + k, k) = 1;
  for (std::size_t k = 0; k < n0; ++k) out.ext.p.m0(k, k) = out.split.s0(k, k) = 1;
  for (std::size_t k = 0; k < n1; ++k) out.ext.p.m1(k, k) = out.split.s1(k, k) = 1;
  return out;
}

Violations verify_equivalence(const Hom& F, const Extension& E1, const Extension& E2) {
  Violations out = verify_hom(F, E1.hat, E2.hat);
  auto add = [&](const std::string& id, const Mat& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) detail::note(out, id, {j}, m.col(j));
  };
  add("F0 i = j", F.F0 * E1.i.m0 - E2.i.m0);
  add("F1 i = j", F.F1 * E1.i.m1 - E2.i.m1);
  add("q F0 = p", E2.p.m0 * F.F0 - E1.p.m0);
  add("q F1 = p", E2.p.m1 * F.F1 - E1.p.m1);
  for_tuples({E1.fiber.dim0, E1.hat.n0()}, [&](const auto& t) {
    detail::note(out, "F2(i u, -) = 0", t, mm_eval(F.F2, {E1.i.m0.col(t[0]), e(E1.hat.n0(), t[1])}));
  });
  return out;
}

std::optional<Hom> extensions_equivalent(const Extension& E1, const Extension& E2) {
  validate_extension(E1);
  validate_extension(E2);
  require(E1.base == E2.base && E1.fiber == E2.fiber, "dim_mismatch", "extensions must share base and fiber");
  const Splitting s1 = find_splitting(E1), s2 = find_splitting(E2);
  const Rep rho = induced_rep(E1, s1);
  if (!(induced_rep(E2, s2) == rho)) return std::nullopt;
  const Algebra& g = E1.base;
  auto lam = solve(d1_matrix(g, rho), flatten(extract_cocycle(E1, s1) - extract_cocycle(E2, s2)));
  if (!lam) return std::nullopt;
  const Cochain1 l = unflatten1(g, rho.V, *lam);

  // Both totals decompose as s(x) + i(v); F sends s1 x + i1 v to s2 x + i2(l0 x + v).
  const GradedMap L1 = fiber_coords(E1);
  const Mat& p0 = E1.p.m0;
  const Mat& p1 = E1.p.m1;
  Hom F;
  F.F0 = s2.s0 * p0 + E2.i.m0 * mm_to_mat(l.l0) * p0 +
         E2.i.m0 * L1.m0 * (Mat::identity(E1.hat.n0()) - s1.s0 * p0);
  F.F1 = s2.s1 * p1 + E2.i.m1 * mm_to_mat(l.l1) * p1 +
         E2.i.m1 * L1.m1 * (Mat::identity(E1.hat.n1()) - s1.s1 * p1);
  F.F2 = mm_compose_out(E2.i.m1, mm_compose_slot(mm_compose_slot(l.l2, 0, p0), 1, p0));
  if (auto v = verify_equivalence(F, E1, E2); !v.empty())
    fail("internal", "constructed equivalence fails " + v[0].id);
  return F;
}

}  // namespace lz2
