#include "lz2/xmod.hpp"

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::fill;
using detail::for_tuples;
using detail::note;

void check_shapes(const CrossedModule& x) {
  const auto n = x.p0_dim(), m = x.p1_dim;
  require(x.p0_bracket.in == std::vector<std::size_t>{n, n}, "shape_mismatch", "p0 bracket has the wrong shape");
  require(x.left.out == m && x.left.in == std::vector<std::size_t>{n, m}, "shape_mismatch",
          "left action has the wrong shape");
  require(x.right.out == m && x.right.in == std::vector<std::size_t>{m, n}, "shape_mismatch",
          "right action has the wrong shape");
  require(x.f.rows() == n && x.f.cols() == m, "shape_mismatch", "f has the wrong shape");
}

Violations verify_xmod(const CrossedModule& x) {
  check_shapes(x);
  const auto n = x.p0_dim(), m = x.p1_dim;
  auto br = [&](const Vec& a, const Vec& b) { return mm_eval(x.p0_bracket, {a, b}); };
  auto L = [&](const Vec& p, const Vec& a) { return mm_eval(x.left, {p, a}); };
  auto R = [&](const Vec& a, const Vec& p) { return mm_eval(x.right, {a, p}); };
  auto X = [&](std::size_t k) { return e(n, k); };
  auto A = [&](std::size_t k) { return e(m, k); };
  Violations out;
  for_tuples({n, n, n}, [&](const auto& t) {
    Vec a = X(t[0]), b = X(t[1]), c = X(t[2]);
    note(out, "leibniz", t, br(a, br(b, c)) - br(br(a, b), c) - br(b, br(a, c)));
  });
  for_tuples({n, n, m}, [&](const auto& t) {
    Vec p = X(t[0]), q = X(t[1]), a = A(t[2]);
    note(out, "LLM", t, L(br(p, q), a) - L(p, L(q, a)) + L(q, L(p, a)));
  });
  for_tuples({m, n, n}, [&](const auto& t) {
    Vec a = A(t[0]), p = X(t[1]), q = X(t[2]);
    note(out, "LML", t, R(a, br(p, q)) - R(R(a, p), q) - L(p, R(a, q)));
  });
  for_tuples({n, m, n}, [&](const auto& t) {
    Vec p = X(t[0]), a = A(t[1]), q = X(t[2]);
    note(out, "MLL", t, L(p, R(a, q)) - R(L(p, a), q) - R(a, br(p, q)));
  });
  for_tuples({n, m}, [&](const auto& t) {
    Vec p = X(t[0]), a = A(t[1]);
    note(out, "crossed01_left", t, x.f * L(p, a) - br(p, x.f * a));
    note(out, "crossed01_right", {t[1], t[0]}, x.f * R(a, p) - br(x.f * a, p));
  });
  for_tuples({m, m}, [&](const auto& t) {
    Vec a = A(t[0]), b = A(t[1]);
    note(out, "crossed02", t, L(x.f * a, b) - R(a, x.f * b));
  });
  return out;
}

Algebra xmod_to_strict(const CrossedModule& x) {
  check_shapes(x);
  Algebra g = zero_algebra(x.p1_dim, x.p0_dim());
  g.g.d = x.f;
  g.b00 = x.p0_bracket;
  g.b01 = x.left;
  g.b10 = x.right;
  return g;
}

CrossedModule strict_to_xmod(const Algebra& g) {
  check_shapes(g);
  require(is_strict(g), "not_strict", "l3 is not zero");
  return {g.b00, g.n1(), g.b01, g.b10, g.g.d};
}

Violations verify_xmod_rep(const Rep& rho, const CrossedModule& x) {
  const Algebra g = xmod_to_strict(x);
  Violations out = verify_representation(rho, g);
  auto zero = [&](const std::string& id, const MultiMap& f) {
    for_tuples(f.in, [&](const std::vector<std::size_t>& t) {
      Vec r(f.out);
      for (std::size_t o = 0; o < f.out; ++o) r[o] = f.c[f.offset(o, t)];
      note(out, id, t, r);
    });
  };
  zero("l2", rho.l2);
  zero("m2", rho.m2);
  zero("r2", rho.r2);
  return out;
}

CrossedModule xmod_semidirect(const CrossedModule& x, const Rep& rho) {
  if (auto v = verify_xmod_rep(rho, x); !v.empty())
    fail("invalid_representation", "crossed-module representation fails " + v[0].id);
  const auto n = x.p0_dim(), m = x.p1_dim, v0 = rho.V.dim0, v1 = rho.V.dim1;
  const auto h0 = n + v0, h1 = m + v1;
  auto lo = [](const Vec& w, std::size_t k) { return Vec(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)); };
  auto hi = [](const Vec& w, std::size_t k) { return Vec(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()); };
  auto join = [](Vec a, const Vec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };

  CrossedModule out{MultiMap(h0, {h0, h0}), h1, MultiMap(h1, {h0, h1}), MultiMap(h1, {h1, h0}), Mat(h0, h1)};
  for (std::size_t j = 0; j < h1; ++j) {
    Vec q = e(h1, j), a = lo(q, m), v = hi(q, m);
    Vec img = join(x.f * a, rho.V.d * v);
    for (std::size_t r = 0; r < h0; ++r) out.f(r, j) = img[r];
  }
  fill(out.p0_bracket, [&](const auto& t) {
    Vec p = e(h0, t[0]), q = e(h0, t[1]);
    Vec y = lo(p, n), w = hi(p, n), y2 = lo(q, n), w2 = hi(q, n);
    return join(ev(x.p0_bracket, {y, y2}), ev(rho.l0_0, {y, w2}) + ev(rho.r0_0, {y2, w}));
  });
  fill(out.left, [&](const auto& t) {
    Vec p = e(h0, t[0]), q = e(h1, t[1]);
    Vec y = lo(p, n), w = hi(p, n), a = lo(q, m), v = hi(q, m);
    return join(ev(x.left, {y, a}), ev(rho.l0_1, {y, v}) + ev(rho.r1, {a, w}));
  });
  fill(out.right, [&](const auto& t) {
    Vec q = e(h1, t[0]), p = e(h0, t[1]);
    Vec a = lo(q, m), v = hi(q, m), y = lo(p, n), w = hi(p, n);
    return join(ev(x.right, {a, y}), ev(rho.r0_1, {y, v}) + ev(rho.l1, {a, w}));
  });
  return out;
}

AutPair as_aut_pair(const XModAutPair& p, const Algebra& g) {
  return {p.beta0, p.beta1, Hom{p.alpha0, p.alpha1, MultiMap(g.n1(), {g.n0(), g.n0()})}};
}

DerPair as_der_pair(const XModDerPair& p, const Algebra& g) {
  return {p.beta0, p.beta1, Derivation{p.alpha0, p.alpha1, MultiMap(g.n1(), {g.n0(), g.n0()})}};
}

void validate_xmod_extension(const Extension& E) {
  validate_extension(E);
  require(is_strict(E.hat) && is_strict(E.base), "invalid_extension", "crossed-module extensions must be strict");
}

namespace {

using Cols = std::function<void(const std::string&, std::vector<std::size_t>, const Mat&)>;

Cols collect(Violations& out) {
  return [&out](const std::string& id, std::vector<std::size_t> at, const Mat& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto t = at;
      t.push_back(j);
      note(out, id, t, m.col(j));
    }
  };
}

void push(Vec& out, const Vec& r) { out.insert(out.end(), r.begin(), r.end()); }

struct Data {
  Rep rho;
  Cochain2 c;
};

Data data(const Extension& E, const Splitting& s) {
  validate_xmod_extension(E);
  return {induced_rep(E, s), extract_cocycle(E, s)};
}

Vec cro_at(const XModAutPair& p, const Algebra& g, const Rep& rho, const Cochain2& c, const Cochain1& l) {
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };
  auto l0 = [&](const Vec& x) { return ev(l.l0, {x}); };
  auto l1 = [&](const Vec& a) { return ev(l.l1, {a}); };
  Vec out;
  // CRO1; the map on the right is the fiber differential.
  for_tuples({n1}, [&](const auto& t) {
    Vec a = A(t[0]);
    push(out, p.beta0 * ev(c.psi, {a}) - ev(c.psi, {p.alpha1 * a}) - (rho.V.d * l1(a) - l0(g.d(a))));
  });
  for_tuples({n0, n0}, [&](const auto& t) {  // CRO2
    Vec x = X(t[0]), y = X(t[1]), ax = p.alpha0 * x, ay = p.alpha0 * y;
    push(out, p.beta0 * ev(c.omega, {x, y}) - ev(c.omega, {ax, ay}) -
                  (rho.l0(ax).X0 * l0(y) + rho.r0(ay).X0 * l0(x) - l0(g.br(x, y))));
  });
  for_tuples({n0, n1}, [&](const auto& t) {  // CRO3
    Vec x = X(t[0]), a = A(t[1]), ax = p.alpha0 * x, aa = p.alpha1 * a;
    push(out, p.beta1 * ev(c.mu, {x, a}) - ev(c.mu, {ax, aa}) -
                  (rho.l0(ax).X1 * l1(a) + rho.R1(aa) * l0(x) - l1(g.br_xa(x, a))));
  });
  for_tuples({n1, n0}, [&](const auto& t) {  // CRO4
    Vec a = A(t[0]), x = X(t[1]), ax = p.alpha0 * x, aa = p.alpha1 * a;
    push(out, p.beta1 * ev(c.nu, {a, x}) - ev(c.nu, {aa, ax}) -
                  (rho.r0(ax).X1 * l1(a) + rho.L1(aa) * l0(x) - l1(g.br_ax(a, x))));
  });
  return out;
}

Vec rcocy_at(const XModDerPair& p, const Algebra& g, const Rep& rho, const Cochain2& c, const Cochain1& l) {
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };
  auto l0 = [&](const Vec& x) { return ev(l.l0, {x}); };
  auto l1 = [&](const Vec& a) { return ev(l.l1, {a}); };
  Vec out;
  for_tuples({n1}, [&](const auto& t) {  // RCOCY1
    Vec a = A(t[0]);
    push(out, p.beta0 * ev(c.psi, {a}) - ev(c.psi, {p.alpha1 * a}) - (rho.V.d * l1(a) - l0(g.d(a))));
  });
  for_tuples({n0, n0}, [&](const auto& t) {  // RCOCY2
    Vec x = X(t[0]), y = X(t[1]);
    push(out, p.beta0 * ev(c.omega, {x, y}) - ev(c.omega, {p.alpha0 * x, y}) - ev(c.omega, {x, p.alpha0 * y}) -
                  (rho.l0(x).X0 * l0(y) + rho.r0(y).X0 * l0(x) - l0(g.br(x, y))));
  });
  for_tuples({n0, n1}, [&](const auto& t) {  // RCOCY3
    Vec x = X(t[0]), a = A(t[1]);
    push(out, p.beta1 * ev(c.mu, {x, a}) - ev(c.mu, {p.alpha0 * x, a}) - ev(c.mu, {x, p.alpha1 * a}) -
                  (rho.l0(x).X1 * l1(a) + rho.R1(a) * l0(x) - l1(g.br_xa(x, a))));
  });
  for_tuples({n1, n0}, [&](const auto& t) {  // RCOCY4
    Vec a = A(t[0]), x = X(t[1]);
    push(out, p.beta1 * ev(c.nu, {a, x}) - ev(c.nu, {p.alpha1 * a, x}) - ev(c.nu, {a, p.alpha0 * x}) -
                  (rho.r0(x).X1 * l1(a) + rho.L1(a) * l0(x) - l1(g.br_ax(a, x))));
  });
  return out;
}

// Solve over (l0, l1) only; l2 stays zero.
template <class Res>
std::optional<Cochain1> solve_strict(const Algebra& g, const Complex& V, Res&& res) {
  Cochain1 z = zero_cochain1(g, V);
  const std::size_t n = z.l0.size() + z.l1.size(), total = dim_c1(g, V);
  const Vec r0 = res(z);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(res(unflatten1(g, V, unit(total, k))) - r0);
  auto y = solve(Mat::from_cols(cols, r0.size()), -r0);
  if (!y) return std::nullopt;
  y->resize(total);
  return unflatten1(g, V, *y);
}

WellsClass strict_class(const Algebra& g, const Rep& rho, const Cochain2& v) {
  Quotient q = h2_quotient_strict(g, rho);
  const Vec flat = flatten(v);
  auto co = q.coords(flat);
  require(co.has_value(), "internal", "obstruction cochain is not a cocycle");
  return {*co, *q.representative(flat)};
}

}  // namespace

Violations xmod_aut_compatible(const XModAutPair& p, const Rep& rho, const Algebra& g) {
  Violations out;
  auto cols = collect(out);
  for_tuples({g.n0()}, [&](const auto& t) {
    Vec x = e(g.n0(), t[0]), ax = p.alpha0 * x;
    cols("CRO5", t, p.beta0 * rho.l0(x).X0 - rho.l0(ax).X0 * p.beta0);
    cols("CRO6", t, p.beta0 * rho.r0(x).X0 - rho.r0(ax).X0 * p.beta0);
    cols("CRO7", t, p.beta1 * rho.l0(x).X1 - rho.l0(ax).X1 * p.beta1);
    cols("CRO8", t, p.beta1 * rho.r0(x).X1 - rho.r0(ax).X1 * p.beta1);
  });
  for_tuples({g.n1()}, [&](const auto& t) {
    Vec a = e(g.n1(), t[0]), aa = p.alpha1 * a;
    cols("CRO9", t, p.beta1 * rho.R1(a) - rho.R1(aa) * p.beta0);
    cols("CRO10", t, p.beta1 * rho.L1(a) - rho.L1(aa) * p.beta0);
  });
  return out;
}

Violations xmod_der_compatible(const XModDerPair& p, const Rep& rho, const Algebra& g) {
  Violations out;
  auto cols = collect(out);
  for_tuples({g.n0()}, [&](const auto& t) {
    Vec x = e(g.n0(), t[0]), ax = p.alpha0 * x;
    cols("RCOCY5", t, p.beta0 * rho.l0(x).X0 - rho.l0(ax).X0 - rho.l0(x).X0 * p.beta0);
    cols("RCOCY6", t, p.beta0 * rho.r0(x).X0 - rho.r0(ax).X0 - rho.r0(x).X0 * p.beta0);
    cols("RCOCY7", t, p.beta1 * rho.l0(x).X1 - rho.l0(ax).X1 - rho.l0(x).X1 * p.beta1);
    cols("RCOCY8", t, p.beta1 * rho.r0(x).X1 - rho.r0(ax).X1 - rho.r0(x).X1 * p.beta1);
  });
  for_tuples({g.n1()}, [&](const auto& t) {
    Vec a = e(g.n1(), t[0]), aa = p.alpha1 * a;
    cols("RCOCY9", t, p.beta1 * rho.L1(a) - rho.L1(aa) - rho.L1(a) * p.beta0);
    cols("RCOCY10", t, p.beta1 * rho.R1(a) - rho.R1(aa) - rho.R1(a) * p.beta0);
  });
  return out;
}

Vec cro_residual(const XModAutPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda) {
  const Data d = data(E, s);
  return cro_at(pair, E.base, d.rho, d.c, lambda);
}

Vec rcocy_residual(const XModDerPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda) {
  const Data d = data(E, s);
  return rcocy_at(pair, E.base, d.rho, d.c, lambda);
}

WellsClass xmod_wells_aut(const XModAutPair& p, const Extension& E, const Splitting& s) {
  const Data d = data(E, s);
  const Algebra& g = E.base;
  validate_aut_pair(as_aut_pair(p, g), g, E.fiber);
  if (auto v = xmod_aut_compatible(p, d.rho, g); !v.empty()) fail("incompatible_pair", "pair fails " + v[0].id);
  auto i0 = inverse(p.alpha0);
  auto i1 = inverse(p.alpha1);
  // With alpha2 = 0 the moved cocycle is plain conjugation.
  Cochain2 t = d.c;
  const auto n0 = g.n0(), n1 = g.n1();
  fill(t.psi, [&](const auto& k) { return p.beta0 * mm_eval(d.c.psi, {*i1 * e(n1, k[0])}); });
  fill(t.omega, [&](const auto& k) {
    return p.beta0 * mm_eval(d.c.omega, {*i0 * e(n0, k[0]), *i0 * e(n0, k[1])});
  });
  fill(t.mu, [&](const auto& k) { return p.beta1 * mm_eval(d.c.mu, {*i0 * e(n0, k[0]), *i1 * e(n1, k[1])}); });
  fill(t.nu, [&](const auto& k) { return p.beta1 * mm_eval(d.c.nu, {*i1 * e(n1, k[0]), *i0 * e(n0, k[1])}); });
  return strict_class(g, d.rho, t - d.c);
}

WellsClass xmod_wells_der(const XModDerPair& p, const Extension& E, const Splitting& s) {
  const Data d = data(E, s);
  const Algebra& g = E.base;
  validate_der_pair(as_der_pair(p, g), g, E.fiber);
  if (auto v = xmod_der_compatible(p, d.rho, g); !v.empty()) fail("incompatible_pair", "pair fails " + v[0].id);
  Cochain2 t = d.c;
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  fill(t.psi, [&](const auto& k) {
    Vec a = A(k[0]);
    return p.beta0 * mm_eval(d.c.psi, {a}) - mm_eval(d.c.psi, {p.alpha1 * a});
  });
  fill(t.omega, [&](const auto& k) {
    Vec x = X(k[0]), y = X(k[1]);
    return p.beta0 * mm_eval(d.c.omega, {x, y}) - mm_eval(d.c.omega, {p.alpha0 * x, y}) -
           mm_eval(d.c.omega, {x, p.alpha0 * y});
  });
  fill(t.mu, [&](const auto& k) {
    Vec x = X(k[0]), a = A(k[1]);
    return p.beta1 * mm_eval(d.c.mu, {x, a}) - mm_eval(d.c.mu, {p.alpha0 * x, a}) -
           mm_eval(d.c.mu, {x, p.alpha1 * a});
  });
  fill(t.nu, [&](const auto& k) {
    Vec a = A(k[0]), x = X(k[1]);
    return p.beta1 * mm_eval(d.c.nu, {a, x}) - mm_eval(d.c.nu, {p.alpha1 * a, x}) -
           mm_eval(d.c.nu, {a, p.alpha0 * x});
  });
  return strict_class(g, d.rho, t);
}

WellsReport xmod_aut_induce(const XModAutPair& p, const Extension& E, const Splitting& s) {
  const Data d = data(E, s);
  const Algebra& g = E.base;
  const AutPair full = as_aut_pair(p, g);
  validate_aut_pair(full, g, E.fiber);
  WellsReport r;
  r.violations = xmod_aut_compatible(p, d.rho, g);
  r.compatible = r.violations.empty();
  if (!r.compatible) return r;
  r.obstruction = xmod_wells_aut(p, E, s);
  r.witness = solve_strict(g, E.fiber, [&](const Cochain1& l) { return cro_at(p, g, d.rho, d.c, l); });
  require(r.witness.has_value() == r.obstruction->is_zero(), "internal",
          "inducibility system and Wells class disagree");
  if (r.witness) {
    Hom F = lift_aut(full, *r.witness, E, s);
    if (auto v = verify_hom(F, E.hat, E.hat); !v.empty())
      fail("internal", "lifted map fails homomorphism condition " + v[0].id);
    r.induced_aut = std::move(F);
  }
  return r;
}

WellsReport xmod_der_induce(const XModDerPair& p, const Extension& E, const Splitting& s) {
  const Data d = data(E, s);
  const Algebra& g = E.base;
  const DerPair full = as_der_pair(p, g);
  validate_der_pair(full, g, E.fiber);
  WellsReport r;
  r.violations = xmod_der_compatible(p, d.rho, g);
  r.compatible = r.violations.empty();
  if (!r.compatible) return r;
  r.obstruction = xmod_wells_der(p, E, s);
  r.witness = solve_strict(g, E.fiber, [&](const Cochain1& l) { return rcocy_at(p, g, d.rho, d.c, l); });
  require(r.witness.has_value() == r.obstruction->is_zero(), "internal",
          "inducibility system and Wells class disagree");
  if (r.witness) {
    Derivation D = lift_der(full, *r.witness, E, s);
    if (auto v = verify_derivation(D, E.hat); !v.empty())
      fail("internal", "lifted map fails derivation condition " + v[0].id);
    r.induced_der = std::move(D);
  }
  return r;
}

}  // namespace lz2
