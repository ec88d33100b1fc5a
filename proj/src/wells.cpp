#include "lz2/wells.hpp"

#include "detail.hpp"
#include "lz2/error.hpp"

namespace lz2 {

using detail::e;
using detail::fill;
using detail::for_tuples;
using detail::note;

namespace {

// Block coordinates of hat: T = [s | i] sends (base, fiber) to hat, Ti is its
// inverse [p ; L (1 - s p)].
struct Frame {
  Mat T0, T1, Ti0, Ti1;
};

Frame frame(const Extension& E, const Splitting& s) {
  const GradedMap L = fiber_coords(E);
  Frame f;
  f.T0 = hcat(s.s0, E.i.m0);
  f.T1 = hcat(s.s1, E.i.m1);
  f.Ti0 = vcat(E.p.m0, L.m0 * (Mat::identity(E.hat.n0()) - s.s0 * E.p.m0));
  f.Ti1 = vcat(E.p.m1, L.m1 * (Mat::identity(E.hat.n1()) - s.s1 * E.p.m1));
  return f;
}

// [[tl, 0], [bl, br]]
Mat lower_block(const Mat& tl, const Mat& bl, const Mat& br) {
  return vcat(hcat(tl, Mat(tl.rows(), br.cols())), hcat(bl, br));
}

// (w, z) -> (base(p w, p z), fiber(p w, p z)) on block coordinates.
MultiMap lower_block2(const MultiMap& base, const MultiMap& fiber, std::size_t n0, std::size_t v0) {
  const std::size_t h0 = n0 + v0;
  MultiMap out(base.out + fiber.out, {h0, h0});
  for_tuples({n0, n0}, [&](const auto& t) {
    for (std::size_t o = 0; o < base.out; ++o) out.at(o, {t[0], t[1]}) = base.at(o, {t[0], t[1]});
    for (std::size_t o = 0; o < fiber.out; ++o) out.at(base.out + o, {t[0], t[1]}) = fiber.at(o, {t[0], t[1]});
  });
  return out;
}

MultiMap conjugate2(const Frame& f, const MultiMap& m) {
  return mm_compose_out(f.T1, mm_compose_slot(mm_compose_slot(m, 0, f.Ti0), 1, f.Ti0));
}

Mat square_map(const MultiMap& f) { return mm_to_mat(f); }

bool is_chain_map(const Mat& b0, const Mat& b1, const Complex& V) { return b0 * V.d == V.d * b1; }

struct Setting {
  Rep rho;
  Cochain2 c;
};

Setting setting(const Extension& E, const Splitting& s) { return {induced_rep(E, s), extract_cocycle(E, s)}; }

Quotient quotient(const Algebra& g, const Rep& rho, Scope scope) {
  return scope == Scope::full ? h2_quotient(g, rho) : h2_quotient_strict(g, rho);
}

WellsClass class_of(const Quotient& q, const Vec& v) {
  auto co = q.coords(v);
  require(co.has_value(), "internal", "obstruction cochain is not a cocycle");
  return {*co, *q.representative(v)};
}

// Number of unknowns of the inducibility system.
std::size_t unknowns(const Algebra& g, const Complex& V, Scope scope) {
  const Cochain1 z = zero_cochain1(g, V);
  return scope == Scope::full ? dim_c1(g, V) : z.l0.size() + z.l1.size();
}

// Affine residual r(lambda) = A lambda + r(0); returns (A, -r(0)).
template <class Res>
std::pair<Mat, Vec> affine_system(const Algebra& g, const Complex& V, Scope scope, Res&& res) {
  const std::size_t n = unknowns(g, V, scope), total = dim_c1(g, V);
  const Vec r0 = res(zero_cochain1(g, V));
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(res(unflatten1(g, V, unit(total, k))) - r0);
  return {Mat::from_cols(cols, r0.size()), -r0};
}

std::optional<Cochain1> solve_lambda(const Algebra& g, const Complex& V, const std::pair<Mat, Vec>& sys) {
  auto y = solve(sys.first, sys.second);
  if (!y) return std::nullopt;
  Vec full = *y;
  full.resize(dim_c1(g, V));
  return unflatten1(g, V, full);
}

void check_z1(const Cochain1& lambda, const Algebra& g, const Rep& rho) {
  require(is_zero(d1_matrix(g, rho) * flatten(lambda)), "not_1cocycle", "lambda is not a 1-cocycle");
}

// ---------------------------------------------------------------------------
// Residual helpers shared by COC and COCY.

void push(Vec& out, const Vec& r) { out.insert(out.end(), r.begin(), r.end()); }

}  // namespace

void validate_aut_pair(const AutPair& pair, const Algebra& g, const Complex& V) {
  const Hom& a = pair.alpha;
  require(pair.beta0.rows() == V.dim0 && pair.beta0.cols() == V.dim0 && pair.beta1.rows() == V.dim1 &&
              pair.beta1.cols() == V.dim1,
          "shape_mismatch", "beta has the wrong shape");
  require(inverse(pair.beta0).has_value() && inverse(pair.beta1).has_value(), "invalid_pair", "beta is singular");
  require(is_chain_map(pair.beta0, pair.beta1, V), "invalid_pair", "beta does not commute with the differential");
  if (auto v = verify_hom(a, g, g); !v.empty()) fail("invalid_pair", "alpha fails homomorphism condition " + v[0].id);
  require(inverse(a.F0).has_value() && inverse(a.F1).has_value(), "invalid_pair", "alpha is singular");
}

void validate_der_pair(const DerPair& pair, const Algebra& g, const Complex& V) {
  require(pair.beta0.rows() == V.dim0 && pair.beta0.cols() == V.dim0 && pair.beta1.rows() == V.dim1 &&
              pair.beta1.cols() == V.dim1,
          "shape_mismatch", "beta has the wrong shape");
  require(is_chain_map(pair.beta0, pair.beta1, V), "invalid_pair", "beta does not commute with the differential");
  if (auto v = verify_derivation(pair.alpha, g); !v.empty())
    fail("invalid_pair", "alpha fails derivation condition " + v[0].id);
}

AutPair identity_pair(const Algebra& g, const Complex& V) {
  return {Mat::identity(V.dim0), Mat::identity(V.dim1), identity_hom(g)};
}

DerPair zero_pair(const Algebra& g, const Complex& V) {
  return {Mat(V.dim0, V.dim0), Mat(V.dim1, V.dim1), zero_derivation(g)};
}

Violations aut_compatible(const AutPair& pair, const Rep& rho, const Algebra& g) {
  const Mat &b0 = pair.beta0, &b1 = pair.beta1;
  const Hom& a = pair.alpha;
  const auto n0 = g.n0(), n1 = g.n1();
  Violations out;
  auto cols = [&](const std::string& id, std::vector<std::size_t> at, const Mat& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto t = at;
      t.push_back(j);
      note(out, id, t, m.col(j));
    }
  };
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(a.F2, {x, y}); };
  // Each condition is written with beta^-1 cleared: b l(x) - l(alpha x) b.
  for_tuples({n0}, [&](const auto& t) {
    Vec x = X(t[0]), ax = a.F0 * x;
    cols("COC6", t, b0 * rho.l0(x).X0 - rho.l0(ax).X0 * b0);
    cols("COC7", t, b0 * rho.r0(x).X0 - rho.r0(ax).X0 * b0);
    cols("COC8", t, b1 * rho.l0(x).X1 - rho.l0(ax).X1 * b1);
    cols("COC9", t, b1 * rho.r0(x).X1 - rho.r0(ax).X1 * b1);
  });
  for_tuples({n1}, [&](const auto& t) {
    Vec aa = A(t[0]), a1 = a.F1 * aa;
    cols("COC10", t, b1 * rho.R1(aa) - rho.R1(a1) * b0);
    cols("COC11", t, b1 * rho.L1(aa) - rho.L1(a1) * b0);
  });
  for_tuples({n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), ax = a.F0 * x, ay = a.F0 * y, s = a2(x, y);
    cols("COC12", t, b1 * rho.L2(x, y) - rho.L2(ax, ay) * b0 - rho.L1(s) * b0);
    cols("COC13", t, b1 * rho.R2(x, y) - rho.R2(ax, ay) * b0 + rho.R1(s) * b0);
    cols("COC14", t, b1 * rho.M2(x, y) - rho.M2(ax, ay) * b0 - rho.R1(s) * b0);
  });
  return out;
}

Violations der_compatible(const DerPair& pair, const Rep& rho, const Algebra& g) {
  const Mat &b0 = pair.beta0, &b1 = pair.beta1;
  const Derivation& a = pair.alpha;
  const auto n0 = g.n0(), n1 = g.n1();
  Violations out;
  auto cols = [&](const std::string& id, std::vector<std::size_t> at, const Mat& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto t = at;
      t.push_back(j);
      note(out, id, t, m.col(j));
    }
  };
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(a.D2, {x, y}); };
  for_tuples({n0}, [&](const auto& t) {
    Vec x = X(t[0]), ax = a.D0 * x;
    cols("COCY6", t, b0 * rho.l0(x).X0 - rho.l0(ax).X0 - rho.l0(x).X0 * b0);
    cols("COCY7", t, b0 * rho.r0(x).X0 - rho.r0(ax).X0 - rho.r0(x).X0 * b0);
    cols("COCY8", t, b1 * rho.l0(x).X1 - rho.l0(ax).X1 - rho.l0(x).X1 * b1);
    cols("COCY9", t, b1 * rho.r0(x).X1 - rho.r0(ax).X1 - rho.r0(x).X1 * b1);
  });
  for_tuples({n1}, [&](const auto& t) {
    Vec aa = A(t[0]), a1 = a.D1 * aa;
    cols("COCY10", t, b1 * rho.L1(aa) - rho.L1(a1) - rho.L1(aa) * b0);
    cols("COCY11", t, b1 * rho.R1(aa) - rho.R1(a1) - rho.R1(aa) * b0);
  });
  // b1 appears on the left and alpha2 enters through l1, r1 alone: these are
  // the conditions the lift needs.
  for_tuples({n0, n0}, [&](const auto& t) {
    Vec x = X(t[0]), y = X(t[1]), ax = a.D0 * x, ay = a.D0 * y, s = a2(x, y);
    cols("COCY12", t, b1 * rho.L2(x, y) - rho.L2(ax, y) - rho.L2(x, ay) - rho.L2(x, y) * b0 - rho.L1(s));
    cols("COCY13", t, b1 * rho.R2(x, y) - rho.R2(ax, y) - rho.R2(x, ay) - rho.R2(x, y) * b0 + rho.R1(s));
    cols("COCY14", t, b1 * rho.M2(x, y) - rho.M2(ax, y) - rho.M2(x, ay) - rho.M2(x, y) * b0 - rho.R1(s));
  });
  return out;
}

AutPair project_aut(const Hom& F, const Extension& E, const Splitting& s) {
  require((E.p.m0 * F.F0 * E.i.m0).is_zero() && (E.p.m1 * F.F1 * E.i.m1).is_zero(), "fiber_not_preserved",
          "the map does not keep the fiber invariant");
  require(is_zero(flatten(mm_compose_slot(F.F2, 0, E.i.m0))) && is_zero(flatten(mm_compose_slot(F.F2, 1, E.i.m0))),
          "fiber_not_preserved", "F2 is nonzero on a fiber argument");
  const GradedMap L = fiber_coords(E);
  AutPair out;
  out.beta0 = L.m0 * F.F0 * E.i.m0;
  out.beta1 = L.m1 * F.F1 * E.i.m1;
  out.alpha.F0 = E.p.m0 * F.F0 * s.s0;
  out.alpha.F1 = E.p.m1 * F.F1 * s.s1;
  out.alpha.F2 = mm_compose_out(E.p.m1, mm_compose_slot(mm_compose_slot(F.F2, 0, s.s0), 1, s.s0));
  return out;
}

DerPair project_der(const Derivation& D, const Extension& E, const Splitting& s) {
  require((E.p.m0 * D.D0 * E.i.m0).is_zero() && (E.p.m1 * D.D1 * E.i.m1).is_zero(), "fiber_not_preserved",
          "the derivation does not keep the fiber invariant");
  require(is_zero(flatten(mm_compose_slot(D.D2, 0, E.i.m0))) && is_zero(flatten(mm_compose_slot(D.D2, 1, E.i.m0))),
          "fiber_not_preserved", "D2 is nonzero on a fiber argument");
  const GradedMap L = fiber_coords(E);
  DerPair out;
  out.beta0 = L.m0 * D.D0 * E.i.m0;
  out.beta1 = L.m1 * D.D1 * E.i.m1;
  out.alpha.D0 = E.p.m0 * D.D0 * s.s0;
  out.alpha.D1 = E.p.m1 * D.D1 * s.s1;
  out.alpha.D2 = mm_compose_out(E.p.m1, mm_compose_slot(mm_compose_slot(D.D2, 0, s.s0), 1, s.s0));
  return out;
}

// Conditions, each as LHS - RHS.
namespace {

Vec coc_residual_at(const AutPair& pair, const Algebra& g, const Rep& rho, const Cochain2& c,
                     const Cochain1& lambda) {
  const Hom& al = pair.alpha;
  const Mat &b0 = pair.beta0, &b1 = pair.beta1;
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(al.F2, {x, y}); };
  auto l0 = [&](const Vec& x) { return mm_eval(lambda.l0, {x}); };
  auto l1 = [&](const Vec& a) { return mm_eval(lambda.l1, {a}); };
  auto l2 = [&](const Vec& x, const Vec& y) { return mm_eval(lambda.l2, {x, y}); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };
  const Mat& dV = rho.V.d;
  Vec out;

  for_tuples({n1}, [&](const auto& t) {  // COC1
    Vec a = A(t[0]);
    push(out, b0 * ev(c.psi, {a}) - ev(c.psi, {al.F1 * a}) - (dV * l1(a) - l0(g.d(a))));
  });
  for_tuples({n0, n0}, [&](const auto& t) {  // COC2
    Vec x = X(t[0]), y = X(t[1]), ax = al.F0 * x, ay = al.F0 * y;
    Vec lhs = b0 * ev(c.omega, {x, y}) - ev(c.omega, {ax, ay});
    Vec rhs = rho.l0(ax).X0 * l0(y) + rho.r0(ay).X0 * l0(x) - l0(g.br(x, y)) + dV * l2(x, y) +
              ev(c.psi, {a2(x, y)});
    push(out, lhs - rhs);
  });
  for_tuples({n0, n1}, [&](const auto& t) {  // COC3
    Vec x = X(t[0]), a = A(t[1]), ax = al.F0 * x, aa = al.F1 * a;
    Vec lhs = b1 * ev(c.mu, {x, a}) - ev(c.mu, {ax, aa});
    Vec rhs = rho.l0(ax).X1 * l1(a) + rho.R1(aa) * l0(x) - l1(g.br_xa(x, a)) + l2(x, g.d(a));
    push(out, lhs - rhs);
  });
  for_tuples({n1, n0}, [&](const auto& t) {  // COC4
    Vec a = A(t[0]), x = X(t[1]), ax = al.F0 * x, aa = al.F1 * a;
    Vec lhs = b1 * ev(c.nu, {a, x}) - ev(c.nu, {aa, ax});
    Vec rhs = rho.r0(ax).X1 * l1(a) + rho.L1(aa) * l0(x) - l1(g.br_ax(a, x)) + l2(g.d(a), x);
    push(out, lhs - rhs);
  });
  if (rho.V.dim1 > 0) {
    for_tuples({n0, n0, n0}, [&](const auto& t) {  // COC5
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
      Vec ax = al.F0 * x, ay = al.F0 * y, az = al.F0 * z;
      Vec lhs = b1 * ev(c.theta, {x, y, z}) - ev(c.theta, {ax, ay, az}) - ev(c.mu, {ax, a2(y, z)}) +
                ev(c.nu, {a2(x, y), az}) + rho.R1(a2(x, z)) * l0(y) + ev(c.mu, {ay, a2(x, z)});
      Vec rhs = -(rho.L2(ax, ay) * l0(z)) - rho.M2(ax, az) * l0(y) - l1(g.L3(x, y, z)) - rho.R2(ay, az) * l0(x) +
                l2(x, g.br(y, z)) - l2(g.br(x, y), z) - l2(y, g.br(x, z)) + rho.l0(ax).X1 * l2(y, z) +
                rho.R1(a2(y, z)) * l0(x) - rho.r0(az).X1 * l2(x, y) - rho.L1(a2(x, y)) * l0(z) -
                rho.l0(ay).X1 * l2(x, z);
      push(out, lhs - rhs);
    });
  }
  return out;
}

}  // namespace

Vec coc_residual(const AutPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda) {
  const Setting st = setting(E, s);
  return coc_residual_at(pair, E.base, st.rho, st.c, lambda);
}

namespace {

Vec cocy_residual_at(const DerPair& pair, const Algebra& g, const Rep& rho, const Cochain2& c,
                     const Cochain1& lambda) {
  const Derivation& al = pair.alpha;
  const Mat &b0 = pair.beta0, &b1 = pair.beta1;
  const auto n0 = g.n0(), n1 = g.n1();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(al.D2, {x, y}); };
  auto l0 = [&](const Vec& x) { return mm_eval(lambda.l0, {x}); };
  auto l1 = [&](const Vec& a) { return mm_eval(lambda.l1, {a}); };
  auto l2 = [&](const Vec& x, const Vec& y) { return mm_eval(lambda.l2, {x, y}); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };
  const Mat& dV = rho.V.d;
  Vec out;

  for_tuples({n1}, [&](const auto& t) {  // COCY1
    Vec a = A(t[0]);
    push(out, b0 * ev(c.psi, {a}) - ev(c.psi, {al.D1 * a}) - (dV * l1(a) - l0(g.d(a))));
  });
  for_tuples({n0, n0}, [&](const auto& t) {  // COCY2
    Vec x = X(t[0]), y = X(t[1]);
    Vec lhs = b0 * ev(c.omega, {x, y}) - ev(c.omega, {al.D0 * x, y}) - ev(c.omega, {x, al.D0 * y});
    Vec rhs = rho.l0(x).X0 * l0(y) + rho.r0(y).X0 * l0(x) - l0(g.br(x, y)) + dV * l2(x, y) + ev(c.psi, {a2(x, y)});
    push(out, lhs - rhs);
  });
  for_tuples({n0, n1}, [&](const auto& t) {  // COCY3
    Vec x = X(t[0]), a = A(t[1]);
    Vec lhs = b1 * ev(c.mu, {x, a}) - ev(c.mu, {al.D0 * x, a}) - ev(c.mu, {x, al.D1 * a});
    Vec rhs = rho.l0(x).X1 * l1(a) + rho.R1(a) * l0(x) - l1(g.br_xa(x, a)) + l2(x, g.d(a));
    push(out, lhs - rhs);
  });
  for_tuples({n1, n0}, [&](const auto& t) {  // COCY4
    Vec a = A(t[0]), x = X(t[1]);
    Vec lhs = b1 * ev(c.nu, {a, x}) - ev(c.nu, {al.D1 * a, x}) - ev(c.nu, {a, al.D0 * x});
    Vec rhs = rho.r0(x).X1 * l1(a) + rho.L1(a) * l0(x) - l1(g.br_ax(a, x)) + l2(g.d(a), x);
    push(out, lhs - rhs);
  });
  if (rho.V.dim1 > 0) {
    for_tuples({n0, n0, n0}, [&](const auto& t) {  // COCY5
      Vec x = X(t[0]), y = X(t[1]), z = X(t[2]);
      Vec lhs = b1 * ev(c.theta, {x, y, z}) - ev(c.theta, {al.D0 * x, y, z}) - ev(c.theta, {x, al.D0 * y, z}) -
                ev(c.theta, {x, y, al.D0 * z}) - ev(c.mu, {x, a2(y, z)}) + rho.l0(y).X1 * l2(x, z) +
                ev(c.nu, {a2(x, y), z}) + ev(c.mu, {y, a2(x, z)}) + rho.R2(y, z) * l0(x) + rho.M2(x, z) * l0(y) +
                rho.L2(x, y) * l0(z);
      Vec rhs = l2(x, g.br(y, z)) - l2(g.br(x, y), z) - l2(y, g.br(x, z)) + rho.l0(x).X1 * l2(y, z) -
                rho.r0(z).X1 * l2(x, y) - l1(g.L3(x, y, z));
      push(out, lhs - rhs);
    });
  }
  return out;
}

}  // namespace

Vec cocy_residual(const DerPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda) {
  const Setting st = setting(E, s);
  return cocy_residual_at(pair, E.base, st.rho, st.c, lambda);
}

Hom lift_aut(const AutPair& pair, const Cochain1& lambda, const Extension& E, const Splitting& s) {
  const Frame f = frame(E, s);
  const auto n0 = E.base.n0(), v0 = E.fiber.dim0;
  Hom B;
  B.F0 = lower_block(pair.alpha.F0, square_map(lambda.l0), pair.beta0);
  B.F1 = lower_block(pair.alpha.F1, square_map(lambda.l1), pair.beta1);
  B.F2 = lower_block2(pair.alpha.F2, lambda.l2, n0, v0);
  return {f.T0 * B.F0 * f.Ti0, f.T1 * B.F1 * f.Ti1, conjugate2(f, B.F2)};
}

Derivation lift_der(const DerPair& pair, const Cochain1& lambda, const Extension& E, const Splitting& s) {
  const Frame f = frame(E, s);
  const auto n0 = E.base.n0(), v0 = E.fiber.dim0;
  Derivation B;
  B.D0 = lower_block(pair.alpha.D0, square_map(lambda.l0), pair.beta0);
  B.D1 = lower_block(pair.alpha.D1, square_map(lambda.l1), pair.beta1);
  B.D2 = lower_block2(pair.alpha.D2, lambda.l2, n0, v0);
  return {f.T0 * B.D0 * f.Ti0, f.T1 * B.D1 * f.Ti1, conjugate2(f, B.D2)};
}

namespace {

void require_strict_pair(const MultiMap& alpha2, Scope scope) {
  if (scope == Scope::strict)
    require(alpha2.is_zero(), "invalid_pair", "the crossed-module case needs alpha2 = 0");
}

void require_strict_cocycle(const Cochain2& c, Scope scope) {
  if (scope == Scope::strict)
    require(c.theta.is_zero(), "invalid_extension", "the crossed-module case needs theta = 0");
}

}  // namespace

Cochain2 transform_cocycle(const AutPair& pair, const Cochain2& c) {
  const Hom& al = pair.alpha;
  auto i0 = inverse(al.F0);
  auto i1 = inverse(al.F1);
  require(i0 && i1, "invalid_pair", "alpha is singular");
  const std::size_t n0 = al.F0.rows(), n1 = al.F1.rows();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(al.F2, {x, y}); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };

  Cochain2 t = c;
  fill(t.psi, [&](const auto& k) { return pair.beta0 * ev(c.psi, {*i1 * A(k[0])}); });
  fill(t.mu, [&](const auto& k) { return pair.beta1 * ev(c.mu, {*i0 * X(k[0]), *i1 * A(k[1])}); });
  fill(t.nu, [&](const auto& k) { return pair.beta1 * ev(c.nu, {*i1 * A(k[0]), *i0 * X(k[1])}); });
  fill(t.omega, [&](const auto& k) {
    Vec x = *i0 * X(k[0]), y = *i0 * X(k[1]);
    return pair.beta0 * ev(c.omega, {x, y}) - ev(t.psi, {a2(x, y)});
  });
  fill(t.theta, [&](const auto& k) {
    Vec x = *i0 * X(k[0]), y = *i0 * X(k[1]), z = *i0 * X(k[2]);
    return pair.beta1 * ev(c.theta, {x, y, z}) - ev(t.mu, {X(k[0]), a2(y, z)}) + ev(t.nu, {a2(x, y), X(k[2])}) +
           ev(t.mu, {X(k[1]), a2(x, z)});
  });
  return t;
}

Cochain2 psi_action(const DerPair& pair, const Cochain2& c) {
  const Derivation& al = pair.alpha;
  const Mat &b0 = pair.beta0, &b1 = pair.beta1;
  const std::size_t n0 = al.D0.rows(), n1 = al.D1.rows();
  auto X = [&](std::size_t k) { return e(n0, k); };
  auto A = [&](std::size_t k) { return e(n1, k); };
  auto a2 = [&](const Vec& x, const Vec& y) { return mm_eval(al.D2, {x, y}); };
  auto ev = [](const MultiMap& f, std::vector<Vec> args) { return mm_eval(f, args); };

  Cochain2 t = c;
  fill(t.psi, [&](const auto& k) {
    Vec a = A(k[0]);
    return b0 * ev(c.psi, {a}) - ev(c.psi, {al.D1 * a});
  });
  fill(t.omega, [&](const auto& k) {
    Vec x = X(k[0]), y = X(k[1]);
    return b0 * ev(c.omega, {x, y}) - ev(c.omega, {al.D0 * x, y}) - ev(c.omega, {x, al.D0 * y}) -
           ev(c.psi, {a2(x, y)});
  });
  fill(t.mu, [&](const auto& k) {
    Vec x = X(k[0]), a = A(k[1]);
    return b1 * ev(c.mu, {x, a}) - ev(c.mu, {al.D0 * x, a}) - ev(c.mu, {x, al.D1 * a});
  });
  fill(t.nu, [&](const auto& k) {
    Vec a = A(k[0]), x = X(k[1]);
    return b1 * ev(c.nu, {a, x}) - ev(c.nu, {al.D1 * a, x}) - ev(c.nu, {a, al.D0 * x});
  });
  fill(t.theta, [&](const auto& k) {
    Vec x = X(k[0]), y = X(k[1]), z = X(k[2]);
    return b1 * ev(c.theta, {x, y, z}) - ev(c.theta, {al.D0 * x, y, z}) - ev(c.theta, {x, al.D0 * y, z}) -
           ev(c.theta, {x, y, al.D0 * z}) - ev(c.mu, {x, a2(y, z)}) + ev(c.nu, {a2(x, y), z}) +
           ev(c.mu, {y, a2(x, z)});
  });
  return t;
}

WellsClass wells_aut(const AutPair& pair, const Extension& E, const Splitting& s, Scope scope) {
  const auto [rho, c] = setting(E, s);
  validate_aut_pair(pair, E.base, E.fiber);
  require_strict_pair(pair.alpha.F2, scope);
  require_strict_cocycle(c, scope);
  if (auto v = aut_compatible(pair, rho, E.base); !v.empty())
    fail("incompatible_pair", "pair fails " + v[0].id);
  return class_of(quotient(E.base, rho, scope), flatten(transform_cocycle(pair, c) - c));
}

WellsClass wells_der(const DerPair& pair, const Extension& E, const Splitting& s, Scope scope) {
  const auto [rho, c] = setting(E, s);
  validate_der_pair(pair, E.base, E.fiber);
  require_strict_pair(pair.alpha.D2, scope);
  require_strict_cocycle(c, scope);
  if (auto v = der_compatible(pair, rho, E.base); !v.empty())
    fail("incompatible_pair", "pair fails " + v[0].id);
  return class_of(quotient(E.base, rho, scope), flatten(psi_action(pair, c)));
}

WellsReport aut_induce(const AutPair& pair, const Extension& E, const Splitting& s, Scope scope) {
  const Algebra& g = E.base;
  const Rep rho = induced_rep(E, s);
  validate_aut_pair(pair, g, E.fiber);
  require_strict_pair(pair.alpha.F2, scope);
  WellsReport r;
  r.violations = aut_compatible(pair, rho, g);
  r.compatible = r.violations.empty();
  if (!r.compatible) return r;
  r.obstruction = wells_aut(pair, E, s, scope);
  const Cochain2 c = extract_cocycle(E, s);
  auto sys = affine_system(g, E.fiber, scope, [&](const Cochain1& l) { return coc_residual_at(pair, g, rho, c, l); });
  r.witness = solve_lambda(g, E.fiber, sys);
  require(r.witness.has_value() == r.obstruction->is_zero(), "internal",
          "inducibility system and Wells class disagree");
  if (r.witness) {
    Hom F = lift_aut(pair, *r.witness, E, s);
    if (auto v = verify_hom(F, E.hat, E.hat); !v.empty())
      fail("internal", "lifted map fails homomorphism condition " + v[0].id);
    r.induced_aut = std::move(F);
  }
  return r;
}

WellsReport der_induce(const DerPair& pair, const Extension& E, const Splitting& s, Scope scope) {
  const Algebra& g = E.base;
  const Rep rho = induced_rep(E, s);
  validate_der_pair(pair, g, E.fiber);
  require_strict_pair(pair.alpha.D2, scope);
  WellsReport r;
  r.violations = der_compatible(pair, rho, g);
  r.compatible = r.violations.empty();
  if (!r.compatible) return r;
  r.obstruction = wells_der(pair, E, s, scope);
  const Cochain2 c = extract_cocycle(E, s);
  auto sys = affine_system(g, E.fiber, scope, [&](const Cochain1& l) { return cocy_residual_at(pair, g, rho, c, l); });
  r.witness = solve_lambda(g, E.fiber, sys);
  require(r.witness.has_value() == r.obstruction->is_zero(), "internal",
          "inducibility system and Wells class disagree");
  if (r.witness) {
    Derivation D = lift_der(pair, *r.witness, E, s);
    if (auto v = verify_derivation(D, E.hat); !v.empty())
      fail("internal", "lifted map fails derivation condition " + v[0].id);
    r.induced_der = std::move(D);
  }
  return r;
}

Hom f_lambda(const Cochain1& lambda, const Extension& E, const Splitting& s) {
  check_z1(lambda, E.base, induced_rep(E, s));
  return lift_aut(identity_pair(E.base, E.fiber), lambda, E, s);
}

Derivation d_lambda(const Cochain1& lambda, const Extension& E, const Splitting& s) {
  check_z1(lambda, E.base, induced_rep(E, s));
  return lift_der(zero_pair(E.base, E.fiber), lambda, E, s);
}

namespace {

// lambda with lift(identity-or-zero pair, lambda) = F, read off in the frame.
Cochain1 read_lambda(const Mat& F0, const Mat& F1, const MultiMap& F2, const Mat& base0, const Mat& base1,
                     const Extension& E, const Splitting& s) {
  const GradedMap L = fiber_coords(E);
  Cochain1 l = zero_cochain1(E.base, E.fiber);
  l.l0 = mm_from_mat(L.m0 * (F0 * s.s0 - base0));
  l.l1 = mm_from_mat(L.m1 * (F1 * s.s1 - base1));
  l.l2 = mm_compose_out(L.m1, mm_compose_slot(mm_compose_slot(F2, 0, s.s0), 1, s.s0));
  return l;
}

}  // namespace

ExactnessReport exactness_report_aut(const Extension& E, const Splitting& s, const std::vector<Cochain1>& lambdas,
                                     const std::vector<Hom>& automorphisms, const std::vector<AutPair>& pairs) {
  ExactnessReport r;
  const AutPair id = identity_pair(E.base, E.fiber);
  std::vector<Hom> lifts;
  for (const auto& l : lambdas) lifts.push_back(f_lambda(l, E, s));
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (!(lambdas[i] == lambdas[j]) && lifts[i] == lifts[j]) {
        r.injective = false;
        r.failures.push_back("two distinct 1-cocycles give the same automorphism");
      }
  for (std::size_t i = 0; i < lifts.size(); ++i)
    if (!(project_aut(lifts[i], E, s) == id)) {
      r.kernel_is_image = false;
      r.failures.push_back("a lifted 1-cocycle does not project to the identity pair");
    }
  for (const auto& F : automorphisms) {
    AutPair p = project_aut(F, E, s);
    if (p == id) {
      Cochain1 l = read_lambda(F.F0, F.F1, F.F2, s.s0, s.s1, E, s);
      if (!(f_lambda(l, E, s) == F)) {
        r.kernel_is_image = false;
        r.failures.push_back("an automorphism with trivial projection is not a lifted 1-cocycle");
      }
    }
    if (!wells_aut(p, E, s).is_zero()) {
      r.projections_zero = false;
      r.failures.push_back("a projected automorphism has nonzero Wells class");
    }
  }
  for (const auto& p : pairs) {
    WellsReport w = aut_induce(p, E, s);
    if (w.compatible && w.obstruction->is_zero() != w.inducible()) {
      r.zero_class_inducible = false;
      r.failures.push_back("Wells class and inducibility disagree");
    }
  }
  return r;
}

ExactnessReport exactness_report_der(const Extension& E, const Splitting& s, const std::vector<Cochain1>& lambdas,
                                     const std::vector<Derivation>& derivations, const std::vector<DerPair>& pairs) {
  ExactnessReport r;
  const DerPair zero = zero_pair(E.base, E.fiber);
  std::vector<Derivation> lifts;
  for (const auto& l : lambdas) lifts.push_back(d_lambda(l, E, s));
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (!(lambdas[i] == lambdas[j]) && lifts[i] == lifts[j]) {
        r.injective = false;
        r.failures.push_back("two distinct 1-cocycles give the same derivation");
      }
  for (const auto& D : lifts)
    if (!(project_der(D, E, s) == zero)) {
      r.kernel_is_image = false;
      r.failures.push_back("a lifted 1-cocycle does not project to the zero pair");
    }
  const Mat z0(E.hat.n0(), E.base.n0()), z1(E.hat.n1(), E.base.n1());
  for (const auto& D : derivations) {
    DerPair p = project_der(D, E, s);
    if (p == zero) {
      Cochain1 l = read_lambda(D.D0, D.D1, D.D2, z0, z1, E, s);
      if (!(d_lambda(l, E, s) == D)) {
        r.kernel_is_image = false;
        r.failures.push_back("a derivation with trivial projection is not a lifted 1-cocycle");
      }
    }
    if (!wells_der(p, E, s).is_zero()) {
      r.projections_zero = false;
      r.failures.push_back("a projected derivation has nonzero Wells class");
    }
  }
  for (const auto& p : pairs) {
    WellsReport w = der_induce(p, E, s);
    if (w.compatible && w.obstruction->is_zero() != w.inducible()) {
      r.zero_class_inducible = false;
      r.failures.push_back("Wells class and inducibility disagree");
    }
  }
  return r;
}

}  // namespace lz2
