#include "doctest.h"
#include "lz2/error.hpp"
#include "lz2/fixtures.hpp"
#include "lz2/xmod.hpp"
#include "support.hpp"

using namespace lz2;
using namespace lz2::testing;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// Automorphisms of a strict algebra with alpha2 = 0.
std::vector<XModAutPair> xmod_alphas(const Algebra& g, Rng& rng, std::size_t count) {
  std::vector<XModAutPair> out{{Mat(), Mat(), Mat::identity(g.n0()), Mat::identity(g.n1())}};
  for (int t = 0; t < 400 && out.size() < count; ++t) {
    Hom a = identity_hom(g);
    for (std::size_t i = 0; i < g.n0(); ++i)
      for (std::size_t j = 0; j < g.n0(); ++j)
        if (rng.small(0, 3) == 0) a.F0(i, j) += rng.small(-1, 1);
    for (std::size_t i = 0; i < g.n1(); ++i)
      for (std::size_t j = 0; j < g.n1(); ++j)
        if (rng.small(0, 3) == 0) a.F1(i, j) += rng.small(-1, 1);
    if (!inverse(a.F0) || !inverse(a.F1)) continue;
    if (verify_hom(a, g, g).empty()) out.push_back({Mat(), Mat(), a.F0, a.F1});
  }
  return out;
}

// Derivations with D2 = 0, from the verifier.
std::vector<XModDerPair> xmod_dalphas(const Algebra& g, Rng& rng, std::size_t count) {
  const auto n0 = g.n0(), n1 = g.n1();
  auto fit = affine_fit(n0 * n0 + n1 * n1, [&](const Vec& p) {
    Vec q = p;
    q.resize(der_params(g));
    return verify_derivation(der_from(g, q), g);
  });
  auto ker = kernel_basis(fit.A);
  std::vector<XModDerPair> out;
  for (std::size_t k = 0; k < count; ++k) {
    Vec p = rng.combo(ker, n0 * n0 + n1 * n1);
    out.push_back({Mat(), Mat(), mat_unflat(n0, n0, p, 0), mat_unflat(n1, n1, p, n0 * n0)});
  }
  return out;
}

std::vector<std::pair<std::string, Algebra>> strict_fixtures() {
  std::vector<std::pair<std::string, Algebra>> out;
  for (const auto& [n, g] : fixtures::all_verified())
    if (is_strict(g)) out.emplace_back(n, g);
  return out;
}

CrossedModule q_to_q() {
  CrossedModule x;
  x.p0_bracket = MultiMap(1, {1, 1});
  x.p1_dim = 1;
  x.left = MultiMap(1, {1, 1});
  x.right = MultiMap(1, {1, 1});
  x.f = Mat::identity(1);
  return x;
}

bool has_id(const Violations& vs, const std::string& id) {
  for (const auto& v : vs)
    if (v.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("verify_xmod examples") {
  CrossedModule ab;
  ab.p0_bracket = MultiMap(2, {2, 2});
  ab.p1_dim = 1;
  ab.left = MultiMap(1, {2, 1});
  ab.right = MultiMap(1, {1, 2});
  ab.f = Mat(2, 1);
  CHECK(verify_xmod(ab).empty());
  CHECK(verify_xmod(q_to_q()).empty());

  // FIX_B acting on Q from the left by e1.a = a, f = 0.
  CrossedModule b = strict_to_xmod(fixtures::fix_b());
  b.p1_dim = 1;
  b.left = MultiMap(1, {2, 1});
  b.left.at(0, {0, 0}) = 1;
  b.right = MultiMap(1, {1, 2});
  b.f = Mat(2, 1);
  CHECK(verify_xmod(b).empty());

  // f(a) = e2 is not equivariant: f(e1.a) = e2 but [e1, e2] = 0.
  b.f(1, 0) = 1;
  CHECK(has_id(verify_xmod(b), "crossed01_left"));

  CrossedModule bad = q_to_q();
  bad.f = Mat(2, 1);
  CHECK(code_of([&] { verify_xmod(bad); }) == "shape_mismatch");
}

TEST_CASE("strict algebras and crossed modules") {
  for (const auto& [name, g] : strict_fixtures()) {
    INFO(name);
    CrossedModule x = strict_to_xmod(g);
    CHECK(verify_xmod(x).empty());
    CHECK(xmod_to_strict(x) == g);
    CHECK(strict_to_xmod(xmod_to_strict(x)) == x);
  }
  CrossedModule c = strict_to_xmod(fixtures::fix_c());
  CHECK(c.f == Mat::identity(1));
  CHECK(c.left.is_zero());
  CHECK(c.right.is_zero());
  CHECK(c.p0_bracket.is_zero());
  CHECK(xmod_to_strict(q_to_q()) == fixtures::fix_c());
  CHECK(code_of([] { strict_to_xmod(fixtures::fix_a_theta()); }) == "not_strict");
}

TEST_CASE("xmod representations") {
  for (const auto& [name, g] : strict_fixtures()) {
    INFO(name);
    CrossedModule x = strict_to_xmod(g);
    CHECK(verify_xmod_rep(adjoint_rep(g), x).empty());
    CHECK(verify_xmod_rep(trivial_rep(g, Complex(1, 1)), x).empty());
  }
  const Algebra a = fixtures::fix_a();
  Rep r = trivial_rep(a, Complex(1, 1));
  r.l2.at(0, {0, 0, 0}) = 1;
  REQUIRE(verify_representation(r, a).empty());
  CHECK(has_id(verify_xmod_rep(r, strict_to_xmod(a)), "l2"));
}

TEST_CASE("semidirect products") {
  // Q -> Q with the trivial representation on Q -> Q, phi = 0.
  CrossedModule x = q_to_q();
  Rep r = trivial_rep(xmod_to_strict(x), Complex(1, 1));
  CrossedModule s = xmod_semidirect(x, r);
  CHECK(s.p0_dim() == 2);
  CHECK(s.p1_dim == 2);
  CHECK(verify_xmod(s).empty());
  CHECK(s.f == Mat::from_rows({{1, 0}, {0, 0}}, 2));

  for (const auto& [name, g] : strict_fixtures()) {
    for (const Rep& rho : {adjoint_rep(g), trivial_rep(g, Complex(1, 1))}) {
      INFO(name);
      CrossedModule xs = xmod_semidirect(strict_to_xmod(g), rho);
      CHECK(verify_xmod(xs).empty());
      // The semidirect product is the extension by the zero cocycle.
      auto B = build_extension(g, rho, zero_cochain2(g, rho.V));
      CHECK(xmod_to_strict(xs) == B.ext.hat);
    }
  }

  const Algebra b = fixtures::fix_b();
  Rep broken = adjoint_rep(b);
  broken.l0_0.at(0, {0, 0}) = 1;
  CHECK(code_of([&] { xmod_semidirect(strict_to_xmod(b), broken); }) == "invalid_representation");
}

TEST_CASE("semidirect products of random crossed modules") {
  // Conjugates of the strict fixtures by a change of basis, with random
  // trivial-action representations.
  Rng rng(41);
  for (const auto& [name, g] : strict_fixtures()) {
    if (g.n0() > 3) continue;
    Mat P = rng.invertible(g.n0()), Q = rng.invertible(g.n1());
    Mat Pi = *inverse(P), Qi = *inverse(Q);
    CrossedModule x = strict_to_xmod(g);
    x.p0_bracket = mm_compose_out(P, mm_compose_slot(mm_compose_slot(x.p0_bracket, 0, Pi), 1, Pi));
    x.left = mm_compose_out(Q, mm_compose_slot(mm_compose_slot(x.left, 0, Pi), 1, Qi));
    x.right = mm_compose_out(Q, mm_compose_slot(mm_compose_slot(x.right, 0, Qi), 1, Pi));
    x.f = P * x.f * Qi;
    INFO(name);
    REQUIRE(verify_xmod(x).empty());
    CHECK(strict_to_xmod(xmod_to_strict(x)) == x);
    Rep rho = trivial_rep(xmod_to_strict(x), Complex(1, 2, rng.mat(2, 1)));
    CHECK(verify_xmod(xmod_semidirect(x, rho)).empty());
    CHECK(verify_xmod(xmod_semidirect(x, adjoint_rep(xmod_to_strict(x)))).empty());
  }
}

TEST_CASE("xmod extensions must be strict") {
  const Algebra a = fixtures::fix_a();
  const Rep r = trivial_rep(a, Complex(1, 1));
  Cochain2 th = zero_cochain2(a, r.V);
  th.theta.at(0, {0, 0, 0}) = 1;
  auto T = build_extension(a, r, th);
  CHECK(code_of([&] { validate_xmod_extension(T.ext); }) == "invalid_extension");
  auto Z = build_extension(a, r, zero_cochain2(a, r.V));
  CHECK_NOTHROW(validate_xmod_extension(Z.ext));
  XModAutPair id{Mat::identity(1), Mat::identity(1), Mat::identity(1), Mat::identity(1)};
  CHECK(code_of([&] { xmod_aut_induce(id, T.ext, T.split); }) == "invalid_extension");
}

TEST_CASE("xmod scaling examples") {
  const Algebra a = fixtures::fix_a();
  const Rep r = trivial_rep(a, Complex(1, 1));
  Cochain2 psi = zero_cochain2(a, r.V);
  psi.psi.at(0, {0}) = 1;
  auto B = build_extension(a, r, psi);
  const Vec psi_class = *h2_quotient_strict(a, r).coords(flatten(psi));
  REQUIRE_FALSE(is_zero(psi_class));
  auto I = [](int k) { return Scalar(k) * Mat::identity(1); };

  auto id = xmod_aut_induce({I(1), I(1), I(1), I(1)}, B.ext, B.split);
  REQUIRE(id.inducible());
  CHECK(is_zero(flatten(*id.witness)));

  auto bad = xmod_aut_induce({I(2), I(2), I(1), I(1)}, B.ext, B.split);
  CHECK_FALSE(bad.inducible());
  CHECK(bad.obstruction->coords == psi_class);
  CHECK(xmod_wells_aut({I(2), I(2), I(1), I(1)}, B.ext, B.split).coords == psi_class);
  auto good = xmod_aut_induce({I(2), I(2), I(1), I(2)}, B.ext, B.split);
  REQUIRE(good.inducible());
  CHECK(verify_hom(*good.induced_aut, B.ext.hat, B.ext.hat).empty());
  CHECK(good.induced_aut->F2.is_zero());

  auto zero = xmod_der_induce({I(0), I(0), I(0), I(0)}, B.ext, B.split);
  REQUIRE(zero.inducible());
  CHECK(is_zero(flatten(*zero.witness)));
  auto dbad = xmod_der_induce({I(1), I(1), I(0), I(0)}, B.ext, B.split);
  CHECK_FALSE(dbad.inducible());
  CHECK(xmod_wells_der({I(1), I(1), I(0), I(0)}, B.ext, B.split).coords == psi_class);
  auto dgood = xmod_der_induce({I(1), I(1), I(0), I(1)}, B.ext, B.split);
  REQUIRE(dgood.inducible());
  CHECK(verify_derivation(*dgood.induced_der, B.ext.hat).empty());
}

TEST_CASE("xmod incompatible pairs") {
  const Algebra b = fixtures::fix_b();
  const Rep rb = adjoint_rep(b);
  auto B = build_extension(b, rb, zero_cochain2(b, rb.V));
  XModAutPair p{Mat::from_rows({{2, 0}, {0, 1}}, 2), Mat(0, 0), Mat::identity(2), Mat(0, 0)};
  CHECK_FALSE(xmod_aut_compatible(p, rb, b).empty());
  CHECK_FALSE(xmod_aut_induce(p, B.ext, B.split).compatible);
  CHECK(code_of([&] { xmod_wells_aut(p, B.ext, B.split); }) == "incompatible_pair");
  XModDerPair d{Mat(2, 2), Mat(0, 0), Mat::from_rows({{1, 0}, {0, 2}}, 2), Mat(0, 0)};
  CHECK_FALSE(xmod_der_compatible(d, rb, b).empty());
  CHECK(code_of([&] { xmod_wells_der(d, B.ext, B.split); }) == "incompatible_pair");
}

TEST_CASE("xmod solvers agree with the strict-algebra route") {
  Rng rng(42);
  std::size_t yes = 0, no = 0;
  for (const auto& [name, g] : strict_fixtures()) {
    const bool big = name == "LEIB3_ID";
    for (const Rep& rho : {trivial_rep(g, Complex(1, 1)), adjoint_rep(g)}) {
      INFO(name);
      Quotient q = h2_quotient_strict(g, rho);
      std::vector<Vec> zs = q.b_basis();
      for (const auto& r : q.reps()) zs.push_back(r);
      for (int rep = 0; rep < (big ? 1 : 2); ++rep) {
        auto B = build_extension(g, rho, unflatten2(g, rho.V, rng.combo(zs, dim_c2(g, rho.V))));
        REQUIRE_NOTHROW(validate_xmod_extension(B.ext));
        Cochain1 l = unflatten1(g, rho.V, rng.vec(dim_c1(g, rho.V)));
        l.l2 = zero_cochain1(g, rho.V).l2;

        for (const auto& a : xmod_alphas(g, rng, big ? 2 : 3)) {
          auto betas = compatible_betas(
              a, rho.V, [&](const XModAutPair& p) { return xmod_aut_compatible(p, rho, g); }, rng, 2);
          for (const auto& [b0, b1] : betas) {
            if (!inverse(b0) || !inverse(b1)) continue;
            XModAutPair p{b0, b1, a.alpha0, a.alpha1};
            const AutPair sp = as_aut_pair(p, g);
            CHECK(aut_compatible(sp, rho, g).empty());
            auto r1 = xmod_aut_induce(p, B.ext, B.split);
            auto r2 = aut_induce(sp, B.ext, B.split, Scope::strict);
            CHECK(r1.inducible() == r2.inducible());
            CHECK(r1.obstruction->coords == r2.obstruction->coords);
            CHECK(xmod_wells_aut(p, B.ext, B.split).coords == wells_aut(sp, B.ext, B.split, Scope::strict).coords);
            Vec c1 = cro_residual(p, B.ext, B.split, l), c2 = coc_residual(sp, B.ext, B.split, l);
            REQUIRE(c2.size() >= c1.size());
            c2.resize(c1.size());
            CHECK(c1 == c2);
            if (r1.inducible()) {
              ++yes;
              CHECK(r1.witness->l2.is_zero());
              CHECK(verify_hom(*r1.induced_aut, B.ext.hat, B.ext.hat).empty());
              CHECK(project_aut(*r1.induced_aut, B.ext, B.split) == sp);
            } else {
              ++no;
            }
          }
        }

        for (const auto& d : xmod_dalphas(g, rng, big ? 1 : 3)) {
          auto betas = compatible_betas(
              d, rho.V, [&](const XModDerPair& p) { return xmod_der_compatible(p, rho, g); }, rng, 2);
          for (const auto& [b0, b1] : betas) {
            XModDerPair p{b0, b1, d.alpha0, d.alpha1};
            const DerPair sp = as_der_pair(p, g);
            auto r1 = xmod_der_induce(p, B.ext, B.split);
            auto r2 = der_induce(sp, B.ext, B.split, Scope::strict);
            CHECK(r1.inducible() == r2.inducible());
            CHECK(r1.obstruction->coords == r2.obstruction->coords);
            CHECK(xmod_wells_der(p, B.ext, B.split).coords == wells_der(sp, B.ext, B.split, Scope::strict).coords);
            Vec c1 = rcocy_residual(p, B.ext, B.split, l), c2 = cocy_residual(sp, B.ext, B.split, l);
            REQUIRE(c2.size() >= c1.size());
            c2.resize(c1.size());
            CHECK(c1 == c2);
            if (r1.inducible()) {
              CHECK(verify_derivation(*r1.induced_der, B.ext.hat).empty());
              CHECK(project_der(*r1.induced_der, B.ext, B.split) == sp);
            }
          }
        }
      }
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}
