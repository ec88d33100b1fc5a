#include "doctest.h"
#include "lz2/fixtures.hpp"
#include "support.hpp"

using namespace lz2;
using namespace lz2::testing;

namespace {

bool has(const Violations& vs, const std::string& id, std::vector<std::size_t> at) {
  for (const auto& v : vs)
    if (v.id == id && v.at == at) return true;
  return false;
}

}  // namespace

TEST_CASE("fixtures pass the axioms") {
  for (const auto& [name, g] : fixtures::all_verified()) {
    INFO(name);
    CHECK(verify_algebra(g).empty());
  }
}

TEST_CASE("FIX_B' fails (d) at (e1,e1,e1) with residual -e1") {
  auto v = verify_algebra(fixtures::fix_b_prime());
  REQUIRE(v.size() == 1);
  CHECK(v[0].id == "d");
  CHECK(v[0].at == std::vector<std::size_t>{0, 0, 0});
  // [e1,[e1,e1]] - [[e1,e1],e1] - [e1,[e1,e1]] = e1 - e1 - e1.
  CHECK(v[0].residual == Vec{Scalar(-1), Scalar(0)});
}

TEST_CASE("every single-constant mutation of FIX_B into [e1,e1] = e1 is rejected") {
  Algebra g = fixtures::fix_b();
  g.b00.at(0, {0, 0}) = 1;
  CHECK_FALSE(verify_algebra(g).empty());
  g.b00.at(1, {0, 0}) = 0;
  CHECK_FALSE(verify_algebra(g).empty());
}

TEST_CASE("homomorphism examples") {
  const Algebra b = fixtures::fix_b(), a = fixtures::fix_a();
  CHECK(verify_hom(identity_hom(b), b, b).empty());

  Hom swap = identity_hom(b);
  swap.F0 = Mat::from_rows({{0, 1}, {1, 0}}, 2);
  // F0[e1,e1] = F0 e2 = e1 but [F0 e1, F0 e1] = [e2,e2] = 0.
  auto v = verify_hom(swap, b, b);
  CHECK(has(v, "j", {0, 0}));

  Hom sc = identity_hom(a);
  sc.F0 = Scalar(2) * sc.F0;
  sc.F1 = Scalar(2) * sc.F1;
  CHECK(verify_hom(sc, a, a).empty());
}

TEST_CASE("derivation examples") {
  const Algebra b = fixtures::fix_b();
  for (const auto& [name, g] : fixtures::all_verified()) CHECK(verify_derivation(zero_derivation(g), g).empty());

  Derivation D = zero_derivation(b);
  D.D0 = Mat::from_rows({{1, 0}, {0, 2}}, 2);
  CHECK(verify_derivation(D, b).empty());

  D.D0 = Mat::identity(2);
  // D0[e1,e1] = e2 but [D0 e1, e1] + [e1, D0 e1] = 2 e2.
  CHECK(has(verify_derivation(D, b), "n", {0, 0}));
}

TEST_CASE("is_strict") {
  CHECK(is_strict(fixtures::fix_a()));
  CHECK(is_strict(fixtures::fix_b()));
  CHECK_FALSE(is_strict(fixtures::fix_a_theta()));
  Algebra g = fixtures::fix_a();
  g.l3.at(0, {0, 0, 0}) = 1;
  CHECK_FALSE(is_strict(g));
  // d = 0 and all brackets vanish, so no axiom sees l3 here.
  CHECK(verify_algebra(g).empty());
}

TEST_CASE("composition is associative and inverses verify") {
  Rng rng(21);
  for (const auto& [name, g] : fixtures::all_verified()) {
    INFO(name);
    auto auts = automorphisms(g, rng, 4, 60);
    for (const auto& F : auts) {
      auto inv = inverse_hom(F);
      REQUIRE(inv.has_value());
      CHECK(verify_hom(*inv, g, g).empty());
      CHECK(compose_hom(*inv, F) == identity_hom(g));
      CHECK(compose_hom(F, *inv) == identity_hom(g));
    }
    for (const auto& F : auts)
      for (const auto& G : auts)
        for (const auto& H : auts) {
          CHECK(compose_hom(H, compose_hom(G, F)) == compose_hom(compose_hom(H, G), F));
          CHECK(verify_hom(compose_hom(G, F), g, g).empty());
        }
  }
}

TEST_CASE("derivations from the verifier form a Lie algebra under commutator") {
  // Only the linear parts are compared: [D, D'] on D0, D1.
  const Algebra g = fixtures::leib3();
  auto basis = derivation_basis(g);
  REQUIRE_FALSE(basis.empty());
  for (const auto& D : basis)
    for (const auto& E : basis) {
      Derivation C = zero_derivation(g);
      C.D0 = D.D0 * E.D0 - E.D0 * D.D0;
      CHECK(verify_derivation(C, g).empty());
    }
}
