#pragma once

#include "lz2/wells.hpp"

namespace lz2 {

// (p1, p0, f) with p0 a Leibniz algebra acting on the plain space p1 on
// both sides. No bracket on p1.
struct CrossedModule {
  MultiMap p0_bracket;  // p0 x p0 -> p0
  std::size_t p1_dim = 0;
  MultiMap left;        // p0 x p1 -> p1, x.a
  MultiMap right;       // p1 x p0 -> p1, a.x
  Mat f;                // p1 -> p0

  std::size_t p0_dim() const { return p0_bracket.out; }
  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;
};

void check_shapes(const CrossedModule& x);

// Ids: "leibniz", "LLM", "LML", "MLL", "crossed01_left", "crossed01_right",
// "crossed02".
Violations verify_xmod(const CrossedModule& x);

// d = f, [x,a] = x.a, [a,x] = a.x, l3 = 0.
Algebra xmod_to_strict(const CrossedModule& x);
// Throws not_strict.
CrossedModule strict_to_xmod(const Algebra& g);

// A representation of a crossed module is one of its strict algebra with
// l2 = m2 = r2 = 0. Ids of verify_representation plus "l2", "m2", "r2".
Violations verify_xmod_rep(const Rep& rho, const CrossedModule& x);

// f^(a + v) = f(a) + phi(v), [x + w, x' + w'] = [x,x'] + l0(x)w' + r0(x')w,
// (x + w).(a + v) = x.a + l0(x)v + r1(a)w, (a + v).(x + w) = a.x + r0(x)v + l1(a)w.
// Base coordinates first. Throws invalid_representation.
CrossedModule xmod_semidirect(const CrossedModule& x, const Rep& rho);

struct XModAutPair {
  Mat beta0, beta1, alpha0, alpha1;
  friend bool operator==(const XModAutPair&, const XModAutPair&) = default;
};

struct XModDerPair {
  Mat beta0, beta1, alpha0, alpha1;
  friend bool operator==(const XModDerPair&, const XModDerPair&) = default;
};

// The same pair with alpha2 = 0, for the strict-algebra route.
AutPair as_aut_pair(const XModAutPair& p, const Algebra& g);
DerPair as_der_pair(const XModDerPair& p, const Algebra& g);

// Extensions of crossed modules are extensions of strict algebras with
// strict total algebra. Throws invalid_extension.
void validate_xmod_extension(const Extension& E);

Violations xmod_aut_compatible(const XModAutPair& pair, const Rep& rho, const Algebra& g);  // CRO5..CRO10
Violations xmod_der_compatible(const XModDerPair& pair, const Rep& rho, const Algebra& g);  // RCOCY5..RCOCY10

// CRO1..CRO4 and RCOCY1..RCOCY4 as LHS - RHS, lambda = (l0, l1).
Vec cro_residual(const XModAutPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda);
Vec rcocy_residual(const XModDerPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda);

WellsReport xmod_aut_induce(const XModAutPair& pair, const Extension& E, const Splitting& s);
WellsReport xmod_der_induce(const XModDerPair& pair, const Extension& E, const Splitting& s);

// Classes in the crossed-module H^2 (lambda2 = 0, theta = 0). Throw
// incompatible_pair.
WellsClass xmod_wells_aut(const XModAutPair& pair, const Extension& E, const Splitting& s);
WellsClass xmod_wells_der(const XModDerPair& pair, const Extension& E, const Splitting& s);

}  // namespace lz2
