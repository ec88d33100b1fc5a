#pragma once

#include "lz2/leib2.hpp"

namespace lz2 {

// Degree-0 endomorphism (X0 on V0, X1 on V1) of a two-term complex.
struct End0 {
  Mat X0, X1;
  friend bool operator==(const End0&, const End0&) = default;
};

End0 endv_delta(const Mat& A, const Complex& V);  // (dA, Ad) for A : V0 -> V1
End0 endv_bracket(const End0& X, const End0& Y);  // [X,Y]_C gradewise
Mat endv_bracket(const End0& X, const Mat& A);    // X1 A - A X0
Mat endv_bracket(const Mat& A, const End0& X);    // A X0 - X1 A
Mat endv_bracket(const Mat& A, const Mat& B);     // zero: two degree-1 maps
End0 operator+(const End0& x, const End0& y);
End0 operator-(const End0& x, const End0& y);
End0 operator*(const End0& x, const End0& y);

// Action of g on V. l0, r0 act on both pieces of V; l1, r1 : g1 x V0 -> V1;
// l2, m2, r2 : g0 x g0 x V0 -> V1.
struct Rep {
  Complex V;
  MultiMap l0_0, l0_1, r0_0, r0_1;
  MultiMap l1, r1;
  MultiMap l2, m2, r2;

  End0 l0(const Vec& x) const { return {mm_partial(l0_0, {x}), mm_partial(l0_1, {x})}; }
  End0 r0(const Vec& x) const { return {mm_partial(r0_0, {x}), mm_partial(r0_1, {x})}; }
  Mat L1(const Vec& a) const { return mm_partial(l1, {a}); }
  Mat R1(const Vec& a) const { return mm_partial(r1, {a}); }
  Mat L2(const Vec& x, const Vec& y) const { return mm_partial(l2, {x, y}); }
  Mat M2(const Vec& x, const Vec& y) const { return mm_partial(m2, {x, y}); }
  Mat R2(const Vec& x, const Vec& y) const { return mm_partial(r2, {x, y}); }

  friend bool operator==(const Rep&, const Rep&) = default;
};

Rep trivial_rep(const Algebra& g, const Complex& V);
void check_shapes(const Rep& rho, const Algebra& g);

// All identities that make the semidirect product g + V a Leibniz 2-algebra.
// Ids: "end0_l0", "end0_r0", "delta_l1", "delta_r1", "2".."12" for the
// bracket compatibilities, "13", "14" for the Jacobiator with V in the first
// and second slot.
Violations verify_representation(const Rep& rho, const Algebra& g);

Rep adjoint_rep(const Algebra& g);

}  // namespace lz2
