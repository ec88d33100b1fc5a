#pragma once

#include <string>
#include <vector>

#include "lz2/structure.hpp"

namespace lz2 {

// A failed identity: which one, on which basis tuple, and by how much.
struct Violation {
  std::string id;
  std::vector<std::size_t> at;
  Vec residual;
};
using Violations = std::vector<Violation>;

// g1 --d--> g0 with brackets g0 x g0 -> g0, g0 x g1 -> g1, g1 x g0 -> g1 and
// the homotopy l3 : g0^3 -> g1.
struct Algebra {
  Complex g;
  MultiMap b00, b01, b10, l3;

  std::size_t n0() const { return g.dim0; }
  std::size_t n1() const { return g.dim1; }

  Vec d(const Vec& a) const { return g.d * a; }
  Vec br(const Vec& x, const Vec& y) const { return mm_eval(b00, {&x, &y}); }
  Vec br_xa(const Vec& x, const Vec& a) const { return mm_eval(b01, {&x, &a}); }
  Vec br_ax(const Vec& a, const Vec& x) const { return mm_eval(b10, {&a, &x}); }
  Vec L3(const Vec& x, const Vec& y, const Vec& z) const { return mm_eval(l3, {&x, &y, &z}); }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

Algebra zero_algebra(std::size_t dim1, std::size_t dim0);
void check_shapes(const Algebra& g);

// Axioms (a)-(h) on every basis tuple. Residuals are reported as
//   (a) d[x,a] - [x,da]          (b) d[a,x] - [da,x]       (c) [da,b] - [a,db]
//   (d) [x,[y,z]] - [[x,y],z] - [y,[x,z]] - d l3(x,y,z)
//   (e)-(g) the bracket expression minus the l3 term
//   (h) the Jacobiator sum.
Violations verify_algebra(const Algebra& g);

bool is_strict(const Algebra& g);

struct Hom {
  Mat F0, F1;
  MultiMap F2;  // g0 x g0 -> g1'
  friend bool operator==(const Hom&, const Hom&) = default;
};

Hom identity_hom(const Algebra& g);
Violations verify_hom(const Hom& F, const Algebra& src, const Algebra& dst);
Hom compose_hom(const Hom& G, const Hom& F);  // G after F
// (F0^-1, F1^-1, -F1^-1 F2 (F0^-1 x F0^-1)), or nullopt if F0 or F1 is singular.
std::optional<Hom> inverse_hom(const Hom& F);

struct Derivation {
  Mat D0, D1;
  MultiMap D2;  // g0 x g0 -> g1
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

Derivation zero_derivation(const Algebra& g);
Violations verify_derivation(const Derivation& D, const Algebra& g);

}  // namespace lz2
