#pragma once

#include <array>
#include <optional>

#include "lz2/rep.hpp"

namespace lz2 {

// (l0 : g0 -> V0, l1 : g1 -> V1, l2 : g0 x g0 -> V1)
struct Cochain1 {
  MultiMap l0, l1, l2;
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

// (psi : g1 -> V0, omega : g0^2 -> V0, mu : g0 x g1 -> V1, nu : g1 x g0 -> V1,
//  theta : g0^3 -> V1)
struct Cochain2 {
  MultiMap psi, omega, mu, nu, theta;
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

// One component per cocycle family, in order:
//   g0 g1 -> V0, g1 g0 -> V0, g1 g1 -> V1, g0^3 -> V0,
//   g0 g0 g1 -> V1, g0 g1 g0 -> V1, g1 g0 g0 -> V1, g0^4 -> V1.
struct Cochain3 {
  std::array<MultiMap, 8> c;
  friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

// Flattening of every cochain space: components in the order listed above,
// each component flattened as a MultiMap.
Cochain1 zero_cochain1(const Algebra& g, const Complex& V);
Cochain2 zero_cochain2(const Algebra& g, const Complex& V);
Cochain3 zero_cochain3(const Algebra& g, const Complex& V);
Vec flatten(const Cochain1& c);
Vec flatten(const Cochain2& c);
Vec flatten(const Cochain3& c);
Cochain1 unflatten1(const Algebra& g, const Complex& V, const Vec& v);
Cochain2 unflatten2(const Algebra& g, const Complex& V, const Vec& v);
Cochain3 unflatten3(const Algebra& g, const Complex& V, const Vec& v);
std::size_t dim_c1(const Algebra& g, const Complex& V);
std::size_t dim_c2(const Algebra& g, const Complex& V);
std::size_t dim_c3(const Algebra& g, const Complex& V);

Cochain1 operator+(const Cochain1& x, const Cochain1& y);
Cochain2 operator+(const Cochain2& x, const Cochain2& y);
Cochain2 operator-(const Cochain2& x, const Cochain2& y);
Cochain2 operator*(const Scalar& s, const Cochain2& c);

Cochain2 d1_apply(const Algebra& g, const Rep& rho, const Cochain1& l);
Cochain3 d2_apply(const Algebra& g, const Rep& rho, const Cochain2& c);
Mat d1_matrix(const Algebra& g, const Rep& rho);
Mat d2_matrix(const Algebra& g, const Rep& rho);

// Class reduction modulo a subspace B of a space Z (both given by spanning
// vectors). Representatives of Z/B are the RREF-canonical complement: the
// vectors of Z that become pivots after B.
class Quotient {
public:
  Quotient(const std::vector<Vec>& b_span, const std::vector<Vec>& z_basis, std::size_t ambient);

  const std::vector<Vec>& b_basis() const { return b_; }
  const std::vector<Vec>& reps() const { return h_; }
  // Coordinates of v + B on reps(); nullopt if v is not in Z.
  std::optional<Vec> coords(const Vec& v) const;
  // Sum of coords * reps: the canonical representative of v + B.
  std::optional<Vec> representative(const Vec& v) const;

private:
  std::size_t n_;
  std::vector<Vec> b_, h_;
};

struct CohomologySummary {
  std::size_t dimC1 = 0, dimC2 = 0, dimC3 = 0;
  std::size_t dimZ1 = 0, dimZ2 = 0, dimB2 = 0, dimH2 = 0;
  std::vector<Vec> z1_basis, z2_basis, b2_basis, h2_representatives;
};

CohomologySummary cohomology(const Algebra& g, const Rep& rho);
Quotient h2_quotient(const Algebra& g, const Rep& rho);

// Restricted complex used for crossed modules: 1-cochains with l2 = 0 and
// 2-cochains with theta = 0.
Quotient h2_quotient_strict(const Algebra& g, const Rep& rho);

struct CocycleCheck {
  bool ok = false;
  Cochain3 residual;
  Violations violations;  // ids "coc01".."coc08"
};
CocycleCheck is_cocycle2(const Cochain2& c, const Algebra& g, const Rep& rho);

// lambda with D1 lambda = c1 - c2, canonical solve. Throws not_cocycle.
std::optional<Cochain1> class_difference_is_coboundary(const Cochain2& c1, const Cochain2& c2, const Algebra& g,
                                                       const Rep& rho);

// Bimodule over a plain Leibniz algebra: x.m and m.x.
struct Bimodule {
  std::size_t dim = 0;
  MultiMap left;   // g0 x M -> M
  MultiMap right;  // M x g0 -> M
};

Bimodule trivial_bimodule(const Algebra& g, std::size_t dim);
Bimodule adjoint_bimodule(const Algebra& g);
Violations verify_bimodule(const Algebra& g, const Bimodule& M);  // LLM, LML, MLL

// Matrix of d_L : Hom(g^n, M) -> Hom(g^{n+1}, M), n >= 0, in MultiMap
// flattening. Requires g1 = 0; throws invalid_bimodule.
Mat dl_matrix(const Algebra& g, const Bimodule& M, std::size_t n);

}  // namespace lz2
