#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lz2/ext.hpp"

namespace lz2 {

// (beta, alpha): automorphisms of the fiber complex and of the base.
struct AutPair {
  Mat beta0, beta1;
  Hom alpha;
  friend bool operator==(const AutPair&, const AutPair&) = default;
};

// (beta, alpha): a chain map of the fiber and a derivation of the base.
struct DerPair {
  Mat beta0, beta1;
  Derivation alpha;
  friend bool operator==(const DerPair&, const DerPair&) = default;
};

// Throw invalid_pair on singular or non-chain beta, or alpha failing its axioms.
void validate_aut_pair(const AutPair& pair, const Algebra& g, const Complex& V);
void validate_der_pair(const DerPair& pair, const Algebra& g, const Complex& V);

AutPair identity_pair(const Algebra& g, const Complex& V);
DerPair zero_pair(const Algebra& g, const Complex& V);

// Which H^2 the obstruction lives in. Strict is the crossed-module case:
// alpha2 = 0, lambda2 = 0 and theta = 0 throughout.
enum class Scope { full, strict };

struct WellsClass {
  Vec coords;          // on the canonical H^2 representatives
  Vec representative;  // flat Cochain2
  bool is_zero() const { return lz2::is_zero(coords); }
};

struct WellsReport {
  bool compatible = false;
  Violations violations;  // COC6..COC14 / COCY6..COCY14
  std::optional<WellsClass> obstruction;
  std::optional<Cochain1> witness;
  std::optional<Hom> induced_aut;
  std::optional<Derivation> induced_der;
  bool inducible() const { return witness.has_value(); }
};

Violations aut_compatible(const AutPair& pair, const Rep& rho, const Algebra& g);
Violations der_compatible(const DerPair& pair, const Rep& rho, const Algebra& g);

// Restriction to the fiber and the induced map on the base. The map must
// keep the fiber invariant and its F2 (D2) must vanish on fiber arguments;
// otherwise throws fiber_not_preserved.
AutPair project_aut(const Hom& F, const Extension& E, const Splitting& s);
DerPair project_der(const Derivation& D, const Extension& E, const Splitting& s);

// Residuals of the five inducibility conditions at lambda, in one stacked
// vector (tuple order of each condition, conditions in order). Affine in lambda.
Vec coc_residual(const AutPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda);
Vec cocy_residual(const DerPair& pair, const Extension& E, const Splitting& s, const Cochain1& lambda);

// The lift of (beta, alpha) through lambda, in the coordinates of E:
//   F0(s0 x + i0 v) = s0 a0 x + i0 (l0 x + b0 v), likewise F1,
//   F2(w, z) = s1 a2(p0 w, p0 z) + i1 l2(p0 w, p0 z).
Hom lift_aut(const AutPair& pair, const Cochain1& lambda, const Extension& E, const Splitting& s);
Derivation lift_der(const DerPair& pair, const Cochain1& lambda, const Extension& E, const Splitting& s);

WellsReport aut_induce(const AutPair& pair, const Extension& E, const Splitting& s, Scope scope = Scope::full);
WellsReport der_induce(const DerPair& pair, const Extension& E, const Splitting& s, Scope scope = Scope::full);

// Throws not_1cocycle unless lambda is a 1-cocycle of the induced representation.
Hom f_lambda(const Cochain1& lambda, const Extension& E, const Splitting& s);
Derivation d_lambda(const Cochain1& lambda, const Extension& E, const Splitting& s);

// The cocycle moved by the pair: for automorphisms, with x = a0^-1 X and
// a = a1^-1 A,
//   psi'(A) = b0 psi(a),  omega'(X,Y) = b0 omega(x,y) - psi'(a2(x,y)),
//   mu'(X,A) = b1 mu(x,a),  nu'(A,X) = b1 nu(a,x),
//   theta'(X,Y,Z) = b1 theta(x,y,z) - mu'(X,a2(y,z)) + nu'(a2(x,y),Z) + mu'(Y,a2(x,z)).
Cochain2 transform_cocycle(const AutPair& pair, const Cochain2& c);
// For derivations: the infinitesimal version Psi(c).
Cochain2 psi_action(const DerPair& pair, const Cochain2& c);

// [c'] - [c] and [Psi(c)]. Throw incompatible_pair.
WellsClass wells_aut(const AutPair& pair, const Extension& E, const Splitting& s, Scope scope = Scope::full);
WellsClass wells_der(const DerPair& pair, const Extension& E, const Splitting& s, Scope scope = Scope::full);

// Sampled checks of the exact sequences. failures is empty when all pass.
struct ExactnessReport {
  bool injective = true;          // distinct lambdas give distinct lifts
  bool kernel_is_image = true;    // lifts of lambdas project trivially and conversely
  bool projections_zero = true;   // projected pairs have zero class
  bool zero_class_inducible = true;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ExactnessReport exactness_report_aut(const Extension& E, const Splitting& s, const std::vector<Cochain1>& lambdas,
                                     const std::vector<Hom>& automorphisms, const std::vector<AutPair>& pairs);
ExactnessReport exactness_report_der(const Extension& E, const Splitting& s, const std::vector<Cochain1>& lambdas,
                                     const std::vector<Derivation>& derivations, const std::vector<DerPair>& pairs);

}  // namespace lz2
