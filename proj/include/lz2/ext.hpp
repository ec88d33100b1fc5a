#pragma once

#include <optional>

#include "lz2/cochain.hpp"

namespace lz2 {

// 0 -> V --i--> hat --p--> base -> 0 with abelian fiber.
struct Extension {
  Algebra hat, base;
  Complex fiber;
  GradedMap i, p;
  friend bool operator==(const Extension&, const Extension&) = default;
};

struct Splitting {
  Mat s0, s1;
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

// Throws invalid_extension naming the first failed condition.
void validate_extension(const Extension& E);

// Canonical left inverse of i: fiber coordinates of elements of im i.
GradedMap fiber_coords(const Extension& E);

Splitting find_splitting(const Extension& E);
Rep induced_rep(const Extension& E, const Splitting& s);
Cochain2 extract_cocycle(const Extension& E, const Splitting& s);

struct BuiltExtension {
  Extension ext;
  Splitting split;
};

// The block total algebra g + V without any checks; for a non-cocycle c
// it fails the axioms exactly where D2 c is nonzero.
Algebra total_algebra(const Algebra& g, const Rep& rho, const Cochain2& c);

// hat = g + V blockwise (base coordinates first). Throws not_cocycle,
// invalid_representation.
BuiltExtension build_extension(const Algebra& g, const Rep& rho, const Cochain2& c);

// Homomorphism conditions plus F o i = j, q o F = p and F2(i(u), -) = 0.
Violations verify_equivalence(const Hom& F, const Extension& E1, const Extension& E2);

// A verified equivalence E1 -> E2, or nullopt. Throws dim_mismatch if the
// bases or fibers differ.
std::optional<Hom> extensions_equivalent(const Extension& E1, const Extension& E2);

}  // namespace lz2
