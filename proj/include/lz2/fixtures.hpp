#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lz2/leib2.hpp"

namespace lz2::fixtures {

Algebra fix_a();        // dims (1,1), everything zero
Algebra fix_b();        // g1 = 0, g0 = <e1,e2>, [e1,e1] = e2
Algebra fix_b_prime();  // [e1,e1] = e1: not Leibniz
Algebra fix_c();        // dims (1,1), d = [1], brackets and l3 zero

// g0 = <e1,e2,e3>, [e1,e1] = e3, [e1,e2] = e2, [e1,e3] = e3. Neither Lie
// nor nilpotent.
Algebra leib3();

// Strict algebra id : leib3 -> leib3 with the adjoint actions.
Algebra leib3_identity_xmod();

// Total algebra of FIX_A extended by the trivial representation on a copy
// of itself along the basis theta-cochain: l3 != 0.
Algebra fix_a_theta();

std::vector<std::pair<std::string, Algebra>> all_verified();

}  // namespace lz2::fixtures
