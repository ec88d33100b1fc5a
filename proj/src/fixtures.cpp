#include "lz2/fixtures.hpp"

#include "lz2/ext.hpp"

namespace lz2::fixtures {

Algebra fix_a() { return zero_algebra(1, 1); }

Algebra fix_b() {
  Algebra g = zero_algebra(0, 2);
  g.b00.at(1, {0, 0}) = 1;
  return g;
}

Algebra fix_b_prime() {
  Algebra g = zero_algebra(0, 2);
  g.b00.at(0, {0, 0}) = 1;
  return g;
}

Algebra fix_c() {
  Algebra g = zero_algebra(1, 1);
  g.g.d(0, 0) = 1;
  return g;
}

Algebra leib3() {
  Algebra g = zero_algebra(0, 3);
  g.b00.at(2, {0, 0}) = 1;
  g.b00.at(1, {0, 1}) = 1;
  g.b00.at(2, {0, 2}) = 1;
  return g;
}

Algebra leib3_identity_xmod() {
  const Algebra p = leib3();
  Algebra g = zero_algebra(3, 3);
  g.g.d = Mat::identity(3);
  g.b00 = p.b00;
  g.b01 = p.b00;
  g.b10 = p.b00;
  return g;
}

Algebra fix_a_theta() {
  const Algebra g = fix_a();
  const Rep rho = trivial_rep(g, Complex(1, 1));
  Cochain2 c = zero_cochain2(g, rho.V);
  c.theta.at(0, {0, 0, 0}) = 1;
  return build_extension(g, rho, c).ext.hat;
}

std::vector<std::pair<std::string, Algebra>> all_verified() {
  return {{"FIX_A", fix_a()},
          {"FIX_B", fix_b()},
          {"FIX_C", fix_c()},
          {"LEIB3", leib3()},
          {"LEIB3_ID", leib3_identity_xmod()},
          {"FIX_A_THETA", fix_a_theta()}};
}

}  // namespace lz2::fixtures
