// Regenerates tests/corpus: input documents plus manifest.json listing the
// command, the input and the expected exit code of every case.
//
//   lz2_make_corpus DIR

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lz2/fixtures.hpp"
#include "lz2/io.hpp"

using namespace lz2;
using io::json;

namespace {

std::filesystem::path dir;
json manifest = json::array();

void put(const std::string& name, const std::string& bytes) {
  std::ofstream(dir / name, std::ios::binary) << bytes;
}

void add(const std::string& command, const std::string& name, const json& doc, int expect,
         const std::string& format = "json") {
  put(name, io::dump(doc));
  manifest.push_back({{"command", command}, {"input", name}, {"expect_exit", expect}, {"format", format}});
}

io::Document doc() {
  io::Document d;
  d.schema_version = io::kSchemaVersion;
  return d;
}

io::PairBlock scaling(const Algebra& g, const Complex& V, int b, int a0, int a1) {
  return {Scalar(b) * Mat::identity(V.dim0), Scalar(b) * Mat::identity(V.dim1), Scalar(a0) * Mat::identity(g.n0()),
          Scalar(a1) * Mat::identity(g.n1()), std::nullopt};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lz2_make_corpus DIR\n";
    return 2;
  }
  dir = argv[1];
  std::filesystem::create_directories(dir);

  const Algebra a = fixtures::fix_a(), b = fixtures::fix_b(), c = fixtures::fix_c(), l3 = fixtures::leib3();
  const Rep triv_a = trivial_rep(a, Complex(1, 1));

  auto d = doc();
  d.algebra = a;
  add("verify", "verify_fix_a.json", to_json(d), 0);
  d.algebra = b;
  add("verify", "verify_fix_b.json", to_json(d), 0);
  d.algebra = fixtures::fix_b_prime();
  add("verify", "verify_fix_b_prime.json", to_json(d), 1);
  d.algebra = l3;
  d.representation = adjoint_rep(l3);
  add("verify", "verify_leib3_adjoint.json", to_json(d), 0);
  add("verify", "verify_leib3_adjoint_text.json", to_json(d), 0, "text");

  d = doc();
  d.algebra = a;
  d.representation = triv_a;
  add("cohomology", "cohomology_fix_a_trivial.json", to_json(d), 0);
  d.options.scope = Scope::strict;
  add("cohomology", "cohomology_fix_a_trivial_strict.json", to_json(d), 0);
  d = doc();
  d.algebra = b;
  d.representation = adjoint_rep(b);
  add("cohomology", "cohomology_fix_b_adjoint.json", to_json(d), 0);

  // FIX_A extended along the psi basis cocycle.
  Cochain2 psi = zero_cochain2(a, triv_a.V);
  psi.psi.at(0, {0}) = 1;
  d = doc();
  d.algebra = a;
  d.representation = triv_a;
  d.cocycle = psi;
  add("extend", "extend_fix_a_psi.json", to_json(d), 0);

  const Rep triv_b = trivial_rep(b, Complex(1, 1));
  Cochain2 bad = zero_cochain2(b, triv_b.V);
  bad.omega.at(0, {1, 0}) = 1;  // fails the cocycle condition at (e1,e1,e1)
  d = doc();
  d.algebra = b;
  d.representation = triv_b;
  d.cocycle = bad;
  add("extend", "extend_not_cocycle.json", to_json(d), 1);

  const BuiltExtension ea = build_extension(a, triv_a, psi);
  d = doc();
  d.extension = ea.ext;
  add("extract", "extract_fix_a_psi.json", to_json(d), 0);
  d.splitting = ea.split;
  add("extract", "extract_fix_a_psi_split.json", to_json(d), 0);

  const Rep triv_c = trivial_rep(c, Complex(1, 1));
  Cochain1 lam = zero_cochain1(c, triv_c.V);
  lam.l0.at(0, {0}) = 2;
  lam.l1.at(0, {0}) = Scalar(1, 3);
  lam.l2.at(0, {0, 0}) = -1;
  d = doc();
  d.algebra = c;
  d.representation = triv_c;
  d.cocycle = zero_cochain2(c, triv_c.V);
  d.cocycle_other = d1_apply(c, triv_c, lam);
  add("equiv", "equiv_fix_c_coboundary.json", to_json(d), 0);
  d = doc();
  d.algebra = a;
  d.representation = triv_a;
  d.cocycle = psi;
  d.cocycle_other = zero_cochain2(a, triv_a.V);
  add("equiv", "equiv_fix_a_psi_vs_zero.json", to_json(d), 1);
  d = doc();
  d.extension = ea.ext;
  d.extension_other = ea.ext;
  add("equiv", "equiv_fix_a_self.json", to_json(d), 0);

  d = doc();
  d.extension = ea.ext;
  d.pair = scaling(a, triv_a.V, 2, 1, 1);
  add("induce-aut", "induce_aut_fix_a_scaling.json", to_json(d), 1);
  add("wells-aut", "wells_aut_fix_a_scaling.json", to_json(d), 0);
  d.pair = scaling(a, triv_a.V, 2, 1, 2);
  add("induce-aut", "induce_aut_fix_a_compensated.json", to_json(d), 0);
  add("wells-aut", "wells_aut_fix_a_compensated.json", to_json(d), 0);
  d.options.scope = Scope::strict;
  add("induce-aut", "induce_aut_fix_a_compensated_strict.json", to_json(d), 0);

  d = doc();
  d.algebra = a;
  d.representation = triv_a;
  d.cocycle = psi;
  d.pair = scaling(a, triv_a.V, 1, 0, 0);
  add("induce-der", "induce_der_fix_a_identity_beta.json", to_json(d), 1);
  add("wells-der", "wells_der_fix_a_identity_beta.json", to_json(d), 0);
  d.pair = scaling(a, triv_a.V, 1, 0, 1);
  add("induce-der", "induce_der_fix_a_compensated.json", to_json(d), 0);

  // An incompatible pair on FIX_B with the adjoint representation.
  const Rep adj_b = adjoint_rep(b);
  d = doc();
  d.algebra = b;
  d.representation = adj_b;
  d.cocycle = zero_cochain2(b, adj_b.V);
  d.pair = scaling(b, adj_b.V, 1, 1, 1);
  d.pair->beta0(0, 0) = 2;
  add("induce-aut", "induce_aut_fix_b_incompatible.json", to_json(d), 1);
  add("wells-aut", "wells_aut_fix_b_incompatible.json", to_json(d), 1);

  const CrossedModule xa = strict_to_xmod(a), xl = strict_to_xmod(fixtures::leib3_identity_xmod());
  d = doc();
  d.crossed_module = xl;
  add("xmod-verify", "xmod_verify_leib3_identity.json", to_json(d), 0);
  d.representation = adjoint_rep(fixtures::leib3_identity_xmod());
  add("xmod-verify", "xmod_verify_leib3_identity_adjoint.json", to_json(d), 0);
  add("xmod-semidirect", "xmod_semidirect_leib3_identity.json", to_json(d), 0);

  d = doc();
  d.crossed_module = xa;
  d.representation = triv_a;
  d.cocycle = psi;
  d.pair = scaling(a, triv_a.V, 2, 1, 1);
  add("xmod-induce-aut", "xmod_induce_aut_fix_a_scaling.json", to_json(d), 1);
  add("xmod-wells-aut", "xmod_wells_aut_fix_a_scaling.json", to_json(d), 0);
  d.pair = scaling(a, triv_a.V, 2, 1, 2);
  add("xmod-induce-aut", "xmod_induce_aut_fix_a_compensated.json", to_json(d), 0);
  d.pair = scaling(a, triv_a.V, 1, 0, 1);
  add("xmod-induce-der", "xmod_induce_der_fix_a_compensated.json", to_json(d), 0);
  d.pair = scaling(a, triv_a.V, 1, 0, 0);
  add("xmod-induce-der", "xmod_induce_der_fix_a_identity_beta.json", to_json(d), 1);
  add("xmod-wells-der", "xmod_wells_der_fix_a_identity_beta.json", to_json(d), 0);

  // Invalid input.
  d = doc();
  d.algebra = a;
  json j = to_json(d);
  j["algebra"]["d"] = json::array({json::array({"0"}), json::array({"0"})});
  add("verify", "bad_shape.json", j, 2);
  j = to_json(d);
  j["schema_version"] = "0";
  add("verify", "bad_version.json", j, 2);
  j = to_json(d);
  j["algebra"]["bracket"] = json::array();
  add("verify", "bad_unknown_field.json", j, 2);
  j = to_json(d);
  j["algebra"]["d"] = json::array({json::array({"1/0"})});
  add("verify", "bad_scalar.json", j, 2);
  put("bad_json.json", "{\"schema_version\": \"1\",\n");
  manifest.push_back({{"command", "verify"}, {"input", "bad_json.json"}, {"expect_exit", 2}, {"format", "json"}});
  manifest.push_back(
      {{"command", "frobnicate"}, {"input", "verify_fix_a.json"}, {"expect_exit", 2}, {"format", "json"}});
  d = doc();
  d.algebra = a;
  add("induce-aut", "bad_missing_blocks.json", to_json(d), 2);

  put("manifest.json", io::dump(manifest));
  std::cout << manifest.size() << " cases written to " << dir << "\n";
}
