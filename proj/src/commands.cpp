#include "lz2/commands.hpp"

#include <functional>
#include <map>

namespace lz2::cmd {

using io::json;
using io::to_json;

namespace {

[[noreturn]] void missing(const std::string& what) { throw io::InputError("schema_error", {"$: " + what}); }

Report finish(json body, const std::string& status, int code) {
  body["status"] = status;
  body["exit_code"] = code;
  return {std::move(body), code};
}

Algebra base_of(const io::Document& d) {
  if (d.algebra) return *d.algebra;
  if (d.crossed_module) return xmod_to_strict(*d.crossed_module);
  if (d.extension) return d.extension->base;
  missing("needs an algebra, crossed_module or extension block");
}

const Rep& rep_of(const io::Document& d) {
  if (!d.representation) missing("needs a representation block");
  return *d.representation;
}

const io::PairBlock& pair_of(const io::Document& d) {
  if (!d.pair) missing("needs a pair block");
  return *d.pair;
}

// From an extension block, or built from the base, representation and cocycle.
BuiltExtension extension_of(const io::Document& d) {
  if (d.extension) {
    validate_extension(*d.extension);
    return {*d.extension, d.splitting ? *d.splitting : find_splitting(*d.extension)};
  }
  if (!d.cocycle) missing("needs an extension block or a cocycle block");
  return build_extension(base_of(d), rep_of(d), *d.cocycle);
}

json class_json(const WellsClass& c) {
  return {{"coords", to_json(c.coords)}, {"representative", to_json(c.representative)}, {"zero", c.is_zero()}};
}

json witness_json(const Cochain1& l) {
  json j = to_json(l);
  j["flat"] = to_json(flatten(l));
  return j;
}

json check(const Violations& v) { return {{"ok", v.empty()}, {"violations", to_json(v)}}; }

AutPair aut_pair(const io::PairBlock& p, const Algebra& g) {
  return {p.beta0, p.beta1, Hom{p.alpha0, p.alpha1, p.alpha2 ? *p.alpha2 : MultiMap(g.n1(), {g.n0(), g.n0()})}};
}

DerPair der_pair(const io::PairBlock& p, const Algebra& g) {
  return {p.beta0, p.beta1,
          Derivation{p.alpha0, p.alpha1, p.alpha2 ? *p.alpha2 : MultiMap(g.n1(), {g.n0(), g.n0()})}};
}

void no_alpha2(const io::PairBlock& p) {
  require(!p.alpha2 || p.alpha2->is_zero(), "invalid_pair", "crossed-module pairs have no alpha2");
}

Report with_witness(json body, const WellsReport& r, const std::function<json()>& induced) {
  body["compatible"] = r.compatible;
  body["violations"] = to_json(r.violations);
  if (!r.compatible) return finish(std::move(body), "incompatible", 1);
  body["obstruction"] = class_json(*r.obstruction);
  body["inducible"] = r.inducible();
  if (!r.inducible()) return finish(std::move(body), "not_inducible", 1);
  body["witness"] = witness_json(*r.witness);
  body["induced"] = induced();
  return finish(std::move(body), "inducible", 0);
}

Report with_class(json body, const std::function<WellsClass()>& compute) {
  try {
    WellsClass c = compute();
    body["class"] = class_json(c);
    return finish(std::move(body), c.is_zero() ? "zero" : "nonzero", 0);
  } catch (const Error& e) {
    if (e.code() != "incompatible_pair") throw;
    body["message"] = e.what();
    return finish(std::move(body), "incompatible", 1);
  }
}

using Handler = std::function<Report(const io::Document&, json)>;

Report verify(const io::Document& d, json body) {
  json checks = json::object();
  bool ok = true;
  auto add = [&](const std::string& k, json c) {
    ok = ok && c["ok"].get<bool>();
    checks[k] = std::move(c);
  };
  if (d.algebra) add("algebra", check(verify_algebra(*d.algebra)));
  if (d.crossed_module) add("crossed_module", check(verify_xmod(*d.crossed_module)));
  if (d.representation) add("representation", check(verify_representation(*d.representation, base_of(d))));
  if (d.cocycle && d.representation) {
    auto c = is_cocycle2(*d.cocycle, base_of(d), *d.representation);
    add("cocycle", check(c.violations));
  }
  if (d.extension) {
    try {
      validate_extension(*d.extension);
      add("extension", {{"ok", true}});
    } catch (const Error& e) {
      if (e.code() != "invalid_extension") throw;
      add("extension", {{"ok", false}, {"message", e.what()}});
    }
  }
  if (checks.empty()) missing("nothing to verify");
  body["checks"] = checks;
  return finish(std::move(body), ok ? "ok" : "violations", ok ? 0 : 1);
}

Report cohomology_cmd(const io::Document& d, json body) {
  const Algebra g = base_of(d);
  const Rep& rho = rep_of(d);
  if (auto v = verify_representation(rho, g); !v.empty())
    fail("invalid_representation", "representation fails " + v[0].id);
  auto vecs = [](const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  if (d.options.scope == Scope::strict) {
    Quotient q = h2_quotient_strict(g, rho);
    body["dims"] = {{"B2", q.b_basis().size()}, {"H2", q.reps().size()}};
    body["h2_representatives"] = vecs(q.reps());
    body["scope"] = "strict";
    return finish(std::move(body), "ok", 0);
  }
  auto s = cohomology(g, rho);
  body["dims"] = {{"C1", s.dimC1}, {"C2", s.dimC2}, {"C3", s.dimC3}, {"Z1", s.dimZ1},
                  {"Z2", s.dimZ2}, {"B2", s.dimB2}, {"H2", s.dimH2}};
  body["z1_basis"] = vecs(s.z1_basis);
  body["z2_basis"] = vecs(s.z2_basis);
  body["b2_basis"] = vecs(s.b2_basis);
  body["h2_representatives"] = vecs(s.h2_representatives);
  body["scope"] = "full";
  return finish(std::move(body), "ok", 0);
}

Report extend(const io::Document& d, json body) {
  const Algebra g = base_of(d);
  const Rep& rho = rep_of(d);
  if (!d.cocycle) missing("needs a cocycle block");
  if (auto v = verify_representation(rho, g); !v.empty())
    fail("invalid_representation", "representation fails " + v[0].id);
  auto c = is_cocycle2(*d.cocycle, g, rho);
  if (!c.ok) {
    body["violations"] = to_json(c.violations);
    return finish(std::move(body), "not_cocycle", 1);
  }
  auto B = build_extension(g, rho, *d.cocycle);
  body["extension"] = to_json(B.ext);
  body["splitting"] = to_json(B.split);
  return finish(std::move(body), "ok", 0);
}

Report extract(const io::Document& d, json body) {
  if (!d.extension) missing("needs an extension block");
  auto B = extension_of(d);
  Rep rho = induced_rep(B.ext, B.split);
  Cochain2 c = extract_cocycle(B.ext, B.split);
  body["splitting"] = to_json(B.split);
  body["representation"] = to_json(rho);
  body["cocycle"] = to_json(c);
  body["cocycle_flat"] = to_json(flatten(c));
  body["class"] = to_json(*h2_quotient(B.ext.base, rho).coords(flatten(c)));
  return finish(std::move(body), "ok", 0);
}

Report equiv(const io::Document& d, json body) {
  Extension E1, E2;
  if (d.extension && d.extension_other) {
    E1 = *d.extension;
    E2 = *d.extension_other;
  } else if (d.cocycle && d.cocycle_other) {
    const Algebra g = base_of(d);
    E1 = build_extension(g, rep_of(d), *d.cocycle).ext;
    E2 = build_extension(g, rep_of(d), *d.cocycle_other).ext;
  } else {
    missing("needs extension and extension_other, or cocycle and cocycle_other");
  }
  auto F = extensions_equivalent(E1, E2);
  body["equivalent"] = F.has_value();
  if (!F) return finish(std::move(body), "not_equivalent", 1);
  body["witness"] = to_json(*F);
  return finish(std::move(body), "equivalent", 0);
}

Report induce_aut(const io::Document& d, json body) {
  auto B = extension_of(d);
  auto r = aut_induce(aut_pair(pair_of(d), B.ext.base), B.ext, B.split, d.options.scope);
  return with_witness(std::move(body), r, [&] { return to_json(*r.induced_aut); });
}

Report induce_der(const io::Document& d, json body) {
  auto B = extension_of(d);
  auto r = der_induce(der_pair(pair_of(d), B.ext.base), B.ext, B.split, d.options.scope);
  return with_witness(std::move(body), r, [&] { return to_json(*r.induced_der); });
}

Report wells_aut_cmd(const io::Document& d, json body) {
  auto B = extension_of(d);
  return with_class(std::move(body), [&] {
    return wells_aut(aut_pair(pair_of(d), B.ext.base), B.ext, B.split, d.options.scope);
  });
}

Report wells_der_cmd(const io::Document& d, json body) {
  auto B = extension_of(d);
  return with_class(std::move(body), [&] {
    return wells_der(der_pair(pair_of(d), B.ext.base), B.ext, B.split, d.options.scope);
  });
}

const CrossedModule& xmod_of(const io::Document& d) {
  if (!d.crossed_module) missing("needs a crossed_module block");
  return *d.crossed_module;
}

Report xmod_verify(const io::Document& d, json body) {
  const CrossedModule& x = xmod_of(d);
  json checks = {{"crossed_module", check(verify_xmod(x))}};
  if (d.representation) checks["representation"] = check(verify_xmod_rep(*d.representation, x));
  bool ok = true;
  for (const auto& [_, c] : checks.items()) ok = ok && c["ok"].get<bool>();
  body["checks"] = checks;
  return finish(std::move(body), ok ? "ok" : "violations", ok ? 0 : 1);
}

Report xmod_semi(const io::Document& d, json body) {
  CrossedModule s = xmod_semidirect(xmod_of(d), rep_of(d));
  body["crossed_module"] = to_json(s);
  body["verified"] = verify_xmod(s).empty();
  return finish(std::move(body), "ok", 0);
}

XModAutPair xaut(const io::Document& d) {
  const auto& p = pair_of(d);
  no_alpha2(p);
  return {p.beta0, p.beta1, p.alpha0, p.alpha1};
}

XModDerPair xder(const io::Document& d) {
  const auto& p = pair_of(d);
  no_alpha2(p);
  return {p.beta0, p.beta1, p.alpha0, p.alpha1};
}

Report xmod_induce_aut(const io::Document& d, json body) {
  auto B = extension_of(d);
  auto r = xmod_aut_induce(xaut(d), B.ext, B.split);
  return with_witness(std::move(body), r, [&] { return to_json(*r.induced_aut); });
}

Report xmod_induce_der(const io::Document& d, json body) {
  auto B = extension_of(d);
  auto r = xmod_der_induce(xder(d), B.ext, B.split);
  return with_witness(std::move(body), r, [&] { return to_json(*r.induced_der); });
}

Report xmod_wells_aut_cmd(const io::Document& d, json body) {
  auto B = extension_of(d);
  return with_class(std::move(body), [&] { return xmod_wells_aut(xaut(d), B.ext, B.split); });
}

Report xmod_wells_der_cmd(const io::Document& d, json body) {
  auto B = extension_of(d);
  return with_class(std::move(body), [&] { return xmod_wells_der(xder(d), B.ext, B.split); });
}

const std::map<std::string, Handler>& table() {
  static const std::map<std::string, Handler> t = {
      {"verify", verify},
      {"cohomology", cohomology_cmd},
      {"extend", extend},
      {"extract", extract},
      {"equiv", equiv},
      {"induce-aut", induce_aut},
      {"induce-der", induce_der},
      {"wells-aut", wells_aut_cmd},
      {"wells-der", wells_der_cmd},
      {"xmod-verify", xmod_verify},
      {"xmod-semidirect", xmod_semi},
      {"xmod-induce-aut", xmod_induce_aut},
      {"xmod-induce-der", xmod_induce_der},
      {"xmod-wells-aut", xmod_wells_aut_cmd},
      {"xmod-wells-der", xmod_wells_der_cmd},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

Report execute(const std::string& command, const io::Document& doc) {
  auto it = table().find(command);
  if (it == table().end()) fail("unknown_command", "unknown command \"" + command + "\"");
  return it->second(doc, {{"command", command}, {"schema_version", io::kSchemaVersion}});
}

Report run(const std::string& command, const std::string& input_bytes) {
  try {
    if (!table().count(command)) fail("unknown_command", "unknown command \"" + command + "\"");
    return execute(command, io::parse_document(input_bytes));
  } catch (const Error& e) {
    json body = {{"command", command}, {"schema_version", io::kSchemaVersion}};
    json err = {{"code", e.code()}, {"message", e.what()}};
    if (auto* ie = dynamic_cast<const io::InputError*>(&e)) err["issues"] = ie->issues();
    body["error"] = err;
    return finish(std::move(body), "error", 2);
  }
}

std::string emit(const Report& r, const std::string& format) {
  if (format == "text") return io::to_text(r.body);
  return io::dump(r.body);
}

}  // namespace lz2::cmd
