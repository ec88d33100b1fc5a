#include "lz2/io.hpp"

#include <set>
#include <sstream>

namespace lz2::io {

InputError::InputError(std::string code, std::vector<std::string> issues)
    : Error(std::move(code), issues.empty() ? std::string("invalid input") : issues.front()),
      issues_(std::move(issues)) {}

namespace {

std::string at_key(const std::string& path, const std::string& k) { return path + "." + k; }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

class Reader {
public:
  std::vector<std::string> issues;

  void issue(const std::string& path, const std::string& msg) { issues.push_back(path + ": " + msg); }

  bool object(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) {
      issue(path, "expected an object");
      return false;
    }
    for (const auto& [k, _] : j.items())
      if (!allowed.count(k)) issue(at_key(path, k), "unknown field");
    return true;
  }

  std::optional<std::size_t> dim(const json& obj, const std::string& key, const std::string& path) {
    const auto p = at_key(path, key);
    if (!obj.contains(key)) {
      issue(p, "missing required field");
      return std::nullopt;
    }
    const json& v = obj.at(key);
    if (!v.is_number_unsigned()) {
      issue(p, "expected a non-negative integer");
      return std::nullopt;
    }
    return v.get<std::size_t>();
  }

  // Fills f.c from nested arrays shaped [out][in0][in1]...; absent means zero.
  void tensor(const json& obj, const std::string& key, const std::string& path, MultiMap& f) {
    if (!obj.contains(key)) return;
    std::vector<std::size_t> dims{f.out};
    dims.insert(dims.end(), f.in.begin(), f.in.end());
    std::size_t k = 0;
    walk(obj.at(key), at_key(path, key), dims, 0, f.c, k);
  }

  void matrix(const json& obj, const std::string& key, const std::string& path, Mat& m) {
    MultiMap f(m.rows(), {m.cols()});
    tensor(obj, key, path, f);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.c[i * m.cols() + j];
  }

private:
  void walk(const json& j, const std::string& path, const std::vector<std::size_t>& dims, std::size_t level,
            std::vector<Scalar>& out, std::size_t& k) {
    if (level == dims.size()) {
      if (!j.is_string()) {
        issue(path, "expected a scalar string");
      } else {
        try {
          out[k] = parse_scalar(j.get<std::string>());
        } catch (const Error& e) {
          issue(path, e.what());
        }
      }
      ++k;
      return;
    }
    std::size_t block = 1;
    for (std::size_t s = level + 1; s < dims.size(); ++s) block *= dims[s];
    if (!j.is_array() || j.size() != dims[level]) {
      issue(path, "expected an array of length " + std::to_string(dims[level]));
      k += block * dims[level];
      return;
    }
    for (std::size_t i = 0; i < dims[level]; ++i) walk(j[i], at_index(path, i), dims, level + 1, out, k);
  }
};

std::optional<Complex> read_complex(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path, {"dim0", "dim1", "partial"})) return std::nullopt;
  auto d0 = r.dim(j, "dim0", path), d1 = r.dim(j, "dim1", path);
  if (!d0 || !d1) return std::nullopt;
  Complex c(*d1, *d0);
  r.matrix(j, "partial", path, c.d);
  return c;
}

std::optional<Algebra> read_algebra(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path, {"dim0", "dim1", "d", "b00", "b01", "b10", "l3"})) return std::nullopt;
  auto d0 = r.dim(j, "dim0", path), d1 = r.dim(j, "dim1", path);
  if (!d0 || !d1) return std::nullopt;
  Algebra g = zero_algebra(*d1, *d0);
  r.matrix(j, "d", path, g.g.d);
  r.tensor(j, "b00", path, g.b00);
  r.tensor(j, "b01", path, g.b01);
  r.tensor(j, "b10", path, g.b10);
  r.tensor(j, "l3", path, g.l3);
  return g;
}

std::optional<CrossedModule> read_xmod(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path, {"p0_dim", "p1_dim", "bracket", "left", "right", "f"})) return std::nullopt;
  auto n = r.dim(j, "p0_dim", path), m = r.dim(j, "p1_dim", path);
  if (!n || !m) return std::nullopt;
  CrossedModule x{MultiMap(*n, {*n, *n}), *m, MultiMap(*m, {*n, *m}), MultiMap(*m, {*m, *n}), Mat(*n, *m)};
  r.tensor(j, "bracket", path, x.p0_bracket);
  r.tensor(j, "left", path, x.left);
  r.tensor(j, "right", path, x.right);
  r.matrix(j, "f", path, x.f);
  return x;
}

std::optional<Rep> read_rep(Reader& r, const json& j, const std::string& path, const Algebra& g) {
  if (!r.object(j, path, {"V", "l0_0", "l0_1", "r0_0", "r0_1", "l1", "r1", "l2", "m2", "r2"})) return std::nullopt;
  if (!j.contains("V")) {
    r.issue(at_key(path, "V"), "missing required field");
    return std::nullopt;
  }
  auto V = read_complex(r, j.at("V"), at_key(path, "V"));
  if (!V) return std::nullopt;
  Rep rho = trivial_rep(g, *V);
  r.tensor(j, "l0_0", path, rho.l0_0);
  r.tensor(j, "l0_1", path, rho.l0_1);
  r.tensor(j, "r0_0", path, rho.r0_0);
  r.tensor(j, "r0_1", path, rho.r0_1);
  r.tensor(j, "l1", path, rho.l1);
  r.tensor(j, "r1", path, rho.r1);
  r.tensor(j, "l2", path, rho.l2);
  r.tensor(j, "m2", path, rho.m2);
  r.tensor(j, "r2", path, rho.r2);
  return rho;
}

std::optional<Cochain2> read_cocycle(Reader& r, const json& j, const std::string& path, const Algebra& g,
                                     const Complex& V) {
  if (!r.object(j, path, {"psi", "omega", "mu", "nu", "theta"})) return std::nullopt;
  Cochain2 c = zero_cochain2(g, V);
  r.tensor(j, "psi", path, c.psi);
  r.tensor(j, "omega", path, c.omega);
  r.tensor(j, "mu", path, c.mu);
  r.tensor(j, "nu", path, c.nu);
  r.tensor(j, "theta", path, c.theta);
  return c;
}

std::optional<GradedMap> read_graded(Reader& r, const json& j, const std::string& path, std::size_t r0,
                                     std::size_t c0, std::size_t r1, std::size_t c1) {
  if (!r.object(j, path, {"m0", "m1"})) return std::nullopt;
  GradedMap m{Mat(r0, c0), Mat(r1, c1)};
  r.matrix(j, "m0", path, m.m0);
  r.matrix(j, "m1", path, m.m1);
  return m;
}

std::optional<Extension> read_extension(Reader& r, const json& j, const std::string& path) {
  if (!r.object(j, path, {"hat", "base", "fiber", "i", "p"})) return std::nullopt;
  for (const char* k : {"hat", "base", "fiber", "i", "p"})
    if (!j.contains(k)) r.issue(at_key(path, k), "missing required field");
  if (!j.contains("hat") || !j.contains("base") || !j.contains("fiber")) return std::nullopt;
  auto hat = read_algebra(r, j.at("hat"), at_key(path, "hat"));
  auto base = read_algebra(r, j.at("base"), at_key(path, "base"));
  auto fiber = read_complex(r, j.at("fiber"), at_key(path, "fiber"));
  if (!hat || !base || !fiber || !j.contains("i") || !j.contains("p")) return std::nullopt;
  auto i = read_graded(r, j.at("i"), at_key(path, "i"), hat->n0(), fiber->dim0, hat->n1(), fiber->dim1);
  auto p = read_graded(r, j.at("p"), at_key(path, "p"), base->n0(), hat->n0(), base->n1(), hat->n1());
  if (!i || !p) return std::nullopt;
  return Extension{*hat, *base, *fiber, *i, *p};
}

std::optional<PairBlock> read_pair(Reader& r, const json& j, const std::string& path, const Algebra& g,
                                   const Complex& V) {
  if (!r.object(j, path, {"beta0", "beta1", "alpha0", "alpha1", "alpha2"})) return std::nullopt;
  for (const char* k : {"beta0", "beta1", "alpha0", "alpha1"})
    if (!j.contains(k)) r.issue(at_key(path, k), "missing required field");
  PairBlock p{Mat(V.dim0, V.dim0), Mat(V.dim1, V.dim1), Mat(g.n0(), g.n0()), Mat(g.n1(), g.n1()), std::nullopt};
  r.matrix(j, "beta0", path, p.beta0);
  r.matrix(j, "beta1", path, p.beta1);
  r.matrix(j, "alpha0", path, p.alpha0);
  r.matrix(j, "alpha1", path, p.alpha1);
  if (j.contains("alpha2")) {
    p.alpha2 = MultiMap(g.n1(), {g.n0(), g.n0()});
    r.tensor(j, "alpha2", path, *p.alpha2);
  }
  return p;
}

json nested(const std::vector<std::size_t>& dims, const std::vector<Scalar>& c, std::size_t level, std::size_t& k) {
  if (level == dims.size()) return to_string(c[k++]);
  json a = json::array();
  for (std::size_t i = 0; i < dims[level]; ++i) a.push_back(nested(dims, c, level + 1, k));
  return a;
}

json graded(const GradedMap& m) { return {{"m0", to_json(m.m0)}, {"m1", to_json(m.m1)}}; }

}  // namespace

Document parse_document(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError("parse_error", {std::string("$: ") + e.what()});
  }
  return parse_document(j);
}

Document parse_document(const json& j) {
  Reader r;
  Document d;
  const std::string root = "$";
  if (!r.object(j, root,
                {"schema_version", "algebra", "crossed_module", "representation", "cocycle", "cocycle_other",
                 "extension", "extension_other", "splitting", "pair", "options"}))
    throw InputError("schema_error", r.issues);
  if (!j.contains("schema_version") || !j.at("schema_version").is_string())
    r.issue("$.schema_version", "missing required string field");
  else if (j.at("schema_version").get<std::string>() != kSchemaVersion)
    r.issue("$.schema_version", std::string("unsupported version, expected \"") + kSchemaVersion + "\"");
  else
    d.schema_version = kSchemaVersion;

  if (j.contains("algebra")) d.algebra = read_algebra(r, j.at("algebra"), "$.algebra");
  if (j.contains("crossed_module")) d.crossed_module = read_xmod(r, j.at("crossed_module"), "$.crossed_module");
  if (j.contains("extension")) d.extension = read_extension(r, j.at("extension"), "$.extension");
  if (j.contains("extension_other"))
    d.extension_other = read_extension(r, j.at("extension_other"), "$.extension_other");

  std::optional<Algebra> base = d.algebra;
  if (!base && d.crossed_module) {
    try {
      base = xmod_to_strict(*d.crossed_module);
    } catch (const Error& e) {
      r.issue("$.crossed_module", e.what());
    }
  }
  if (!base && d.extension) base = d.extension->base;

  auto needs_base = [&](const char* key) {
    if (!j.contains(key)) return false;
    if (base) return true;
    r.issue(std::string("$.") + key, "needs an algebra, crossed_module or extension block");
    return false;
  };
  if (needs_base("representation")) d.representation = read_rep(r, j.at("representation"), "$.representation", *base);

  std::optional<Complex> V;
  if (d.representation)
    V = d.representation->V;
  else if (d.extension)
    V = d.extension->fiber;
  auto needs_fiber = [&](const char* key) {
    if (!needs_base(key)) return false;
    if (V) return true;
    r.issue(std::string("$.") + key, "needs a representation or extension block");
    return false;
  };
  if (needs_fiber("cocycle")) d.cocycle = read_cocycle(r, j.at("cocycle"), "$.cocycle", *base, *V);
  if (needs_fiber("cocycle_other"))
    d.cocycle_other = read_cocycle(r, j.at("cocycle_other"), "$.cocycle_other", *base, *V);
  if (needs_fiber("pair")) d.pair = read_pair(r, j.at("pair"), "$.pair", *base, *V);

  if (j.contains("splitting")) {
    if (!d.extension) {
      r.issue("$.splitting", "needs an extension block");
    } else if (r.object(j.at("splitting"), "$.splitting", {"s0", "s1"})) {
      const Extension& E = *d.extension;
      Splitting s{Mat(E.hat.n0(), E.base.n0()), Mat(E.hat.n1(), E.base.n1())};
      r.matrix(j.at("splitting"), "s0", "$.splitting", s.s0);
      r.matrix(j.at("splitting"), "s1", "$.splitting", s.s1);
      d.splitting = s;
    }
  }

  if (j.contains("options") && r.object(j.at("options"), "$.options", {"scope"})) {
    const json& o = j.at("options");
    if (o.contains("scope")) {
      const json& s = o.at("scope");
      if (s == "full")
        d.options.scope = Scope::full;
      else if (s == "strict")
        d.options.scope = Scope::strict;
      else
        r.issue("$.options.scope", "expected \"full\" or \"strict\"");
    }
  }

  if (!r.issues.empty()) throw InputError("schema_error", r.issues);
  return d;
}

json to_json(const Scalar& x) { return to_string(x); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const Mat& m) {
  std::size_t k = 0;
  return nested({m.rows(), m.cols()}, m.entries(), 0, k);
}

json to_json(const MultiMap& f) {
  std::vector<std::size_t> dims{f.out};
  dims.insert(dims.end(), f.in.begin(), f.in.end());
  std::size_t k = 0;
  return nested(dims, f.c, 0, k);
}

json to_json(const Complex& c) { return {{"dim0", c.dim0}, {"dim1", c.dim1}, {"partial", to_json(c.d)}}; }

json to_json(const Algebra& g) {
  return {{"dim0", g.n0()}, {"dim1", g.n1()},       {"d", to_json(g.g.d)},  {"b00", to_json(g.b00)},
          {"b01", to_json(g.b01)}, {"b10", to_json(g.b10)}, {"l3", to_json(g.l3)}};
}

json to_json(const Rep& rho) {
  return {{"V", to_json(rho.V)},         {"l0_0", to_json(rho.l0_0)}, {"l0_1", to_json(rho.l0_1)},
          {"r0_0", to_json(rho.r0_0)},   {"r0_1", to_json(rho.r0_1)}, {"l1", to_json(rho.l1)},
          {"r1", to_json(rho.r1)},       {"l2", to_json(rho.l2)},     {"m2", to_json(rho.m2)},
          {"r2", to_json(rho.r2)}};
}

json to_json(const Cochain1& l) { return {{"l0", to_json(l.l0)}, {"l1", to_json(l.l1)}, {"l2", to_json(l.l2)}}; }

json to_json(const Cochain2& c) {
  return {{"psi", to_json(c.psi)}, {"omega", to_json(c.omega)}, {"mu", to_json(c.mu)},
          {"nu", to_json(c.nu)},   {"theta", to_json(c.theta)}};
}

json to_json(const Extension& E) {
  return {{"hat", to_json(E.hat)}, {"base", to_json(E.base)}, {"fiber", to_json(E.fiber)},
          {"i", graded(E.i)},      {"p", graded(E.p)}};
}

json to_json(const Splitting& s) { return {{"s0", to_json(s.s0)}, {"s1", to_json(s.s1)}}; }

json to_json(const Hom& F) { return {{"F0", to_json(F.F0)}, {"F1", to_json(F.F1)}, {"F2", to_json(F.F2)}}; }

json to_json(const Derivation& D) { return {{"D0", to_json(D.D0)}, {"D1", to_json(D.D1)}, {"D2", to_json(D.D2)}}; }

json to_json(const CrossedModule& x) {
  return {{"p0_dim", x.p0_dim()},       {"p1_dim", x.p1_dim},         {"bracket", to_json(x.p0_bracket)},
          {"left", to_json(x.left)},    {"right", to_json(x.right)}, {"f", to_json(x.f)}};
}

json to_json(const Violations& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"id", v.id}, {"at", v.at}, {"residual", to_json(v.residual)}});
  return a;
}

json to_json(const Document& d) {
  json j = {{"schema_version", d.schema_version}};
  if (d.algebra) j["algebra"] = to_json(*d.algebra);
  if (d.crossed_module) j["crossed_module"] = to_json(*d.crossed_module);
  if (d.representation) j["representation"] = to_json(*d.representation);
  if (d.cocycle) j["cocycle"] = to_json(*d.cocycle);
  if (d.cocycle_other) j["cocycle_other"] = to_json(*d.cocycle_other);
  if (d.extension) j["extension"] = to_json(*d.extension);
  if (d.extension_other) j["extension_other"] = to_json(*d.extension_other);
  if (d.splitting) j["splitting"] = to_json(*d.splitting);
  if (d.pair) {
    json p = {{"beta0", to_json(d.pair->beta0)},
              {"beta1", to_json(d.pair->beta1)},
              {"alpha0", to_json(d.pair->alpha0)},
              {"alpha1", to_json(d.pair->alpha1)}};
    if (d.pair->alpha2) p["alpha2"] = to_json(*d.pair->alpha2);
    j["pair"] = p;
  }
  if (d.options.scope != Scope::full) j["options"] = {{"scope", "strict"}};
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

bool flat_leaves(const json& j) {
  if (j.is_object()) return false;
  if (!j.is_array()) return true;
  for (const auto& x : j)
    if (!flat_leaves(x)) return false;
  return true;
}

void text_lines(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) text_lines(v, path.empty() ? k : path + "." + k, out);
  } else if (flat_leaves(j)) {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  } else {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], path + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::string to_text(const json& j) {
  std::ostringstream out;
  text_lines(j, "", out);
  return out.str();
}

}  // namespace lz2::io
