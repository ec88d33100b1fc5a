#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lz2/error.hpp"
#include "lz2/xmod.hpp"

namespace lz2::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Code "parse_error" for malformed JSON, "schema_error" otherwise; issues
// carry a JSON path each ("$.algebra.d: ...").
class InputError : public Error {
public:
  InputError(std::string code, std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
  std::vector<std::string> issues_;
};

// Pair block; alpha2 is absent for crossed-module commands.
struct PairBlock {
  Mat beta0, beta1, alpha0, alpha1;
  std::optional<MultiMap> alpha2;
  friend bool operator==(const PairBlock&, const PairBlock&) = default;
};

struct Options {
  Scope scope = Scope::full;
  friend bool operator==(const Options&, const Options&) = default;
};

struct Document {
  std::string schema_version;
  std::optional<Algebra> algebra;
  std::optional<CrossedModule> crossed_module;
  std::optional<Rep> representation;
  std::optional<Cochain2> cocycle, cocycle_other;
  std::optional<Extension> extension, extension_other;
  std::optional<Splitting> splitting;
  std::optional<PairBlock> pair;
  Options options;
  friend bool operator==(const Document&, const Document&) = default;
};

// Throws InputError. Tensor shapes are checked against the dims declared in
// the same document.
Document parse_document(const std::string& bytes);
Document parse_document(const json& j);
json to_json(const Document& d);

json to_json(const Scalar& x);
json to_json(const Vec& v);
json to_json(const Mat& m);
json to_json(const MultiMap& f);
json to_json(const Complex& c);
json to_json(const Algebra& g);
json to_json(const Rep& rho);
json to_json(const Cochain1& l);
json to_json(const Cochain2& c);
json to_json(const Extension& E);
json to_json(const Splitting& s);
json to_json(const Hom& F);
json to_json(const Derivation& D);
json to_json(const CrossedModule& x);
json to_json(const Violations& vs);

// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
// Stable "path: value" lines.
std::string to_text(const json& j);

}  // namespace lz2::io
