#pragma once

#include <stdexcept>
#include <string>

namespace lz2 {

// Every failure raised by the library carries a short machine-readable code
// ("shape_mismatch", "not_cocycle", ...) next to the human message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace lz2
