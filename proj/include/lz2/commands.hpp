#pragma once

#include <string>
#include <vector>

#include "lz2/io.hpp"

namespace lz2::cmd {

// exit_code: 0 affirmative, 1 mathematically negative, 2 invalid input.
struct Report {
  io::json body;
  int exit_code = 0;
};

const std::vector<std::string>& commands();

// Throws Error (including io::InputError); run() turns those into exit 2.
Report execute(const std::string& command, const io::Document& doc);
Report run(const std::string& command, const std::string& input_bytes);

std::string emit(const Report& r, const std::string& format);  // "json" | "text"

}  // namespace lz2::cmd
