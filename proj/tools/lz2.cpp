// lz2 COMMAND --input doc.json [--output report.json] [--format json|text]
//
// Exit codes: 0 affirmative, 1 mathematically negative, 2 invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lz2/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Leibniz 2-algebras: axioms, cohomology, extensions, inducibility"};
  std::string command, input, output, format = "json";
  std::string names;
  for (const auto& c : lz2::cmd::commands()) names += (names.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("--input", input, "Input document (JSON), - for stdin")->required();
  app.add_option("--output", output, "Report path (default stdout)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string bytes;
  if (input == "-") {
    bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "lz2: cannot read " << input << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    bytes = ss.str();
  }

  const lz2::cmd::Report r = lz2::cmd::run(command, bytes);
  const std::string text = lz2::cmd::emit(r, format);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "lz2: cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  if (r.exit_code == 2 && r.body.contains("error"))
    std::cerr << "lz2: " << r.body["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}
