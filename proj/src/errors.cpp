#include "ontobench/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ontobench {

std::string SourceLocation::to_string() const {
  std::string out = file.empty() ? std::string("<input>") : file;
  if (line > 0) {
    out += ':' + std::to_string(line);
    if (column > 0) out += ':' + std::to_string(column);
  }
  return out;
}

ParseError::ParseError(SourceLocation where, const std::string& message)
    : Error(ExitCode::config, where.to_string() + ": " + message),
      where_(std::move(where)),
      detail_(message) {}

std::string Diagnostic::to_string() const {
  if (where.file.empty() && where.line == 0) return message;
  return where.to_string() + ": " + message;
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw LoadError("input path '" + path + "' is a directory, expected a file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ontobench
