#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontobench {

/// Process exit codes used by the command line tool.
enum class ExitCode : int {
  ok = 0,
  config = 1,     ///< bad configuration, parse or load error
  integrity = 2,  ///< cycles, dangling inverses
  io = 3,         ///< report output failure
};

/// A position inside an input file. Lines and columns are 1-based; 0 means
/// unknown.
struct SourceLocation {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;

  std::string to_string() const;
};

/// Base of every error thrown by the library. Carries the exit code the CLI
/// should use when the error reaches `main`.
class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed input text. The message is prefixed with the location.
class ParseError : public Error {
 public:
  ParseError(SourceLocation where, const std::string& message);

  const SourceLocation& where() const noexcept { return where_; }
  /// The message without the location prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceLocation where_;
  std::string detail_;
};

/// A name that does not resolve (unknown symbol, class, or path).
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& message)
      : Error(ExitCode::config, message) {}
};

/// Well-formed input that violates a load-time rule (duplicates, unresolved
/// targets, missing columns).
class LoadError : public Error {
 public:
  explicit LoadError(const std::string& message)
      : Error(ExitCode::config, message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message)
      : Error(ExitCode::config, message) {}
};

/// Structural violations: cycles in class or supertype graphs, inconsistent
/// inverse relationships.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& message)
      : Error(ExitCode::integrity, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ExitCode::io, message) {}
};

/// A non-fatal problem collected while loading.
struct Diagnostic {
  SourceLocation where;
  std::string message;

  std::string to_string() const;
};

/// Reads a whole input file. Throws `LoadError` when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace ontobench
