#pragma once

#include <stdexcept>
#include <string>

namespace ck {

// Exit-status classes shared by the library and the command-line tool.
enum class ErrorKind { usage = 2, precondition = 2, indeterminate = 3, parse = 4, internal = 1 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorKind::usage, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::precondition, w) {}
};
struct IndeterminateError : Error {
  explicit IndeterminateError(const std::string& w) : Error(ErrorKind::indeterminate, w) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error(ErrorKind::internal, w) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(ErrorKind::parse, std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

}  // namespace ck
