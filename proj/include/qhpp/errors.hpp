#pragma once

#include <stdexcept>
#include <string>

namespace qhpp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// P*Q vanishes identically.
class ZeroSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CommonFactorError : public std::runtime_error {
 public:
  CommonFactorError(const std::string& msg, std::string factor)
      : std::runtime_error(msg), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

class NotQuasiHomogeneousError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoRowMatchedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plot window string is malformed or degenerate.
class BadWindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qhpp
