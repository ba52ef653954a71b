//
// Copyright 2026 The ovc authors.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ovc {

// Base class for every toolchain failure. `code()` is the stable,
// machine-readable identifier that the CLI surfaces in its JSON error
// output; `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

#define OVC_ERROR_CLASS(Name)                                                  \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &message) : Error(#Name, message) {}       \
  }

// Frontend
class SyntaxError : public Error {
public:
  SyntaxError(int line, int column, const std::string &message)
      : Error("SyntaxError", std::to_string(line) + ":" +
                                 std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

OVC_ERROR_CLASS(UnsupportedConstruct);
OVC_ERROR_CLASS(MultipleAssignment);

// Graph interchange
OVC_ERROR_CLASS(DotParseError);
OVC_ERROR_CLASS(UnknownNtype);
OVC_ERROR_CLASS(NetlistParseError);

// Architecture / mapping
OVC_ERROR_CLASS(InvalidParameter);
OVC_ERROR_CLASS(DoesNotFit);
OVC_ERROR_CLASS(Unroutable);
OVC_ERROR_CLASS(DelayOverflow);

// Configuration
OVC_ERROR_CLASS(FingerprintMismatch);
OVC_ERROR_CLASS(MalformedBlob);
OVC_ERROR_CLASS(ConfigMismatch);

// Simulation
OVC_ERROR_CLASS(NotSteadyState);

// Anything that indicates a bug in the toolchain itself rather than bad input.
OVC_ERROR_CLASS(InternalError);

#undef OVC_ERROR_CLASS

} // namespace ovc
