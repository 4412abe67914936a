#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halin {

enum class ErrorKind {
  CycleDetected,
  DisconnectedInput,
  DuplicateChild,
  InvalidSubstrate,
  InvalidLayout,
  NotContiguous,
  Overlapping,
  NotRecursivelyBalanced,
  NotTreeOptimalInput,
  UnsupportedTreeLayout,
  TooLarge,
  BadParam,
  ParseError,
  SchemaVersionUnsupported,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace halin
