#pragma once

#include <stdexcept>
#include <string>

namespace abelatt {

/// Malformed group spec or serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands belong to different groups.
class GroupMismatchError : public std::invalid_argument {
 public:
  explicit GroupMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// No basis of minimal vectors exists (the cyclic group of order 4).
class NoMinimalBasisError : public std::domain_error {
 public:
  explicit NoMinimalBasisError(const std::string& what)
      : std::domain_error(what) {}
};

/// No eutaxy certificate exists (the cyclic group of order 4).
class NotEutacticError : public std::domain_error {
 public:
  explicit NotEutacticError(const std::string& what)
      : std::domain_error(what) {}
};

// An exact identity that must hold by theorem failed to hold. Indicates a
// bug in this library, never a property of the input.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace abelatt
