#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table failed a group axiom. `witness` holds the offending
/// element triple when the failure is an associativity violation.
class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what,
                     std::optional<std::array<std::uint32_t, 3>> witness = std::nullopt)
      : Error("not a group: " + what), witness_(witness) {}

  const std::optional<std::array<std::uint32_t, 3>>& witness() const noexcept { return witness_; }

 private:
  std::optional<std::array<std::uint32_t, 3>> witness_;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class NotAnAction : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class ComponentMismatch : public Error {
 public:
  using Error::Error;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

class NotAGroupIso : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FiberHasPTorsion : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace fb
