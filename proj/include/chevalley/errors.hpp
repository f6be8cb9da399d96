#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chevalley {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments that do not fit the operation (mixed rings,
/// out-of-range indices, malformed input).
class UsageError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class InvalidCartan : public Error {
 public:
  using Error::Error;
};

class NotFiniteType : public Error {
 public:
  using Error::Error;
};

class UnknownRoot : public Error {
 public:
  using Error::Error;
};

class DegenerateString : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class ImpossibleColoring : public Error {
 public:
  using Error::Error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold by construction failed. Indicates a
/// bug upstream, never bad user input.
class ConstructionBroken : public Error {
 public:
  using Error::Error;
};

/// Group enumeration stopped at its element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial)
      : Error(what), partial_count_(partial) {}
  std::uint64_t partial_count() const { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

}  // namespace chevalley
