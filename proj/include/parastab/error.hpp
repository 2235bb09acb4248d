#pragma once

#include <stdexcept>
#include <string>

namespace parastab {

// All library errors carry a stable machine-readable code and a location
// string ("module.function") so callers can report failures precisely.
class Error : public std::runtime_error {
public:
  Error(std::string code, std::string location, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)),
        location_(std::move(location)) {}

  const std::string &code() const { return code_; }
  const std::string &location() const { return location_; }

private:
  std::string code_;
  std::string location_;
};

// Malformed or out-of-range input (bad rank, unsorted data, bad syntax).
class ValidationError : public Error {
public:
  ValidationError(const std::string &location, const std::string &message)
      : Error("validation", location, message) {}
};

// Structurally valid input outside an operation's mathematical domain
// (e.g. a vector that is not a root, a facet index out of range).
class DomainError : public Error {
public:
  DomainError(const std::string &location, const std::string &message)
      : Error("domain", location, message) {}
};

// A stated hypothesis of a bound or theorem fails (e.g. a slope bound
// that requires a positive twist).
class HypothesisError : public Error {
public:
  HypothesisError(const std::string &location, const std::string &message)
      : Error("hypothesis", location, message) {}
};

// Work refused because it would exceed a configured cap (orbit sizes,
// Weyl group enumeration, fan scans in high rank).
class ResourceError : public Error {
public:
  ResourceError(const std::string &location, const std::string &message)
      : Error("resource", location, message) {}
};

// A maximum is attained by several incomparable candidates and no
// canonical choice exists.
class AmbiguityError : public Error {
public:
  AmbiguityError(const std::string &location, const std::string &message)
      : Error("ambiguity", location, message) {}
};

// A broken internal invariant; always a bug, never a user error.
class InternalError : public Error {
public:
  InternalError(const std::string &location, const std::string &message)
      : Error("internal", location, message) {}
};

} // namespace parastab
