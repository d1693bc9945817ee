#pragma once

#include <stdexcept>
#include <string>

namespace gcalc {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two multivectors from algebras of different dimension were combined.
struct SignatureMismatch : Error {
  using Error::Error;
};

/// blade_inverse was asked to invert something that is not an invertible blade.
struct SingularBlade : Error {
  using Error::Error;
};

/// A tangent frame degenerated (k-vector numerically zero) at an evaluated point.
struct RegularityError : Error {
  using Error::Error;
};

/// A parameter point lies outside the patch domain, or a domain is malformed.
struct DomainError : Error {
  using Error::Error;
};

/// Objects with incompatible dimensions were combined (patch vs field vs point).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Text input could not be parsed.  line/col are 1-based; col 0 means unknown.
struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg), line(line_), col(col_) {}
};

/// A config document contains a key the schema does not define.
struct UnknownKey : Error {
  std::string key;
  explicit UnknownKey(const std::string& key_)
      : Error("unknown key: " + key_), key(key_) {}
};

/// Curves passed to the path-independence check do not share endpoints.
struct EndpointMismatch : Error {
  using Error::Error;
};

}  // namespace gcalc
