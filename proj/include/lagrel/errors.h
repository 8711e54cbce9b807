#ifndef LAGREL_ERRORS_H_
#define LAGREL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lagrel {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent matrix/vector shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// No point satisfies the constraints an oracle was asked to respect.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Valid input that an oracle deliberately does not handle (e.g. continuous
// variables, enumeration beyond the limit).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed experiment or CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lagrel

#endif  // LAGREL_ERRORS_H_
