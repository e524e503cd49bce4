#pragma once

#include <stdexcept>
#include <string>

namespace ontoseg {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or unreadable input paths. CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed file content or violated data preconditions. CLI exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

// Annotation service unreachable or misbehaving. CLI exit code 3.
class RemoteError : public Error {
 public:
  using Error::Error;
};

}  // namespace ontoseg
