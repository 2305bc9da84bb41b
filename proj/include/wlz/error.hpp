#pragma once

#include <stdexcept>
#include <string>

namespace wlz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or coder parameters.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error("invalid config: " + what) {}
};

/// Value outside the domain of an integer coder.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

/// A symbol id the vocabulary does not hold. Signals decoder desynchronization.
class InvalidSymbolError : public Error {
public:
  explicit InvalidSymbolError(const std::string& what) : Error("invalid symbol: " + what) {}
};

/// Unrecognized container header (magic, version, enum ranges).
class FormatError : public Error {
public:
  explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

/// Truncated or inconsistent compressed data.
class CorruptError : public Error {
public:
  explicit CorruptError(const std::string& what) : Error("corrupt stream: " + what) {}
};

}  // namespace wlz
