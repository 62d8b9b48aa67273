#pragma once

#include <stdexcept>
#include <string>

namespace flopit {

/// Broad failure class; the CLI maps these onto exit codes.
enum class ErrorKind {
  Parse,      ///< malformed input text
  Dimension,  ///< value count does not match the header
  Alignment,  ///< grids do not share a common lattice
  Validation, ///< input bundle breaks a contract (layer count, duplicates)
  Domain,     ///< numeric argument outside its allowed range
  Io,         ///< file could not be opened, read or written
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(ErrorKind::Dimension, what) {}
};

class AlignmentError : public Error {
public:
  explicit AlignmentError(const std::string& what) : Error(ErrorKind::Alignment, what) {}
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class IoError : public Error {
public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

} // namespace flopit
