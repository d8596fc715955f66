#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace wls {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (e.g. a malformed attribute vector).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Failures raised while reading ccREL markup.
class CodecError : public Error {
public:
  enum class Kind { MissingLicense, UnknownLicenseUri, Parse };

  CodecError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

class MissingLicense : public CodecError {
public:
  MissingLicense() : CodecError(Kind::MissingLicense, "no element with rel=\"license\" found") {}
};

class UnknownLicenseUri : public CodecError {
public:
  explicit UnknownLicenseUri(std::string uri)
    : CodecError(Kind::UnknownLicenseUri, "unrecognized license URI: " + uri), uri_(std::move(uri))
  {}

  const std::string& uri() const noexcept { return uri_; }

private:
  std::string uri_;
};

class ParseError : public CodecError {
public:
  ParseError(std::size_t offset, const std::string& message)
    : CodecError(Kind::Parse, "parse error at byte " + std::to_string(offset) + ": " + message),
      offset_(offset)
  {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class IoError : public Error {
public:
  IoError(std::filesystem::path path, const std::string& message)
    : Error(path.string() + ": " + message), path_(std::move(path))
  {}

  const std::filesystem::path& path() const noexcept { return path_; }

private:
  std::filesystem::path path_;
};

class AlreadyExists : public Error {
public:
  explicit AlreadyExists(std::filesystem::path path)
    : Error(path.string() + ": sidecar already exists"), path_(std::move(path))
  {}

  const std::filesystem::path& path() const noexcept { return path_; }

private:
  std::filesystem::path path_;
};

/// A sidecar exists but its contents failed to parse. Keeps the codec error
/// kind so callers can still tell a missing license from bad markup.
class SidecarParseError : public Error {
public:
  SidecarParseError(std::filesystem::path path, const CodecError& cause)
    : Error(path.string() + ": " + cause.what()), path_(std::move(path)), kind_(cause.kind()),
      detail_(cause.what())
  {}

  const std::filesystem::path& path() const noexcept { return path_; }
  CodecError::Kind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::filesystem::path path_;
  CodecError::Kind kind_;
  std::string detail_;
};

class CatalogError : public Error {
public:
  enum class Kind { DuplicateId, Malformed };

  CatalogError(Kind kind, std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line)
  {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

private:
  Kind kind_;
  std::size_t line_;
};

class ConfigError : public Error {
public:
  ConfigError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line)
  {}

  /// 1-based line of the offending input, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A configured layer source could not be resolved to a sidecar at request
/// time (catalog missing, unreadable, or lacking the dataset id).
class ResolutionError : public Error {
public:
  using Error::Error;
};

}  // namespace wls
