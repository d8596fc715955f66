#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wls/algebra.hpp"
#include "wls/errors.hpp"

namespace wls {

enum class RequestKind { GetCapabilities, GetLicense };
enum class ResponseFormat { Xhtml, Json, Text };

std::string_view mime_type(ResponseFormat f) noexcept;

struct WlsRequest {
  RequestKind kind = RequestKind::GetCapabilities;
  std::vector<std::string> layers;
  ResponseFormat format = ResponseFormat::Xhtml;
  Engine engine = Engine::Matrix;
  Mode mode = Mode::Symmetrized;
};

/// OGC-style exception raised for a bad query string. `code()` is the
/// exception code reported to clients.
class RequestError : public Error {
public:
  enum class Code { InvalidService, InvalidRequest, MissingParameter, InvalidParameterValue };

  RequestError(Code code, std::string parameter, std::string value, const std::string& message)
    : Error(message), code_(code), parameter_(std::move(parameter)), value_(std::move(value))
  {}

  Code code() const noexcept { return code_; }
  std::string_view code_name() const noexcept;
  const std::string& parameter() const noexcept { return parameter_; }
  const std::string& value() const noexcept { return value_; }

private:
  Code code_;
  std::string parameter_;
  std::string value_;
};

/// Decodes `application/x-www-form-urlencoded` text ('+' is a space).
/// Malformed escapes are kept literally.
std::string percent_decode(std::string_view text);

/// Parses the query part of a `/wls` request (without the leading '?').
/// Parameter names are case-insensitive; the first occurrence of a name
/// wins; unknown parameters are ignored.
WlsRequest parse_query(std::string_view query);

}  // namespace wls
