#pragma once

#include <string>
#include <string_view>

#include "wls/config.hpp"
#include "wls/query.hpp"

namespace wls {

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
};

inline constexpr std::string_view kProtocolVersion = "1.0.0";

/// JSON capabilities document. Sidecars are read on every call; a layer
/// that cannot be read is listed with an "error" member instead of failing
/// the document.
Response handle_get_capabilities(const WlsConfig& config);

/// Extract -> combine_all -> render. An incompatible result is a 200.
Response handle_get_license(const WlsConfig& config, const WlsRequest& request);

/// Full dispatch for a `/wls` query string, including 400 responses for
/// parameter errors.
Response handle_query(const WlsConfig& config, std::string_view query);

}  // namespace wls
