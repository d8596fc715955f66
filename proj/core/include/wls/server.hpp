#pragma once

#include <memory>
#include <string>

#include "wls/config.hpp"
#include "wls/errors.hpp"

namespace wls {

class BindError : public Error {
public:
  using Error::Error;
};

/// HTTP front end: `GET /wls?...` is routed to handle_query, other methods on
/// /wls get 405, every other path 404.
class LicenseServer {
public:
  explicit LicenseServer(WlsConfig config);
  ~LicenseServer();

  LicenseServer(const LicenseServer&) = delete;
  LicenseServer& operator=(const LicenseServer&) = delete;

  /// Binds to config.server.bind:port (port 0 picks an ephemeral port) and
  /// returns the bound port. Throws BindError.
  int bind();

  /// Serves until stop(). Requires a prior bind().
  void listen();

  /// Thread-safe; may be called before listen() has started.
  void stop();

  const WlsConfig& config() const noexcept;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds, then serves until SIGINT or SIGTERM. Throws BindError.
void serve(WlsConfig config);

}  // namespace wls
