#include "wls/server.hpp"

#include <pthread.h>
#include <signal.h>
#include <sys/socket.h>

#include <httplib.h>

#include <thread>

#include "wls/service.hpp"

namespace wls {

struct LicenseServer::Impl {
  WlsConfig config;
  httplib::Server http;
  bool bound = false;
};

LicenseServer::LicenseServer(WlsConfig config) : impl_(std::make_unique<Impl>())
{
  impl_->config = std::move(config);
  auto& http = impl_->http;
  const WlsConfig* cfg = &impl_->config;

  http.Get("/wls", [cfg](const httplib::Request& req, httplib::Response& res) {
    const auto q = req.target.find('?');
    const auto query = q == std::string::npos ? std::string_view{}
                                              : std::string_view(req.target).substr(q + 1);
    auto response = handle_query(*cfg, query);
    res.status = response.status;
    res.set_content(std::move(response.body), response.content_type);
  });

  auto not_allowed = [](const httplib::Request&, httplib::Response& res) {
    res.status = 405;
    res.set_header("Allow", "GET");
    res.set_content("{\n  \"error\": \"MethodNotAllowed\"\n}\n", "application/json");
  };
  http.Post("/wls", not_allowed);
  http.Put("/wls", not_allowed);
  http.Patch("/wls", not_allowed);
  http.Delete("/wls", not_allowed);
  http.Options("/wls", not_allowed);

  // SO_REUSEADDR only; the library default also sets SO_REUSEPORT, which
  // would let a second server share the port silently.
  http.set_socket_options([](int sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });

  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.status == 404 && res.body.empty())
      res.set_content("{\n  \"error\": \"NotFound\"\n}\n", "application/json");
  });
}

LicenseServer::~LicenseServer() { stop(); }

int LicenseServer::bind()
{
  const auto& s = impl_->config.server;
  int port = s.port;
  if (port == 0)
    port = impl_->http.bind_to_any_port(s.bind);
  else if (!impl_->http.bind_to_port(s.bind, port))
    port = -1;
  if (port < 0)
    throw BindError("cannot bind " + s.bind + ":" + std::to_string(s.port));
  impl_->bound = true;
  return port;
}

void LicenseServer::listen()
{
  if (!impl_->bound)
    throw Error("LicenseServer::listen() called before bind()");
  impl_->http.listen_after_bind();
}

void LicenseServer::stop() { impl_->http.stop(); }

const WlsConfig& LicenseServer::config() const noexcept { return impl_->config; }

void serve(WlsConfig config)
{
  // Block the termination signals before any worker thread exists so that
  // only the waiter below ever receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  LicenseServer server(std::move(config));
  try {
    server.bind();
  } catch (...) {
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    throw;
  }

  std::thread waiter([&] {
    int received = 0;
    sigwait(&signals, &received);
    server.stop();
  });

  server.listen();

  // listen() may also return without a signal (e.g. accept failure); wake
  // the waiter so it can be joined.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
}

}  // namespace wls
