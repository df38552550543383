#pragma once

// Binds ArenaService to an httplib server.

#include "httplib.h"

#include "planar_arena/service.hpp"

namespace parena {

inline void install_routes(httplib::Server& server, ArenaService& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/games.*)", forward);
  server.Post(R"(/games.*)", forward);
}

/// Blocks until the server stops.
inline bool serve(const std::string& host, int port) {
  ArenaService service;
  httplib::Server server;
  install_routes(server, service);
  return server.listen(host, port);
}

}  // namespace parena
