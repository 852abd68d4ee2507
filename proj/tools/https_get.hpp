#pragma once

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "carryless/errors.hpp"

#include <string>

namespace carryless::tools {

/// GET over HTTPS via cpp-httplib; any failure becomes unavailable_error.
inline std::string https_get(const std::string& url) {
  const std::string scheme = "https://";
  if (url.rfind(scheme, 0) != 0) throw unavailable_error("unsupported URL " + url);
  auto slash = url.find('/', scheme.size());
  std::string host = url.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : url.substr(slash);

  httplib::Client client(host);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(path);
  if (!res) throw unavailable_error("GET " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw unavailable_error("GET " + url + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

}  // namespace carryless::tools
