#ifndef RULEBENCH_EVAL_HTTP_TRANSPORT_HPP
#define RULEBENCH_EVAL_HTTP_TRANSPORT_HPP

#include <chrono>
#include <stdexcept>
#include <string>

#include <httplib.h>

#include "rulebench/eval/http.hpp"

namespace rulebench {

namespace eval_detail {

// "http://host:port/path" -> {"http://host:port", "/path"}
inline std::pair<std::string, std::string> split_url(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos)
    throw std::invalid_argument("split_url: url has no scheme: " + url);
  const std::size_t path = url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, "/"};
  return {url.substr(0, path), url.substr(path)};
}

}  // namespace eval_detail

inline Transport make_http_transport(std::chrono::seconds timeout) {
  return [timeout](const HttpRequest& req) -> HttpResponse {
    HttpResponse resp;
    try {
      const auto [origin, path] = eval_detail::split_url(req.url);
      httplib::Client client(origin);
      client.set_connection_timeout(timeout.count(), 0);
      client.set_read_timeout(timeout.count(), 0);
      client.set_write_timeout(timeout.count(), 0);

      httplib::Headers headers;
      std::string content_type = "application/json";
      for (const auto& [k, v] : req.headers) {
        if (k == "Content-Type")
          content_type = v;
        else
          headers.emplace(k, v);
      }

      const httplib::Result result = client.Post(path, headers, req.body, content_type);
      if (!result) {
        resp.error = "transport: " + httplib::to_string(result.error());
        return resp;
      }
      resp.transport_ok = true;
      resp.status = result->status;
      resp.body = result->body;
    } catch (const std::exception& ex) {
      resp.error = std::string("transport: ") + ex.what();
    }
    return resp;
  };
}

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_HTTP_TRANSPORT_HPP
