#ifndef RULEBENCH_EVAL_HTTP_HPP
#define RULEBENCH_EVAL_HTTP_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

// Minimal wire types. Everything above this layer is written against the
// Transport function so tests can swap in scripted fakes; the real
// httplib-backed transport lives in http_transport.hpp and is only linked
// into the CLI binary.

namespace rulebench {

struct HttpRequest {
  std::string method = "POST";
  std::string url;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string body;
};

struct HttpResponse {
  bool transport_ok = false;  // false: connection-level failure, see error
  int status = 0;
  std::string body;
  std::string error;
};

using Transport = std::function<HttpResponse(const HttpRequest&)>;

}  // namespace rulebench

#endif  // RULEBENCH_EVAL_HTTP_HPP
