#include <string>
#include <vector>

#include "rulebench/cli/commands.hpp"
#include "rulebench/eval/http_transport.hpp"

int main(int argc, char** argv) {
  rulebench::transport_factory() = [](std::chrono::seconds timeout) {
    return rulebench::make_http_transport(timeout);
  };
  return rulebench::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
