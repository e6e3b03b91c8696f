// HTTP front end over one immutable dataset.

#include <CLI11.hpp>
#include <httplib.h>

#include <cstdlib>
#include <iostream>
#include <memory>

#include "elicit/dataset.hpp"
#include "elicit/error.hpp"
#include "elicit/service.hpp"

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value != nullptr && *value != '\0' ? std::string(value) : std::move(fallback);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serve the elicitation technique engine over HTTP", "elicit-serve"};
  std::string dataset_path = env_or("ELICIT_DATASET", "");
  std::string bind = env_or("ELICIT_BIND", "127.0.0.1:8080");
  std::string static_dir;
  app.add_option("--dataset", dataset_path, "Dataset file (env ELICIT_DATASET; default: built-in dataset)");
  app.add_option("--bind", bind, "host:port to listen on (env ELICIT_BIND)");
  app.add_option("--static", static_dir, "Directory of UI assets to serve at /");
  CLI11_PARSE(app, argc, argv);

  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "elicit-serve: --bind must be host:port\n";
    return 1;
  }
  const std::string host = bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "elicit-serve: bad port in '" << bind << "'\n";
    return 1;
  }

  std::shared_ptr<const elicit::Dataset> dataset;
  try {
    dataset = dataset_path.empty() ? std::make_shared<const elicit::Dataset>(elicit::default_dataset())
                                   : std::make_shared<const elicit::Dataset>(elicit::load_dataset_file(dataset_path));
  } catch (const elicit::Error& e) {
    std::cerr << "elicit-serve: " << e.diagnostic() << "\n";
    return 2;
  }

  elicit::Service service(dataset);
  httplib::Server server;
  service.mount(server);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    std::cerr << "elicit-serve: cannot serve static directory '" << static_dir << "'\n";
    return 1;
  }

  std::cerr << "elicit-serve: dataset " << dataset->version() << " listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "elicit-serve: cannot listen on " << bind << "\n";
    return 1;
  }
  return 0;
}
