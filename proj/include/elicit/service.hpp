#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "elicit/dataset.hpp"

namespace httplib {
class Server;
}

namespace elicit {

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Request handler over one immutable dataset. `handle` is a pure function of
/// its arguments, so requests may run concurrently in any order.
///
///   GET  /api/health        {"status": "ok", "dataset_version": ...}
///   GET  /api/taxonomy      registry and vocabularies
///   GET  /api/dataset/meta  version, provenance, threshold, cell counts
///   POST /api/recommend     profile payload -> recommendation report
///   POST /api/whatif        {"base": profile, "variant": profile} -> diff
///
/// Invalid bodies yield 400 with {code, field, message, dataset_version}.
class Service {
 public:
  explicit Service(std::shared_ptr<const Dataset> dataset);

  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

  /// Registers every endpoint on `server`.
  void mount(httplib::Server& server) const;

  const Dataset& dataset() const noexcept { return *dataset_; }

 private:
  ServiceResponse recommend(std::string_view body) const;
  ServiceResponse whatif(std::string_view body) const;

  std::shared_ptr<const Dataset> dataset_;
  std::string taxonomy_body_;
  std::string meta_body_;
  std::string health_body_;
};

}  // namespace elicit
