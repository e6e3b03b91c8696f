#include "elicit/service.hpp"

#include <httplib.h>

#include "elicit/engine.hpp"
#include "elicit/error.hpp"
#include "elicit/profile.hpp"
#include "elicit/report.hpp"

namespace elicit {

namespace {

nlohmann::json parse_body(std::string_view body) {
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, "", std::string("request body is not JSON: ") + e.what());
  }
}

ResolvedProfile resolve(const nlohmann::json& payload, const std::string& prefix, const Dataset& d) {
  try {
    return resolve_profile(parse_profile_json(payload), d);
  } catch (const Error& e) {
    if (prefix.empty()) throw;
    throw Error(e.code(), prefix + (e.field().empty() ? "" : "." + e.field()), e.message());
  }
}

}  // namespace

Service::Service(std::shared_ptr<const Dataset> dataset) : dataset_(std::move(dataset)) {
  taxonomy_body_ = dump(taxonomy_to_json(*dataset_));
  meta_body_ = dump(dataset_meta_to_json(*dataset_));
  ordered_json health;
  health["status"] = "ok";
  health["dataset_version"] = dataset_->version();
  health_body_ = dump(health);
}

ServiceResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) const {
  try {
    if (method == "GET") {
      if (path == "/api/health") return {200, health_body_};
      if (path == "/api/taxonomy") return {200, taxonomy_body_};
      if (path == "/api/dataset/meta") return {200, meta_body_};
    } else if (method == "POST") {
      if (path == "/api/recommend") return recommend(body);
      if (path == "/api/whatif") return whatif(body);
    }
    ordered_json err{{"code", "NOT_FOUND"},
                     {"field", ""},
                     {"message", std::string(method) + " " + std::string(path) + " is not an endpoint"},
                     {"dataset_version", dataset_->version()}};
    return {404, dump(err)};
  } catch (const Error& e) {
    return {400, dump(error_to_json(e, dataset_->version()))};
  } catch (const std::exception& e) {
    ordered_json err{{"code", "INTERNAL"}, {"field", ""}, {"message", e.what()},
                     {"dataset_version", dataset_->version()}};
    return {500, dump(err)};
  }
}

ServiceResponse Service::recommend(std::string_view body) const {
  const auto payload = parse_body(body);
  const auto resolved = resolve(payload, "", *dataset_);
  const auto rec = elicit::recommend(resolved.profile, *dataset_, resolved.decisions);
  return {200, dump(to_json(rec))};
}

ServiceResponse Service::whatif(std::string_view body) const {
  const auto payload = parse_body(body);
  if (!payload.is_object()) throw Error(ErrorCode::Parse, "", "what-if payload must be an object");
  for (const auto& [key, value] : payload.items()) {
    if (key != "base" && key != "variant") throw Error(ErrorCode::Parse, key, "unknown key '" + key + "'");
  }
  for (const char* key : {"base", "variant"}) {
    if (!payload.contains(key)) throw Error(ErrorCode::Parse, key, "missing profile");
  }
  const auto base = resolve(payload.at("base"), "base", *dataset_);
  const auto variant = resolve(payload.at("variant"), "variant", *dataset_);
  const auto diff = what_if_diff(base.profile, variant.profile, *dataset_);
  return {200, dump(to_json(diff, dataset_->version()))};
}

void Service::mount(httplib::Server& server) const {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const auto out = handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server.Get("/api/health", forward);
  server.Get("/api/taxonomy", forward);
  server.Get("/api/dataset/meta", forward);
  server.Post("/api/recommend", forward);
  server.Post("/api/whatif", forward);
}

}  // namespace elicit
