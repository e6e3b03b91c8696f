#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include "elicit/dataset.hpp"
#include "elicit/engine.hpp"
#include "elicit/error.hpp"
#include "elicit/profile.hpp"
#include "elicit/report.hpp"

namespace py = pybind11;

namespace {

std::set<std::string> ids(const elicit::TechniqueSet& set) {
  std::set<std::string> out;
  for (const auto& t : set) out.insert(t.str());
  return out;
}

elicit::TechniqueSet technique_set(const std::set<std::string>& names) {
  elicit::TechniqueSet out;
  for (const auto& n : names) out.insert(elicit::TechniqueId(n));
  return out;
}

std::set<elicit::AttributeValue> coordinates(const std::map<std::string, std::vector<std::string>>& values) {
  std::set<elicit::AttributeValue> out;
  for (const auto& [attribute, list] : values) {
    for (const auto& v : list) out.insert({attribute, v});
  }
  return out;
}

std::map<std::string, std::vector<std::string>> grouped(const std::set<elicit::AttributeValue>& values) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& at : values) out[at.attribute].push_back(at.value);
  return out;
}

elicit::ResolvedProfile resolve_payload(const std::string& json_text, const elicit::Dataset& d) {
  nlohmann::json payload;
  try {
    payload = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw elicit::Error(elicit::ErrorCode::Parse, "", e.what());
  }
  return elicit::resolve_profile(elicit::parse_profile_json(payload), d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Requirement elicitation technique selection over project, people and process matrices";

  // Leaked on purpose: the exception type must outlive interpreter teardown.
  static py::exception<elicit::Error>* error_type = new py::exception<elicit::Error>(m, "ElicitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const elicit::Error& e) {
      py::object instance = py::handle(error_type->ptr())(e.diagnostic());
      instance.attr("code") = std::string(elicit::to_string(e.code()));
      instance.attr("field") = e.field();
      PyErr_SetObject(error_type->ptr(), instance.ptr());
    }
  });

  py::class_<elicit::Dataset, std::shared_ptr<elicit::Dataset>>(m, "Dataset")
      .def_property_readonly("version", &elicit::Dataset::version)
      .def_property_readonly("provenance", [](const elicit::Dataset& d) { return d.header().provenance; })
      .def_property_readonly("threshold", [](const elicit::Dataset& d) { return d.threshold().value(); })
      .def_property_readonly("process_models", &elicit::Dataset::process_models)
      .def("techniques",
           [](const elicit::Dataset& d, std::optional<std::string> category) {
             std::optional<elicit::TechniqueCategory> filter;
             if (category) {
               filter = elicit::parse_category(*category);
               if (!filter) throw elicit::Error(elicit::ErrorCode::Domain, "category", "unknown category '" + *category + "'");
             }
             std::vector<std::string> out;
             for (const auto& r : d.registry().list(filter)) out.push_back(r.id.str());
             return out;
           },
           py::arg("category") = py::none(), "Technique ids sorted, optionally filtered by category.")
      .def("lookup", [](const elicit::Dataset& d, const std::string& name) { return d.registry().lookup(name).str(); },
           py::arg("name"), "Resolve a technique name or alias to its id.")
      .def("taxonomy_json", [](const elicit::Dataset& d) { return elicit::dump(elicit::taxonomy_to_json(d)); })
      .def("serialize", &elicit::serialize_dataset)
      .def("validate",
           [](const elicit::Dataset& d) {
             std::vector<py::dict> out;
             for (const auto& f : elicit::validate_dataset(d).findings) {
               py::dict item;
               item["severity"] = std::string(elicit::to_string(f.severity));
               item["code"] = f.code;
               item["subject"] = f.subject;
               item["message"] = f.message;
               out.push_back(std::move(item));
             }
             return out;
           })
      .def("__eq__", [](const elicit::Dataset& a, const elicit::Dataset& b) { return a == b; });

  m.def("default_dataset", [] { return std::make_shared<elicit::Dataset>(elicit::default_dataset()); });
  m.def("load_dataset", [](const std::filesystem::path& path) {
    return std::make_shared<elicit::Dataset>(elicit::load_dataset_file(path));
  }, py::arg("path"));
  m.def("load_dataset_text", [](const std::string& text, const std::string& source) {
    return std::make_shared<elicit::Dataset>(elicit::load_dataset_text(text, source));
  }, py::arg("text"), py::arg("source") = "<dataset>");

  m.def("is_process_selected",
        [](double score, double threshold) {
          const auto t = elicit::Score::from_hundredths(static_cast<int>(std::lround(threshold * 100.0)));
          return elicit::is_process_selected(score, t);
        },
        py::arg("score"), py::arg("threshold") = 0.5);

  py::class_<elicit::ProjectProfile>(m, "Profile")
      .def(py::init([](const std::string& label, const std::map<std::string, std::vector<std::string>>& project,
                       const std::map<std::string, std::vector<std::string>>& people,
                       std::optional<std::string> process) {
             return elicit::ProjectProfile{label, coordinates(project), coordinates(people), std::move(process)};
           }),
           py::arg("label") = "", py::arg("project") = std::map<std::string, std::vector<std::string>>{},
           py::arg("people") = std::map<std::string, std::vector<std::string>>{},
           py::arg("process") = py::none())
      .def_readwrite("label", &elicit::ProjectProfile::label)
      .def_property_readonly("project", [](const elicit::ProjectProfile& p) { return grouped(p.project_values); })
      .def_property_readonly("people", [](const elicit::ProjectProfile& p) { return grouped(p.people_values); })
      .def_readwrite("process", &elicit::ProjectProfile::process_model);

  py::class_<elicit::FeasibilityDecision>(m, "Decision")
      .def(py::init([](const std::string& technique, const std::string& verdict, const std::string& reason,
                       const std::string& decided_by) {
             auto v = elicit::parse_verdict(verdict);
             auto who = elicit::parse_decided_by(decided_by);
             if (!v) throw elicit::Error(elicit::ErrorCode::InvalidDecision, "verdict", "verdict must be keep or exclude");
             if (!who) throw elicit::Error(elicit::ErrorCode::InvalidDecision, "decided_by", "decided_by must be user-view or analyst-view");
             return elicit::FeasibilityDecision{elicit::TechniqueId(technique), *v, reason, *who};
           }),
           py::arg("technique"), py::arg("verdict"), py::arg("reason"), py::arg("decided_by") = "analyst-view")
      .def_property_readonly("technique", [](const elicit::FeasibilityDecision& d) { return d.technique.str(); })
      .def_property_readonly("verdict", [](const elicit::FeasibilityDecision& d) { return std::string(elicit::to_string(d.verdict)); })
      .def_readonly("reason", &elicit::FeasibilityDecision::reason);

  py::class_<elicit::Recommendation>(m, "Recommendation")
      .def_readonly("label", &elicit::Recommendation::label)
      .def_readonly("dataset_version", &elicit::Recommendation::dataset_version)
      .def_property_readonly("per_matrix",
                             [](const elicit::Recommendation& r) {
                               return std::map<std::string, std::set<std::string>>{
                                   {"project", ids(r.per_matrix.project)},
                                   {"people", ids(r.per_matrix.people)},
                                   {"process", ids(r.per_matrix.process)}};
                             })
      .def_property_readonly("union_set", [](const elicit::Recommendation& r) { return ids(r.union_set); })
      .def_property_readonly("final_set", [](const elicit::Recommendation& r) { return ids(r.final_set); })
      .def_property_readonly("warnings",
                             [](const elicit::Recommendation& r) {
                               std::vector<std::string> out;
                               for (const auto& w : r.warnings) out.push_back(w.code);
                               return out;
                             })
      .def("to_json", [](const elicit::Recommendation& r) { return elicit::dump(elicit::to_json(r)); })
      .def("to_text", [](const elicit::Recommendation& r) { return elicit::render_text(r); });

  m.def("parse_profile_text",
        [](const std::string& text, const elicit::Dataset& d) {
          auto resolved = elicit::resolve_profile(elicit::parse_profile_text(text), d);
          return py::make_tuple(resolved.profile, resolved.decisions);
        },
        py::arg("text"), py::arg("dataset"), "Parse a profile document; returns (Profile, [Decision]).");
  m.def("parse_profile_json",
        [](const std::string& json_text, const elicit::Dataset& d) {
          auto resolved = resolve_payload(json_text, d);
          return py::make_tuple(resolved.profile, resolved.decisions);
        },
        py::arg("json_text"), py::arg("dataset"), "Parse a profile payload; returns (Profile, [Decision]).");

  m.def("select_by_project",
        [](const std::map<std::string, std::vector<std::string>>& values, const elicit::Dataset& d) {
          return ids(elicit::select_by_project(coordinates(values), d));
        },
        py::arg("values"), py::arg("dataset"));
  m.def("select_by_people",
        [](const std::map<std::string, std::vector<std::string>>& values, const elicit::Dataset& d) {
          return ids(elicit::select_by_people(coordinates(values), d));
        },
        py::arg("values"), py::arg("dataset"));
  m.def("select_by_process",
        [](std::optional<std::string> model, const elicit::Dataset& d) {
          return ids(elicit::select_by_process(model, d));
        },
        py::arg("model"), py::arg("dataset"));
  m.def("combine",
        [](const std::set<std::string>& a, const std::set<std::string>& b, const std::set<std::string>& c) {
          return ids(elicit::combine(technique_set(a), technique_set(b), technique_set(c)));
        });
  m.def("apply_feasibility",
        [](const std::set<std::string>& union_set, const std::vector<elicit::FeasibilityDecision>& decisions) {
          return ids(elicit::apply_feasibility(technique_set(union_set), decisions));
        },
        py::arg("union_set"), py::arg("decisions"));
  m.def("recommend", &elicit::recommend, py::arg("profile"), py::arg("dataset"),
        py::arg("decisions") = std::vector<elicit::FeasibilityDecision>{});
  m.def("what_if_diff",
        [](const elicit::ProjectProfile& base, const elicit::ProjectProfile& variant, const elicit::Dataset& d) {
          const auto diff = elicit::what_if_diff(base, variant, d);
          return std::map<std::string, std::set<std::string>>{
              {"added", ids(diff.added)}, {"removed", ids(diff.removed)}, {"unchanged", ids(diff.unchanged)}};
        },
        py::arg("base"), py::arg("variant"), py::arg("dataset"));
}
