#include "elicit/report.hpp"

#include <sstream>

namespace elicit {

namespace {

ordered_json set_to_json(const TechniqueSet& set) {
  ordered_json out = ordered_json::array();
  for (const auto& t : set) out.push_back(t.str());
  return out;
}

std::string join(const TechniqueSet& set) {
  if (set.empty()) return "(none)";
  std::string out;
  for (const auto& t : set) {
    if (!out.empty()) out += ", ";
    out += t.str();
  }
  return out;
}

[[noreturn]] void shape_error(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::Parse, field, message);
}

TechniqueSet set_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) shape_error(field, "expected an array");
  TechniqueSet out;
  for (const auto& item : j) {
    if (!item.is_string()) shape_error(field, "expected technique ids");
    out.insert(TechniqueId(item.get<std::string>()));
  }
  return out;
}

std::optional<Dimension> parse_dimension(std::string_view text) {
  if (text == "project") return Dimension::Project;
  if (text == "people") return Dimension::People;
  if (text == "process") return Dimension::Process;
  return std::nullopt;
}

std::string_view matrix_letter(Dimension d) {
  switch (d) {
    case Dimension::Project: return "A";
    case Dimension::People: return "B";
    case Dimension::Process: return "C";
  }
  return "?";
}

std::string format_range(const ValueRange& r) {
  std::ostringstream os;
  if (r.low) os << *r.low;
  os << "..";
  if (r.high) os << *r.high;
  return os.str();
}

}  // namespace

ordered_json to_json(const Recommendation& rec) {
  ordered_json out;
  out["dataset_version"] = rec.dataset_version;
  out["label"] = rec.label;
  out["per_matrix"] = {{"project", set_to_json(rec.per_matrix.project)},
                       {"people", set_to_json(rec.per_matrix.people)},
                       {"process", set_to_json(rec.per_matrix.process)}};
  out["union"] = set_to_json(rec.union_set);
  out["decisions"] = ordered_json::array();
  for (const auto& d : rec.feasibility) {
    out["decisions"].push_back({{"technique", d.technique.str()},
                                {"verdict", to_string(d.verdict)},
                                {"decided_by", to_string(d.decided_by)},
                                {"reason", d.reason}});
  }
  out["final"] = set_to_json(rec.final_set);
  out["trace"] = ordered_json::object();
  for (const auto& [t, entries] : rec.trace) {
    ordered_json list = ordered_json::array();
    for (const auto& e : entries) {
      list.push_back({{"matrix", to_string(e.matrix)}, {"attribute", e.attribute}, {"value", e.value}, {"cell", e.cell}});
    }
    out["trace"][t.str()] = std::move(list);
  }
  out["warnings"] = ordered_json::array();
  for (const auto& w : rec.warnings) out["warnings"].push_back({{"code", w.code}, {"message", w.message}});
  return out;
}

Recommendation recommendation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) shape_error("", "expected an object");
  auto field = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) shape_error(key, "missing");
    return j.at(key);
  };
  auto text = [](const nlohmann::json& v, const std::string& f) {
    if (!v.is_string()) shape_error(f, "expected a string");
    return v.get<std::string>();
  };

  Recommendation rec;
  rec.dataset_version = text(field("dataset_version"), "dataset_version");
  rec.label = text(field("label"), "label");
  const auto& per = field("per_matrix");
  if (!per.is_object()) shape_error("per_matrix", "expected an object");
  rec.per_matrix.project = set_from_json(per.value("project", nlohmann::json()), "per_matrix.project");
  rec.per_matrix.people = set_from_json(per.value("people", nlohmann::json()), "per_matrix.people");
  rec.per_matrix.process = set_from_json(per.value("process", nlohmann::json()), "per_matrix.process");
  rec.union_set = set_from_json(field("union"), "union");
  rec.final_set = set_from_json(field("final"), "final");

  const auto& decisions = field("decisions");
  if (!decisions.is_array()) shape_error("decisions", "expected an array");
  for (const auto& d : decisions) {
    auto verdict = parse_verdict(text(d.value("verdict", nlohmann::json()), "decisions.verdict"));
    auto who = parse_decided_by(text(d.value("decided_by", nlohmann::json()), "decisions.decided_by"));
    if (!verdict || !who) shape_error("decisions", "bad verdict or decided_by");
    rec.feasibility.push_back({TechniqueId(text(d.value("technique", nlohmann::json()), "decisions.technique")),
                               *verdict, text(d.value("reason", nlohmann::json()), "decisions.reason"), *who});
  }

  const auto& trace = field("trace");
  if (!trace.is_object()) shape_error("trace", "expected an object");
  for (const auto& [t, entries] : trace.items()) {
    if (!entries.is_array()) shape_error("trace." + t, "expected an array");
    auto& list = rec.trace[TechniqueId(t)];
    for (const auto& e : entries) {
      auto dim = parse_dimension(text(e.value("matrix", nlohmann::json()), "trace.matrix"));
      if (!dim) shape_error("trace." + t, "unknown matrix");
      list.push_back({*dim, text(e.value("attribute", nlohmann::json()), "trace.attribute"),
                      text(e.value("value", nlohmann::json()), "trace.value"),
                      text(e.value("cell", nlohmann::json()), "trace.cell")});
    }
  }

  const auto& warnings = field("warnings");
  if (!warnings.is_array()) shape_error("warnings", "expected an array");
  for (const auto& w : warnings) {
    rec.warnings.push_back({text(w.value("code", nlohmann::json()), "warnings.code"),
                            text(w.value("message", nlohmann::json()), "warnings.message")});
  }
  return rec;
}

ordered_json to_json(const Diff& diff, const std::string& dataset_version) {
  ordered_json out;
  out["dataset_version"] = dataset_version;
  out["added"] = set_to_json(diff.added);
  out["removed"] = set_to_json(diff.removed);
  out["unchanged"] = set_to_json(diff.unchanged);
  return out;
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json out;
  out["ok"] = report.ok();
  out["errors"] = report.error_count();
  out["warnings"] = report.warning_count();
  out["findings"] = ordered_json::array();
  for (const auto& f : report.findings) {
    out["findings"].push_back(
        {{"severity", to_string(f.severity)}, {"code", f.code}, {"subject", f.subject}, {"message", f.message}});
  }
  return out;
}

ordered_json error_to_json(const Error& error, const std::string& dataset_version) {
  ordered_json out;
  out["code"] = to_string(error.code());
  out["field"] = error.field();
  out["message"] = error.message();
  if (!dataset_version.empty()) out["dataset_version"] = dataset_version;
  return out;
}

ordered_json taxonomy_to_json(const Dataset& d) {
  ordered_json out;
  out["dataset_version"] = d.version();
  out["categories"] = ordered_json::array();
  for (auto c : kCatalogueCategories) out["categories"].push_back(to_string(c));
  out["fallback_category"] = to_string(TechniqueCategory::Other);

  out["techniques"] = ordered_json::array();
  for (const auto& r : d.registry().list()) {
    out["techniques"].push_back({{"id", r.id.str()},
                                 {"display_name", r.display_name},
                                 {"category", to_string(r.category)},
                                 {"aliases", r.aliases},
                                 {"description", r.description}});
  }

  ordered_json dims;
  for (auto dim : {Dimension::Project, Dimension::People, Dimension::Process}) {
    ordered_json attrs = ordered_json::array();
    for (const auto& a : d.taxonomy(dim).attributes()) {
      ordered_json attr;
      attr["id"] = a.id;
      attr["kind"] = to_string(a.kind);
      if (a.role) attr["role"] = to_string(*a.role);
      attr["values"] = ordered_json::array();
      for (const auto& v : a.values) {
        ordered_json value{{"id", v.id}};
        if (v.range) {
          value["range"] = {{"low", v.range->low ? ordered_json(*v.range->low) : ordered_json(nullptr)},
                            {"high", v.range->high ? ordered_json(*v.range->high) : ordered_json(nullptr)}};
        }
        attr["values"].push_back(std::move(value));
      }
      attrs.push_back(std::move(attr));
    }
    dims[std::string(to_string(dim))] = std::move(attrs);
  }
  out["dimensions"] = std::move(dims);
  out["process_models"] = d.process_models();
  return out;
}

ordered_json dataset_meta_to_json(const Dataset& d) {
  ordered_json out;
  out["dataset_version"] = d.version();
  out["provenance"] = d.header().provenance;
  out["threshold"] = d.threshold().str();
  out["techniques"] = d.registry().size();
  out["cells"] = {{"project", d.project_matrix().positive_cells()},
                  {"people", d.people_matrix().positive_cells()},
                  {"process", d.process_matrix().scored_cells()}};
  return out;
}

std::string dump(const ordered_json& j) {
  return j.dump(2) + "\n";
}

std::string render_text(const Recommendation& rec) {
  std::ostringstream os;
  os << "Recommendation: " << (rec.label.empty() ? "(unlabelled)" : rec.label)
     << " [dataset " << rec.dataset_version << "]\n";
  os << "Project matrix (" << rec.per_matrix.project.size() << "): " << join(rec.per_matrix.project) << "\n";
  os << "People matrix (" << rec.per_matrix.people.size() << "): " << join(rec.per_matrix.people) << "\n";
  os << "Process matrix (" << rec.per_matrix.process.size() << "): " << join(rec.per_matrix.process) << "\n";
  os << "Union (" << rec.union_set.size() << "): " << join(rec.union_set) << "\n";
  os << "Feasibility:";
  if (rec.feasibility.empty()) os << " (no decisions)";
  os << "\n";
  for (const auto& d : rec.feasibility) {
    os << "  " << to_string(d.verdict) << " " << d.technique.str() << " [" << to_string(d.decided_by)
       << "] " << d.reason << "\n";
  }
  os << "Final (" << rec.final_set.size() << "): " << join(rec.final_set) << "\n";
  os << "Trace:\n";
  for (const auto& [t, entries] : rec.trace) {
    os << "  " << t.str() << "\n";
    for (const auto& e : entries) {
      os << "    " << matrix_letter(e.matrix) << " " << to_string(e.matrix) << " " << e.attribute << "=" << e.value
         << " -> " << e.cell << "\n";
    }
  }
  os << "Warnings:";
  if (rec.warnings.empty()) os << " (none)";
  os << "\n";
  for (const auto& w : rec.warnings) os << "  " << w.code << ": " << w.message << "\n";
  return os.str();
}

std::string render_text(const Diff& diff, const std::string& base_label, const std::string& variant_label) {
  std::ostringstream os;
  os << "What-if: " << base_label << " -> " << variant_label << "\n";
  os << "Added (" << diff.added.size() << "): " << join(diff.added) << "\n";
  os << "Removed (" << diff.removed.size() << "): " << join(diff.removed) << "\n";
  os << "Unchanged (" << diff.unchanged.size() << "): " << join(diff.unchanged) << "\n";
  return os.str();
}

std::string render_text(const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& f : report.findings) {
    os << to_string(f.severity) << " " << f.code << " " << f.subject << ": " << f.message << "\n";
  }
  os << report.error_count() << " error(s), " << report.warning_count() << " warning(s)\n";
  return os.str();
}

std::string render_taxonomy_text(const Dataset& d) {
  std::ostringstream os;
  os << "Dataset " << d.version() << " (threshold " << d.threshold().str() << ")\n";
  os << "Techniques (" << d.registry().size() << "):\n";
  for (auto category : {TechniqueCategory::Traditional, TechniqueCategory::Collaborative,
                        TechniqueCategory::Cognitive, TechniqueCategory::Observational, TechniqueCategory::Other}) {
    const auto members = d.registry().list(category);
    if (members.empty()) continue;
    os << "  " << to_string(category) << ":\n";
    for (const auto& r : members) os << "    " << r.id.str() << "  " << r.display_name << "\n";
  }
  for (auto dim : {Dimension::Project, Dimension::People, Dimension::Process}) {
    os << to_string(dim) << " attributes:\n";
    for (const auto& a : d.taxonomy(dim).attributes()) {
      os << "  " << a.id << " (" << to_string(a.kind) << "):";
      for (const auto& v : a.values) {
        os << " " << v.id;
        if (v.range) os << "[" << format_range(*v.range) << "]";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string render_explanation(const Recommendation& rec, const ProjectProfile& profile, const Dataset& d,
                               const TechniqueId& technique) {
  std::ostringstream os;
  const auto trace = rec.trace.find(technique);
  if (trace != rec.trace.end() && !trace->second.empty()) {
    os << technique.str() << ": selected by " << trace->second.size() << " cell(s)\n";
    for (const auto& e : trace->second) {
      os << "  " << matrix_letter(e.matrix) << " " << to_string(e.matrix) << " " << e.attribute << "=" << e.value
         << " -> " << e.cell;
      if (e.matrix == Dimension::Process) os << " >= " << d.threshold().str();
      os << "\n";
    }
    for (const auto& decision : rec.feasibility) {
      if (decision.technique == technique) {
        os << "  feasibility: " << to_string(decision.verdict) << " [" << to_string(decision.decided_by) << "] "
           << decision.reason << "\n";
      }
    }
    os << "  final: " << (rec.final_set.contains(technique) ? "recommended" : "excluded") << "\n";
    return os.str();
  }

  os << technique.str() << ": not selected: no supporting cell\n";
  for (const auto& at : profile.project_values) {
    os << "  A project " << to_string(at) << " -> " << (d.project_matrix().selects(technique, at) ? "R" : "-") << "\n";
  }
  for (const auto& at : profile.people_values) {
    os << "  B people " << to_string(at) << " -> " << (d.people_matrix().selects(technique, at) ? "Y" : "N") << "\n";
  }
  if (profile.process_model) {
    auto score = d.process_matrix().score(technique, *profile.process_model);
    os << "  C process model=" << *profile.process_model << " -> "
       << (score ? score->str() + " < " + d.threshold().str() : std::string("no score")) << "\n";
  }
  if (profile.empty()) os << "  (profile declares no attribute values)\n";
  return os.str();
}

}  // namespace elicit
