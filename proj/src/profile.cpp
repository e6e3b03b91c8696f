#include "elicit/profile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "elicit/error.hpp"
#include "elicit/sectioned_text.hpp"

namespace elicit {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::optional<int> line, const std::string& field,
                             const std::string& message) {
  throw Error(ErrorCode::Parse, field, message, source, line);
}

}  // namespace

ProfileDocument parse_profile_text(std::string_view text, const std::string& source) {
  const SectionedText parsed = parse_sectioned_text(text, source);
  ProfileDocument doc;
  doc.source = source;
  bool have_label = false;

  for (const auto& section : parsed.sections) {
    if (!section.argument.empty()) {
      parse_fail(source, section.line, section.name, "section [" + section.name + "] takes no argument");
    }
    if (section.name == "profile") {
      for (const auto& line : section.lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value)) parse_fail(source, line.number, "profile", "expected 'key = value'");
        if (key != "label") parse_fail(source, line.number, "profile." + key, "unknown key '" + key + "'");
        if (have_label) parse_fail(source, line.number, "profile.label", "label given twice");
        doc.label = value;
        have_label = true;
      }
    } else if (section.name == "project" || section.name == "people") {
      auto& entries = section.name == "project" ? doc.project : doc.people;
      for (const auto& line : section.lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value)) {
          parse_fail(source, line.number, section.name, "expected 'attribute = value, value'");
        }
        auto values = split_list(value);
        for (const auto& v : values) {
          if (v.empty()) parse_fail(source, line.number, section.name + "." + key, "empty value in list");
        }
        entries.push_back({key, std::move(values), line.number});
      }
    } else if (section.name == "process") {
      for (const auto& line : section.lines) {
        std::string key, value;
        if (!split_key_value(line.text, key, value)) parse_fail(source, line.number, "process", "expected 'model = id'");
        if (key != kProcessAttribute) parse_fail(source, line.number, "process." + key, "unknown key '" + key + "'");
        if (doc.process_model) parse_fail(source, line.number, "process.model", "process model given twice");
        doc.process_model = value;
        doc.process_line = line.number;
      }
    } else if (section.name == "feasibility") {
      for (const auto& line : section.lines) {
        auto cells = split_cells(line.text);
        if (cells.size() != 4) {
          parse_fail(source, line.number, "feasibility", "expected 'keep|exclude | technique | user-view|analyst-view | reason'");
        }
        doc.decisions.push_back({cells[0], cells[1], cells[2], cells[3], line.number});
      }
    } else {
      parse_fail(source, section.line, "section", "unknown section [" + section.name + "]");
    }
  }
  return doc;
}

ProfileDocument parse_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "", "cannot open profile file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile_text(buffer.str(), path.string());
}

namespace {

const std::string& require_string(const nlohmann::json& j, const std::string& field, const std::string& source) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, field, "expected a string", source);
  return j.get_ref<const std::string&>();
}

std::vector<ProfileDocument::Entry> json_entries(const nlohmann::json& j, const std::string& section,
                                                 const std::string& source) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, section, "expected an object", source);
  std::vector<ProfileDocument::Entry> out;
  for (const auto& [key, value] : j.items()) {
    ProfileDocument::Entry entry{key, {}, std::nullopt};
    const std::string field = section + "." + key;
    if (value.is_string()) {
      entry.values.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        entry.values.push_back(require_string(value[i], field + "[" + std::to_string(i) + "]", source));
      }
    } else {
      throw Error(ErrorCode::Parse, field, "expected a string or an array of strings", source);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

ProfileDocument parse_profile_json(const nlohmann::json& payload, const std::string& source) {
  if (!payload.is_object()) throw Error(ErrorCode::Parse, "", "profile payload must be an object", source);
  ProfileDocument doc;
  doc.source = source;
  for (const auto& [key, value] : payload.items()) {
    if (key == "label") {
      doc.label = require_string(value, "label", source);
    } else if (key == "project") {
      doc.project = json_entries(value, "project", source);
    } else if (key == "people") {
      doc.people = json_entries(value, "people", source);
    } else if (key == "process") {
      if (!value.is_null()) doc.process_model = require_string(value, "process", source);
    } else if (key == "decisions") {
      if (!value.is_array()) throw Error(ErrorCode::Parse, "decisions", "expected an array", source);
      for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& d = value[i];
        const std::string field = "decisions[" + std::to_string(i) + "]";
        if (!d.is_object()) throw Error(ErrorCode::Parse, field, "expected an object", source);
        ProfileDocument::Decision decision;
        for (const auto& [dk, dv] : d.items()) {
          const std::string f = field + "." + dk;
          if (dk == "verdict") decision.verdict = require_string(dv, f, source);
          else if (dk == "technique") decision.technique = require_string(dv, f, source);
          else if (dk == "decided_by") decision.decided_by = require_string(dv, f, source);
          else if (dk == "reason") decision.reason = require_string(dv, f, source);
          else throw Error(ErrorCode::Parse, f, "unknown key '" + dk + "'", source);
        }
        doc.decisions.push_back(std::move(decision));
      }
    } else {
      throw Error(ErrorCode::Parse, key, "unknown key '" + key + "'", source);
    }
  }
  return doc;
}

nlohmann::ordered_json profile_to_json(const ProfileDocument& doc) {
  nlohmann::ordered_json out;
  out["label"] = doc.label;
  auto entries = [](const std::vector<ProfileDocument::Entry>& list) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& e : list) {
      auto& slot = obj[e.attribute];
      if (slot.is_null()) slot = nlohmann::ordered_json::array();
      for (const auto& v : e.values) slot.push_back(v);
    }
    return obj;
  };
  out["project"] = entries(doc.project);
  out["people"] = entries(doc.people);
  out["process"] = doc.process_model ? nlohmann::ordered_json(*doc.process_model) : nlohmann::ordered_json(nullptr);
  out["decisions"] = nlohmann::ordered_json::array();
  for (const auto& d : doc.decisions) {
    out["decisions"].push_back(
        {{"verdict", d.verdict}, {"technique", d.technique}, {"decided_by", d.decided_by}, {"reason", d.reason}});
  }
  return out;
}

ResolvedProfile resolve_profile(const ProfileDocument& doc, const Dataset& d) {
  ResolvedProfile out;
  out.profile.label = doc.label;

  auto located = [&](const std::optional<int>& line, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(e.code(), e.field(), e.message(), doc.source, line);
    }
  };

  auto resolve_entries = [&](const std::vector<ProfileDocument::Entry>& entries, const AttributeTaxonomy& taxonomy,
                             std::set<AttributeValue>& into) {
    const std::string dim(to_string(taxonomy.dimension()));
    std::map<std::string, std::size_t> ordinal_counts;
    for (const auto& entry : entries) {
      located(entry.line, [&] {
        const std::string field = dim + "." + entry.attribute;
        const Attribute* attribute = taxonomy.find(entry.attribute);
        if (attribute == nullptr) {
          throw Error(ErrorCode::Taxonomy, field, "unknown " + dim + " attribute '" + entry.attribute + "'");
        }
        for (std::size_t i = 0; i < entry.values.size(); ++i) {
          const auto& value = entry.values[i];
          if (!attribute->has_value(value)) {
            const std::string at = entry.values.size() > 1 ? field + "[" + std::to_string(i) + "]" : field;
            throw Error(ErrorCode::Taxonomy, at,
                        "unknown value '" + entry.attribute + "=" + value + "'");
          }
          if (into.insert({entry.attribute, value}).second && attribute->kind == AttributeKind::Ordinal &&
              ++ordinal_counts[entry.attribute] > 1) {
            throw Error(ErrorCode::Cardinality, field,
                        "ordinal attribute '" + entry.attribute + "' takes at most one value");
          }
        }
      });
    }
  };
  resolve_entries(doc.project, d.project_taxonomy(), out.profile.project_values);
  resolve_entries(doc.people, d.people_taxonomy(), out.profile.people_values);

  if (doc.process_model) {
    located(doc.process_line, [&] {
      if (!d.process_taxonomy().contains({std::string(kProcessAttribute), *doc.process_model})) {
        throw Error(ErrorCode::Taxonomy, "process.model", "unknown process model '" + *doc.process_model + "'");
      }
    });
    out.profile.process_model = doc.process_model;
  }

  for (std::size_t i = 0; i < doc.decisions.size(); ++i) {
    const auto& raw = doc.decisions[i];
    const std::string field = "decisions[" + std::to_string(i) + "]";
    located(raw.line, [&] {
      auto verdict = parse_verdict(raw.verdict);
      if (!verdict) throw Error(ErrorCode::InvalidDecision, field + ".verdict", "verdict must be keep or exclude");
      auto who = parse_decided_by(raw.decided_by);
      if (!who) {
        throw Error(ErrorCode::InvalidDecision, field + ".decided_by", "decided_by must be user-view or analyst-view");
      }
      if (trim(raw.reason).empty()) {
        throw Error(ErrorCode::InvalidDecision, field + ".reason", "a reason is required");
      }
      TechniqueId id;
      try {
        id = d.registry().lookup(raw.technique);
      } catch (const Error& e) {
        throw Error(e.code(), field + ".technique", e.message());
      }
      out.decisions.push_back({id, *verdict, raw.reason, *who});
    });
  }
  return out;
}

}  // namespace elicit
