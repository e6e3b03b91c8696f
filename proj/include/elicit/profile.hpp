#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "elicit/dataset.hpp"
#include "elicit/engine.hpp"

namespace elicit {

/// A profile as written, before it is checked against a dataset. Text and
/// JSON documents both parse into this, then resolve through one path.
///
/// Text form:
///
///   [profile]
///   label = IPOS
///   [project]
///   size = large
///   [people]
///   stakeholder = novice, experienced
///   [process]
///   model = agile
///   [feasibility]
///   exclude | introspection | analyst-view | reason text
struct ProfileDocument {
  struct Entry {
    std::string attribute;
    std::vector<std::string> values;
    std::optional<int> line;
  };
  struct Decision {
    std::string verdict;
    std::string technique;
    std::string decided_by;
    std::string reason;
    std::optional<int> line;
  };

  std::string source;
  std::string label;
  std::vector<Entry> project;
  std::vector<Entry> people;
  std::optional<std::string> process_model;
  std::optional<int> process_line;
  std::vector<Decision> decisions;
};

/// Throws Parse on syntax errors and unknown sections or keys.
ProfileDocument parse_profile_text(std::string_view text, const std::string& source = "<profile>");
/// Throws Io when the file cannot be opened.
ProfileDocument parse_profile_file(const std::filesystem::path& path);

/// Payload form:
///   {"label": "...", "project": {"size": "large"},
///    "people": {"stakeholder": ["novice", "silent"]},
///    "process": "agile",
///    "decisions": [{"verdict": "exclude", "technique": "models",
///                   "decided_by": "analyst-view", "reason": "..."}]}
/// Attribute values may be a string or an array of strings; "process" may be
/// null or absent. Unknown keys throw Parse.
ProfileDocument parse_profile_json(const nlohmann::json& payload, const std::string& source = "<payload>");
nlohmann::ordered_json profile_to_json(const ProfileDocument& doc);

struct ResolvedProfile {
  ProjectProfile profile;
  std::vector<FeasibilityDecision> decisions;
};

/// Checks every reference against `dataset`. Throws Taxonomy (with the
/// field path of the offending value), Cardinality, UnknownTechnique, or
/// InvalidDecision.
ResolvedProfile resolve_profile(const ProfileDocument& doc, const Dataset& dataset);

}  // namespace elicit
