#include "elicit/taxonomy.hpp"

#include <algorithm>
#include <cctype>

#include "elicit/error.hpp"

namespace elicit {

std::string_view to_string(TechniqueCategory category) {
  switch (category) {
    case TechniqueCategory::Traditional: return "traditional";
    case TechniqueCategory::Collaborative: return "collaborative";
    case TechniqueCategory::Cognitive: return "cognitive";
    case TechniqueCategory::Observational: return "observational";
    case TechniqueCategory::Other: return "other";
  }
  return "other";
}

std::optional<TechniqueCategory> parse_category(std::string_view text) {
  for (auto c : {TechniqueCategory::Traditional, TechniqueCategory::Collaborative,
                 TechniqueCategory::Cognitive, TechniqueCategory::Observational,
                 TechniqueCategory::Other}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Dimension dimension) {
  switch (dimension) {
    case Dimension::Project: return "project";
    case Dimension::People: return "people";
    case Dimension::Process: return "process";
  }
  return "project";
}

std::string_view to_string(AttributeKind kind) {
  return kind == AttributeKind::Ordinal ? "ordinal" : "nominal";
}

std::string_view to_string(Role role) {
  return role == Role::Stakeholder ? "stakeholder" : "analyst";
}

std::optional<Role> parse_role(std::string_view text) {
  if (text == "stakeholder") return Role::Stakeholder;
  if (text == "analyst") return Role::Analyst;
  return std::nullopt;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  bool pending_space = false;
  for (char raw : name) {
    const auto ch = static_cast<unsigned char>(raw);
    if (std::isspace(ch) || raw == '-' || raw == '_') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(ch)));
  }
  return out;
}

bool is_slug(std::string_view text) {
  if (text.empty() || text.front() == '-' || text.back() == '-') return false;
  char prev = '\0';
  for (char c : text) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok || (c == '-' && prev == '-')) return false;
    prev = c;
  }
  return true;
}

const TechniqueId& TechniqueRegistry::register_technique(TechniqueRecord record) {
  const std::string& id = record.id.str();
  if (!is_slug(id)) {
    throw Error(ErrorCode::Parse, "technique.id",
                "technique id '" + id + "' is not a lowercase hyphenated slug");
  }
  if (records_.contains(record.id)) {
    throw Error(ErrorCode::DuplicateId, "technique.id", "technique '" + id + "' already registered");
  }

  std::vector<std::string> names{normalize_name(id)};
  if (!record.display_name.empty()) names.push_back(normalize_name(record.display_name));
  for (const auto& alias : record.aliases) {
    auto key = normalize_name(alias);
    if (key.empty()) {
      throw Error(ErrorCode::Parse, "technique.aliases", "empty alias on '" + id + "'");
    }
    names.push_back(std::move(key));
  }
  for (const auto& key : names) {
    auto it = names_.find(key);
    if (it != names_.end() && it->second != record.id) {
      throw Error(ErrorCode::AmbiguousAlias, "technique.aliases",
                  "name '" + key + "' already resolves to '" + it->second.str() + "'");
    }
  }

  for (auto& key : names) names_.emplace(std::move(key), record.id);
  auto [it, inserted] = records_.emplace(record.id, std::move(record));
  return it->first;
}

std::optional<TechniqueId> TechniqueRegistry::find(std::string_view name) const {
  auto it = names_.find(normalize_name(name));
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

const TechniqueId& TechniqueRegistry::lookup(std::string_view name) const {
  auto it = names_.find(normalize_name(name));
  if (it == names_.end()) {
    throw Error(ErrorCode::UnknownTechnique, "technique",
                "'" + std::string(name) + "' does not name a registered technique");
  }
  return it->second;
}

const TechniqueRecord& TechniqueRegistry::at(const TechniqueId& id) const {
  auto it = records_.find(id);
  if (it == records_.end()) {
    throw Error(ErrorCode::UnknownTechnique, "technique", "'" + id.str() + "' is not registered");
  }
  return it->second;
}

std::vector<TechniqueRecord> TechniqueRegistry::list(std::optional<TechniqueCategory> category) const {
  std::vector<TechniqueRecord> out;
  for (const auto& [id, record] : records_) {
    if (!category || record.category == *category) out.push_back(record);
  }
  return out;
}

TechniqueSet TechniqueRegistry::ids() const {
  TechniqueSet out;
  for (const auto& [id, record] : records_) out.insert(id);
  return out;
}

bool Attribute::has_value(std::string_view value) const {
  return rank(value).has_value();
}

std::optional<std::size_t> Attribute::rank(std::string_view value) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].id == value) return i;
  }
  return std::nullopt;
}

std::string to_string(const AttributeValue& av) {
  return av.attribute + "=" + av.value;
}

void AttributeTaxonomy::add_attribute(Attribute attribute) {
  const std::string field = std::string(to_string(dimension_)) + "." + attribute.id;
  if (!is_slug(attribute.id)) {
    throw Error(ErrorCode::Parse, field, "attribute id is not a lowercase hyphenated slug");
  }
  if (find(attribute.id) != nullptr) {
    throw Error(ErrorCode::DuplicateId, field, "attribute declared twice");
  }
  if (attribute.values.empty()) {
    throw Error(ErrorCode::Parse, field, "attribute declares no values");
  }
  std::set<std::string> seen;
  for (const auto& v : attribute.values) {
    if (!is_slug(v.id)) {
      throw Error(ErrorCode::Parse, field, "value '" + v.id + "' is not a lowercase hyphenated slug");
    }
    if (!seen.insert(v.id).second) {
      throw Error(ErrorCode::DuplicateId, field, "value '" + v.id + "' declared twice");
    }
  }

  switch (dimension_) {
    case Dimension::People: {
      auto role = parse_role(attribute.id);
      if (!role || (attribute.role && attribute.role != role)) {
        throw Error(ErrorCode::Taxonomy, field,
                    "people attributes must be named by role (stakeholder or analyst)");
      }
      attribute.role = role;
      break;
    }
    case Dimension::Process:
      if (attribute.id != kProcessAttribute) {
        throw Error(ErrorCode::Taxonomy, field,
                    "the process dimension has the single attribute '" +
                        std::string(kProcessAttribute) + "'");
      }
      [[fallthrough]];
    case Dimension::Project:
      if (attribute.role) {
        throw Error(ErrorCode::Taxonomy, field, "only people attributes carry a role");
      }
      break;
  }
  attributes_.push_back(std::move(attribute));
}

const Attribute* AttributeTaxonomy::find(std::string_view attribute) const {
  auto it = std::find_if(attributes_.begin(), attributes_.end(),
                         [&](const Attribute& a) { return a.id == attribute; });
  return it == attributes_.end() ? nullptr : &*it;
}

bool AttributeTaxonomy::contains(const AttributeValue& av) const {
  const Attribute* attribute = find(av.attribute);
  return attribute != nullptr && attribute->has_value(av.value);
}

std::vector<AttributeValue> AttributeTaxonomy::coordinates() const {
  std::vector<AttributeValue> out;
  for (const auto& a : attributes_) {
    for (const auto& v : a.values) out.push_back({a.id, v.id});
  }
  return out;
}

}  // namespace elicit
