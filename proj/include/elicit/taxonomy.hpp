#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace elicit {

/// Lowercase hyphenated slug naming one elicitation technique.
class TechniqueId {
 public:
  TechniqueId() = default;
  explicit TechniqueId(std::string slug) : slug_(std::move(slug)) {}

  const std::string& str() const noexcept { return slug_; }
  bool empty() const noexcept { return slug_.empty(); }

  friend auto operator<=>(const TechniqueId&, const TechniqueId&) = default;

 private:
  std::string slug_;
};

/// Canonical sorted set of techniques; iteration order is the presentation order.
using TechniqueSet = std::set<TechniqueId>;

enum class TechniqueCategory { Traditional, Collaborative, Cognitive, Observational, Other };

std::string_view to_string(TechniqueCategory category);
std::optional<TechniqueCategory> parse_category(std::string_view text);

/// The four catalogue categories, in catalogue order. `Other` is the fallback
/// for techniques the catalogue never classifies.
inline constexpr TechniqueCategory kCatalogueCategories[] = {
    TechniqueCategory::Traditional, TechniqueCategory::Collaborative,
    TechniqueCategory::Cognitive, TechniqueCategory::Observational};

struct TechniqueRecord {
  TechniqueId id;
  std::string display_name;
  TechniqueCategory category = TechniqueCategory::Other;
  std::string description;
  std::vector<std::string> aliases;

  friend bool operator==(const TechniqueRecord&, const TechniqueRecord&) = default;
};

/// Lowercases, trims, and folds runs of whitespace, '-' and '_' into a single
/// space, so "Focus Group", "focus-group" and "  FOCUS_group " compare equal.
std::string normalize_name(std::string_view name);

/// True for `[a-z0-9]+(-[a-z0-9]+)*`.
bool is_slug(std::string_view text);

/// Technique catalogue. Every name a record answers to (id, display name,
/// aliases) is indexed after normalization, and no normalized name may map to
/// two different ids.
class TechniqueRegistry {
 public:
  /// Throws DuplicateId, AmbiguousAlias, or Parse (malformed id).
  const TechniqueId& register_technique(TechniqueRecord record);

  /// Throws UnknownTechnique when nothing matches.
  const TechniqueId& lookup(std::string_view name) const;
  std::optional<TechniqueId> find(std::string_view name) const;

  bool contains(const TechniqueId& id) const { return records_.contains(id); }
  const TechniqueRecord& at(const TechniqueId& id) const;

  /// Sorted by id, optionally restricted to one category.
  std::vector<TechniqueRecord> list(std::optional<TechniqueCategory> category = std::nullopt) const;
  TechniqueSet ids() const;
  std::size_t size() const noexcept { return records_.size(); }

  friend bool operator==(const TechniqueRegistry& a, const TechniqueRegistry& b) {
    return a.records_ == b.records_;
  }

 private:
  std::map<TechniqueId, TechniqueRecord> records_;
  std::map<std::string, TechniqueId> names_;
};

enum class Dimension { Project, People, Process };
std::string_view to_string(Dimension dimension);

enum class AttributeKind { Ordinal, Nominal };
std::string_view to_string(AttributeKind kind);

enum class Role { Stakeholder, Analyst };
std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);

/// Unit-free numeric bounds attached to a value, e.g. large = [1000, 4000].
/// Informational only; matching never consults it.
struct ValueRange {
  std::optional<double> low;
  std::optional<double> high;

  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

struct AttributeValueDef {
  std::string id;
  std::optional<ValueRange> range;

  friend bool operator==(const AttributeValueDef&, const AttributeValueDef&) = default;
};

struct Attribute {
  std::string id;
  AttributeKind kind = AttributeKind::Nominal;
  /// Ordinal attributes list values in ascending order.
  std::vector<AttributeValueDef> values;
  /// Set for every people-dimension attribute.
  std::optional<Role> role;

  bool has_value(std::string_view value) const;
  /// Position of `value` in the declared order, if present.
  std::optional<std::size_t> rank(std::string_view value) const;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// One (attribute, value) coordinate. For the people dimension the attribute
/// is the role and the value the trait; for the process dimension the
/// attribute is "model".
struct AttributeValue {
  std::string attribute;
  std::string value;

  friend auto operator<=>(const AttributeValue&, const AttributeValue&) = default;
};

std::string to_string(const AttributeValue& av);  // "attribute=value"

class AttributeTaxonomy {
 public:
  explicit AttributeTaxonomy(Dimension dimension = Dimension::Project) : dimension_(dimension) {}

  /// Throws DuplicateId on repeated attribute or value ids, Parse on malformed
  /// ids, Taxonomy when a people attribute lacks a role.
  void add_attribute(Attribute attribute);

  Dimension dimension() const noexcept { return dimension_; }
  const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
  const Attribute* find(std::string_view attribute) const;
  bool contains(const AttributeValue& av) const;
  /// Every coordinate in declaration order.
  std::vector<AttributeValue> coordinates() const;

  friend bool operator==(const AttributeTaxonomy&, const AttributeTaxonomy&) = default;

 private:
  Dimension dimension_;
  std::vector<Attribute> attributes_;
};

/// Name of the single process-dimension attribute.
inline constexpr std::string_view kProcessAttribute = "model";

}  // namespace elicit
