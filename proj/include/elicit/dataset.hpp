#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elicit/score.hpp"
#include "elicit/taxonomy.hpp"

namespace elicit {

/// Binary technique-by-coordinate relation. Only positive cells are stored;
/// an absent cell reads as the negative mark, so sparse and dense files load
/// to the same value.
template <typename Tag>
class MarkMatrix {
 public:
  void set(const TechniqueId& technique, const AttributeValue& at) { columns_[at].insert(technique); }

  bool selects(const TechniqueId& technique, const AttributeValue& at) const {
    auto it = columns_.find(at);
    return it != columns_.end() && it->second.contains(technique);
  }

  /// Techniques marked positive at `at`; empty when none.
  const TechniqueSet& column(const AttributeValue& at) const {
    static const TechniqueSet kEmpty;
    auto it = columns_.find(at);
    return it == columns_.end() ? kEmpty : it->second;
  }

  const std::map<AttributeValue, TechniqueSet>& columns() const noexcept { return columns_; }

  std::size_t positive_cells() const {
    std::size_t n = 0;
    for (const auto& [at, techniques] : columns_) n += techniques.size();
    return n;
  }

  friend bool operator==(const MarkMatrix&, const MarkMatrix&) = default;

 private:
  std::map<AttributeValue, TechniqueSet> columns_;
};

struct ProjectTag {};
struct PeopleTag {};

/// Project matrix: cell marks are R (recommended) or '-' (not recommended).
using ProjectMatrix = MarkMatrix<ProjectTag>;
/// People matrix over (role, trait): cell marks are Y or N.
using PeopleMatrix = MarkMatrix<PeopleTag>;

/// Process matrix: technique x process model -> score in [0,1]. A technique
/// without a score for a model is never selected by it.
class ProcessMatrix {
 public:
  void set(const TechniqueId& technique, const std::string& model, Score score) {
    models_[model][technique] = score;
  }

  std::optional<Score> score(const TechniqueId& technique, std::string_view model) const;

  /// Every scored technique under `model`, sorted by id.
  const std::map<TechniqueId, Score>& column(std::string_view model) const;

  const std::map<std::string, std::map<TechniqueId, Score>, std::less<>>& models() const noexcept {
    return models_;
  }

  std::size_t scored_cells() const;

  friend bool operator==(const ProcessMatrix&, const ProcessMatrix&) = default;

 private:
  std::map<std::string, std::map<TechniqueId, Score>, std::less<>> models_;
};

struct DatasetHeader {
  std::string version;
  std::string provenance;
  Score threshold = kDefaultThreshold;

  friend bool operator==(const DatasetHeader&, const DatasetHeader&) = default;
};

/// Unchecked components of a dataset, as assembled by a loader or a test.
struct DatasetParts {
  DatasetHeader header;
  TechniqueRegistry registry;
  AttributeTaxonomy project{Dimension::Project};
  AttributeTaxonomy people{Dimension::People};
  AttributeTaxonomy process{Dimension::Process};
  ProjectMatrix project_matrix;
  PeopleMatrix people_matrix;
  ProcessMatrix process_matrix;
};

/// The three knowledge matrices with the registry and taxonomies they index.
/// Immutable once constructed; construction enforces referential integrity.
class Dataset {
 public:
  /// Throws Parse (empty version), Dangling (a matrix cites an unregistered
  /// technique or an undeclared coordinate), or Taxonomy (mismatched
  /// taxonomy dimension).
  explicit Dataset(DatasetParts parts);

  const DatasetHeader& header() const noexcept { return parts_.header; }
  const std::string& version() const noexcept { return parts_.header.version; }
  Score threshold() const noexcept { return parts_.header.threshold; }

  const TechniqueRegistry& registry() const noexcept { return parts_.registry; }
  const AttributeTaxonomy& taxonomy(Dimension dimension) const;
  const AttributeTaxonomy& project_taxonomy() const noexcept { return parts_.project; }
  const AttributeTaxonomy& people_taxonomy() const noexcept { return parts_.people; }
  const AttributeTaxonomy& process_taxonomy() const noexcept { return parts_.process; }

  const ProjectMatrix& project_matrix() const noexcept { return parts_.project_matrix; }
  const PeopleMatrix& people_matrix() const noexcept { return parts_.people_matrix; }
  const ProcessMatrix& process_matrix() const noexcept { return parts_.process_matrix; }

  /// Process model ids in taxonomy order.
  std::vector<std::string> process_models() const;

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  DatasetParts parts_;
};

/// Reads the sectioned dataset format. Loading is total: any violation throws
/// (Parse, Dangling, Range, Domain, DuplicateId, AmbiguousAlias) with the
/// source name and line; nothing is repaired.
Dataset load_dataset(std::istream& in, const std::string& source = "<dataset>");
Dataset load_dataset_text(std::string_view text, const std::string& source = "<dataset>");
/// Throws Io when the file cannot be opened.
Dataset load_dataset_file(const std::filesystem::path& path);

/// Canonical dense rendering; load_dataset(serialize_dataset(d)) == d.
std::string serialize_dataset(const Dataset& dataset);

/// Text of the shipped default dataset.
std::string_view default_dataset_text();
inline constexpr std::string_view kDefaultDatasetName = "<builtin:default.dataset>";
/// The shipped default dataset, parsed once.
const Dataset& default_dataset();

enum class Severity { Warning, Error };
std::string_view to_string(Severity severity);

struct Finding {
  Severity severity = Severity::Warning;
  std::string code;     // UNREACHABLE, DEAD_VALUE, CATEGORY_GAP, or an ErrorCode name
  std::string subject;  // technique id, coordinate, or category
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool ok() const { return error_count() == 0; }
};

/// Lints a loaded dataset. Reports techniques no cell can select, coordinates
/// that select nothing, and catalogue categories without a reachable
/// technique. Findings are sorted (code, subject) and deterministic.
ValidationReport validate_dataset(const Dataset& dataset);

/// Loads then lints. A load failure becomes a single error finding carrying
/// the load error's code and location instead of throwing.
ValidationReport validate_dataset_file(const std::filesystem::path& path);
ValidationReport validate_dataset_text(std::string_view text, const std::string& source);

}  // namespace elicit
