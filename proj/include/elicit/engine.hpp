#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "elicit/dataset.hpp"
#include "elicit/taxonomy.hpp"

namespace elicit {

/// One project's declared characteristics across the three dimensions.
/// People values use the role as attribute and the trait as value.
struct ProjectProfile {
  std::string label;
  std::set<AttributeValue> project_values;
  std::set<AttributeValue> people_values;
  std::optional<std::string> process_model;

  bool empty() const { return project_values.empty() && people_values.empty() && !process_model; }
};

/// Throws Taxonomy for any coordinate or model missing from `dataset`, and
/// Cardinality when an ordinal project attribute carries two values.
void validate_profile(const ProjectProfile& profile, const Dataset& dataset);

enum class Verdict { Keep, Exclude };
std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view text);

enum class DecidedBy { UserView, AnalystView };
std::string_view to_string(DecidedBy who);
std::optional<DecidedBy> parse_decided_by(std::string_view text);

/// A recorded human judgment from the post-union feasibility review.
struct FeasibilityDecision {
  TechniqueId technique;
  Verdict verdict = Verdict::Keep;
  std::string reason;
  DecidedBy decided_by = DecidedBy::AnalystView;

  friend bool operator==(const FeasibilityDecision&, const FeasibilityDecision&) = default;
};

/// One matrix cell supporting a technique. `attribute` is "model" for the
/// process matrix; `cell` is the cell as written ("R", "Y", "0.75").
struct Evidence {
  Dimension matrix = Dimension::Project;
  std::string attribute;
  std::string value;
  std::string cell;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct PerMatrixSets {
  TechniqueSet project;
  TechniqueSet people;
  TechniqueSet process;

  friend bool operator==(const PerMatrixSets&, const PerMatrixSets&) = default;
};

struct Warning {
  std::string code;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

inline constexpr std::string_view kWarnEmptyProfile = "EMPTY_PROFILE";
inline constexpr std::string_view kWarnEmptyFinal = "EMPTY_FINAL_SET";

struct Recommendation {
  std::string label;
  std::string dataset_version;
  PerMatrixSets per_matrix;
  TechniqueSet union_set;
  std::vector<FeasibilityDecision> feasibility;
  TechniqueSet final_set;
  std::map<TechniqueId, std::vector<Evidence>> trace;
  std::vector<Warning> warnings;

  friend bool operator==(const Recommendation&, const Recommendation&) = default;
};

/// Union over declared values of the techniques each value marks R.
TechniqueSet select_by_project(const std::set<AttributeValue>& values, const Dataset& dataset);

/// Union over declared (role, trait) pairs of the techniques marked Y.
TechniqueSet select_by_people(const std::set<AttributeValue>& values, const Dataset& dataset);

/// Techniques whose score under `model` is at or above the dataset threshold.
/// No model selects nothing.
TechniqueSet select_by_process(const std::optional<std::string>& model, const Dataset& dataset);

/// Plain set union.
TechniqueSet combine(const TechniqueSet& a, const TechniqueSet& b, const TechniqueSet& c);

/// Removes excluded techniques; keep decisions do not change membership.
/// Throws ExcludeAbsent when an exclusion names a non-member, and
/// InvalidDecision for an empty reason or contradictory verdicts on one
/// technique.
TechniqueSet apply_feasibility(const TechniqueSet& union_set, const std::vector<FeasibilityDecision>& decisions);

/// Runs per-matrix selection, union, and feasibility, recording every
/// supporting cell in the trace.
Recommendation recommend(const ProjectProfile& profile, const Dataset& dataset,
                         const std::vector<FeasibilityDecision>& decisions = {});

struct Diff {
  TechniqueSet added;      // in the variant union only
  TechniqueSet removed;    // in the base union only
  TechniqueSet unchanged;  // in both

  friend bool operator==(const Diff&, const Diff&) = default;
};

/// Compares pre-feasibility unions.
Diff what_if_diff(const ProjectProfile& base, const ProjectProfile& variant, const Dataset& dataset);

/// True when `evidence` names a cell of `dataset` that selects `technique`.
bool evidence_holds(const TechniqueId& technique, const Evidence& evidence, const Dataset& dataset);

}  // namespace elicit
