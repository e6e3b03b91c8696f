#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "elicit/dataset.hpp"
#include "elicit/engine.hpp"
#include "elicit/error.hpp"

namespace elicit {

using ordered_json = nlohmann::ordered_json;

/// Structured report with stable key order:
/// dataset_version, label, per_matrix, union, decisions, final, trace, warnings.
ordered_json to_json(const Recommendation& rec);
/// Inverse of to_json. Throws Parse on shape errors.
Recommendation recommendation_from_json(const nlohmann::json& j);

ordered_json to_json(const Diff& diff, const std::string& dataset_version);
ordered_json to_json(const ValidationReport& report);
ordered_json error_to_json(const Error& error, const std::string& dataset_version = {});

/// Registry, categories and the three vocabularies, including range metadata.
ordered_json taxonomy_to_json(const Dataset& dataset);
ordered_json dataset_meta_to_json(const Dataset& dataset);

/// Serialized form used by both the CLI and the service: two-space indent,
/// trailing newline.
std::string dump(const ordered_json& j);

std::string render_text(const Recommendation& rec);
std::string render_text(const Diff& diff, const std::string& base_label, const std::string& variant_label);
std::string render_text(const ValidationReport& report);
std::string render_taxonomy_text(const Dataset& dataset);

/// Every trace entry for `technique`, or, when nothing selected it, each
/// declared coordinate with the cell it holds for that technique.
std::string render_explanation(const Recommendation& rec, const ProjectProfile& profile, const Dataset& dataset,
                               const TechniqueId& technique);

}  // namespace elicit
