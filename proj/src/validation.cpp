#include <algorithm>
#include <fstream>

#include "elicit/dataset.hpp"
#include "elicit/error.hpp"

namespace elicit {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "ERROR" : "WARN";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(),
                                                [](const Finding& f) { return f.severity == Severity::Error; }));
}

std::size_t ValidationReport::warning_count() const {
  return findings.size() - error_count();
}

ValidationReport validate_dataset(const Dataset& d) {
  ValidationReport report;
  TechniqueSet reachable;

  for (const auto& at : d.project_taxonomy().coordinates()) {
    const auto& column = d.project_matrix().column(at);
    reachable.insert(column.begin(), column.end());
    if (column.empty()) {
      report.findings.push_back({Severity::Warning, "DEAD_VALUE", "project." + to_string(at),
                                 "project value selects no technique"});
    }
  }
  for (const auto& at : d.people_taxonomy().coordinates()) {
    const auto& column = d.people_matrix().column(at);
    reachable.insert(column.begin(), column.end());
    if (column.empty()) {
      report.findings.push_back({Severity::Warning, "DEAD_VALUE", "people." + to_string(at),
                                 "people trait selects no technique"});
    }
  }
  for (const auto& model : d.process_models()) {
    bool any = false;
    for (const auto& [t, score] : d.process_matrix().column(model)) {
      if (is_process_selected(score, d.threshold())) {
        reachable.insert(t);
        any = true;
      }
    }
    if (!any) {
      report.findings.push_back({Severity::Warning, "DEAD_VALUE", "process.model=" + model,
                                 "no technique scores at or above the threshold " + d.threshold().str()});
    }
  }

  for (const auto& r : d.registry().list()) {
    if (!reachable.contains(r.id)) {
      report.findings.push_back({Severity::Warning, "UNREACHABLE", r.id.str(),
                                 "no cell in any matrix selects this technique"});
    }
  }

  for (auto category : kCatalogueCategories) {
    const auto members = d.registry().list(category);
    const bool covered = std::any_of(members.begin(), members.end(),
                                     [&](const TechniqueRecord& r) { return reachable.contains(r.id); });
    if (!covered) {
      report.findings.push_back({Severity::Warning, "CATEGORY_GAP", std::string(to_string(category)),
                                 members.empty() ? "category has no registered technique"
                                                 : "no technique in this category is reachable"});
    }
  }

  std::stable_sort(report.findings.begin(), report.findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.code, a.subject) < std::tie(b.code, b.subject);
  });
  return report;
}

namespace {

template <typename Load>
ValidationReport validate_with(Load&& load) {
  try {
    return validate_dataset(load());
  } catch (const Error& e) {
    ValidationReport report;
    std::string subject = e.source().value_or("");
    if (e.line()) subject += ":" + std::to_string(*e.line());
    report.findings.push_back({Severity::Error, std::string(to_string(e.code())), subject,
                               (e.field().empty() ? "" : e.field() + ": ") + e.message()});
    return report;
  }
}

}  // namespace

ValidationReport validate_dataset_file(const std::filesystem::path& path) {
  return validate_with([&] { return load_dataset_file(path); });
}

ValidationReport validate_dataset_text(std::string_view text, const std::string& source) {
  return validate_with([&] { return load_dataset_text(text, source); });
}

}  // namespace elicit
