#include "elicit/engine.hpp"

#include <algorithm>

#include "elicit/error.hpp"

namespace elicit {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Exclude ? "exclude" : "keep";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "keep") return Verdict::Keep;
  if (text == "exclude") return Verdict::Exclude;
  return std::nullopt;
}

std::string_view to_string(DecidedBy who) {
  return who == DecidedBy::UserView ? "user-view" : "analyst-view";
}

std::optional<DecidedBy> parse_decided_by(std::string_view text) {
  if (text == "user-view") return DecidedBy::UserView;
  if (text == "analyst-view") return DecidedBy::AnalystView;
  return std::nullopt;
}

namespace {

void require_coordinate(const AttributeTaxonomy& taxonomy, const AttributeValue& at) {
  const std::string field = std::string(to_string(taxonomy.dimension())) + "." + at.attribute;
  const Attribute* attribute = taxonomy.find(at.attribute);
  if (attribute == nullptr) {
    throw Error(ErrorCode::Taxonomy, field,
                "unknown " + std::string(to_string(taxonomy.dimension())) + " attribute '" + at.attribute + "'");
  }
  if (!attribute->has_value(at.value)) {
    throw Error(ErrorCode::Taxonomy, field, "'" + at.value + "' is not a value of '" + at.attribute + "'");
  }
}

void require_model(const Dataset& d, const std::string& model) {
  if (!d.process_taxonomy().contains({std::string(kProcessAttribute), model})) {
    throw Error(ErrorCode::Taxonomy, "process.model", "unknown process model '" + model + "'");
  }
}

}  // namespace

void validate_profile(const ProjectProfile& profile, const Dataset& d) {
  std::map<std::string, int> ordinal_counts;
  for (const auto& at : profile.project_values) {
    require_coordinate(d.project_taxonomy(), at);
    if (d.project_taxonomy().find(at.attribute)->kind == AttributeKind::Ordinal &&
        ++ordinal_counts[at.attribute] > 1) {
      throw Error(ErrorCode::Cardinality, "project." + at.attribute,
                  "ordinal attribute '" + at.attribute + "' takes at most one value");
    }
  }
  for (const auto& at : profile.people_values) require_coordinate(d.people_taxonomy(), at);
  if (profile.process_model) require_model(d, *profile.process_model);
}

TechniqueSet select_by_project(const std::set<AttributeValue>& values, const Dataset& d) {
  TechniqueSet out;
  for (const auto& at : values) {
    require_coordinate(d.project_taxonomy(), at);
    const auto& column = d.project_matrix().column(at);
    out.insert(column.begin(), column.end());
  }
  return out;
}

TechniqueSet select_by_people(const std::set<AttributeValue>& values, const Dataset& d) {
  TechniqueSet out;
  for (const auto& at : values) {
    require_coordinate(d.people_taxonomy(), at);
    const auto& column = d.people_matrix().column(at);
    out.insert(column.begin(), column.end());
  }
  return out;
}

TechniqueSet select_by_process(const std::optional<std::string>& model, const Dataset& d) {
  TechniqueSet out;
  if (!model) return out;
  require_model(d, *model);
  for (const auto& [t, score] : d.process_matrix().column(*model)) {
    if (is_process_selected(score, d.threshold())) out.insert(t);
  }
  return out;
}

TechniqueSet combine(const TechniqueSet& a, const TechniqueSet& b, const TechniqueSet& c) {
  TechniqueSet out = a;
  out.insert(b.begin(), b.end());
  out.insert(c.begin(), c.end());
  return out;
}

TechniqueSet apply_feasibility(const TechniqueSet& union_set, const std::vector<FeasibilityDecision>& decisions) {
  std::map<TechniqueId, Verdict> verdicts;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const auto& decision = decisions[i];
    const std::string field = "decisions[" + std::to_string(i) + "]";
    if (decision.reason.empty()) {
      throw Error(ErrorCode::InvalidDecision, field + ".reason",
                  "decision on '" + decision.technique.str() + "' has no reason");
    }
    auto [it, inserted] = verdicts.emplace(decision.technique, decision.verdict);
    if (!inserted && it->second != decision.verdict) {
      throw Error(ErrorCode::InvalidDecision, field + ".verdict",
                  "contradictory verdicts on '" + decision.technique.str() + "'");
    }
    if (decision.verdict == Verdict::Exclude && !union_set.contains(decision.technique)) {
      throw Error(ErrorCode::ExcludeAbsent, field + ".technique",
                  "cannot exclude '" + decision.technique.str() + "': not in the union set");
    }
  }

  TechniqueSet out;
  for (const auto& t : union_set) {
    auto it = verdicts.find(t);
    if (it == verdicts.end() || it->second == Verdict::Keep) out.insert(t);
  }
  return out;
}

Recommendation recommend(const ProjectProfile& profile, const Dataset& d,
                         const std::vector<FeasibilityDecision>& decisions) {
  validate_profile(profile, d);

  Recommendation rec;
  rec.label = profile.label;
  rec.dataset_version = d.version();
  rec.per_matrix.project = select_by_project(profile.project_values, d);
  rec.per_matrix.people = select_by_people(profile.people_values, d);
  rec.per_matrix.process = select_by_process(profile.process_model, d);
  rec.union_set = combine(rec.per_matrix.project, rec.per_matrix.people, rec.per_matrix.process);
  rec.final_set = apply_feasibility(rec.union_set, decisions);
  rec.feasibility = decisions;

  for (const auto& at : profile.project_values) {
    for (const auto& t : d.project_matrix().column(at)) {
      rec.trace[t].push_back({Dimension::Project, at.attribute, at.value, "R"});
    }
  }
  for (const auto& at : profile.people_values) {
    for (const auto& t : d.people_matrix().column(at)) {
      rec.trace[t].push_back({Dimension::People, at.attribute, at.value, "Y"});
    }
  }
  if (profile.process_model) {
    for (const auto& [t, score] : d.process_matrix().column(*profile.process_model)) {
      if (is_process_selected(score, d.threshold())) {
        rec.trace[t].push_back({Dimension::Process, std::string(kProcessAttribute), *profile.process_model,
                                score.str()});
      }
    }
  }

  if (profile.empty()) {
    rec.warnings.push_back({std::string(kWarnEmptyProfile), "profile declares no attribute values"});
  }
  if (rec.final_set.empty()) {
    rec.warnings.push_back({std::string(kWarnEmptyFinal), "no technique is recommended"});
  }
  return rec;
}

Diff what_if_diff(const ProjectProfile& base, const ProjectProfile& variant, const Dataset& d) {
  const auto before = recommend(base, d).union_set;
  const auto after = recommend(variant, d).union_set;
  Diff diff;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::inserter(diff.added, diff.added.end()));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::inserter(diff.removed, diff.removed.end()));
  std::set_intersection(before.begin(), before.end(), after.begin(), after.end(),
                        std::inserter(diff.unchanged, diff.unchanged.end()));
  return diff;
}

bool evidence_holds(const TechniqueId& technique, const Evidence& e, const Dataset& d) {
  const AttributeValue at{e.attribute, e.value};
  switch (e.matrix) {
    case Dimension::Project:
      return e.cell == "R" && d.project_matrix().selects(technique, at);
    case Dimension::People:
      return e.cell == "Y" && d.people_matrix().selects(technique, at);
    case Dimension::Process: {
      if (e.attribute != kProcessAttribute) return false;
      auto score = d.process_matrix().score(technique, e.value);
      return score && score->str() == e.cell && is_process_selected(*score, d.threshold());
    }
  }
  return false;
}

}  // namespace elicit
