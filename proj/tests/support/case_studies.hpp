#pragma once

// Expected per-matrix and final sets of the three reference case studies,
// transcribed by hand. Union and exclusion sets are derived here with plain
// set arithmetic, independent of the engine.

#include <algorithm>
#include <filesystem>
#include <iterator>
#include <set>
#include <string>

namespace elicit::testing {

using Names = std::set<std::string>;

struct CaseStudy {
  std::string name;
  std::string fixture;  // file name under fixtures/
  Names project;
  Names people;
  Names process;
  Names final_set;

  Names union_set() const {
    Names out = project;
    out.insert(people.begin(), people.end());
    out.insert(process.begin(), process.end());
    return out;
  }

  Names excluded() const {
    const Names u = union_set();
    Names out;
    std::set_difference(u.begin(), u.end(), final_set.begin(), final_set.end(), std::inserter(out, out.end()));
    return out;
  }
};

inline const CaseStudy& ipos() {
  static const CaseStudy c{
      "IPOS",
      "ipos.profile",
      {"focus-group", "interview", "ethnography"},
      {"observation", "interview", "focus-group"},
      {"interview", "focus-group", "workshop", "observation", "ethnography", "prototyping", "models"},
      {"interview", "focus-group", "workshop", "observation", "ethnography", "prototyping", "models"},
  };
  return c;
}

inline const CaseStudy& osm() {
  static const CaseStudy c{
      "OSM",
      "osm.profile",
      {"brainstorming", "focus-group", "interview", "ethnography", "observation", "models", "questionnaire"},
      {"observation", "interview", "focus-group", "prototyping"},
      {"interview", "focus-group", "workshop", "prototyping"},
      {"interview", "focus-group", "workshop", "observation", "ethnography", "prototyping"},
  };
  return c;
}

inline const CaseStudy& bhoomi() {
  static const CaseStudy c{
      "Bhoomi",
      "bhoomi.profile",
      {"focus-group", "interview", "ethnography", "observation", "models", "survey", "introspection"},
      {"brainstorming", "observation", "interview", "focus-group"},
      {"brainstorming", "interview", "focus-group", "workshop", "observation", "ethnography", "models",
       "questionnaire", "analysis-of-existing-domain", "concept-mind-mapping"},
      {"brainstorming", "interview", "focus-group", "workshop", "observation", "ethnography", "models",
       "questionnaire", "analysis-of-existing-domain", "concept-mind-mapping", "survey"},
  };
  return c;
}

inline std::filesystem::path source_dir() { return ELICIT_SOURCE_DIR; }
inline std::filesystem::path fixture_path(const std::string& name) { return source_dir() / "fixtures" / name; }

template <typename Set>
Names names(const Set& set) {
  Names out;
  for (const auto& t : set) out.insert(t.str());
  return out;
}

}  // namespace elicit::testing
