#include "elicit/engine.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "elicit/error.hpp"
#include "elicit/profile.hpp"
#include "support/case_studies.hpp"
#include "support/expect_error.hpp"
#include "support/random_kb.hpp"

namespace elicit {
namespace {

using testing::CaseStudy;
using testing::code_of;
using testing::error_of;
using testing::names;

const Dataset& kb() { return default_dataset(); }

ResolvedProfile fixture(const CaseStudy& c) {
  return resolve_profile(parse_profile_file(testing::fixture_path(c.fixture)), kb());
}

FeasibilityDecision exclude(const std::string& t, const std::string& reason = "not feasible") {
  return {TechniqueId(t), Verdict::Exclude, reason, DecidedBy::AnalystView};
}

FeasibilityDecision keep(const std::string& t, const std::string& reason = "fits") {
  return {TechniqueId(t), Verdict::Keep, reason, DecidedBy::UserView};
}

TechniqueSet set_of(std::initializer_list<const char*> ids) {
  TechniqueSet out;
  for (const char* id : ids) out.insert(TechniqueId(id));
  return out;
}

const CaseStudy& study(const std::string& name) {
  for (const auto* c : {&testing::ipos(), &testing::osm(), &testing::bhoomi()}) {
    if (c->name == name) return *c;
  }
  throw std::invalid_argument(name);
}

class CaseStudyTest : public ::testing::TestWithParam<std::string> {};

TEST_P(CaseStudyTest, PerMatrixSets) {
  const CaseStudy& c = study(GetParam());
  const auto r = fixture(c);
  EXPECT_EQ(names(select_by_project(r.profile.project_values, kb())), c.project);
  EXPECT_EQ(names(select_by_people(r.profile.people_values, kb())), c.people);
  EXPECT_EQ(names(select_by_process(r.profile.process_model, kb())), c.process);
}

TEST_P(CaseStudyTest, UnionAndFinal) {
  const CaseStudy& c = study(GetParam());
  const auto r = fixture(c);
  const auto rec = recommend(r.profile, kb(), r.decisions);
  EXPECT_EQ(names(rec.union_set), c.union_set());
  EXPECT_EQ(names(rec.final_set), c.final_set);
  testing::Names excluded;
  for (const auto& d : r.decisions) {
    if (d.verdict == Verdict::Exclude) excluded.insert(d.technique.str());
  }
  EXPECT_EQ(excluded, c.excluded());
  EXPECT_TRUE(rec.warnings.empty());
}

TEST_P(CaseStudyTest, TraceSound) {
  const CaseStudy& c = study(GetParam());
  const auto r = fixture(c);
  const auto rec = recommend(r.profile, kb(), r.decisions);
  TechniqueSet traced;
  for (const auto& [t, evidence] : rec.trace) {
    traced.insert(t);
    ASSERT_FALSE(evidence.empty()) << t.str();
    for (const auto& e : evidence) EXPECT_TRUE(evidence_holds(t, e, kb())) << t.str() << " " << e.attribute;
  }
  EXPECT_EQ(traced, rec.union_set);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CaseStudyTest,
                         ::testing::Values("IPOS", "OSM", "Bhoomi"),
                         [](const auto& info) { return info.param; });

TEST(SelectByProcess, ThresholdBoundary) {
  // agile/models sits exactly on 0.50, agile/brainstorming just below.
  const auto agile = select_by_process(std::string("agile"), kb());
  EXPECT_TRUE(agile.contains(TechniqueId("models")));
  EXPECT_FALSE(agile.contains(TechniqueId("brainstorming")));
}

TEST(SelectByProcess, NoModelSelectsNothing) {
  EXPECT_TRUE(select_by_process(std::nullopt, kb()).empty());
}

TEST(SelectByProcess, UnknownModel) {
  auto e = error_of([] { select_by_process(std::string("rup"), kb()); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::Taxonomy);
  EXPECT_EQ(e->field(), "process.model");
}

TEST(SelectByProject, UnknownValue) {
  auto e = error_of([] { select_by_project({{"size", "huge"}}, kb()); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::Taxonomy);
  EXPECT_EQ(e->field(), "project.size");
  EXPECT_EQ(code_of([] { select_by_project({{"colour", "red"}}, kb()); }), ErrorCode::Taxonomy);
}

TEST(SelectByPeople, UnknownTrait) {
  EXPECT_EQ(code_of([] { select_by_people({{"analyst", "telepathic"}}, kb()); }), ErrorCode::Taxonomy);
  EXPECT_EQ(code_of([] { select_by_people({{"manager", "novice"}}, kb()); }), ErrorCode::Taxonomy);
}

TEST(SelectByProject, EmptyInputEmptyOutput) {
  EXPECT_TRUE(select_by_project({}, kb()).empty());
  EXPECT_TRUE(select_by_people({}, kb()).empty());
}

TEST(Combine, IsSetUnion) {
  const auto u = combine(set_of({"interview", "survey"}), set_of({"survey"}), set_of({"jad"}));
  EXPECT_EQ(u, set_of({"interview", "jad", "survey"}));
  EXPECT_TRUE(combine({}, {}, {}).empty());
}

TEST(ApplyFeasibility, ExcludesAndKeeps) {
  const auto u = set_of({"interview", "survey", "jad"});
  EXPECT_EQ(apply_feasibility(u, {exclude("survey"), keep("jad")}), set_of({"interview", "jad"}));
  EXPECT_EQ(apply_feasibility(u, {}), u);
}

TEST(ApplyFeasibility, KeepOnNonMemberIsHarmless) {
  EXPECT_EQ(apply_feasibility(set_of({"interview"}), {keep("laddering")}), set_of({"interview"}));
}

TEST(ApplyFeasibility, RepeatedSameVerdictAccepted) {
  EXPECT_EQ(apply_feasibility(set_of({"interview", "jad"}), {exclude("jad"), exclude("jad", "again")}),
            set_of({"interview"}));
}

TEST(ApplyFeasibility, ExcludeAbsent) {
  auto e = error_of([] { apply_feasibility(set_of({"interview"}), {keep("interview"), exclude("laddering")}); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::ExcludeAbsent);
  EXPECT_EQ(e->field(), "decisions[1].technique");
}

TEST(ApplyFeasibility, MissingReason) {
  auto e = error_of([] { apply_feasibility(set_of({"interview"}), {exclude("interview", "")}); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::InvalidDecision);
  EXPECT_EQ(e->field(), "decisions[0].reason");
}

TEST(ApplyFeasibility, ContradictoryVerdicts) {
  EXPECT_EQ(code_of([] { apply_feasibility(set_of({"interview"}), {exclude("interview"), keep("interview")}); }),
            ErrorCode::InvalidDecision);
}

// Decision order does not change the outcome.
TEST(ApplyFeasibility, OrderInvariant) {
  const auto u = set_of({"interview", "survey", "jad", "models", "workshop"});
  std::vector<FeasibilityDecision> decisions{exclude("survey"), keep("jad"), exclude("models"), keep("laddering")};
  const auto expected = apply_feasibility(u, decisions);
  std::sort(decisions.begin(), decisions.end(),
            [](const auto& a, const auto& b) { return a.technique < b.technique; });
  do {
    EXPECT_EQ(apply_feasibility(u, decisions), expected);
  } while (std::next_permutation(decisions.begin(), decisions.end(),
                                 [](const auto& a, const auto& b) { return a.technique < b.technique; }));
}

TEST(Recommend, EmptyProfileWarns) {
  const auto rec = recommend(ProjectProfile{}, kb());
  EXPECT_TRUE(rec.union_set.empty());
  EXPECT_TRUE(rec.final_set.empty());
  ASSERT_EQ(rec.warnings.size(), 2u);
  EXPECT_EQ(rec.warnings[0].code, kWarnEmptyProfile);
  EXPECT_EQ(rec.warnings[1].code, kWarnEmptyFinal);
}

TEST(Recommend, AllExcludedWarnsEmptyFinal) {
  ProjectProfile p;
  p.project_values = {{"size", "small"}};
  const auto u = select_by_project(p.project_values, kb());
  std::vector<FeasibilityDecision> decisions;
  for (const auto& t : u) decisions.push_back(exclude(t.str()));
  const auto rec = recommend(p, kb(), decisions);
  EXPECT_TRUE(rec.final_set.empty());
  ASSERT_EQ(rec.warnings.size(), 1u);
  EXPECT_EQ(rec.warnings[0].code, kWarnEmptyFinal);
}

TEST(Recommend, OrdinalCardinality) {
  ProjectProfile p;
  p.project_values = {{"size", "small"}, {"size", "large"}};
  auto e = error_of([&] { recommend(p, kb()); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->code(), ErrorCode::Cardinality);
  EXPECT_EQ(e->field(), "project.size");
}

TEST(Recommend, NominalAcceptsSeveralValues) {
  ProjectProfile p;
  p.project_values = {{"domain-category", "technical"}, {"domain-category", "e-commerce"}};
  EXPECT_NO_THROW(recommend(p, kb()));
}

TEST(Recommend, Deterministic) {
  const auto r = fixture(testing::bhoomi());
  EXPECT_EQ(recommend(r.profile, kb(), r.decisions), recommend(r.profile, kb(), r.decisions));
}

TEST(Recommend, UnionIsUnionOfPerMatrix) {
  const auto r = fixture(testing::osm());
  const auto rec = recommend(r.profile, kb(), r.decisions);
  EXPECT_EQ(rec.union_set, combine(rec.per_matrix.project, rec.per_matrix.people, rec.per_matrix.process));
  EXPECT_TRUE(std::includes(rec.union_set.begin(), rec.union_set.end(), rec.final_set.begin(), rec.final_set.end()));
}

TEST(EvidenceHolds, RejectsFabricatedEvidence) {
  EXPECT_FALSE(evidence_holds(TechniqueId("laddering"), {Dimension::Project, "size", "small", "R"}, kb()));
  EXPECT_FALSE(evidence_holds(TechniqueId("brainstorming"), {Dimension::Process, "model", "agile", "0.49"}, kb()));
  EXPECT_FALSE(evidence_holds(TechniqueId("models"), {Dimension::Process, "model", "agile", "0.90"}, kb()));
  EXPECT_TRUE(evidence_holds(TechniqueId("models"), {Dimension::Process, "model", "agile", "0.50"}, kb()));
}

TEST(WhatIf, DiffPartitionsUnions) {
  const auto base = fixture(testing::ipos()).profile;
  const auto variant = fixture(testing::bhoomi()).profile;
  const auto diff = what_if_diff(base, variant, kb());
  const auto before = recommend(base, kb()).union_set;
  const auto after = recommend(variant, kb()).union_set;
  EXPECT_EQ(combine(diff.removed, diff.unchanged, {}), before);
  EXPECT_EQ(combine(diff.added, diff.unchanged, {}), after);
  for (const auto& t : diff.added) EXPECT_FALSE(before.contains(t));
  for (const auto& t : diff.removed) EXPECT_FALSE(after.contains(t));
}

TEST(WhatIf, SymmetricAndStateless) {
  const auto a = fixture(testing::osm()).profile;
  const auto b = fixture(testing::ipos()).profile;
  const auto ab = what_if_diff(a, b, kb());
  const auto ba = what_if_diff(b, a, kb());
  EXPECT_EQ(ab.added, ba.removed);
  EXPECT_EQ(ab.removed, ba.added);
  EXPECT_EQ(ab.unchanged, ba.unchanged);
  EXPECT_EQ(what_if_diff(a, b, kb()), ab);
  const auto same = what_if_diff(a, a, kb());
  EXPECT_TRUE(same.added.empty());
  EXPECT_TRUE(same.removed.empty());
}

TEST(WhatIf, SingleChangeExample) {
  ProjectProfile base;
  base.process_model = "agile";
  ProjectProfile variant = base;
  variant.process_model = "waterfall";
  const auto diff = what_if_diff(base, variant, kb());
  const auto agile = select_by_process(std::string("agile"), kb());
  const auto waterfall = select_by_process(std::string("waterfall"), kb());
  for (const auto& t : diff.added) EXPECT_TRUE(waterfall.contains(t) && !agile.contains(t));
  for (const auto& t : diff.removed) EXPECT_TRUE(agile.contains(t) && !waterfall.contains(t));
}

TEST(Property, UnionMonotoneOnDefaultDataset) {
  std::mt19937 rng(42);
  const auto attrs = testing::attributes_of(kb());
  const auto traits = testing::traits_of(kb());
  const auto models = kb().process_models();
  for (int i = 0; i < 300; ++i) {
    const auto p = testing::random_profile(rng, attrs, traits, models);
    const auto q = testing::extend_profile(rng, p, attrs, traits, models);
    const auto small = recommend(p, kb()).union_set;
    const auto large = recommend(q, kb()).union_set;
    ASSERT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end())) << "iteration " << i;
  }
}

TEST(Property, OracleEquivalenceOnRandomDatasets) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto random_kb = testing::make_random_kb(rng);
    const Dataset d = load_dataset_text(random_kb.text(rng));
    for (int j = 0; j < 3; ++j) {
      const auto p = testing::random_profile(rng, random_kb.project, random_kb.traits, random_kb.models);
      ASSERT_EQ(names(recommend(p, d).union_set), random_kb.oracle_union(p)) << "dataset " << i << " profile " << j;
    }
  }
}

// The union depends only on the set of declared values, so the order values
// are inserted in cannot matter; reloading the same tables in a different
// row and column order must not matter either.
TEST(Property, RowAndColumnOrderInvariant) {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto random_kb = testing::make_random_kb(rng);
    const Dataset a = load_dataset_text(random_kb.text(rng));
    const Dataset b = load_dataset_text(random_kb.text(rng));
    const auto p = testing::random_profile(rng, random_kb.project, random_kb.traits, random_kb.models);
    EXPECT_EQ(recommend(p, a).union_set, recommend(p, b).union_set);
  }
}

TEST(Property, TraceSoundOnRandomDatasets) {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto random_kb = testing::make_random_kb(rng);
    const Dataset d = load_dataset_text(random_kb.text(rng));
    const auto p = testing::random_profile(rng, random_kb.project, random_kb.traits, random_kb.models);
    const auto rec = recommend(p, d);
    for (const auto& [t, evidence] : rec.trace) {
      EXPECT_TRUE(rec.union_set.contains(t));
      for (const auto& e : evidence) ASSERT_TRUE(evidence_holds(t, e, d)) << t.str();
    }
    EXPECT_EQ(rec.trace.size(), rec.union_set.size());
  }
}

}  // namespace
}  // namespace elicit
