#include "elicit/dataset.hpp"

#include "elicit/error.hpp"

namespace elicit {

std::optional<Score> ProcessMatrix::score(const TechniqueId& technique, std::string_view model) const {
  auto m = models_.find(model);
  if (m == models_.end()) return std::nullopt;
  auto t = m->second.find(technique);
  if (t == m->second.end()) return std::nullopt;
  return t->second;
}

const std::map<TechniqueId, Score>& ProcessMatrix::column(std::string_view model) const {
  static const std::map<TechniqueId, Score> kEmpty;
  auto m = models_.find(model);
  return m == models_.end() ? kEmpty : m->second;
}

std::size_t ProcessMatrix::scored_cells() const {
  std::size_t n = 0;
  for (const auto& [model, scores] : models_) n += scores.size();
  return n;
}

namespace {

template <typename Matrix>
void check_marks(const Matrix& matrix, const AttributeTaxonomy& taxonomy,
                 const TechniqueRegistry& registry, std::string_view name) {
  for (const auto& [at, techniques] : matrix.columns()) {
    if (!taxonomy.contains(at)) {
      throw Error(ErrorCode::Dangling, std::string(name) + "." + to_string(at),
                  "column '" + to_string(at) + "' is not declared in the " +
                      std::string(to_string(taxonomy.dimension())) + " taxonomy");
    }
    for (const auto& t : techniques) {
      if (!registry.contains(t)) {
        throw Error(ErrorCode::Dangling, std::string(name) + "." + t.str(),
                    "technique '" + t.str() + "' is not registered");
      }
    }
  }
}

}  // namespace

Dataset::Dataset(DatasetParts parts) : parts_(std::move(parts)) {
  if (parts_.header.version.empty()) {
    throw Error(ErrorCode::Parse, "dataset.version", "dataset version must be non-empty");
  }
  if (parts_.project.dimension() != Dimension::Project ||
      parts_.people.dimension() != Dimension::People ||
      parts_.process.dimension() != Dimension::Process) {
    throw Error(ErrorCode::Taxonomy, "taxonomy", "taxonomy dimensions are mismatched");
  }
  check_marks(parts_.project_matrix, parts_.project, parts_.registry, "matrix.project");
  check_marks(parts_.people_matrix, parts_.people, parts_.registry, "matrix.people");
  for (const auto& [model, scores] : parts_.process_matrix.models()) {
    if (!parts_.process.contains({std::string(kProcessAttribute), model})) {
      throw Error(ErrorCode::Dangling, "matrix.process." + model,
                  "process model '" + model + "' is not declared in the process taxonomy");
    }
    for (const auto& [t, score] : scores) {
      if (!parts_.registry.contains(t)) {
        throw Error(ErrorCode::Dangling, "matrix.process." + t.str(),
                    "technique '" + t.str() + "' is not registered");
      }
    }
  }
}

const AttributeTaxonomy& Dataset::taxonomy(Dimension dimension) const {
  switch (dimension) {
    case Dimension::Project: return parts_.project;
    case Dimension::People: return parts_.people;
    case Dimension::Process: return parts_.process;
  }
  return parts_.project;
}

std::vector<std::string> Dataset::process_models() const {
  std::vector<std::string> out;
  if (const Attribute* a = parts_.process.find(kProcessAttribute)) {
    for (const auto& v : a->values) out.push_back(v.id);
  }
  return out;
}

bool operator==(const Dataset& a, const Dataset& b) {
  const DatasetParts& x = a.parts_;
  const DatasetParts& y = b.parts_;
  return x.header == y.header && x.registry == y.registry && x.project == y.project &&
         x.people == y.people && x.process == y.process &&
         x.project_matrix == y.project_matrix && x.people_matrix == y.people_matrix &&
         x.process_matrix == y.process_matrix;
}

}  // namespace elicit
