#include "elicit/error.hpp"

namespace elicit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "IO";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Dangling: return "DANGLING";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::DuplicateId: return "DUPLICATE_ID";
    case ErrorCode::AmbiguousAlias: return "AMBIGUOUS_ALIAS";
    case ErrorCode::UnknownTechnique: return "UNKNOWN_TECHNIQUE";
    case ErrorCode::Taxonomy: return "TAXONOMY";
    case ErrorCode::Cardinality: return "CARDINALITY";
    case ErrorCode::InvalidDecision: return "INVALID_DECISION";
    case ErrorCode::ExcludeAbsent: return "EXCLUDE_ABSENT";
  }
  return "UNKNOWN";
}

namespace {

std::string compose(ErrorCode code, const std::string& field, const std::string& message) {
  std::string out(to_string(code));
  if (!field.empty()) out += " " + field;
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, std::string field, const std::string& message,
             std::optional<std::string> source, std::optional<int> line)
    : std::runtime_error(compose(code, field, message)),
      code_(code),
      field_(std::move(field)),
      message_(message),
      source_(std::move(source)),
      line_(line) {}

std::string Error::diagnostic() const {
  std::string out;
  if (source_) {
    out += *source_;
    if (line_) out += ":" + std::to_string(*line_);
    out += ": ";
  } else if (line_) {
    out += "line " + std::to_string(*line_) + ": ";
  }
  out += what();
  return out;
}

}  // namespace elicit
