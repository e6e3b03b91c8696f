#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elicit {

/// Error classes surfaced to callers. The CLI maps every code to exit status 2
/// and the service maps them to HTTP 400; both print the stable name.
enum class ErrorCode {
  Io,                // file missing or unreadable
  Parse,             // malformed document
  Dangling,          // reference to an unregistered technique/attribute/value
  Range,             // process score or threshold outside [0,1]
  Domain,            // cell value outside its matrix vocabulary
  DuplicateId,
  AmbiguousAlias,
  UnknownTechnique,
  Taxonomy,          // profile value missing from the taxonomy
  Cardinality,       // more than one value for an ordinal attribute
  InvalidDecision,   // feasibility decision malformed or contradictory
  ExcludeAbsent,     // exclusion of a technique outside the union
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable code, the offending field path, and an
/// optional source location.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string field, const std::string& message,
        std::optional<std::string> source = std::nullopt,
        std::optional<int> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }
  const std::optional<std::string>& source() const noexcept { return source_; }
  const std::optional<int>& line() const noexcept { return line_; }

  /// "source:line: CODE field: message" with the missing parts omitted.
  std::string diagnostic() const;

 private:
  ErrorCode code_;
  std::string field_;
  std::string message_;
  std::optional<std::string> source_;
  std::optional<int> line_;
};

}  // namespace elicit
