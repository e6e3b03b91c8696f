#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace elicit {

/// Line-oriented document shared by dataset and profile files:
///
///   # comment
///   [section optional-argument]
///   key = value
///   cell | cell | cell
///
/// Blank lines and lines whose first non-blank character is '#' are dropped.
/// Content before the first section header is a Parse error.
struct TextLine {
  int number = 0;
  std::string text;  // trimmed
};

struct TextSection {
  std::string name;
  std::string argument;  // text after the name inside the brackets, trimmed
  int line = 0;
  std::vector<TextLine> lines;
};

struct SectionedText {
  std::string source;  // file name for diagnostics
  std::vector<TextSection> sections;
};

SectionedText parse_sectioned_text(std::istream& in, std::string source);
SectionedText parse_sectioned_text(std::string_view text, std::string source);

std::string_view trim(std::string_view text);

/// Splits on '|' and trims every cell. A line without '|' yields one cell.
std::vector<std::string> split_cells(std::string_view line);

/// Splits on ',' and trims; empty input yields an empty list.
std::vector<std::string> split_list(std::string_view text);

/// Splits "key = value" at the first '='. Returns false if there is no '='.
bool split_key_value(std::string_view line, std::string& key, std::string& value);

}  // namespace elicit
