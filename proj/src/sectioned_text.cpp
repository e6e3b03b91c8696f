#include "elicit/sectioned_text.hpp"

#include <sstream>

#include "elicit/error.hpp"

namespace elicit {

std::string_view trim(std::string_view text) {
  constexpr std::string_view kBlank = " \t\r\n\f\v";
  const auto first = text.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(kBlank);
  return text.substr(first, last - first + 1);
}

SectionedText parse_sectioned_text(std::istream& in, std::string source) {
  SectionedText doc;
  doc.source = std::move(source);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (number == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(ErrorCode::Parse, "section", "unterminated section header", doc.source, number);
      }
      const std::string_view inner = trim(line.substr(1, line.size() - 2));
      const auto space = inner.find_first_of(" \t");
      TextSection section;
      section.name = std::string(inner.substr(0, space));
      if (space != std::string_view::npos) section.argument = std::string(trim(inner.substr(space)));
      section.line = number;
      if (section.name.empty()) {
        throw Error(ErrorCode::Parse, "section", "empty section name", doc.source, number);
      }
      doc.sections.push_back(std::move(section));
      continue;
    }

    if (doc.sections.empty()) {
      throw Error(ErrorCode::Parse, "section", "content before the first section header",
                  doc.source, number);
    }
    doc.sections.back().lines.push_back({number, std::string(line)});
  }
  if (in.bad()) {
    throw Error(ErrorCode::Io, "", "read failure", doc.source);
  }
  return doc;
}

SectionedText parse_sectioned_text(std::string_view text, std::string source) {
  std::istringstream in{std::string(text)};
  return parse_sectioned_text(in, std::move(source));
}

std::vector<std::string> split_cells(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    cells.emplace_back(trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return cells;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  if (trim(text).empty()) return items;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    items.emplace_back(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

bool split_key_value(std::string_view line, std::string& key, std::string& value) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return false;
  key = std::string(trim(line.substr(0, eq)));
  value = std::string(trim(line.substr(eq + 1)));
  return true;
}

}  // namespace elicit
