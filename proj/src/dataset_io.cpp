#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "elicit/dataset.hpp"
#include "elicit/error.hpp"
#include "elicit/sectioned_text.hpp"

namespace elicit {

namespace {

constexpr std::string_view kDatasetSection = "dataset";
constexpr std::string_view kTechniquesSection = "techniques";
constexpr std::string_view kTaxonomySection = "taxonomy";
constexpr std::string_view kMatrixSection = "matrix";

class Loader {
 public:
  explicit Loader(const SectionedText& doc) : doc_(doc) {}

  Dataset run() {
    // Sections are interpreted by kind, not by file order: matrices need the
    // registry and taxonomies regardless of where they appear.
    std::vector<const TextSection*> header, techniques, taxonomies, matrices;
    for (const auto& s : doc_.sections) {
      if (s.name == kDatasetSection) header.push_back(&s);
      else if (s.name == kTechniquesSection) techniques.push_back(&s);
      else if (s.name == kTaxonomySection) taxonomies.push_back(&s);
      else if (s.name == kMatrixSection) matrices.push_back(&s);
      else fail(ErrorCode::Parse, "section", "unknown section [" + s.name + "]", s.line);
    }
    if (header.size() != 1) {
      fail(ErrorCode::Parse, "dataset", "expected exactly one [dataset] section",
           header.empty() ? std::optional<int>{} : header[1]->line);
    }
    read_header(*header.front());
    for (const auto* s : techniques) read_techniques(*s);
    std::set<std::string> seen_taxonomies;
    for (const auto* s : taxonomies) {
      if (!seen_taxonomies.insert(s->argument).second) {
        fail(ErrorCode::Parse, "taxonomy", "[taxonomy " + s->argument + "] declared twice", s->line);
      }
      read_taxonomy(*s);
    }
    for (const auto* s : matrices) read_matrix(*s);

    try {
      return Dataset(std::move(parts_));
    } catch (const Error& e) {
      throw Error(e.code(), e.field(), e.message(), doc_.source);
    }
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& field, const std::string& message,
                         std::optional<int> line) const {
    throw Error(code, field, message, doc_.source, line);
  }

  // Re-throws an Error from a lower layer with this file's location.
  template <typename Fn>
  auto located(int line, Fn&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.source()) throw;
      throw Error(e.code(), e.field(), e.message(), doc_.source, line);
    }
  }

  void read_header(const TextSection& s) {
    std::set<std::string> seen;
    bool have_threshold = false;
    for (const auto& line : s.lines) {
      std::string key, value;
      if (!split_key_value(line.text, key, value)) {
        fail(ErrorCode::Parse, "dataset", "expected 'key = value'", line.number);
      }
      if (!seen.insert(key).second) {
        fail(ErrorCode::Parse, "dataset." + key, "key repeated", line.number);
      }
      if (key == "version") {
        parts_.header.version = value;
      } else if (key == "provenance") {
        parts_.header.provenance = value;
      } else if (key == "threshold") {
        parts_.header.threshold = located(line.number, [&] { return Score::parse(value); });
        have_threshold = true;
      } else {
        fail(ErrorCode::Parse, "dataset." + key, "unknown header key '" + key + "'", line.number);
      }
    }
    if (parts_.header.version.empty()) {
      fail(ErrorCode::Parse, "dataset.version", "dataset version must be non-empty", s.line);
    }
    if (!have_threshold) parts_.header.threshold = kDefaultThreshold;
  }

  void read_techniques(const TextSection& s) {
    for (const auto& line : s.lines) {
      auto cells = split_cells(line.text);
      if (cells.size() != 5) {
        fail(ErrorCode::Parse, "techniques",
             "expected 'id | category | display name | aliases | description'", line.number);
      }
      auto category = parse_category(cells[1]);
      if (!category) {
        fail(ErrorCode::Domain, "techniques." + cells[0] + ".category",
             "unknown category '" + cells[1] + "'", line.number);
      }
      TechniqueRecord record{TechniqueId(cells[0]), cells[2], *category, cells[4], split_list(cells[3])};
      located(line.number, [&] { return parts_.registry.register_technique(std::move(record)); });
    }
  }

  static AttributeValueDef parse_value(const std::string& text, const std::string& field) {
    const auto open = text.find('[');
    if (open == std::string::npos) return {text, std::nullopt};
    if (text.back() != ']') {
      throw Error(ErrorCode::Parse, field, "unterminated range on value '" + text + "'");
    }
    AttributeValueDef def{std::string(trim(text.substr(0, open))), ValueRange{}};
    const std::string body = text.substr(open + 1, text.size() - open - 2);
    const auto dots = body.find("..");
    if (dots == std::string::npos) {
      throw Error(ErrorCode::Parse, field, "range on '" + def.id + "' must read [low..high]");
    }
    auto bound = [&](std::string_view part) -> std::optional<double> {
      part = trim(part);
      if (part.empty()) return std::nullopt;
      const std::string s(part);
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size()) {
        throw Error(ErrorCode::Parse, field, "range bound '" + s + "' is not a number");
      }
      return v;
    };
    def.range->low = bound(std::string_view(body).substr(0, dots));
    def.range->high = bound(std::string_view(body).substr(dots + 2));
    return def;
  }

  AttributeTaxonomy& taxonomy_for(const std::string& argument, int line) {
    if (argument == "project") return parts_.project;
    if (argument == "people") return parts_.people;
    if (argument == "process") return parts_.process;
    fail(ErrorCode::Parse, "taxonomy", "taxonomy dimension must be project, people or process", line);
  }

  void read_taxonomy(const TextSection& s) {
    AttributeTaxonomy& taxonomy = taxonomy_for(s.argument, s.line);
    for (const auto& line : s.lines) {
      auto cells = split_cells(line.text);
      if (cells.size() != 3) {
        fail(ErrorCode::Parse, "taxonomy." + s.argument,
             "expected 'attribute | ordinal|nominal | value, value, ...'", line.number);
      }
      Attribute attribute;
      attribute.id = cells[0];
      if (cells[1] == "ordinal") attribute.kind = AttributeKind::Ordinal;
      else if (cells[1] == "nominal") attribute.kind = AttributeKind::Nominal;
      else fail(ErrorCode::Domain, "taxonomy." + cells[0], "kind must be ordinal or nominal", line.number);
      located(line.number, [&] {
        const std::string field = s.argument + "." + attribute.id;
        for (const auto& item : split_list(cells[2])) attribute.values.push_back(parse_value(item, field));
        taxonomy.add_attribute(std::move(attribute));
        return 0;
      });
    }
  }

  const TechniqueId& row_technique(const std::string& cell, const std::string& matrix, int line) {
    TechniqueId id(cell);
    if (!parts_.registry.contains(id)) {
      fail(ErrorCode::Dangling, "matrix." + matrix + "." + cell,
           "technique '" + cell + "' is not registered", line);
    }
    return parts_.registry.at(id).id;
  }

  void read_matrix(const TextSection& s) {
    const std::string& dim = s.argument;
    if (dim != "project" && dim != "people" && dim != "process") {
      fail(ErrorCode::Parse, "matrix", "matrix dimension must be project, people or process", s.line);
    }
    if (s.lines.empty()) return;

    const auto header = split_cells(s.lines.front().text);
    const int header_line = s.lines.front().number;
    if (header.size() < 2 || header.front() != "technique") {
      fail(ErrorCode::Parse, "matrix." + dim, "header row must start with 'technique'", header_line);
    }

    // Resolve column coordinates.
    std::vector<AttributeValue> columns;
    for (std::size_t i = 1; i < header.size(); ++i) {
      AttributeValue at;
      if (dim == "process") {
        at = {std::string(kProcessAttribute), header[i]};
      } else {
        std::string attr, value;
        if (!split_key_value(header[i], attr, value)) {
          fail(ErrorCode::Parse, "matrix." + dim, "column '" + header[i] + "' must read attribute=value",
               header_line);
        }
        at = {attr, value};
      }
      const AttributeTaxonomy& taxonomy = dim == "project" ? parts_.project
                                          : dim == "people" ? parts_.people
                                                            : parts_.process;
      if (!taxonomy.contains(at)) {
        fail(ErrorCode::Dangling, "matrix." + dim + "." + header[i],
             "column '" + header[i] + "' is not declared in the " + dim + " taxonomy", header_line);
      }
      for (const auto& c : columns) {
        if (c == at) fail(ErrorCode::Parse, "matrix." + dim, "column '" + header[i] + "' repeated", header_line);
      }
      columns.push_back(std::move(at));
    }

    for (std::size_t r = 1; r < s.lines.size(); ++r) {
      const auto& line = s.lines[r];
      const auto cells = split_cells(line.text);
      if (cells.size() != header.size()) {
        fail(ErrorCode::Parse, "matrix." + dim,
             "row has " + std::to_string(cells.size()) + " cells, header has " + std::to_string(header.size()),
             line.number);
      }
      const TechniqueId& technique = row_technique(cells[0], dim, line.number);
      for (std::size_t c = 1; c < cells.size(); ++c) {
        const AttributeValue& at = columns[c - 1];
        const std::string field = "matrix." + dim + "." + technique.str() + "." + to_string(at);
        if (!defined_.insert({dim, technique.str(), to_string(at)}).second) {
          fail(ErrorCode::Parse, field, "cell defined more than once", line.number);
        }
        const std::string& cell = cells[c];
        if (dim == "project") {
          if (cell == "R") parts_.project_matrix.set(technique, at);
          else if (cell != "-") fail(ErrorCode::Domain, field, "project cell '" + cell + "' must be R or -", line.number);
        } else if (dim == "people") {
          if (cell == "Y") parts_.people_matrix.set(technique, at);
          else if (cell != "N") fail(ErrorCode::Domain, field, "people cell '" + cell + "' must be Y or N", line.number);
        } else if (cell != "-") {
          Score score = located(line.number, [&] {
            try {
              return Score::parse(cell);
            } catch (const Error& e) {
              throw Error(e.code(), field, e.message());
            }
          });
          parts_.process_matrix.set(technique, at.value, score);
        }
      }
    }
  }

  const SectionedText& doc_;
  DatasetParts parts_;
  std::set<std::tuple<std::string, std::string, std::string>> defined_;
};

void require_plain(const std::string& text, const std::string& field) {
  if (text.find_first_of("|\n\r") != std::string::npos) {
    throw Error(ErrorCode::Parse, field, "text contains '|' or a line break and cannot be written");
  }
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string format_bound(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Dataset load_dataset(std::istream& in, const std::string& source) {
  const SectionedText doc = parse_sectioned_text(in, source);
  return Loader(doc).run();
}

Dataset load_dataset_text(std::string_view text, const std::string& source) {
  const SectionedText doc = parse_sectioned_text(text, source);
  return Loader(doc).run();
}

Dataset load_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "", "cannot open dataset file", path.string());
  }
  return load_dataset(in, path.string());
}

std::string serialize_dataset(const Dataset& d) {
  std::ostringstream out;
  const auto& h = d.header();
  require_plain(h.version, "dataset.version");
  require_plain(h.provenance, "dataset.provenance");
  out << "[dataset]\n";
  out << "version = " << h.version << "\n";
  if (!h.provenance.empty()) out << "provenance = " << h.provenance << "\n";
  out << "threshold = " << h.threshold.str() << "\n\n";

  out << "[techniques]\n";
  out << "# id | category | display name | aliases | description\n";
  for (const auto& r : d.registry().list()) {
    require_plain(r.display_name, "techniques." + r.id.str());
    require_plain(r.description, "techniques." + r.id.str());
    for (const auto& a : r.aliases) {
      require_plain(a, "techniques." + r.id.str());
      if (a.find(',') != std::string::npos) {
        throw Error(ErrorCode::Parse, "techniques." + r.id.str(), "alias '" + a + "' contains ','");
      }
    }
    out << r.id.str() << " | " << to_string(r.category) << " | " << r.display_name << " | "
        << join(r.aliases, ", ") << " | " << r.description << "\n";
  }

  for (auto dim : {Dimension::Project, Dimension::People, Dimension::Process}) {
    out << "\n[taxonomy " << to_string(dim) << "]\n";
    for (const auto& a : d.taxonomy(dim).attributes()) {
      std::vector<std::string> values;
      for (const auto& v : a.values) {
        std::string item = v.id;
        if (v.range) {
          item += "[";
          if (v.range->low) item += format_bound(*v.range->low);
          item += "..";
          if (v.range->high) item += format_bound(*v.range->high);
          item += "]";
        }
        values.push_back(std::move(item));
      }
      out << a.id << " | " << to_string(a.kind) << " | " << join(values, ", ") << "\n";
    }
  }

  const auto techniques = d.registry().ids();
  auto write_marks = [&](std::string_view dim, const AttributeTaxonomy& taxonomy, auto&& selects,
                         std::string_view yes, std::string_view no) {
    const auto coords = taxonomy.coordinates();
    out << "\n[matrix " << dim << "]\n";
    if (coords.empty()) return;
    out << "technique";
    for (const auto& at : coords) out << " | " << to_string(at);
    out << "\n";
    for (const auto& t : techniques) {
      out << t.str();
      for (const auto& at : coords) out << " | " << (selects(t, at) ? yes : no);
      out << "\n";
    }
  };
  write_marks("project", d.project_taxonomy(),
              [&](const TechniqueId& t, const AttributeValue& at) { return d.project_matrix().selects(t, at); },
              "R", "-");
  write_marks("people", d.people_taxonomy(),
              [&](const TechniqueId& t, const AttributeValue& at) { return d.people_matrix().selects(t, at); },
              "Y", "N");

  const auto models = d.process_models();
  out << "\n[matrix process]\n";
  if (!models.empty()) {
    out << "technique";
    for (const auto& m : models) out << " | " << m;
    out << "\n";
    for (const auto& t : techniques) {
      out << t.str();
      for (const auto& m : models) {
        auto s = d.process_matrix().score(t, m);
        out << " | " << (s ? s->str() : "-");
      }
      out << "\n";
    }
  }
  return out.str();
}

const Dataset& default_dataset() {
  static const Dataset dataset = load_dataset_text(default_dataset_text(), std::string(kDefaultDatasetName));
  return dataset;
}

}  // namespace elicit
