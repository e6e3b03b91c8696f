#include "elicit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>

#include "elicit/dataset.hpp"
#include "elicit/engine.hpp"
#include "elicit/error.hpp"
#include "elicit/profile.hpp"
#include "elicit/report.hpp"

namespace elicit {

namespace {

struct Options {
  std::string dataset;
  std::string format = "text";
  std::string profile;
  std::string variant;
  std::string technique;
};

class DatasetRef {
 public:
  explicit DatasetRef(const std::string& path) {
    if (!path.empty()) owned_.emplace(load_dataset_file(path));
  }
  const Dataset& get() const { return owned_ ? *owned_ : default_dataset(); }

 private:
  std::optional<Dataset> owned_;
};

bool structured(const Options& o) { return o.format == "structured"; }

int cmd_recommend(const Options& o, std::ostream& out) {
  const DatasetRef dataset(o.dataset);
  const auto resolved = resolve_profile(parse_profile_file(o.profile), dataset.get());
  const auto rec = recommend(resolved.profile, dataset.get(), resolved.decisions);
  out << (structured(o) ? dump(to_json(rec)) : render_text(rec));
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const ValidationReport report = o.dataset.empty()
                                      ? validate_dataset_text(default_dataset_text(), std::string(kDefaultDatasetName))
                                      : validate_dataset_file(o.dataset);
  out << (structured(o) ? dump(to_json(report)) : render_text(report));
  return report.ok() ? kExitOk : kExitData;
}

int cmd_explain(const Options& o, std::ostream& out) {
  const DatasetRef dataset(o.dataset);
  const TechniqueId technique = dataset.get().registry().lookup(o.technique);
  const auto resolved = resolve_profile(parse_profile_file(o.profile), dataset.get());
  const auto rec = recommend(resolved.profile, dataset.get(), resolved.decisions);
  out << render_explanation(rec, resolved.profile, dataset.get(), technique);
  return kExitOk;
}

int cmd_taxonomy(const Options& o, std::ostream& out) {
  const DatasetRef dataset(o.dataset);
  out << (structured(o) ? dump(taxonomy_to_json(dataset.get())) : render_taxonomy_text(dataset.get()));
  return kExitOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
  const DatasetRef dataset(o.dataset);
  const auto base = resolve_profile(parse_profile_file(o.profile), dataset.get());
  const auto variant = resolve_profile(parse_profile_file(o.variant), dataset.get());
  const auto diff = what_if_diff(base.profile, variant.profile, dataset.get());
  out << (structured(o) ? dump(to_json(diff, dataset.get().version()))
                        : render_text(diff, base.profile.label, variant.profile.label));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recommend requirement elicitation techniques from project, people and process matrices", "elicit"};
  app.require_subcommand(1);

  Options o;
  const std::vector<std::string> formats{"text", "structured"};
  auto add_dataset = [&](CLI::App* cmd) {
    cmd->add_option("--dataset", o.dataset, "Dataset file (default: built-in dataset)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  std::function<int()> action;

  auto* rec = app.add_subcommand("recommend", "Recommend techniques for a profile");
  rec->add_option("profile", o.profile, "Profile file")->required();
  add_dataset(rec);
  add_format(rec);
  rec->callback([&] { action = [&] { return cmd_recommend(o, out); }; });

  auto* val = app.add_subcommand("validate", "Lint a dataset file");
  val->add_option("dataset", o.dataset, "Dataset file (default: built-in dataset)");
  add_format(val);
  val->callback([&] { action = [&] { return cmd_validate(o, out); }; });

  auto* exp = app.add_subcommand("explain", "Show the cells supporting one technique");
  exp->add_option("profile", o.profile, "Profile file")->required();
  exp->add_option("technique", o.technique, "Technique id or name")->required();
  add_dataset(exp);
  exp->callback([&] { action = [&] { return cmd_explain(o, out); }; });

  auto* tax = app.add_subcommand("taxonomy", "Print the technique registry and attribute vocabularies");
  add_dataset(tax);
  add_format(tax);
  tax->callback([&] { action = [&] { return cmd_taxonomy(o, out); }; });

  auto* diff = app.add_subcommand("diff", "Compare the union sets of two profiles");
  diff->add_option("base", o.profile, "Base profile file")->required();
  diff->add_option("variant", o.variant, "Variant profile file")->required();
  add_dataset(diff);
  add_format(diff);
  diff->callback([&] { action = [&] { return cmd_diff(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "elicit: " << e.diagnostic() << "\n";
    return kExitData;
  }
}

}  // namespace elicit
