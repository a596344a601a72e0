#include <CLI11.hpp>
#include <iostream>

#include "semnet/pipeline.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> dataset;
  std::vector<std::string> languages;
  std::vector<std::string> relations;
  std::optional<double> rewire_multiplier;
  std::optional<std::size_t> rewire_realizations;
  std::optional<double> log_width;
  std::optional<std::size_t> samples;
  std::optional<double> peak_threshold;
  std::optional<std::string> grammar_table;
};

semnet::RunConfig resolve(const Overrides& o) {
  semnet::RunConfig c = o.config.empty() ? semnet::RunConfig{} : semnet::load_config(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.out = *o.out;
  if (o.dataset) c.dataset = *o.dataset;
  if (!o.languages.empty()) c.languages = o.languages;
  if (!o.relations.empty()) {
    c.relations.clear();
    for (const auto& name : o.relations) {
      auto r = semnet::parse_relation(name);
      if (!r) throw semnet::UsageError("unknown relation: " + name);
      c.relations.push_back(*r);
    }
  }
  if (o.rewire_multiplier) c.rewire.multiplier = *o.rewire_multiplier;
  if (o.rewire_realizations) c.rewire.realizations = *o.rewire_realizations;
  if (o.log_width) c.log_width = *o.log_width;
  if (o.samples) c.calibration.samples = *o.samples;
  if (o.peak_threshold) c.peak.threshold = *o.peak_threshold;
  if (o.grammar_table) c.grammar_table = *o.grammar_table;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural analysis of ConceptNet semantic networks"};
  app.require_subcommand(1);
  Overrides o;
  app.add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Master RNG seed");
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--dataset", o.dataset, "ConceptNet assertions dump (.csv or .csv.gz)");
  app.add_option("--languages", o.languages, "Language codes")->delimiter(',');
  app.add_option("--relations", o.relations, "Relations, e.g. IsA,RelatedTo,Union")->delimiter(',');
  app.add_option("--rewire-multiplier", o.rewire_multiplier, "Successful swaps per link");
  app.add_option("--rewire-realizations", o.rewire_realizations, "Rewired realizations (0 disables)");
  app.add_option("--log-width", o.log_width, "Log-bin width b");
  app.add_option("--samples", o.samples, "UBCM samples per network");
  app.add_option("--peak-threshold", o.peak_threshold, "Peak height over baseline");
  app.add_option("--grammar-table", o.grammar_table, "Grammatical-variation table (JSON)");

  auto* ingest = app.add_subcommand("ingest", "Extract per-relation graphs from a dump");
  auto* analyze = app.add_subcommand("analyze", "Degree, mixing, clustering, tail and rewiring statistics");
  auto* calibrate = app.add_subcommand("calibrate", "UBCM-calibrated similarity and complementarity");
  auto* inflection = app.add_subcommand("inflection", "Degree-density peak and Form-Of merge");
  // Global flags are accepted after the subcommand too.
  for (auto* sub : {ingest, analyze, calibrate, inflection}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : semnet::kExitUsage;
  }

  try {
    const auto cfg = resolve(o);
    semnet::CommandResult res;
    if (ingest->parsed()) res = semnet::cmd_ingest(cfg);
    else if (analyze->parsed()) res = semnet::cmd_analyze(cfg);
    else if (calibrate->parsed()) res = semnet::cmd_calibrate(cfg);
    else res = semnet::cmd_inflection(cfg);
    return res.exit_code;
  } catch (const semnet::UsageError& e) {
    std::cerr << "semnet: " << e.what() << '\n';
    return semnet::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "semnet: " << e.what() << '\n';
    return 1;
  }
}
