#include "semnet/pipeline.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semnet/inflection.hpp"
#include "semnet/motifs.hpp"
#include "semnet/random.hpp"
#include "semnet/rewiring.hpp"
#include "semnet/tail.hpp"
#include "semnet/ubcm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace semnet {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::ofstream open_out(const fs::path& p) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  return out;
}

void write_json(const fs::path& p, const json& j) {
  auto out = open_out(p);
  out << j.dump(2) << '\n';
}

std::string network_key(const std::string& language, Relation r) {
  return language + "/" + std::string(to_string(r));
}

void echo_config(const RunConfig& cfg, const std::string& command) {
  json j = cfg.to_json();
  j["command"] = command;
  j["config_hash"] = cfg.hash();
  j["rng"] = kRngAlgorithm;
  write_json(fs::path(cfg.out) / ("effective_config_" + command + ".json"), j);
}

json provenance(const RunConfig& cfg) {
  return {{"seed", cfg.seed}, {"config_hash", cfg.hash()}, {"rng", kRngAlgorithm}};
}

Relation relation_or_usage(const std::string& name) {
  auto r = parse_relation(name);
  if (!r) throw UsageError("unknown relation: " + name);
  return *r;
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    c.dataset = j.value("dataset", c.dataset);
    if (j.contains("languages")) c.languages = j.at("languages").get<std::vector<std::string>>();
    if (j.contains("relations")) {
      c.relations.clear();
      for (const auto& name : j.at("relations").get<std::vector<std::string>>())
        c.relations.push_back(relation_or_usage(name));
    }
    c.seed = j.value("seed", c.seed);
    if (j.contains("log_width") && !j.at("log_width").is_null()) c.log_width = j.at("log_width").get<double>();
    if (j.contains("regression_windows")) {
      for (const auto& [key, win] : j.at("regression_windows").items()) {
        const auto bounds = win.get<std::vector<double>>();
        if (bounds.size() != 2) throw UsageError("regression window " + key + " needs [k_lo, k_hi]");
        c.regression_windows[key] = DegreeWindow{bounds[0], bounds[1]};
      }
    }
    if (j.contains("rewire")) {
      const auto& r = j.at("rewire");
      c.rewire.multiplier = r.value("multiplier", c.rewire.multiplier);
      c.rewire.attempt_cap = r.value("attempt_cap", c.rewire.attempt_cap);
      c.rewire.realizations = r.value("realizations", c.rewire.realizations);
    }
    if (j.contains("calibration")) {
      const auto& r = j.at("calibration");
      c.calibration.samples = r.value("samples", c.calibration.samples);
      c.calibration.large_samples = r.value("large_samples", c.calibration.large_samples);
      c.calibration.large_threshold = r.value("large_threshold", c.calibration.large_threshold);
      c.calibration.max_nodes = r.value("max_nodes", c.calibration.max_nodes);
      c.calibration.min_nodes = r.value("min_nodes", c.calibration.min_nodes);
    }
    if (j.contains("peak")) {
      const auto& r = j.at("peak");
      c.peak.threshold = r.value("threshold", c.peak.threshold);
      c.peak.min_run = r.value("min_run", c.peak.min_run);
      c.peak.min_count = r.value("min_count", c.peak.min_count);
      c.peak.log_width = r.value("log_width", c.peak.log_width);
    }
    c.grammar_table = j.value("grammar_table", c.grammar_table);
    c.out = j.value("out", c.out);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  return c;
}

json RunConfig::to_json() const {
  json j;
  j["dataset"] = dataset;
  j["languages"] = languages;
  std::vector<std::string> rel;
  for (auto r : relations) rel.emplace_back(to_string(r));
  j["relations"] = rel;
  j["seed"] = seed;
  j["log_width"] = log_width ? json(*log_width) : json(nullptr);
  json windows = json::object();
  for (const auto& [k, w] : regression_windows) windows[k] = {w.lo, w.hi};
  j["regression_windows"] = windows;
  j["rewire"] = {{"multiplier", rewire.multiplier},
                 {"attempt_cap", rewire.attempt_cap},
                 {"realizations", rewire.realizations}};
  j["calibration"] = {{"samples", calibration.samples},
                      {"large_samples", calibration.large_samples},
                      {"large_threshold", calibration.large_threshold},
                      {"max_nodes", calibration.max_nodes},
                      {"min_nodes", calibration.min_nodes}};
  j["peak"] = {{"threshold", peak.threshold},
               {"min_run", peak.min_run},
               {"min_count", peak.min_count},
               {"log_width", peak.log_width}};
  j["grammar_table"] = grammar_table.empty() ? default_grammar_table_path() : grammar_table;
  j["out"] = out;
  return j;
}

std::string RunConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config " + path + " is not valid JSON: " + e.what());
  }
  return RunConfig::from_json(j);
}

std::string graph_path(const RunConfig& cfg, const std::string& language, Relation r) {
  return (fs::path(cfg.out) / "graphs" / language / (std::string(to_string(r)) + ".tsv")).string();
}

std::string pos_path(const RunConfig& cfg, const std::string& language) {
  return (fs::path(cfg.out) / "graphs" / language / "pos.tsv").string();
}

CommandResult cmd_ingest(const RunConfig& cfg) {
  if (cfg.dataset.empty()) throw UsageError("ingest needs a dataset path");
  if (!fs::exists(cfg.dataset)) throw UsageError("dataset not found: " + cfg.dataset);
  echo_config(cfg, "ingest");

  // Union needs its four members even when they are not requested.
  std::vector<RelationSpec> specs;
  auto want = [&](const std::string& lang, Relation r) {
    for (const auto& s : specs)
      if (s.language == lang && s.relation == r) return;
    specs.push_back({lang, r});
  };
  for (const auto& lang : cfg.languages) {
    for (auto r : cfg.relations) {
      if (r == Relation::Union) {
        for (auto m : kUnionMembers) want(lang, m);
      } else {
        want(lang, r);
      }
    }
  }
  AssertionParser parser(specs);
  parser.consume_file(cfg.dataset);

  CommandResult res;
  json report = json::object();
  std::size_t kept_total = 0;
  for (const auto& lang : cfg.languages) {
    std::map<Relation, Graph> graphs;
    PosTable pos;
    for (std::size_t s = 0; s < specs.size(); ++s) {
      if (specs[s].language != lang) continue;
      graphs[specs[s].relation] = graph_from_concepts(parser.edges(s));
      pos.add_all(parser.edges(s));
      const auto rep = parser.report(s);
      kept_total += rep.rows_kept;
      report[network_key(lang, specs[s].relation)] = {{"rows_read", rep.rows_read},
                                                      {"rows_kept", rep.rows_kept},
                                                      {"rows_malformed", rep.rows_malformed},
                                                      {"nodes_dropped_long_phrase", rep.nodes_dropped_long_phrase}};
    }
    for (auto r : cfg.relations) {
      if (r == Relation::Union) {
        std::vector<Graph> members;
        for (auto m : kUnionMembers) members.push_back(graphs.at(m));
        graphs[Relation::Union] = build_union(members);
      }
      const auto& g = graphs.at(r);
      write_edge_list_file(g, (fs::create_directories(fs::path(graph_path(cfg, lang, r)).parent_path()),
                               graph_path(cfg, lang, r)));
    }
    auto out = open_out(pos_path(cfg, lang));
    pos.write(out);
  }
  write_json(fs::path(cfg.out) / "ingest_report.json", report);
  if (kept_total == 0) {
    res.exit_code = kExitEmpty;
    res.failures.push_back("no rows kept");
  }
  return res;
}

json network_summary(const Graph& g, const RunConfig& cfg, const std::string& window_key) {
  json j;
  j["N"] = g.node_count();
  j["L"] = g.link_count();
  j["d_max"] = g.max_degree();
  j["mean_degree"] = g.mean_degree();
  if (g.node_count() == 0) return j;

  const auto cl = clustering(g);
  j["c_G"] = cl.global;
  if (g.link_count() > 0) {
    const auto mix = annd(g);
    const auto knn = mean_neighbor_degree(g);
    double sum = 0.0;
    std::size_t cnt = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.degree(v) == 0) continue;
      sum += knn[v];
      ++cnt;
    }
    j["annd"] = cnt == 0 ? 0.0 : sum / static_cast<double>(cnt);
    j["rho_D"] = mix.rho_d;
    j["rho_D_degenerate"] = mix.rho_degenerate;
  }
  j["lcc_fraction"] = connected_components(g).lcc_fraction;

  json tail;
  if (g.node_count() <= kMinNodesForTailEstimate) {
    tail["skipped"] = "N <= 1000";
  } else {
    try {
      std::vector<double> sample;
      for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) sample.push_back(static_cast<double>(g.degree(v)));
      const auto density = degree_density(g);
      const double b = cfg.log_width.value_or(default_log_width(g.max_degree()));
      const auto binned = log_bin(density, b);
      DegreeWindow window = default_tail_window(density);
      if (auto it = cfg.regression_windows.find(window_key); it != cfg.regression_windows.end()) window = it->second;
      const auto est = estimate_tail(sample, {}, &binned, &window);
      auto gamma_or_marker = [&](const std::optional<double>& gmm) -> json {
        if (est.verdict != TailVerdict::PowerLaw || !gmm) return "X";
        return *gmm;
      };
      tail["gamma_slope"] = est.gamma_slope ? gamma_or_marker(est.gamma_slope) : json("NA");
      tail["gamma_hill"] = gamma_or_marker(est.gamma_hill);
      tail["gamma_mom"] = gamma_or_marker(est.gamma_moments);
      tail["gamma_kern"] = gamma_or_marker(est.gamma_kernel);
      tail["xi_hill"] = est.xi_hill;
      tail["xi_mom"] = est.xi_moments;
      tail["xi_kern"] = est.xi_kernel;
      tail["verdict"] = to_string(est.verdict);
      tail["tail_size"] = est.tail_size;
      tail["kernel_bandwidth"] = est.bandwidth;
      tail["slope_window"] = {window.lo, window.hi};
      tail["log_width"] = b;
    } catch (const std::exception& e) {
      tail["error"] = e.what();
    }
  }
  j["tail"] = tail;

  if (cfg.rewire.realizations > 0 && g.link_count() >= 2) {
    RewireConfig rc;
    rc.budget_multiplier = cfg.rewire.multiplier;
    rc.attempt_cap_multiplier = cfg.rewire.attempt_cap;
    rc.realizations = cfg.rewire.realizations;
    rc.seed = cfg.seed;
    json rw;
    for (auto metric : {EnsembleMetric::LccFraction, EnsembleMetric::ClusteringGlobal}) {
      const auto st = rewired_ensemble_stats(g, rc, metric);
      const auto v = st.values.at(0);
      rw[std::string(to_string(metric))] = {{"mean", v.mean}, {"std", v.std}};
      rw["cap_exhausted_runs"] = st.cap_exhausted_runs;
    }
    rw["realizations"] = rc.realizations;
    rw["seed"] = rc.seed;
    j["rewired"] = rw;
  }
  return j;
}

namespace {

void write_curves(const Graph& g, const RunConfig& cfg, const fs::path& stem) {
  const auto density = degree_density(g);
  {
    auto out = open_out(stem.string() + "_density.tsv");
    out << "degree\tcount\tdensity\n";
    for (const auto& [k, c] : density.counts)
      out << k << '\t' << static_cast<std::uint64_t>(c) << '\t' << num(density.probability(k)) << '\n';
  }
  {
    const double b = cfg.log_width.value_or(default_log_width(g.max_degree()));
    const auto binned = log_bin(density, b);
    auto out = open_out(stem.string() + "_density_binned.tsv");
    out << "k\tbin_lo\tbin_hi\tcount\theight\n";
    for (std::size_t i = 0; i < binned.size(); ++i)
      out << num(binned.center(i)) << '\t' << num(binned.edges[i]) << '\t' << num(binned.edges[i + 1]) << '\t'
          << num(binned.counts[i]) << '\t' << num(binned.heights[i]) << '\n';
  }
  if (g.link_count() > 0) {
    const auto mix = annd(g);
    auto out = open_out(stem.string() + "_annd.tsv");
    out << "k\tannd\n";
    for (const auto& [k, v] : mix.annd_by_degree) out << k << '\t' << num(v) << '\n';
  }
  {
    const auto cl = clustering(g);
    auto out = open_out(stem.string() + "_clustering.tsv");
    out << "k\tmean_c\n";
    for (const auto& [k, v] : cl.by_degree) out << k << '\t' << num(v) << '\n';
  }
  if (cfg.rewire.realizations > 0 && g.link_count() >= 2) {
    RewireConfig rc;
    rc.budget_multiplier = cfg.rewire.multiplier;
    rc.attempt_cap_multiplier = cfg.rewire.attempt_cap;
    rc.realizations = cfg.rewire.realizations;
    rc.seed = cfg.seed;
    for (auto metric : {EnsembleMetric::AnndByDegree, EnsembleMetric::ClusteringByDegree}) {
      const auto st = rewired_ensemble_stats(g, rc, metric);
      auto out = open_out(stem.string() + "_" + std::string(to_string(metric)) + "_rewired.tsv");
      out << "k\tmean\tstd\n";
      for (const auto& [k, v] : st.values) out << k << '\t' << num(v.mean) << '\t' << num(v.std) << '\n';
    }
  }
}

std::string cell(const json& tail, const char* key) {
  if (!tail.contains(key)) return "NA";
  const auto& v = tail.at(key);
  if (v.is_string()) return v.get<std::string>();
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f", v.get<double>());
  return buf;
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& cfg) {
  echo_config(cfg, "analyze");
  CommandResult res;
  const fs::path dir = fs::path(cfg.out) / "analysis";
  std::ostringstream gamma_table;
  gamma_table << "language\trelation\tgamma_slope\tgamma_hill\tgamma_mom\tgamma_kern\n";
  std::size_t done = 0;
  for (const auto& lang : cfg.languages) {
    for (auto r : cfg.relations) {
      const auto key = network_key(lang, r);
      try {
        const auto path = graph_path(cfg, lang, r);
        if (!fs::exists(path)) throw std::runtime_error("graph file missing: " + path);
        const Graph full = read_edge_list_file(path);
        if (full.node_count() == 0) throw std::runtime_error("empty graph");
        const Graph lcc = extract_lcc(full);
        json j;
        j["language"] = lang;
        j["relation"] = to_string(r);
        j["provenance"] = provenance(cfg);
        j["full"] = network_summary(full, cfg, key);
        j["lcc"] = network_summary(lcc, cfg, key);
        const auto stem = dir / lang / std::string(to_string(r));
        write_json(stem.string() + ".json", j);
        write_curves(full, cfg, stem.string() + "_full");
        write_curves(lcc, cfg, stem.string() + "_lcc");
        const auto& tail = j["lcc"]["tail"];
        gamma_table << lang << '\t' << to_string(r) << '\t' << cell(tail, "gamma_slope") << '\t'
                    << cell(tail, "gamma_hill") << '\t' << cell(tail, "gamma_mom") << '\t' << cell(tail, "gamma_kern")
                    << '\n';
        ++done;
      } catch (const std::exception& e) {
        res.failures.push_back(key + ": " + e.what());
      }
    }
  }
  {
    auto out = open_out(dir / "gamma_table.tsv");
    out << gamma_table.str();
  }
  write_json(dir / "failures.json", res.failures);
  if (!res.failures.empty()) res.exit_code = done == 0 ? kExitEmpty : kExitPartial;
  for (const auto& f : res.failures) std::cerr << "analyze: " << f << '\n';
  return res;
}

CommandResult cmd_calibrate(const RunConfig& cfg) {
  echo_config(cfg, "calibrate");
  CommandResult res;
  std::ostringstream table;
  table << "language\trelation\tN\tC_similarity\tC_complementarity\tR\texcluded_samples\n";
  json details = json::array();
  std::size_t rows = 0;
  for (const auto& lang : cfg.languages) {
    for (auto r : cfg.relations) {
      const auto key = network_key(lang, r);
      json d = {{"language", lang}, {"relation", to_string(r)}};
      try {
        const auto path = graph_path(cfg, lang, r);
        if (!fs::exists(path)) throw std::runtime_error("graph file missing: " + path);
        const Graph full = read_edge_list_file(path);
        if (full.node_count() == 0) throw std::runtime_error("empty graph");
        const Graph lcc = extract_lcc(full);
        d["N"] = lcc.node_count();
        if (lcc.node_count() < cfg.calibration.min_nodes) {
          d["status"] = "skipped";
          d["reason"] = "fewer than " + std::to_string(cfg.calibration.min_nodes) + " nodes";
          details.push_back(d);
          continue;
        }
        if (lcc.node_count() > cfg.calibration.max_nodes) {
          d["status"] = "skipped";
          d["reason"] = "more than " + std::to_string(cfg.calibration.max_nodes) + " nodes";
          details.push_back(d);
          continue;
        }
        CalibrationOptions opts;
        opts.samples = lcc.node_count() > cfg.calibration.large_threshold ? cfg.calibration.large_samples
                                                                           : cfg.calibration.samples;
        opts.seed = cfg.seed;
        opts.min_nodes = cfg.calibration.min_nodes;
        try {
          const auto pair = calibrate_coefficients(lcc, opts);
          table << lang << '\t' << to_string(r) << '\t' << lcc.node_count() << '\t' << num(pair.similarity.calibrated)
                << '\t' << num(pair.complementarity.calibrated) << '\t' << opts.samples << '\t'
                << pair.similarity.excluded + pair.complementarity.excluded << '\n';
          d["status"] = "ok";
          d["R"] = opts.samples;
          d["fit_residual"] = pair.fit_residual;
          for (const auto* c : {&pair.similarity, &pair.complementarity}) {
            d[std::string(to_string(c->kind))] = {{"observed", c->observed},
                                                  {"calibrated", c->calibrated},
                                                  {"log_ratio_std", c->log_ratio_std},
                                                  {"used", c->used},
                                                  {"excluded", c->excluded}};
          }
          ++rows;
        } catch (const UbcmError& e) {
          table << lang << '\t' << to_string(r) << '\t' << lcc.node_count() << "\tfailed\tfailed\t" << opts.samples
                << "\t0\n";
          d["status"] = "failed";
          d["reason"] = e.what();
          res.failures.push_back(key + ": " + e.what());
        } catch (const CalibrationError& e) {
          table << lang << '\t' << to_string(r) << '\t' << lcc.node_count() << "\tfailed\tfailed\t" << opts.samples
                << "\t0\n";
          d["status"] = "failed";
          d["reason"] = e.what();
          res.failures.push_back(key + ": " + e.what());
        }
      } catch (const std::exception& e) {
        d["status"] = "failed";
        d["reason"] = e.what();
        res.failures.push_back(key + ": " + e.what());
      }
      details.push_back(d);
    }
  }
  {
    auto out = open_out(fs::path(cfg.out) / "calibration.tsv");
    out << table.str();
  }
  write_json(fs::path(cfg.out) / "calibration.json", {{"provenance", provenance(cfg)}, {"networks", details}});
  if (!res.failures.empty()) {
    res.exit_code = rows == 0 ? kExitEmpty : kExitPartial;
  } else if (rows == 0) {
    res.exit_code = kExitEmpty;
  }
  for (const auto& f : res.failures) std::cerr << "calibrate: " << f << '\n';
  return res;
}

namespace {

json bounds_json(const std::optional<PeakBounds>& b) {
  if (!b) return nullptr;
  return {{"k_min", b->k_min}, {"k_max", b->k_max}, {"excess_mass", b->excess_mass},
          {"baseline_slope", b->baseline.slope}, {"baseline_intercept", b->baseline.intercept}};
}

json pos_json(const PosBreakdown& p) {
  json j;
  j["empty"] = p.empty;
  j["tagged_peak_words"] = p.tagged_peak_words;
  j["words_with_tagged_neighbors"] = p.words_with_tagged_neighbors;
  const char* names[] = {"verb", "noun", "adjective", "adverb"};
  for (int i = 0; i < 4; ++i) {
    j["peak_percent"][names[i]] = p.peak_percent[i];
    j["neighbor_percent"][names[i]] = {{"mean", p.neighbor_mean[i]}, {"std", p.neighbor_std[i]}};
  }
  return j;
}

}  // namespace

CommandResult cmd_inflection(const RunConfig& cfg) {
  echo_config(cfg, "inflection");
  CommandResult res;
  const auto table = GrammarTable::load(cfg.grammar_table.empty() ? default_grammar_table_path() : cfg.grammar_table);
  PeakOptions popts;
  popts.threshold = cfg.peak.threshold;
  popts.min_run = cfg.peak.min_run;
  popts.min_count = cfg.peak.min_count;
  std::size_t done = 0;
  for (const auto& lang : cfg.languages) {
    try {
      const auto rt_path = graph_path(cfg, lang, Relation::RelatedTo);
      if (!fs::exists(rt_path)) throw std::runtime_error("Related-To graph missing: " + rt_path);
      const Graph lcc = extract_lcc(read_edge_list_file(rt_path));
      json j;
      j["language"] = lang;
      j["provenance"] = provenance(cfg);
      j["N"] = lcc.node_count();
      j["log_width"] = cfg.peak.log_width;
      j["threshold"] = cfg.peak.threshold;

      const auto m = table.expectation(lang);
      if (!m) j["flags"].push_back("no grammatical-variation count configured");

      std::optional<MergeMap> merge;
      const auto fo_path = graph_path(cfg, lang, Relation::FormOf);
      if (fs::exists(fo_path)) {
        merge = build_merge_map(read_edge_list_file(fo_path));
      } else {
        j["flags"].push_back("Form-Of graph missing; no merge performed");
      }
      std::optional<PosTable> pos;
      if (fs::exists(pos_path(cfg, lang))) {
        std::ifstream in(pos_path(cfg, lang));
        pos = PosTable::read(in);
      }

      const auto density = degree_density(lcc);
      const auto binned = log_bin(density, cfg.peak.log_width);
      const auto report =
          analyze_peak(lcc, binned, density, popts, m, merge ? &*merge : nullptr, pos ? &*pos : nullptr);
      j["peak"] = bounds_json(report.bounds);
      j["m_expected"] = m ? json(*m) : json(nullptr);
      j["matched"] = report.matched;
      j["peak_nodes"] = report.peak_nodes.size();
      j["covered_by_formof"] = report.covered_by_formof;
      if (pos) {
        j["pos"] = pos_json(report.pos);
      } else {
        j["flags"].push_back("no POS table");
      }

      const auto cmp = merge_and_compare(lcc, merge ? *merge : MergeMap{}, cfg.peak.log_width, popts);
      j["merge"] = {{"performed", merge.has_value()},
                    {"nodes_before", cmp.nodes_before},
                    {"nodes_after", cmp.nodes_after},
                    {"links_before", cmp.links_before},
                    {"links_after", cmp.links_after},
                    {"peak_before", bounds_json(cmp.peak_before)},
                    {"peak_after", bounds_json(cmp.peak_after)},
                    {"peak_mass_reduction", cmp.peak_mass_reduction}};
      const fs::path dir = fs::path(cfg.out) / "inflection";
      write_json(dir / (lang + "_peak.json"), j);
      auto out = open_out(dir / (lang + "_density.tsv"));
      out << "k\tdensity_before\tdensity_after\n";
      const std::size_t bins = std::max(cmp.before.size(), cmp.after.size());
      const auto& edges = cmp.before.size() >= cmp.after.size() ? cmp.before : cmp.after;
      for (std::size_t i = 0; i < bins; ++i) {
        const double hb = i < cmp.before.size() ? cmp.before.heights[i] : 0.0;
        const double ha = i < cmp.after.size() ? cmp.after.heights[i] : 0.0;
        out << num(edges.center(i)) << '\t' << num(hb) << '\t' << num(ha) << '\n';
      }
      ++done;
    } catch (const std::exception& e) {
      res.failures.push_back(lang + ": " + e.what());
    }
  }
  if (!res.failures.empty()) res.exit_code = done == 0 ? kExitEmpty : kExitPartial;
  for (const auto& f : res.failures) std::cerr << "inflection: " << f << '\n';
  return res;
}

}  // namespace semnet
