#pragma once

#include <cstdint>
#include <map>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "semnet/conceptnet.hpp"
#include "semnet/degree_stats.hpp"

namespace semnet {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitEmpty = 3, kExitPartial = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RewireSettings {
  double multiplier = 4.0;
  double attempt_cap = 100.0;
  std::size_t realizations = 10;  // 0 disables the rewired columns
};

struct CalibrationSettings {
  std::size_t samples = 500;
  std::size_t large_samples = 100;
  std::size_t large_threshold = 500000;  // nodes; above it large_samples is used
  std::size_t max_nodes = 1200000;       // larger networks are skipped
  std::size_t min_nodes = 100;
};

struct PeakSettings {
  double threshold = 3.0;
  std::size_t min_run = 2;
  double min_count = 5.0;
  double log_width = 0.1;
};

/// One JSON document configures every command; CLI flags override fields.
struct RunConfig {
  std::string dataset;
  std::vector<std::string> languages{"en"};
  std::vector<Relation> relations{Relation::HasA,  Relation::IsA,     Relation::PartOf, Relation::RelatedTo,
                                  Relation::Union, Relation::Antonym, Relation::Synonym};
  std::uint64_t seed = 42;
  std::optional<double> log_width;  // unset: about 20 bins over [1, d_max]
  /// "<lang>/<Relation>" -> [k_lo, k_hi] for the slope fit
  std::map<std::string, DegreeWindow> regression_windows;
  RewireSettings rewire;
  CalibrationSettings calibration;
  PeakSettings peak;
  std::string grammar_table;
  std::string out = "out";

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  /// FNV-1a over the canonical JSON dump, hex encoded.
  std::string hash() const;
};

RunConfig load_config(const std::string& path);

/// Directory layout under RunConfig::out.
std::string graph_path(const RunConfig& cfg, const std::string& language, Relation r);
std::string pos_path(const RunConfig& cfg, const std::string& language);

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> failures;
};

CommandResult cmd_ingest(const RunConfig& cfg);
CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_calibrate(const RunConfig& cfg);
CommandResult cmd_inflection(const RunConfig& cfg);

/// Per-network statistics object written by `analyze` (one graph variant).
nlohmann::json network_summary(const Graph& g, const RunConfig& cfg, const std::string& window_key);

}  // namespace semnet
